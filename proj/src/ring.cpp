#include "affhecke/ring.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace affhecke {

RingElt RingElt::constant(Int c) {
  RingElt r;
  r.set(0, c);
  return r;
}

RingElt RingElt::v_power(int m, Int c) {
  RingElt r;
  r.set(m, c);
  return r;
}

RingElt RingElt::Q() {
  RingElt r;
  r.set(-1, 1);
  r.set(1, -1);
  return r;
}

void RingElt::set(int exp, Int c) {
  if (c == 0)
    coef_.erase(exp);
  else
    coef_[exp] = c;
}

Int RingElt::coeff(int exp) const {
  auto it = coef_.find(exp);
  return it == coef_.end() ? 0 : it->second;
}

int RingElt::min_exp() const {
  assert(!coef_.empty());
  return coef_.begin()->first;
}

int RingElt::max_exp() const {
  assert(!coef_.empty());
  return coef_.rbegin()->first;
}

RingElt& RingElt::operator+=(const RingElt& o) {
  for (auto& [e, c] : o.coef_) set(e, coeff(e) + c);
  return *this;
}

RingElt& RingElt::operator-=(const RingElt& o) {
  for (auto& [e, c] : o.coef_) set(e, coeff(e) - c);
  return *this;
}

RingElt& RingElt::operator*=(const RingElt& o) {
  std::map<int, Int> out;
  for (auto& [e1, c1] : coef_)
    for (auto& [e2, c2] : o.coef_) out[e1 + e2] += c1 * c2;
  coef_.clear();
  for (auto& [e, c] : out) set(e, c);
  return *this;
}

RingElt& RingElt::scale(Int c) {
  if (c == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& [e, cc] : coef_) cc *= c;
  return *this;
}

RingElt RingElt::operator-() const {
  RingElt r = *this;
  r.scale(-1);
  return r;
}

RingElt RingElt::bar() const {
  RingElt r;
  for (auto& [e, c] : coef_) r.set(-e, c);
  return r;
}

namespace {

// one monomial, in q when the exponent is even, else in v
void append_monomial(std::ostringstream& os, int vexp, Int c, bool first) {
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  Int a = std::llabs(c);
  bool even = (vexp % 2) == 0;
  int e = even ? vexp / 2 : vexp;
  const char* var = even ? "q" : "v";
  if (e == 0) {
    os << a;
    return;
  }
  if (a != 1) os << a << "*";
  os << var;
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string RingElt::to_string() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
    append_monomial(os, it->first, it->second, first);
    first = false;
  }
  return os.str();
}

QDegreeResult degree_in_q(const RingElt& r) {
  QDegreeResult res;
  if (r.is_zero()) {
    res.is_poly = true;
    res.is_zero = true;
    return res;
  }
  for (auto& [e, c] : r.terms()) {
    (void)c;
    if (e < 0 || e % 2 != 0) {
      res.reason = "monomial v^" + std::to_string(e);
      return res;
    }
  }
  res.is_poly = true;
  res.degree = r.max_exp() / 2;
  return res;
}

std::vector<Int> q_coefficients(const RingElt& r) {
  QDegreeResult d = degree_in_q(r);
  if (!d.is_poly) throw std::invalid_argument("not a polynomial in q: " + r.to_string());
  std::vector<Int> out(d.is_zero ? 0 : d.degree + 1, 0);
  for (auto& [e, c] : r.terms()) out[e / 2] = c;
  return out;
}

QExpansion as_poly_in_Q(const RingElt& r, int parity) {
  parity = ((parity % 2) + 2) % 2;
  QExpansion res;
  if (r.is_zero()) {
    res.ok = true;
    return res;
  }
  int imax = std::max(std::abs(r.min_exp()), std::abs(r.max_exp()));
  res.coeffs.assign(imax + 1, 0);
  RingElt work = r;
  // Q^i is the unique basis element reaching v^{-i}; peel from the outside in
  for (int i = imax; i >= 1; --i) {
    Int c = work.coeff(-i);
    if (c == 0) continue;
    if (i % 2 != parity) {
      res.coeffs.clear();
      res.error = "Q^" + std::to_string(i) + " breaks parity " + std::to_string(parity);
      return res;
    }
    res.coeffs[i] = c;
    RingElt qi = RingElt::one();
    for (int k = 0; k < i; ++k) qi *= RingElt::Q();
    qi.scale(c);
    work -= qi;
  }
  if (!work.is_zero()) {
    if (work.terms().size() == 1 && work.coeff(0) != 0) {
      if (parity != 0) {
        res.coeffs.clear();
        res.error = "constant term breaks parity 1";
        return res;
      }
      res.coeffs[0] = work.coeff(0);
    } else {
      res.coeffs.clear();
      res.error = "not a polynomial in Q: remainder " + work.to_string();
      return res;
    }
  }
  while (!res.coeffs.empty() && res.coeffs.back() == 0) res.coeffs.pop_back();
  res.ok = true;
  return res;
}

void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int qpoly_degree(const QPoly& p) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RingElt qpoly_to_ring(const QPoly& p) {
  RingElt r;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r += RingElt::q_power((int)i, p[i]);
  return r;
}

std::string qpoly_to_string(const QPoly& p) { return qpoly_to_ring(p).to_string(); }

}  // namespace affhecke
