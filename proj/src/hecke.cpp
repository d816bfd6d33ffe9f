#include "affhecke/hecke.hpp"

#include <stdexcept>

namespace affhecke {

HeckeElt HeckeElt::basis(const AffineWeylElt& x) {
  HeckeElt h(*x.datum);
  h.terms_[x] = RingElt::one();
  return h;
}

HeckeElt HeckeElt::unit(const RootDatum& d) { return basis(AffineWeylElt::identity(d)); }

RingElt HeckeElt::coeff(const AffineWeylElt& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? RingElt() : it->second;
}

RingElt HeckeElt::t_basis_value(const AffineWeylElt& x) const {
  RingElt c = coeff(x);
  if (c.is_zero()) return c;
  return c * RingElt::v_power(-length(x));
}

std::vector<AffineWeylElt> HeckeElt::support() const {
  std::vector<AffineWeylElt> out;
  out.reserve(terms_.size());
  for (auto& [x, c] : terms_) {
    (void)c;
    out.push_back(x);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

HeckeElt& HeckeElt::add_term(const AffineWeylElt& x, const RingElt& c) {
  if (x.datum != datum_) throw std::invalid_argument("term from different root datum");
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[x] = c;
    return *this;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
  return *this;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.datum_ != datum_) throw std::invalid_argument("elements from different root data");
  for (auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (o.datum_ != datum_) throw std::invalid_argument("elements from different root data");
  for (auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

HeckeElt& HeckeElt::scale(const RingElt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, cc] : terms_) cc *= c;
  return *this;
}

namespace {

// multiply every term on the right by T~ of one simple reflection
HeckeElt right_mul_simple(const HeckeElt& h, const AffineWeylElt& s) {
  HeckeElt out(h.datum());
  for (auto& [x, c] : h.terms()) {
    AffineWeylElt xs = x * s;
    if (length(xs) > length(x)) {
      out.add_term(xs, c);
    } else {
      out.add_term(xs, c);
      out.add_term(x, -(c * RingElt::Q()));
    }
  }
  return out;
}

HeckeElt left_mul_simple(const AffineWeylElt& s, const HeckeElt& h) {
  HeckeElt out(h.datum());
  for (auto& [x, c] : h.terms()) {
    AffineWeylElt sx = s * x;
    if (length(sx) > length(x)) {
      out.add_term(sx, c);
    } else {
      out.add_term(sx, c);
      out.add_term(x, -(c * RingElt::Q()));
    }
  }
  return out;
}

HeckeElt relabel_right(const HeckeElt& h, const AffineWeylElt& tau) {
  HeckeElt out(h.datum());
  for (auto& [x, c] : h.terms()) out.add_term(x * tau, c);
  return out;
}

HeckeElt relabel_left(const AffineWeylElt& tau, const HeckeElt& h) {
  HeckeElt out(h.datum());
  for (auto& [x, c] : h.terms()) out.add_term(tau * x, c);
  return out;
}

}  // namespace

HeckeElt HeckeElt::right_mul_basis(const AffineWeylElt& y) const {
  OmegaWord oy = omega_part_and_reduced_word(y);
  SimpleReflections s = simple_reflections(*datum_);
  // T~_y = T~_tau T~_{s_i1} ... T~_{s_im}; tau commutes into the labels
  AffineWeylElt tau_conj = oy.omega;  // x * tau * s... = (x*tau) * word
  HeckeElt cur = relabel_right(*this, tau_conj);
  for (int i : oy.word) cur = right_mul_simple(cur, s.refl[i]);
  return cur;
}

HeckeElt HeckeElt::left_mul_basis(const AffineWeylElt& y) const {
  OmegaWord oy = omega_part_and_reduced_word(y);
  SimpleReflections s = simple_reflections(*datum_);
  HeckeElt cur = *this;
  for (auto it = oy.word.rbegin(); it != oy.word.rend(); ++it)
    cur = left_mul_simple(s.refl[*it], cur);
  return relabel_left(oy.omega, cur);
}

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b) {
  if (&a.datum() != &b.datum())
    throw std::invalid_argument("elements from different root data");
  HeckeElt out(a.datum());
  for (auto& [y, c] : b.terms()) {
    HeckeElt part = a.right_mul_basis(y);
    part.scale(c);
    out += part;
  }
  return out;
}

HeckeElt t_tilde_inv(const AffineWeylElt& x) {
  const RootDatum& d = *x.datum;
  OmegaWord ox = omega_part_and_reduced_word(x);
  SimpleReflections s = simple_reflections(d);
  // (T~_{tau w})^{-1} = (T~_{s_im}+Q) ... (T~_{s_i1}+Q) T~_{tau^{-1}}
  HeckeElt cur = HeckeElt::unit(d);
  for (auto it = ox.word.rbegin(); it != ox.word.rend(); ++it) {
    HeckeElt factor = HeckeElt::basis(s.refl[*it]);
    factor.add_term(AffineWeylElt::identity(d), RingElt::Q());
    cur = hecke_mul(cur, factor);
  }
  return relabel_right(cur, ox.omega.inverse());
}

HeckeElt wakimoto(const AffineWeylElt& u, const AffineWeylElt& v) {
  if (u.datum != v.datum) throw std::invalid_argument("elements from different root data");
  HeckeElt cur = t_tilde_inv(v.inverse());
  return cur.left_mul_basis(u);
}

HeckeElt theta(const RootDatum& d, const Coweight& lambda) {
  auto [lam1, lam2] = d.dominant_decomposition(lambda);
  HeckeElt inv2 = t_tilde_inv(AffineWeylElt::from_translation(d, lam2));
  return inv2.left_mul_basis(AffineWeylElt::from_translation(d, lam1));
}

PropertyPReport check_property_P(const HeckeElt& h, int d) {
  PropertyPReport rep;
  for (auto& y : h.support()) {
    PropertyPItem item;
    item.y = y;
    int ly = length(y);
    RingElt f = h.t_basis_value(y);
    item.lhs = f;
    RingElt rhs = f.bar() * RingElt::v_power(2 * d - 2 * ly);
    if ((d + ly) % 2 != 0) rhs = -rhs;
    item.rhs = rhs;
    item.ok = (item.lhs == item.rhs);
    if (!item.ok) rep.pass = false;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace affhecke
