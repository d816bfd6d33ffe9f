#include "affhecke/nearby.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "affhecke/parse.hpp"

namespace affhecke {
namespace {

RingElt sign_of(const AffineWeylElt& x) {
  return RingElt::constant(length(x) % 2 ? -1 : 1);
}

// q-polynomial of degree <= bound; zero passes any bound
bool poly_deg_ok(const RingElt& r, int bound) {
  QDegreeResult d = degree_in_q(r);
  if (!d.is_poly) return false;
  return d.is_zero || d.degree <= bound;
}

}  // namespace

RingElt MultiplicityFunction::value(const AffineWeylElt& x) const {
  auto it = values.find(x);
  return it == values.end() ? RingElt() : it->second;
}

std::vector<AffineWeylElt> MultiplicityFunction::support() const {
  std::vector<AffineWeylElt> out;
  for (auto& [x, c] : values)
    if (!c.is_zero()) out.push_back(x);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<AffineWeylElt> bruhat_maximal_elements(const std::vector<AffineWeylElt>& xs) {
  std::vector<AffineWeylElt> out;
  for (auto& x : xs) {
    bool maximal = true;
    for (auto& y : xs)
      if (x != y && bruhat_leq(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<AffineWeylElt> candidate_set(const std::vector<AffineWeylElt>& support) {
  std::set<AffineWeylElt> seen;
  for (auto& m : bruhat_maximal_elements(support))
    for (auto& x : bruhat_lower_set(m)) seen.insert(x);
  std::vector<AffineWeylElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

TraceFunction kottwitz_trace(const RootDatum& d, const Coweight& mu) {
  if (!d.is_dominant(mu))
    throw std::invalid_argument("kottwitz_trace requires a dominant coweight");
  int lmu = length(AffineWeylElt::from_translation(d, mu));
  HeckeElt f(d);
  for (auto& lambda : d.omega_set(mu)) {
    HeckeElt th = theta(d, lambda);
    th.scale(RingElt::constant(d.weight_multiplicity(mu, lambda)));
    f += th;
  }
  f.scale(RingElt::v_power(lmu, lmu % 2 ? -1 : 1));
  return TraceFunction(std::move(f));
}

TraceFunction trace_from_multiplicities(const MultiplicityFunction& m, KLTable& kl) {
  const RootDatum& d = kl.datum();
  HeckeElt h(d);
  for (auto& x : candidate_set(m.support())) {
    RingElt val;
    for (auto& [w, mw] : m.values) {
      if (mw.is_zero() || !bruhat_leq(x, w)) continue;
      val += sign_of(w) * mw * qpoly_to_ring(kl.polynomial(x, w));
    }
    if (!val.is_zero()) h.add_term(x, RingElt::v_power(length(x)) * val);
  }
  return TraceFunction(std::move(h));
}

MultiplicityFunction multiplicities_from_trace(const TraceFunction& f, KLTable& kl) {
  MultiplicityFunction m;
  m.datum_ptr = &f.datum();
  std::vector<AffineWeylElt> cands = candidate_set(f.support());
  // decreasing length; the canonical order is length-first
  for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
    const AffineWeylElt& x = *it;
    RingElt val = f.value(x);
    for (auto& [w, mw] : m.values) {
      if (x == w || !bruhat_leq(x, w)) continue;
      val -= sign_of(w) * mw * qpoly_to_ring(kl.polynomial(x, w));
    }
    val = sign_of(x) * val;
    if (!val.is_zero()) m.values.emplace(x, std::move(val));
  }
  return m;
}

SupportsResult supports(const TraceFunction& f, KLTable& kl) {
  SupportsResult res;
  res.supp = f.support();
  res.icsupp = multiplicities_from_trace(f, kl).support();
  auto ms = bruhat_maximal_elements(res.supp);
  auto mi = bruhat_maximal_elements(res.icsupp);
  std::sort(ms.begin(), ms.end(), canonical_less);
  std::sort(mi.begin(), mi.end(), canonical_less);
  res.maximal_match = (ms == mi);
  return res;
}

bool ElementReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Report check_degree_bounds(const TraceFunction& f, int d, KLTable& kl) {
  Report rep;
  rep.title = "degree bounds d=" + std::to_string(d);
  MultiplicityFunction m = multiplicities_from_trace(f, kl);
  std::vector<AffineWeylElt> cands = candidate_set(f.support());
  std::vector<bool> trace_ok(cands.size()), mult_ok(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) {
    int bound = d - length(cands[i]);
    trace_ok[i] = poly_deg_ok(f.value(cands[i]), bound);
    mult_ok[i] = poly_deg_ok(m.value(cands[i]), bound);
  }
  bool all_trace = true, all_mult = true, all_equiv = true;
  for (size_t i = 0; i < cands.size(); ++i) {
    const AffineWeylElt& x = cands[i];
    bool up_trace = true, up_mult = true;
    for (size_t j = 0; j < cands.size(); ++j) {
      if (!bruhat_leq(x, cands[j])) continue;
      up_trace = up_trace && trace_ok[j];
      up_mult = up_mult && mult_ok[j];
    }
    ElementReport item;
    item.x = x;
    item.trace_value = f.value(x);
    item.multiplicity = m.value(x);
    QDegreeResult qd = degree_in_q(item.multiplicity);
    item.degree = qd.is_poly ? qd.degree : -1;
    item.bound = d - length(x);
    item.checks = {{"trace_poly_deg", trace_ok[i]},
                   {"mult_poly_deg", mult_ok[i]},
                   {"upward_trace", up_trace},
                   {"upward_mult", up_mult},
                   {"upward_equiv", up_trace == up_mult}};
    all_trace = all_trace && trace_ok[i];
    all_mult = all_mult && mult_ok[i];
    all_equiv = all_equiv && (up_trace == up_mult);
    rep.items.push_back(std::move(item));
  }
  rep.summary = {{"trace_bounds", all_trace},
                 {"mult_bounds", all_mult},
                 {"upward_equivalence", all_equiv}};
  rep.pass = all_trace && all_mult && all_equiv;
  return rep;
}

Report verify_theorem_1(const RootDatum& d, const Coweight& mu, KLTable& kl) {
  if (!d.is_dominant(mu))
    throw std::invalid_argument("verify_theorem_1 requires a dominant coweight");
  TraceFunction f = kottwitz_trace(d, mu);
  int dd = length(AffineWeylElt::from_translation(d, mu));
  Report rep = check_degree_bounds(f, dd, kl);
  rep.title = "nearby-cycles bounds: " + d.name() + " mu=" + print_coweight(mu);

  MultiplicityFunction m = multiplicities_from_trace(f, kl);
  std::vector<AffineWeylElt> adm = admissible_set(d, mu);
  std::vector<AffineWeylElt> ic = m.support();
  bool icsupp_eq = (ic == adm);

  bool all_nonneg = true;
  for (auto& item : rep.items) {
    QDegreeResult qd = degree_in_q(item.multiplicity);
    bool nonneg = qd.is_poly;
    if (qd.is_poly && !qd.is_zero)
      for (Int c : q_coefficients(item.multiplicity))
        if (c < 0) nonneg = false;
    item.checks.push_back({"mult_coeffs_nonneg", nonneg});
    all_nonneg = all_nonneg && nonneg;
  }
  PropertyPReport pp = check_property_P(f.elt, dd);

  bool prior = rep.pass;
  rep.summary.push_back({"icsupp_equals_admissible", icsupp_eq});
  rep.summary.push_back({"mult_coeffs_nonneg", all_nonneg});
  rep.summary.push_back({"self_duality", pp.pass});
  rep.pass = prior && icsupp_eq && all_nonneg && pp.pass;
  rep.observations.push_back({"supp_equals_admissible", f.support() == adm});
  return rep;
}

Report verify_theorem_2(const AffineWeylElt& u, const AffineWeylElt& v, KLTable& kl) {
  const RootDatum& d = kl.datum();
  HeckeElt w = wakimoto(u, v);
  AffineWeylElt uv = u * v;
  int dd = length(uv);
  int sgn = (length(u) + length(v)) % 2 ? -1 : 1;
  HeckeElt g = w;
  g.scale(RingElt::v_power(dd, sgn));
  TraceFunction f(std::move(g));

  Report rep = check_degree_bounds(f, dd, kl);
  rep.title = "wakimoto bounds: u=" + print_element(u) + ", v=" + print_element(v);

  bool supp_ok = true, parity_ok = true, rdeg_ok = true;
  for (auto& item : rep.items) {
    bool leq = bruhat_leq(item.x, uv);
    RingElt r = w.coeff(item.x);
    bool in_supp = !r.is_zero();
    int b = dd - length(item.x);
    QExpansion qe = as_poly_in_Q(r, b);
    bool pok = qe.ok;
    bool dok = qe.ok && (int)qe.coeffs.size() - 1 <= b;
    item.checks.push_back({"support_below_uv", !in_supp || leq});
    item.checks.push_back({"R_parity", pok});
    item.checks.push_back({"R_degree", dok});
    supp_ok = supp_ok && (!in_supp || leq);
    parity_ok = parity_ok && pok;
    rdeg_ok = rdeg_ok && dok;
  }
  PropertyPReport pp = check_property_P(f.elt, dd);

  bool prior = rep.pass;
  rep.summary.push_back({"support_below_uv", supp_ok});
  rep.summary.push_back({"R_parity", parity_ok});
  rep.summary.push_back({"R_degree", rdeg_ok});
  rep.summary.push_back({"self_duality", pp.pass});
  rep.pass = prior && supp_ok && parity_ok && rdeg_ok && pp.pass;
  return rep;
}

}  // namespace affhecke
