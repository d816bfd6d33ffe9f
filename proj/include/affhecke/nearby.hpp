#pragma once

#include <map>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/kl.hpp"

namespace affhecke {

// A Hecke element read pointwise: the value at x is the T-basis coefficient
// v^{-l(x)} * (T~ coefficient), a Laurent polynomial in v.
struct TraceFunction {
  HeckeElt elt;
  explicit TraceFunction(HeckeElt e) : elt(std::move(e)) {}
  const RootDatum& datum() const { return elt.datum(); }
  RingElt value(const AffineWeylElt& x) const { return elt.t_basis_value(x); }
  std::vector<AffineWeylElt> support() const { return elt.support(); }
};

// w -> m(w), finite support. For functions built from intersection-cohomology
// expansions the values are polynomials in q with nonnegative coefficients.
struct MultiplicityFunction {
  const RootDatum* datum_ptr = nullptr;
  std::map<AffineWeylElt, RingElt> values;

  RingElt value(const AffineWeylElt& x) const;
  std::vector<AffineWeylElt> support() const;  // canonical order
};

// Bruhat-maximal elements of xs, in the order they appear.
std::vector<AffineWeylElt> bruhat_maximal_elements(const std::vector<AffineWeylElt>& xs);

// Union of Bruhat lower sets of the maximal elements of `support`;
// canonically sorted. Contains every x where a function supported inside
// `support` or its multiplicity expansion can be nonzero.
std::vector<AffineWeylElt> candidate_set(const std::vector<AffineWeylElt>& support);

// eps_mu v^{l(t_mu)} sum over weights lambda of the dual irrep V_mu of
// mult(lambda) * Theta_lambda. Requires mu dominant.
TraceFunction kottwitz_trace(const RootDatum& d, const Coweight& mu);

// f(x) = sum_{w >= x} (-1)^{l(w)} m(w) P_{x,w}(q), on the candidate set of
// the support of m; returned as a Hecke element (T-values as stated).
TraceFunction trace_from_multiplicities(const MultiplicityFunction& m, KLTable& kl);

// Inverse of trace_from_multiplicities: descending-length triangular solve
//   m(x) = (-1)^{l(x)} (f(x) - sum_{w > x} (-1)^{l(w)} m(w) P_{x,w}(q))
MultiplicityFunction multiplicities_from_trace(const TraceFunction& f, KLTable& kl);

struct SupportsResult {
  std::vector<AffineWeylElt> supp;    // canonical order
  std::vector<AffineWeylElt> icsupp;  // canonical order
  bool maximal_match = false;         // same Bruhat-maximal elements
};
SupportsResult supports(const TraceFunction& f, KLTable& kl);

struct CheckItem {
  std::string name;
  bool pass = false;
};

struct ElementReport {
  AffineWeylElt x;
  RingElt trace_value;
  RingElt multiplicity;
  int degree = -1;  // q-degree of the multiplicity; -1 when zero or not a q-polynomial
  int bound = 0;    // d - l(x)
  std::vector<CheckItem> checks;
  bool all_pass() const;
};

struct Report {
  std::string title;
  bool pass = true;
  std::vector<CheckItem> summary;       // folded into pass
  std::vector<CheckItem> observations;  // recorded, not folded into pass
  std::vector<ElementReport> items;
};

// For every x in the candidate set, check pointwise that (1) the T-value and
// (2) the multiplicity are q-polynomials of degree <= d - l(x), plus the
// upward-closed forms of (1) and (2) over w >= x, which are equivalent for
// every function expanded through the triangular system above; an element
// where exactly one upward condition holds falsifies that equivalence.
Report check_degree_bounds(const TraceFunction& f, int d, KLTable& kl);

// Composite check on kottwitz_trace(mu):
//   (a) icsupp equals the admissible set of mu exactly
//   (b) multiplicities are q-polynomials with nonnegative coefficients
//   (c) deg_q m(w) <= l(t_mu) - l(w)
//   (d) the self-duality identity of weight l(t_mu) holds at every element
// supp == admissible set is recorded as an observation only.
Report verify_theorem_1(const RootDatum& d, const Coweight& mu, KLTable& kl);

// Composite check on the normalized function eps_u eps_v v^{l(uv)} W(u,v),
// W(u,v) = T~_u (T~_{v^{-1}})^{-1} = sum_x R_x(Q) T~_x:
//   (a) support contained in the Bruhat lower set of uv
//   (b) degree bounds with d = l(uv), as in check_degree_bounds
//   (c) every R_x a Q-polynomial, deg_Q R_x <= l(uv) - l(x), all exponents
//       of the same parity as l(uv) - l(x)
//   (d) the self-duality identity of weight l(uv)
Report verify_theorem_2(const AffineWeylElt& u, const AffineWeylElt& v, KLTable& kl);

}  // namespace affhecke
