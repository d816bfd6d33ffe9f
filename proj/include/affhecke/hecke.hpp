#pragma once

#include <map>
#include <vector>

#include "affhecke/affine_weyl.hpp"
#include "affhecke/ring.hpp"

namespace affhecke {

// Element of the Iwahori-Hecke algebra in the normalized basis
// T~_x = v^{-l(x)} T_x. Relations, for s a simple affine reflection:
//   T~_x T~_s = T~_{xs}           if l(xs) > l(x)
//   T~_x T~_s = T~_{xs} - Q T~_x  if l(xs) < l(x),   Q = v^{-1} - v
// and T~_x T~_tau = T~_{x tau} for length-zero tau.
class HeckeElt {
public:
  explicit HeckeElt(const RootDatum& d) : datum_(&d) {}
  static HeckeElt basis(const AffineWeylElt& x);
  static HeckeElt unit(const RootDatum& d);

  const RootDatum& datum() const { return *datum_; }
  bool is_zero() const { return terms_.empty(); }
  RingElt coeff(const AffineWeylElt& x) const;
  // T-basis value at x: v^{-l(x)} * (T~ coefficient at x)
  RingElt t_basis_value(const AffineWeylElt& x) const;
  // support in canonical order (length, translation lex, word lex)
  std::vector<AffineWeylElt> support() const;
  const std::map<AffineWeylElt, RingElt>& terms() const { return terms_; }

  HeckeElt& add_term(const AffineWeylElt& x, const RingElt& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt& scale(const RingElt& c);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  bool operator==(const HeckeElt& o) const { return terms_ == o.terms_; }

  HeckeElt right_mul_basis(const AffineWeylElt& y) const;  // this * T~_y
  HeckeElt left_mul_basis(const AffineWeylElt& y) const;   // T~_y * this

private:
  const RootDatum* datum_;
  std::map<AffineWeylElt, RingElt> terms_;
};

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b);

// (T~_x)^{-1}, via (T~_s)^{-1} = T~_s + Q along a reduced word
HeckeElt t_tilde_inv(const AffineWeylElt& x);

// T~_u * (T~_{v^{-1}})^{-1} = sum_x R^u_{x,v}(Q) T~_x, built by left
// multiplication along a reduced word of u
HeckeElt wakimoto(const AffineWeylElt& u, const AffineWeylElt& v);

// Bernstein element Theta_lambda = T~_{t_{lambda_1}} (T~_{t_{lambda_2}})^{-1}
// for the canonical dominant decomposition lambda = lambda_1 - lambda_2
HeckeElt theta(const RootDatum& d, const Coweight& lambda);

// Property (P)_d: for every y, the T-basis value f(y) satisfies
//   f(y) = (-1)^{d + l(y)} q^d q_y^{-1} bar(f(y))
struct PropertyPItem {
  AffineWeylElt y;
  RingElt lhs, rhs;
  bool ok = false;
};
struct PropertyPReport {
  bool pass = true;
  std::vector<PropertyPItem> items;
};
PropertyPReport check_property_P(const HeckeElt& h, int d);

}  // namespace affhecke
