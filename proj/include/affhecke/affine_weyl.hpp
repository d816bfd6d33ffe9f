#pragma once

#include <string>
#include <vector>

#include "affhecke/root_datum.hpp"

namespace affhecke {

// Element t_lambda * w of the extended affine Weyl group X_* >| W.
// Group law: (l1, w1)(l2, w2) = (l1 + w1 l2, w1 w2).
struct AffineWeylElt {
  const RootDatum* datum = nullptr;
  Coweight translation;
  int finite = 0;  // index into the datum's Weyl tables

  static AffineWeylElt identity(const RootDatum& d);
  static AffineWeylElt from_translation(const RootDatum& d, Coweight lambda);
  static AffineWeylElt from_finite(const RootDatum& d, int w);

  AffineWeylElt operator*(const AffineWeylElt& o) const;
  AffineWeylElt inverse() const;
  bool operator==(const AffineWeylElt& o) const {
    return translation == o.translation && finite == o.finite;
  }
  bool operator!=(const AffineWeylElt& o) const { return !(*this == o); }
  // structural order (translation lex, then finite index); used as map key
  bool operator<(const AffineWeylElt& o) const {
    if (translation != o.translation) return translation < o.translation;
    return finite < o.finite;
  }
};

// Affine root alpha + k as a function x -> <alpha, x> + k.
struct AffineRoot {
  IntVec root;
  Int offset = 0;
  bool operator==(const AffineRoot& o) const { return root == o.root && offset == o.offset; }
};

// Simple affine reflections. refl[0] is s_0 = t_{-theta^vee} s_theta for the
// highest root theta; refl[i] for i >= 1 is the finite simple reflection s_i.
struct SimpleReflections {
  std::vector<AffineWeylElt> refl;
  int size() const { return (int)refl.size(); }
};

SimpleReflections simple_reflections(const RootDatum& d);

// x . (alpha + k) = (alpha + k) o x^{-1}; for x = t_lambda w this is
// (w alpha, k - <w alpha, lambda>)
AffineRoot act_on_affine_root(const AffineWeylElt& x, const AffineRoot& beta);

// Bbar-positivity (Iwahori fixing the opposite alcove A^- = w0(A)):
// alpha + k is positive iff k >= 1, or k = 0 and alpha is B-negative
bool is_positive_affine_root(const RootDatum& d, const AffineRoot& beta);

// the reflection s_{alpha+k} = t_{-k alpha^vee} s_alpha
AffineWeylElt affine_reflection(const RootDatum& d, const AffineRoot& beta);

// number of Bbar-positive affine roots made Bbar-negative by x; equals the
// number of affine hyperplanes separating A^- from x(A^-)
int length(const AffineWeylElt& x);

// x = tau * s_{i_1} ... s_{i_m} with tau length-zero; the word is produced by
// greedily peeling the smallest-index right descent, so it is deterministic
struct OmegaWord {
  AffineWeylElt omega;
  std::vector<int> word;  // indices into simple_reflections
};
OmegaWord omega_part_and_reduced_word(const AffineWeylElt& x);

// Bruhat order on the extended group: comparable only within one Omega-coset
bool bruhat_leq(const AffineWeylElt& x, const AffineWeylElt& y);

// {x : x <= y}, computed by subword enumeration; canonically sorted
std::vector<AffineWeylElt> bruhat_lower_set(const AffineWeylElt& y);

// Adm(mu) = union of {x <= t_lambda} over lambda in the W-orbit of mu
std::vector<AffineWeylElt> admissible_set(const RootDatum& d, const Coweight& mu);

// canonical generator of Omega (error when Omega is trivial and j != 0);
// omega_element(d, j) = tau^j
AffineWeylElt omega_element(const RootDatum& d, Int j);

// all length-zero elements with translation in a bounded search box
std::vector<AffineWeylElt> small_omega_elements(const RootDatum& d);

// Cayley ball: all x = tau^j * w with w in W_aff, length(w) <= radius,
// j in [omega_lo, omega_hi]; sorted canonically
std::vector<AffineWeylElt> length_ball(const RootDatum& d, int radius, Int omega_lo = 0,
                                       Int omega_hi = 0);

// order by (length, translation lex, finite word lex); ties broken structurally
bool canonical_less(const AffineWeylElt& a, const AffineWeylElt& b);

}  // namespace affhecke
