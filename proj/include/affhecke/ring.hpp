#pragma once

#include <map>
#include <string>
#include <vector>

namespace affhecke {

using Int = long long;

// Laurent polynomial in v = q^{1/2} with integer coefficients.
// Q := v^{-1} - v, so v*Q = 1 - q, and bar (v -> v^{-1}) sends Q to -Q.
class RingElt {
public:
  RingElt() = default;

  static RingElt constant(Int c);
  static RingElt one() { return constant(1); }
  static RingElt v_power(int m, Int c = 1);
  static RingElt q_power(int m, Int c = 1) { return v_power(2 * m, c); }
  static RingElt Q();

  bool is_zero() const { return coef_.empty(); }
  Int coeff(int exp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  const std::map<int, Int>& terms() const { return coef_; }

  RingElt& operator+=(const RingElt& o);
  RingElt& operator-=(const RingElt& o);
  RingElt& operator*=(const RingElt& o);
  RingElt& scale(Int c);
  RingElt operator-() const;
  friend RingElt operator+(RingElt a, const RingElt& b) { return a += b; }
  friend RingElt operator-(RingElt a, const RingElt& b) { return a -= b; }
  friend RingElt operator*(RingElt a, const RingElt& b) { return a *= b; }
  bool operator==(const RingElt& o) const { return coef_ == o.coef_; }
  bool operator!=(const RingElt& o) const { return !(*this == o); }

  // bar involution v -> v^{-1}
  RingElt bar() const;

  std::string to_string() const;

private:
  void set(int exp, Int c);
  std::map<int, Int> coef_;  // exponent of v -> nonzero coefficient
};

// View of a ring element as a polynomial in q = v^2.
struct QDegreeResult {
  bool is_poly = false;  // all exponents even and nonnegative (zero counts)
  bool is_zero = false;
  int degree = -1;  // q-degree; -1 stands for -infinity when is_zero
  std::string reason;
};

QDegreeResult degree_in_q(const RingElt& r);

// Coefficient list by power of q; requires degree_in_q(r).is_poly.
std::vector<Int> q_coefficients(const RingElt& r);

// Expansion r = sum_i coeffs[i] * Q^i with all nonzero i congruent to
// parity mod 2. Fails when r is not such a polynomial.
struct QExpansion {
  bool ok = false;
  std::vector<Int> coeffs;
  std::string error;
};

QExpansion as_poly_in_Q(const RingElt& r, int parity);

// Integer polynomials in q, coefficient list indexed by power of q.
using QPoly = std::vector<Int>;

void qpoly_trim(QPoly& p);
int qpoly_degree(const QPoly& p);  // -1 for zero
RingElt qpoly_to_ring(const QPoly& p);
std::string qpoly_to_string(const QPoly& p);

}  // namespace affhecke
