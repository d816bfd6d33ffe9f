#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "affhecke/ring.hpp"

using namespace affhecke;

TEST_CASE("ring arithmetic in v") {
  RingElt v = RingElt::v_power(1);
  RingElt q = RingElt::q_power(1);
  CHECK(v * v == q);
  CHECK(RingElt::v_power(-1) * v == RingElt::one());
  CHECK(RingElt::constant(0).is_zero());
  CHECK((q - q).is_zero());

  RingElt a = q + RingElt::constant(2);  // q + 2
  CHECK(a.coeff(2) == 1);
  CHECK(a.coeff(0) == 2);
  CHECK(a.coeff(1) == 0);
  CHECK(a.min_exp() == 0);
  CHECK(a.max_exp() == 2);
  CHECK(-a == RingElt::constant(-2) - q);
  CHECK((a * a) == RingElt::q_power(2) + RingElt::q_power(1, 4) + RingElt::constant(4));

  RingElt b = a;
  b.scale(3);
  CHECK(b.coeff(0) == 6);
  b.scale(0);
  CHECK(b.is_zero());
}

TEST_CASE("Q and the bar involution") {
  RingElt Q = RingElt::Q();
  CHECK(Q == RingElt::v_power(-1) - RingElt::v_power(1));
  // pinning convention: q^{1/2} Q = 1 - q
  CHECK(RingElt::v_power(1) * Q == RingElt::one() - RingElt::q_power(1));
  CHECK(Q.bar() == -Q);
  RingElt r = RingElt::v_power(3, 2) + RingElt::v_power(-1, 5);
  CHECK(r.bar() == RingElt::v_power(-3, 2) + RingElt::v_power(1, 5));
  CHECK(r.bar().bar() == r);
  CHECK((r * Q).bar() == r.bar() * Q.bar());
}

TEST_CASE("to_string uses q for even powers and v for odd") {
  CHECK(RingElt().to_string() == "0");
  CHECK(RingElt::one().to_string() == "1");
  CHECK((RingElt::q_power(1) + RingElt::one()).to_string() == "q + 1");
  CHECK((RingElt::q_power(1) - RingElt::one()).to_string() == "q - 1");
  CHECK(RingElt::Q().to_string() == "-v + v^-1");
  CHECK((RingElt::q_power(2, 3) + RingElt::v_power(1, -2)).to_string() == "3*q^2 - 2*v");
}

TEST_CASE("degree_in_q") {
  QDegreeResult z = degree_in_q(RingElt());
  CHECK(z.is_poly);
  CHECK(z.is_zero);
  CHECK(z.degree == -1);

  QDegreeResult c = degree_in_q(RingElt::q_power(2) + RingElt::one());
  CHECK(c.is_poly);
  CHECK(!c.is_zero);
  CHECK(c.degree == 2);

  CHECK(!degree_in_q(RingElt::v_power(1)).is_poly);   // odd exponent
  CHECK(!degree_in_q(RingElt::q_power(-1)).is_poly);  // negative exponent
  CHECK(degree_in_q(RingElt::v_power(1)).reason != "");
}

TEST_CASE("q_coefficients") {
  RingElt r = RingElt::one() + RingElt::q_power(1, 2) + RingElt::q_power(3, 3);
  CHECK(q_coefficients(r) == std::vector<Int>{1, 2, 0, 3});
  CHECK(q_coefficients(RingElt()).empty());
  CHECK_THROWS_AS(q_coefficients(RingElt::v_power(1)), std::invalid_argument);
}

TEST_CASE("as_poly_in_Q") {
  RingElt Q = RingElt::Q();
  QExpansion e = as_poly_in_Q(Q * Q, 0);
  CHECK(e.ok);
  CHECK(e.coeffs == std::vector<Int>{0, 0, 1});  // v^-2 - 2 + v^2 = Q^2

  e = as_poly_in_Q(Q, 1);
  CHECK(e.ok);
  CHECK(e.coeffs == std::vector<Int>{0, 1});

  e = as_poly_in_Q(RingElt::one() + Q * Q * RingElt::constant(5), 0);
  CHECK(e.ok);
  CHECK(e.coeffs == std::vector<Int>{1, 0, 5});

  // parity violations and non-members of Z[Q]
  CHECK(!as_poly_in_Q(Q, 0).ok);
  CHECK(!as_poly_in_Q(RingElt::one(), 1).ok);
  CHECK(!as_poly_in_Q(RingElt::v_power(1), 1).ok);  // v alone is not in Z[Q]
  CHECK(!as_poly_in_Q(RingElt::q_power(1), 0).ok);

  QExpansion z = as_poly_in_Q(RingElt(), 1);
  CHECK(z.ok);
  CHECK(z.coeffs.empty());

  // negative parity arguments reduce mod 2
  CHECK(as_poly_in_Q(Q, -1).ok);
  CHECK(as_poly_in_Q(Q * Q, -2).ok);

  // round trip on a random-ish member of Z[Q]
  RingElt r;
  std::vector<Int> want = {0, 4, 0, -2, 0, 1};
  for (size_t i = 0; i < want.size(); ++i) {
    RingElt qi = RingElt::constant(want[i]);
    for (size_t k = 0; k < i; ++k) qi *= Q;
    r += qi;
  }
  QExpansion round = as_poly_in_Q(r, 1);
  CHECK(round.ok);
  CHECK(round.coeffs == want);
}

TEST_CASE("qpoly helpers") {
  QPoly p = {1, 0, 3, 0, 0};
  qpoly_trim(p);
  CHECK(p == QPoly{1, 0, 3});
  CHECK(qpoly_degree(p) == 2);
  CHECK(qpoly_degree(QPoly{}) == -1);
  CHECK(qpoly_to_ring(p) == RingElt::one() + RingElt::q_power(2, 3));
  CHECK(qpoly_to_string(QPoly{1, 1}) == "q + 1");
  CHECK(qpoly_to_string(QPoly{}) == "0");
  CHECK(qpoly_to_string(QPoly{1}) == "1");
}
