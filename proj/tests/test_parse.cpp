#include <doctest.h>

#include "affhecke/parse.hpp"

using namespace affhecke;

TEST_CASE("parse terms") {
  RootDatum d = RootDatum::preset("GL2");
  SimpleReflections s = simple_reflections(d);
  CHECK(parse_element(d, "e") == AffineWeylElt::identity(d));
  CHECK(parse_element(d, "s0") == s.refl[0]);
  CHECK(parse_element(d, "s1") == s.refl[1]);
  CHECK(parse_element(d, "t[1,0]") == AffineWeylElt::from_translation(d, {1, 0}));
  CHECK(parse_element(d, "t[-2, 3]") == AffineWeylElt::from_translation(d, {-2, 3}));
  CHECK(parse_element(d, "omega(1)") == omega_element(d, 1));
  CHECK(parse_element(d, "omega(-2)") == omega_element(d, -2));
  CHECK(parse_element(d, "t[0,1] * s1") == omega_element(d, 1));
  CHECK(parse_element(d, "s1 * s0 * s1") ==
        s.refl[1] * s.refl[0] * s.refl[1]);
  CHECK(parse_element(d, "  e  ") == AffineWeylElt::identity(d));
}

TEST_CASE("parse errors carry positions") {
  RootDatum d = RootDatum::preset("GL2");
  CHECK_THROWS_AS(parse_element(d, ""), ParseError);
  CHECK_THROWS_AS(parse_element(d, "foo"), ParseError);
  CHECK_THROWS_AS(parse_element(d, "s9"), ParseError);
  CHECK_THROWS_AS(parse_element(d, "s-1"), ParseError);
  CHECK_THROWS_AS(parse_element(d, "t[1]"), ParseError);       // wrong coordinate count
  CHECK_THROWS_AS(parse_element(d, "t[1,2"), ParseError);      // missing bracket
  CHECK_THROWS_AS(parse_element(d, "t[1,x]"), ParseError);     // bad integer
  CHECK_THROWS_AS(parse_element(d, "s1 * * s0"), ParseError);  // empty term
  CHECK_THROWS_AS(parse_element(d, "omega()"), ParseError);

  try {
    parse_element(d, "s1 * zz");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }

  RootDatum sl2 = RootDatum::preset("SL2");
  CHECK_THROWS_AS(parse_element(sl2, "omega(1)"), ParseError);
  CHECK(parse_element(sl2, "omega(0)") == AffineWeylElt::identity(sl2));

  RootDatum gl1 = RootDatum::preset("GL1");
  CHECK_THROWS_AS(parse_element(gl1, "s0"), ParseError);
  CHECK(parse_element(gl1, "t[4]") == AffineWeylElt::from_translation(gl1, {4}));
}

TEST_CASE("print canonical form") {
  RootDatum d = RootDatum::preset("GL2");
  CHECK(print_element(AffineWeylElt::identity(d)) == "e");
  CHECK(print_element(AffineWeylElt::from_translation(d, {1, 0})) == "t[1,0]");
  CHECK(print_element(omega_element(d, 1)) == "t[0,1] * s1");
  CHECK(print_element(AffineWeylElt::from_finite(d, d.weyl_simple(0))) == "s1");
  CHECK(print_element(simple_reflections(d).refl[0]) == "t[-1,1] * s1");

  RootDatum gl3 = RootDatum::preset("GL3");
  AffineWeylElt w = AffineWeylElt::from_finite(
      gl3, gl3.weyl_mul(gl3.weyl_simple(0), gl3.weyl_simple(1)));
  CHECK(print_element(w) == "s1 * s2");
}

TEST_CASE("parse/print round trips") {
  for (auto* name : {"SL2", "GL2", "GL3"}) {
    RootDatum d = RootDatum::preset(name);
    bool ext = std::string(name) != "SL2";
    for (auto& x : length_ball(d, 3, ext ? -1 : 0, ext ? 1 : 0)) {
      std::string text = print_element(x);
      CHECK(parse_element(d, text) == x);
      CHECK(print_element(parse_element(d, text)) == text);
    }
  }
}

TEST_CASE("coweights") {
  RootDatum d = RootDatum::preset("GL3");
  CHECK(parse_coweight(d, "1,0,-2") == Coweight{1, 0, -2});
  CHECK(parse_coweight(d, " 1 , 0 , 2 ") == Coweight{1, 0, 2});
  CHECK_THROWS_AS(parse_coweight(d, "1,0"), ParseError);
  CHECK_THROWS_AS(parse_coweight(d, "1,0,a"), ParseError);
  CHECK_THROWS_AS(parse_coweight(d, ""), ParseError);
  CHECK(print_coweight({1, 0, -2}) == "1,0,-2");
  CHECK(print_coweight({}) == "");
}
