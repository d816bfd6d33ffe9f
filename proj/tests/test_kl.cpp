#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "affhecke/kl.hpp"
#include "oracles.hpp"

using namespace affhecke;

TEST_CASE("infinite dihedral: every polynomial is 1") {
  RootDatum d = RootDatum::preset("SL2");
  KLTable kl(d);
  auto ball = length_ball(d, 6);
  for (auto& w : ball)
    for (auto& x : ball) {
      QPoly p = kl.polynomial(x, w);
      if (bruhat_leq(x, w))
        CHECK(p == QPoly{1});
      else
        CHECK(p.empty());
    }
}

TEST_CASE("dihedral mu coefficients") {
  RootDatum d = RootDatum::preset("SL2");
  SimpleReflections s = simple_reflections(d);
  KLTable kl(d);
  AffineWeylElt e = AffineWeylElt::identity(d);
  AffineWeylElt w3 = s.refl[1] * s.refl[0] * s.refl[1];
  CHECK(kl.polynomial(e, w3) == QPoly{1});
  // length difference three, but the q coefficient of P = 1 vanishes
  CHECK(kl.mu_coefficient(e, w3) == 0);
  CHECK(kl.mu_coefficient(e, s.refl[0]) == 1);
  CHECK(kl.mu_coefficient(s.refl[0], s.refl[0] * s.refl[1]) == 1);
  CHECK(kl.mu_coefficient(s.refl[0], e) == 0);              // wrong direction
  CHECK(kl.mu_coefficient(e, s.refl[0] * s.refl[1]) == 0);  // even difference
}

TEST_CASE("recursion matches R-polynomial inversion") {
  for (auto* name : {"SL2", "SL3"}) {
    CAPTURE(name);
    RootDatum d = RootDatum::preset(name);
    KLTable kl(d);
    oracles::RTable rt(d);
    for (auto& w : length_ball(d, 4)) {
      bool consistent = false;
      auto want = oracles::kl_by_inversion(w, rt, consistent);
      CHECK(consistent);
      for (auto& [x, p] : want) {
        CAPTURE(length(x));
        CAPTURE(length(w));
        CHECK(kl.polynomial(x, w) == p);
      }
    }
  }
}

TEST_CASE("degree bound and unitriangularity") {
  RootDatum d = RootDatum::preset("SL3");
  KLTable kl(d);
  auto ball = length_ball(d, 4);
  for (auto& w : ball)
    for (auto& x : ball) {
      QPoly p = kl.polynomial(x, w);
      if (x == w) CHECK(p == QPoly{1});
      if (p.empty()) {
        CHECK(!bruhat_leq(x, w));
        continue;
      }
      CHECK(bruhat_leq(x, w));
      CHECK(p[0] == 1);
      int diff = length(w) - length(x);
      if (diff > 0) CHECK(2 * qpoly_degree(p) < diff);
      // short intervals are always trivial
      if (diff <= 2) CHECK(p == QPoly{1});
    }
}

TEST_CASE("extended group: translation by the length-zero subgroup") {
  RootDatum d = RootDatum::preset("GL2");
  KLTable kl(d);
  AffineWeylElt tau = omega_element(d, 1);
  auto ball = length_ball(d, 4);
  for (auto& w : ball)
    for (auto& x : ball) {
      QPoly base = kl.polynomial(x, w);
      CHECK(kl.polynomial(tau * x, tau * w) == base);
      CHECK(kl.polynomial(tau.inverse() * x, tau.inverse() * w) == base);
      // distinct cosets are incomparable
      CHECK(kl.polynomial(tau * x, w).empty());
    }
  CHECK(kl.polynomial(AffineWeylElt::identity(d), tau).empty());

  RootDatum gl3 = RootDatum::preset("GL3");
  KLTable kl3(gl3);
  AffineWeylElt t110 = AffineWeylElt::from_translation(gl3, {1, 1, 0});
  AffineWeylElt tau3 = omega_element(gl3, 2);
  CHECK(omega_part_and_reduced_word(t110).omega == tau3);
  CHECK(kl3.polynomial(tau3, t110) == QPoly{1});
}

TEST_CASE("datum mismatch is rejected") {
  RootDatum a = RootDatum::preset("GL2");
  RootDatum b = RootDatum::preset("GL2");
  KLTable kl(a);
  CHECK_THROWS_AS(kl.polynomial(AffineWeylElt::identity(b), AffineWeylElt::identity(b)),
                  std::invalid_argument);
}

TEST_CASE("cache save and load") {
  namespace fs = std::filesystem;
  RootDatum d = RootDatum::preset("GL2");
  std::string path = (fs::temp_directory_path() / "affhecke_test_kl_cache.json").string();

  KLTable kl(d);
  AffineWeylElt e = AffineWeylElt::identity(d);
  AffineWeylElt w = AffineWeylElt::from_translation(d, {2, -2});
  QPoly p = kl.polynomial(e, w);
  size_t n = kl.size();
  CHECK(n > 0);
  kl.save(path);

  KLTable fresh(d);
  fresh.load(path);
  CHECK(fresh.size() == n);
  CHECK(fresh.polynomial(e, w) == p);

  RootDatum sl2 = RootDatum::preset("SL2");
  KLTable other(sl2);
  CHECK_THROWS_AS(other.load(path), ConfigError);

  KLTable empty(d);
  CHECK_THROWS_AS(empty.load("/nonexistent/cache.json"), ConfigError);

  std::string bad = (fs::temp_directory_path() / "affhecke_test_kl_bad.json").string();
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_AS(empty.load(bad), ConfigError);
  std::ofstream(bad) << "{\"pairs\": []}";
  CHECK_THROWS_AS(empty.load(bad), ConfigError);

  fs::remove(path);
  fs::remove(bad);
}
