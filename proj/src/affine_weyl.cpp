#include "affhecke/affine_weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>

namespace affhecke {

namespace {

Coweight vadd(const Coweight& a, const Coweight& b) {
  Coweight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Coweight vneg(const Coweight& a) {
  Coweight out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

void check_same(const AffineWeylElt& a, const AffineWeylElt& b) {
  if (a.datum != b.datum) throw std::invalid_argument("elements from different root data");
}

}  // namespace

AffineWeylElt AffineWeylElt::identity(const RootDatum& d) {
  return {&d, Coweight(d.rank(), 0), d.weyl_identity()};
}

AffineWeylElt AffineWeylElt::from_translation(const RootDatum& d, Coweight lambda) {
  if ((int)lambda.size() != d.rank()) throw std::invalid_argument("translation has wrong rank");
  return {&d, std::move(lambda), d.weyl_identity()};
}

AffineWeylElt AffineWeylElt::from_finite(const RootDatum& d, int w) {
  return {&d, Coweight(d.rank(), 0), w};
}

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
  check_same(*this, o);
  return {datum, vadd(translation, datum->act(finite, o.translation)),
          datum->weyl_mul(finite, o.finite)};
}

AffineWeylElt AffineWeylElt::inverse() const {
  int wi = datum->weyl_inv(finite);
  return {datum, vneg(datum->act(wi, translation)), wi};
}

SimpleReflections simple_reflections(const RootDatum& d) {
  SimpleReflections out;
  if (d.n_simple() == 0) return out;
  const auto& hr = d.highest_root();  // throws when not almost simple
  AffineWeylElt s0{&d, vneg(hr.coroot), d.reflection_for_root(hr.root)};
  out.refl.push_back(s0);
  for (int i = 0; i < d.n_simple(); ++i)
    out.refl.push_back(AffineWeylElt::from_finite(d, d.weyl_simple(i)));
  return out;
}

AffineRoot act_on_affine_root(const AffineWeylElt& x, const AffineRoot& beta) {
  const RootDatum& d = *x.datum;
  if (!d.is_root(beta.root)) throw std::invalid_argument("not a root of the datum");
  IntVec wa = d.act_on_weight(x.finite, beta.root);
  return {wa, beta.offset - RootDatum::pair(wa, x.translation)};
}

bool is_positive_affine_root(const RootDatum& d, const AffineRoot& beta) {
  if (beta.offset >= 1) return true;
  if (beta.offset <= -1) return false;
  return !d.is_positive_root(beta.root);
}

AffineWeylElt affine_reflection(const RootDatum& d, const AffineRoot& beta) {
  Coweight cr = d.coroot_of(beta.root);
  Coweight tr(cr.size());
  for (size_t i = 0; i < cr.size(); ++i) tr[i] = -beta.offset * cr[i];
  return {&d, tr, d.reflection_for_root(beta.root)};
}

int length(const AffineWeylElt& x) {
  const RootDatum& d = *x.datum;
  Int total = 0;
  for (auto& rp : d.positive_roots()) {
    for (int sign = 0; sign < 2; ++sign) {
      IntVec alpha = rp.root;
      if (sign) {
        for (auto& c : alpha) c = -c;
      }
      // alpha + k Bbar-positive for k >= k0
      Int k0 = sign ? 0 : 1;  // negatives of B-positive roots are Bbar-positive at k = 0
      IntVec wa = d.act_on_weight(x.finite, alpha);
      Int c = RootDatum::pair(wa, x.translation);
      // x.(alpha+k) = wa + (k - c) is Bbar-negative iff k <= c-1, or k = c
      // with wa B-positive
      if (c - k0 > 0) total += c - k0;
      if (c >= k0 && d.is_positive_root(wa)) total += 1;
    }
  }
  return (int)total;
}

OmegaWord omega_part_and_reduced_word(const AffineWeylElt& x) {
  OmegaWord out;
  SimpleReflections s = simple_reflections(*x.datum);
  AffineWeylElt cur = x;
  int len = length(cur);
  std::vector<int> rev;
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < s.size(); ++i) {
      AffineWeylElt next = cur * s.refl[i];
      int nl = length(next);
      if (nl < len) {
        rev.push_back(i);
        cur = next;
        len = nl;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for positive-length element");
  }
  out.omega = cur;
  out.word.assign(rev.rbegin(), rev.rend());
  return out;
}

namespace {

// lifting-property recursion within W_aff (trivial Omega parts)
bool bruhat_leq_waff(const AffineWeylElt& x, int lx, const AffineWeylElt& y, int ly,
                     const SimpleReflections& s) {
  if (x == y) return true;
  if (lx >= ly) return false;
  // find a left descent of y
  for (int i = 0; i < s.size(); ++i) {
    AffineWeylElt sy = s.refl[i] * y;
    int lsy = length(sy);
    if (lsy < ly) {
      AffineWeylElt sx = s.refl[i] * x;
      int lsx = length(sx);
      if (lsx < lx) return bruhat_leq_waff(sx, lsx, sy, lsy, s);
      return bruhat_leq_waff(x, lx, sy, lsy, s);
    }
  }
  throw std::logic_error("no left descent for positive-length element");
}

}  // namespace

bool bruhat_leq(const AffineWeylElt& x, const AffineWeylElt& y) {
  check_same(x, y);
  OmegaWord ox = omega_part_and_reduced_word(x);
  OmegaWord oy = omega_part_and_reduced_word(y);
  if (!(ox.omega == oy.omega)) return false;
  AffineWeylElt xa = ox.omega.inverse() * x;
  AffineWeylElt ya = oy.omega.inverse() * y;
  SimpleReflections s = simple_reflections(*x.datum);
  return bruhat_leq_waff(xa, length(xa), ya, length(ya), s);
}

std::vector<AffineWeylElt> bruhat_lower_set(const AffineWeylElt& y) {
  OmegaWord oy = omega_part_and_reduced_word(y);
  SimpleReflections s = simple_reflections(*y.datum);
  std::set<AffineWeylElt> cur = {AffineWeylElt::identity(*y.datum)};
  for (int i : oy.word) {
    std::set<AffineWeylElt> next = cur;
    for (auto& x : cur) next.insert(x * s.refl[i]);
    cur.swap(next);
  }
  std::vector<AffineWeylElt> out;
  out.reserve(cur.size());
  for (auto& x : cur) out.push_back(oy.omega * x);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<AffineWeylElt> admissible_set(const RootDatum& d, const Coweight& mu) {
  std::set<AffineWeylElt> acc;
  for (auto& lam : d.weyl_orbit(mu)) {
    auto lower = bruhat_lower_set(AffineWeylElt::from_translation(d, lam));
    acc.insert(lower.begin(), lower.end());
  }
  std::vector<AffineWeylElt> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<AffineWeylElt> small_omega_elements(const RootDatum& d) {
  // exhaustive search over the translation box [-3,3]^rank; large enough to
  // contain a generator of Omega for every supported preset
  std::vector<AffineWeylElt> out;
  Coweight t(d.rank(), -3);
  while (true) {
    for (int w = 0; w < d.weyl_order(); ++w) {
      AffineWeylElt x{&d, t, w};
      if (length(x) == 0) {
        out.push_back(x);
        break;  // at most one Omega element per translation part
      }
    }
    int i = 0;
    while (i < d.rank() && t[i] == 3) {
      t[i] = -3;
      ++i;
    }
    if (i == d.rank()) break;
    ++t[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineWeylElt omega_element(const RootDatum& d, Int j) {
  AffineWeylElt e = AffineWeylElt::identity(d);
  if (j == 0) return e;
  auto all = small_omega_elements(d);
  // generator: nontrivial, minimal L1 translation norm, then lexicographically
  // greatest translation
  const AffineWeylElt* gen = nullptr;
  Int best_norm = 0;
  for (auto& x : all) {
    if (x == e) continue;
    Int norm = 0;
    for (auto c : x.translation) norm += c < 0 ? -c : c;
    if (!gen || norm < best_norm ||
        (norm == best_norm && x.translation > gen->translation)) {
      gen = &x;
      best_norm = norm;
    }
  }
  if (!gen) throw std::domain_error("Omega is trivial for this datum");
  AffineWeylElt tau = *gen;
  if (j < 0) {
    tau = tau.inverse();
    j = -j;
  }
  AffineWeylElt out = e;
  for (Int k = 0; k < j; ++k) out = out * tau;
  return out;
}

std::vector<AffineWeylElt> length_ball(const RootDatum& d, int radius, Int omega_lo,
                                       Int omega_hi) {
  SimpleReflections s = simple_reflections(d);
  std::set<AffineWeylElt> seen = {AffineWeylElt::identity(d)};
  std::deque<AffineWeylElt> queue = {AffineWeylElt::identity(d)};
  std::deque<int> depth = {0};
  while (!queue.empty()) {
    AffineWeylElt x = queue.front();
    int dep = depth.front();
    queue.pop_front();
    depth.pop_front();
    if (dep == radius) continue;
    for (int i = 0; i < s.size(); ++i) {
      AffineWeylElt y = x * s.refl[i];
      if (seen.insert(y).second) {
        queue.push_back(y);
        depth.push_back(dep + 1);
      }
    }
  }
  bool omega_trivial = small_omega_elements(d).size() <= 1;
  std::vector<AffineWeylElt> out;
  for (Int j = omega_lo; j <= omega_hi; ++j) {
    if (omega_trivial && j != 0) continue;
    AffineWeylElt tau = omega_element(d, j);
    for (auto& x : seen) out.push_back(tau * x);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool canonical_less(const AffineWeylElt& a, const AffineWeylElt& b) {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  if (a.translation != b.translation) return a.translation < b.translation;
  if (a.finite == b.finite) return false;
  const auto& wa = a.datum->weyl_word(a.finite);
  const auto& wb = b.datum->weyl_word(b.finite);
  return wa < wb;
}

}  // namespace affhecke
