#pragma once

#include <map>
#include <string>

#include "affhecke/affine_weyl.hpp"
#include "affhecke/ring.hpp"

namespace affhecke {

// Kazhdan-Lusztig polynomials P_{x,w} for W_aff, extended to the full group by
// P_{tau x, tau w} = P_{x,w} and P = 0 across distinct Omega-cosets. Computed
// by the left-descent recursion with mu-corrections, memoized. Every memo
// entry is checked against deg P < (l(w) - l(x))/2 and constant term 1.
class KLTable {
public:
  explicit KLTable(const RootDatum& d);

  QPoly polynomial(const AffineWeylElt& x, const AffineWeylElt& w);
  Int mu_coefficient(const AffineWeylElt& x, const AffineWeylElt& w);

  const RootDatum& datum() const { return *d_; }
  size_t size() const { return memo_.size(); }

  // JSON cache; correctness never depends on it
  void load(const std::string& path);
  void save(const std::string& path) const;

private:
  struct Key {
    Coweight xt;
    int xw;
    Coweight wt;
    int ww;
    bool operator<(const Key& o) const {
      if (xt != o.xt) return xt < o.xt;
      if (xw != o.xw) return xw < o.xw;
      if (wt != o.wt) return wt < o.wt;
      return ww < o.ww;
    }
  };
  const QPoly& get_waff(const AffineWeylElt& x, const AffineWeylElt& w);
  QPoly compute(const AffineWeylElt& x, const AffineWeylElt& w);

  const RootDatum* d_;
  SimpleReflections s_;
  std::map<Key, QPoly> memo_;
};

}  // namespace affhecke
