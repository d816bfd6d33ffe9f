#include "affhecke/kl.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "affhecke/parse.hpp"

namespace affhecke {

KLTable::KLTable(const RootDatum& d) : d_(&d), s_(simple_reflections(d)) {}

QPoly KLTable::polynomial(const AffineWeylElt& x, const AffineWeylElt& w) {
  if (x.datum != d_ || w.datum != d_)
    throw std::invalid_argument("elements from different root data");
  OmegaWord ox = omega_part_and_reduced_word(x);
  OmegaWord ow = omega_part_and_reduced_word(w);
  if (!(ox.omega == ow.omega)) return {};
  return get_waff(ox.omega.inverse() * x, ow.omega.inverse() * w);
}

Int KLTable::mu_coefficient(const AffineWeylElt& x, const AffineWeylElt& w) {
  int diff = length(w) - length(x);
  if (diff <= 0 || diff % 2 == 0) return 0;
  QPoly p = polynomial(x, w);
  int want = (diff - 1) / 2;
  return want < (int)p.size() ? p[want] : 0;
}

const QPoly& KLTable::get_waff(const AffineWeylElt& x, const AffineWeylElt& w) {
  Key key{x.translation, x.finite, w.translation, w.finite};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  QPoly p = compute(x, w);
  // invariant: constant term 1 and deg < (l(w)-l(x))/2 whenever x <= w
  if (!p.empty()) {
    int diff = length(w) - length(x);
    if (p[0] != 1) throw std::logic_error("KL polynomial without constant term 1");
    if (diff > 0 && 2 * qpoly_degree(p) >= diff)
      throw std::logic_error("KL polynomial degree bound violated");
    if (diff == 0 && (p.size() != 1 || p[0] != 1))
      throw std::logic_error("KL polynomial P_{x,x} != 1");
  }
  return memo_[key] = std::move(p);
}

QPoly KLTable::compute(const AffineWeylElt& x, const AffineWeylElt& w) {
  if (x == w) return {1};
  int lx = length(x), lw = length(w);
  if (lx >= lw || !bruhat_leq(x, w)) return {};
  // left descent s of w; recursion on w = s * v
  int si = -1;
  AffineWeylElt v = w;
  for (int i = 0; i < s_.size(); ++i) {
    AffineWeylElt sw = s_.refl[i] * w;
    if (length(sw) < lw) {
      si = i;
      v = sw;
      break;
    }
  }
  if (si < 0) throw std::logic_error("no left descent");
  AffineWeylElt sx = s_.refl[si] * x;
  bool x_down = length(sx) < lx;
  QPoly p;
  auto add_scaled = [&p](const QPoly& q, int shift, Int c) {
    if (q.empty() || c == 0) return;
    if ((int)p.size() < (int)q.size() + shift) p.resize(q.size() + shift, 0);
    for (size_t i = 0; i < q.size(); ++i) p[i + shift] += c * q[i];
  };
  if (x_down) {
    add_scaled(get_waff(sx, v), 0, 1);
    add_scaled(get_waff(x, v), 1, 1);
  } else {
    add_scaled(get_waff(sx, v), 1, 1);
    add_scaled(get_waff(x, v), 0, 1);
  }
  // mu-corrections over x <= z < v with s z < z
  for (auto& z : bruhat_lower_set(v)) {
    if (z == v) continue;
    int lz = length(z);
    if (length(s_.refl[si] * z) >= lz) continue;
    if (!bruhat_leq(x, z)) continue;
    int diff = length(v) - lz;
    if (diff % 2 == 0) continue;
    const QPoly& pzv = get_waff(z, v);
    int want = (diff - 1) / 2;
    Int mu = want < (int)pzv.size() ? pzv[want] : 0;
    if (mu == 0) continue;
    add_scaled(get_waff(x, z), (lw - lz) / 2, -mu);
  }
  qpoly_trim(p);
  return p;
}

void KLTable::save(const std::string& path) const {
  nlohmann::ordered_json j;
  j["group"] = d_->name();
  auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
  for (auto& [key, p] : memo_) {
    AffineWeylElt x{d_, key.xt, key.xw}, w{d_, key.wt, key.ww};
    nlohmann::ordered_json entry;
    entry["x"] = print_element(x);
    entry["w"] = print_element(w);
    entry["p"] = p;
    pairs.push_back(std::move(entry));
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write KL cache: " + path);
  out << j.dump(2) << "\n";
}

void KLTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read KL cache: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad KL cache: ") + e.what());
  }
  if (!j.is_object() || !j.contains("group") || !j.contains("pairs"))
    throw ConfigError("bad KL cache: missing group/pairs");
  if (j["group"].get<std::string>() != d_->name())
    throw ConfigError("KL cache group mismatch");
  for (auto& entry : j["pairs"]) {
    AffineWeylElt x = parse_element(*d_, entry["x"].get<std::string>());
    AffineWeylElt w = parse_element(*d_, entry["w"].get<std::string>());
    QPoly p = entry["p"].get<QPoly>();
    qpoly_trim(p);
    memo_[Key{x.translation, x.finite, w.translation, w.finite}] = std::move(p);
  }
}

}  // namespace affhecke
