#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affhecke/ring.hpp"

namespace affhecke {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major
using Coweight = IntVec;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A based root datum with X^* and X_* both presented on Z^rank in dual bases,
// so the pairing is the dot product. Simple roots live in weight coordinates,
// simple coroots in coweight coordinates. The finite Weyl group is generated
// and tabulated at construction (matrices, products, inverses, shortlex words).
class RootDatum {
public:
  struct RootPair {
    IntVec root;     // weight coordinates
    Coweight coroot; // coweight coordinates
  };

  // GL2, GL3, ..., SL2, SL3, ..., PGL2, ..., Sp4, GSp4 (case-insensitive;
  // "SL2affine" style aliases accepted).
  static RootDatum preset(const std::string& name);
  static RootDatum from_config_file(const std::string& path);
  static RootDatum from_data(std::string name, IntMat simple_roots, IntMat simple_coroots);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int n_simple() const { return (int)simple_roots_.size(); }
  const IntVec& simple_root(int i) const { return simple_roots_[i]; }
  const Coweight& simple_coroot(int i) const { return simple_coroots_[i]; }
  const IntMat& cartan() const { return cartan_; }

  static Int pair(const IntVec& weight, const Coweight& cw);

  // roots
  const std::vector<RootPair>& positive_roots() const { return positive_; }
  bool is_root(const IntVec& r) const;
  bool is_positive_root(const IntVec& r) const;  // B-positive; requires is_root
  const Coweight& coroot_of(const IntVec& root) const;
  // defined only when the root system is irreducible and nonempty
  const RootPair& highest_root() const;
  bool has_highest_root() const { return highest_.has_value(); }

  // finite Weyl group (elements are dense indices, 0 = identity)
  int weyl_order() const { return (int)w_coweight_mats_.size(); }
  int weyl_identity() const { return 0; }
  int weyl_mul(int a, int b) const { return w_mul_[a][b]; }
  int weyl_inv(int a) const { return w_inv_[a]; }
  int weyl_simple(int i) const { return w_simple_[i]; }
  int weyl_length(int a) const { return w_len_[a]; }
  const std::vector<int>& weyl_word(int a) const { return w_word_[a]; }
  int weyl_longest() const { return w_longest_; }
  Coweight act(int w, const Coweight& cw) const;
  IntVec act_on_weight(int w, const IntVec& wt) const;
  int reflection_for_root(const IntVec& root) const;  // Weyl index of s_root

  // dominance and orbits
  bool is_dominant(const Coweight& cw) const;
  Coweight dominant_representative(const Coweight& cw) const;
  std::vector<Coweight> weyl_orbit(const Coweight& cw) const;
  // lambda = first - second with both dominant; deterministic canonical choice
  std::pair<Coweight, Coweight> dominant_decomposition(const Coweight& lambda) const;

  // weight theory of the dual group
  // all weights of the irreducible dual-group representation with highest
  // weight mu (mu dominant); equivalently the lambda with mu - w*lambda a
  // nonnegative integral combination of positive coroots for every w
  std::vector<Coweight> omega_set(const Coweight& mu) const;
  Int weight_multiplicity(const Coweight& mu, const Coweight& lambda) const;
  Int dual_dimension(const Coweight& mu) const;  // Weyl dimension formula

  // expansion of cw in the simple coroot basis, if it lies there over Z
  std::optional<IntVec> coroot_coefficients(const Coweight& cw) const;

  // interior point of the base alcove A^- as p_num / p_den
  const IntVec& alcove_point_num() const { return alcove_point_num_; }
  Int alcove_point_den() const { return alcove_point_den_; }

private:
  RootDatum() = default;
  void build();
  void build_weyl();
  void build_roots();
  void build_lifting_generators();
  void build_alcove_point();
  void validate_cartan() const;

  std::string name_;
  int rank_ = 0;
  IntMat simple_roots_;
  IntMat simple_coroots_;
  IntMat cartan_;  // cartan_[i][j] = <alpha_i, alpha_j^vee>

  std::vector<RootPair> positive_;
  std::map<IntVec, int> root_index_;  // root vector -> index, negatives offset
  std::optional<RootPair> highest_;
  std::optional<int> highest_index_;

  std::vector<IntMat> w_coweight_mats_;
  std::vector<IntMat> w_weight_mats_;
  std::vector<std::vector<int>> w_mul_;
  std::vector<int> w_inv_;
  std::vector<int> w_simple_;
  std::vector<int> w_len_;
  std::vector<std::vector<int>> w_word_;
  int w_longest_ = 0;
  std::map<IntMat, int> w_index_;

  // h_i dominant with <alpha_j, h_i> = lift_pairing_[i] * delta_ij
  IntMat lifting_gens_;
  std::vector<Int> lift_pairing_;

  IntVec alcove_point_num_;
  Int alcove_point_den_ = 1;

  IntVec two_rho_cw_;  // sum of positive coroots
};

}  // namespace affhecke
