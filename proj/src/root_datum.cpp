#include "affhecke/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/rational.hpp>

namespace affhecke {

namespace {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// boost::rational's heterogeneous comparisons (rational vs plain int) self
// recurse under C++20 rewritten candidates in this Boost release, so sign
// tests go through the numerator (the denominator is kept positive).
bool rat_zero(const Rat& r) { return r.numerator() == 0; }
bool rat_neg(const Rat& r) { return r.numerator() < 0; }
bool rat_pos(const Rat& r) { return r.numerator() > 0; }

IntMat identity_mat(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  int n = (int)a.size();
  IntMat out(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

IntVec mat_vec(const IntMat& m, const IntVec& x) {
  int n = (int)m.size();
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * x[j];
  return out;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec vec_scale(const IntVec& a, Int c) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

// Exact solve of (rows x cols) * x = b; nullopt when inconsistent or the
// solution is not unique. Small systems only.
std::optional<RatVec> solve_linear(RatMat m, RatVec b) {
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  std::vector<int> pivot_row(cols, -1);
  int prow = 0;
  for (int c = 0; c < cols && prow < rows; ++c) {
    int sel = -1;
    for (int r = prow; r < rows; ++r)
      if (!rat_zero(m[r][c])) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[prow]);
    std::swap(b[sel], b[prow]);
    for (int r = 0; r < rows; ++r) {
      if (r == prow || rat_zero(m[r][c])) continue;
      Rat f = m[r][c] / m[prow][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[prow][cc];
      b[r] -= f * b[prow];
    }
    pivot_row[c] = prow;
    ++prow;
  }
  for (int c = 0; c < cols; ++c)
    if (pivot_row[c] < 0) return std::nullopt;  // not unique
  for (int r = prow; r < rows; ++r)
    if (!rat_zero(b[r])) return std::nullopt;  // inconsistent
  RatVec x(cols);
  for (int c = 0; c < cols; ++c) x[c] = b[pivot_row[c]] / m[pivot_row[c]][c];
  return x;
}

RatMat to_rat(const IntMat& m) {
  RatMat out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    out[i].resize(m[i].size());
    for (size_t j = 0; j < m[i].size(); ++j) out[i][j] = Rat(m[i][j]);
  }
  return out;
}

Rat leading_minor_det(const IntMat& c, int k) {
  RatMat m(k, RatVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = Rat(c[i][j]);
  Rat det(1);
  for (int col = 0; col < k; ++col) {
    int sel = -1;
    for (int r = col; r < k; ++r)
      if (!rat_zero(m[r][col])) {
        sel = r;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < k; ++r) {
      Rat f = m[r][col] / m[col][col];
      for (int cc = col; cc < k; ++cc) m[r][cc] -= f * m[col][cc];
    }
  }
  return det;
}

// height of a root from its expansion in the simple-root basis;
// simple_root_cols has the simple roots as columns
Int root_height(const RatMat& simple_root_cols, const IntVec& root) {
  RatVec b(root.size());
  for (size_t r = 0; r < root.size(); ++r) b[r] = Rat(root[r]);
  auto sol = solve_linear(simple_root_cols, b);
  Rat h(0);
  for (auto& c : *sol) h += c;
  assert(h.denominator() == 1);
  return h.numerator();
}

IntMat cartan_matrix_A(int l) {
  IntMat c(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i) {
    c[i][i] = 2;
    if (i + 1 < l) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

std::string normalize_preset_name(std::string s) {
  std::string out;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != '_' && ch != '-' && ch != ' ')
      out.push_back((char)std::toupper((unsigned char)ch));
  auto pos = out.find("AFFINE");
  if (pos != std::string::npos) out.erase(pos, 6);
  return out;
}

}  // namespace

Int RootDatum::pair(const IntVec& weight, const Coweight& cw) {
  assert(weight.size() == cw.size());
  Int s = 0;
  for (size_t i = 0; i < weight.size(); ++i) s += weight[i] * cw[i];
  return s;
}

RootDatum RootDatum::from_data(std::string name, IntMat simple_roots, IntMat simple_coroots) {
  RootDatum d;
  d.name_ = std::move(name);
  if (simple_roots.size() != simple_coroots.size())
    throw ConfigError("simple roots and coroots must come in pairs");
  if (simple_roots.empty())
    throw ConfigError("at least one simple root required");
  d.rank_ = (int)simple_roots[0].size();
  for (auto& v : simple_roots)
    if ((int)v.size() != d.rank_) throw ConfigError("inconsistent rank in simple roots");
  for (auto& v : simple_coroots)
    if ((int)v.size() != d.rank_) throw ConfigError("inconsistent rank in simple coroots");
  d.simple_roots_ = std::move(simple_roots);
  d.simple_coroots_ = std::move(simple_coroots);
  d.build();
  return d;
}

RootDatum RootDatum::preset(const std::string& raw) {
  std::string n = normalize_preset_name(raw);
  auto make_gl = [](int k) {
    IntMat roots, coroots;
    for (int i = 0; i + 1 < k; ++i) {
      IntVec a(k, 0);
      a[i] = 1;
      a[i + 1] = -1;
      roots.push_back(a);
      coroots.push_back(a);
    }
    RootDatum d;
    if (roots.empty()) {
      // torus GL(1): no roots, trivial Weyl group
      d.name_ = "GL1";
      d.rank_ = 1;
      d.build();
      return d;
    }
    return from_data("GL" + std::to_string(k), roots, coroots);
  };
  auto take_int = [&](size_t off) -> int {
    if (off >= n.size()) return -1;
    for (size_t i = off; i < n.size(); ++i)
      if (!std::isdigit((unsigned char)n[i])) return -1;
    return std::stoi(n.substr(off));
  };
  if (n.rfind("GSP", 0) == 0 && take_int(3) == 4) {
    return from_data("GSp4", {{1, -1, 0}, {0, 2, -1}}, {{1, -1, 0}, {0, 1, 0}});
  }
  if (n.rfind("SP", 0) == 0 && take_int(2) == 4) {
    return from_data("Sp4", {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}});
  }
  if (n.rfind("PGL", 0) == 0) {
    int k = take_int(3);
    if (k >= 2) {
      int l = k - 1;
      IntMat cart = cartan_matrix_A(l);
      IntMat roots = identity_mat(l);
      IntMat coroots(l, IntVec(l));
      for (int j = 0; j < l; ++j)
        for (int i = 0; i < l; ++i) coroots[j][i] = cart[i][j];
      return from_data("PGL" + std::to_string(k), roots, coroots);
    }
  }
  if (n.rfind("GL", 0) == 0) {
    int k = take_int(2);
    if (k >= 1) return make_gl(k);
  }
  if (n.rfind("SL", 0) == 0) {
    int k = take_int(2);
    if (k >= 2) {
      int l = k - 1;
      IntMat cart = cartan_matrix_A(l);
      return from_data("SL" + std::to_string(k), cart, identity_mat(l));
    }
  }
  throw ConfigError("unknown group preset: " + raw);
}

RootDatum RootDatum::from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string name, lattice;
  int rank = -1;
  IntMat cartan;
  bool have_cartan = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = line.find_first_not_of(" \t\r\n");
    if (notspace == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r\n");
      auto e = s.find_last_not_of(" \t\r\n");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "name") {
      name = val;
    } else if (key == "rank") {
      rank = std::stoi(val);
    } else if (key == "lattice") {
      lattice = val;
    } else if (key == "cartan") {
      cartan.clear();
      std::stringstream rows(val);
      std::string row;
      while (std::getline(rows, row, ';')) {
        IntVec r;
        std::stringstream ents(row);
        std::string ent;
        while (ents >> ent) {
          if (!ent.empty() && ent.back() == ',') ent.pop_back();
          r.push_back(std::stoll(ent));
        }
        if (!r.empty()) cartan.push_back(r);
      }
      have_cartan = true;
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (name.empty() || rank < 0 || lattice.empty() || !have_cartan)
    throw ConfigError("config file must set name, rank, cartan, lattice");
  int l = (int)cartan.size();
  if (l != rank) throw ConfigError("rank does not match Cartan matrix size");
  for (auto& r : cartan)
    if ((int)r.size() != l) throw ConfigError("Cartan matrix is not square");
  if (lattice == "simply_connected") {
    return from_data(name, cartan, identity_mat(l));
  }
  if (lattice == "adjoint") {
    IntMat coroots(l, IntVec(l));
    for (int j = 0; j < l; ++j)
      for (int i = 0; i < l; ++i) coroots[j][i] = cartan[i][j];
    return from_data(name, identity_mat(l), coroots);
  }
  throw ConfigError("lattice must be simply_connected or adjoint");
}

void RootDatum::validate_cartan() const {
  int l = n_simple();
  for (int i = 0; i < l; ++i) {
    if (cartan_[i][i] != 2) throw ConfigError("invalid Cartan matrix: diagonal entry not 2");
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw ConfigError("invalid Cartan matrix: positive off-diagonal");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw ConfigError("invalid Cartan matrix: zero pattern not symmetric");
    }
  }
  for (int k = 1; k <= l; ++k)
    if (!rat_pos(leading_minor_det(cartan_, k)))
      throw ConfigError("invalid Cartan matrix: not of finite type");
}

void RootDatum::build() {
  int l = n_simple();
  cartan_.assign(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cartan_[i][j] = pair(simple_roots_[i], simple_coroots_[j]);
  validate_cartan();
  build_weyl();
  build_roots();
  build_lifting_generators();
  build_alcove_point();
  two_rho_cw_.assign(rank_, 0);
  for (auto& rp : positive_) two_rho_cw_ = vec_add(two_rho_cw_, rp.coroot);
}

void RootDatum::build_weyl() {
  int l = n_simple();
  std::vector<IntMat> gen_cw(l), gen_wt(l);
  for (int i = 0; i < l; ++i) {
    IntMat m = identity_mat(rank_), n = identity_mat(rank_);
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < rank_; ++c) {
        m[r][c] -= simple_coroots_[i][r] * simple_roots_[i][c];
        n[r][c] -= simple_roots_[i][r] * simple_coroots_[i][c];
      }
    gen_cw[i] = m;
    gen_wt[i] = n;
  }
  w_coweight_mats_ = {identity_mat(rank_)};
  w_weight_mats_ = {identity_mat(rank_)};
  w_len_ = {0};
  w_word_ = {{}};
  w_index_.clear();
  w_index_[w_coweight_mats_[0]] = 0;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      IntMat m = mat_mul(w_coweight_mats_[a], gen_cw[i]);
      if (w_index_.count(m)) continue;
      int idx = (int)w_coweight_mats_.size();
      if (idx >= 2000)
        throw ConfigError("finite Weyl group too large to tabulate");
      w_index_[m] = idx;
      w_coweight_mats_.push_back(m);
      w_weight_mats_.push_back(mat_mul(w_weight_mats_[a], gen_wt[i]));
      w_len_.push_back(w_len_[a] + 1);
      auto word = w_word_[a];
      word.push_back(i);
      w_word_.push_back(std::move(word));
      queue.push_back(idx);
    }
  }
  int order = (int)w_coweight_mats_.size();
  w_simple_.resize(l);
  for (int i = 0; i < l; ++i) w_simple_[i] = w_index_.at(gen_cw[i]);
  w_mul_.assign(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      w_mul_[a][b] = w_index_.at(mat_mul(w_coweight_mats_[a], w_coweight_mats_[b]));
  w_inv_.resize(order);
  for (int a = 0; a < order; ++a) {
    int inv = 0;
    auto& word = w_word_[a];
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv = w_mul_[inv][w_simple_[*it]];
    if (w_mul_[a][inv] != 0) throw ConfigError("internal error: bad Weyl inverse");
    w_inv_[a] = inv;
  }
  w_longest_ = 0;
  for (int a = 0; a < order; ++a)
    if (w_len_[a] > w_len_[w_longest_]) w_longest_ = a;
}

void RootDatum::build_roots() {
  std::map<IntVec, Coweight> known;
  std::deque<IntVec> queue;
  for (int i = 0; i < n_simple(); ++i) {
    known[simple_roots_[i]] = simple_coroots_[i];
    queue.push_back(simple_roots_[i]);
  }
  while (!queue.empty()) {
    IntVec r = queue.front();
    queue.pop_front();
    Coweight cr = known.at(r);
    for (int i = 0; i < n_simple(); ++i) {
      IntVec r2 = vec_sub(r, vec_scale(simple_roots_[i], pair(r, simple_coroots_[i])));
      Coweight cr2 = vec_sub(cr, vec_scale(simple_coroots_[i], pair(simple_roots_[i], cr)));
      if (!known.count(r2)) {
        known[r2] = cr2;
        queue.push_back(r2);
      }
    }
  }
  // positivity through expansion in the simple-root basis
  RatMat m(rank_, RatVec(n_simple()));
  for (int r = 0; r < rank_; ++r)
    for (int j = 0; j < n_simple(); ++j) m[r][j] = Rat(simple_roots_[j][r]);
  positive_.clear();
  for (auto& [root, coroot] : known) {
    RatVec b(rank_);
    for (int r = 0; r < rank_; ++r) b[r] = Rat(root[r]);
    auto sol = solve_linear(m, b);
    if (!sol) throw ConfigError("simple roots are not linearly independent");
    bool pos = true, neg = true;
    for (auto& c : *sol) {
      if (rat_neg(c)) pos = false;
      if (rat_pos(c)) neg = false;
    }
    if (pos == neg) throw ConfigError("internal error: mixed-sign root");
    if (pos) positive_.push_back({root, coroot});
  }
  std::sort(positive_.begin(), positive_.end(),
            [](const RootPair& a, const RootPair& b) { return a.root < b.root; });
  root_index_.clear();
  for (int i = 0; i < (int)positive_.size(); ++i) {
    root_index_[positive_[i].root] = i + 1;
    root_index_[vec_scale(positive_[i].root, -1)] = -(i + 1);
  }
  // highest root only for irreducible systems: check Cartan graph connectivity
  int l = n_simple();
  if (l > 0) {
    std::vector<int> comp(l, -1);
    std::deque<int> q = {0};
    comp[0] = 0;
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < l; ++j)
        if (comp[j] < 0 && cartan_[i][j] != 0) {
          comp[j] = 0;
          q.push_back(j);
        }
    }
    bool connected = std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
    if (connected) {
      Int best_ht = -1;
      for (int i = 0; i < (int)positive_.size(); ++i) {
        Int ht = root_height(m, positive_[i].root);
        if (ht > best_ht) {
          best_ht = ht;
          highest_index_ = i;
        }
      }
      highest_ = positive_[*highest_index_];
    }
  }
}

void RootDatum::build_lifting_generators() {
  int l = n_simple();
  lifting_gens_.assign(l, IntVec());
  lift_pairing_.assign(l, 0);
  // complete the simple-root rows to a square system with standard basis rows
  // e_k, k descending; those rows force h_k = 0 (GL(n): central slack 0)
  RatMat base(l, RatVec(rank_));
  for (int i = 0; i < l; ++i)
    for (int c = 0; c < rank_; ++c) base[i][c] = Rat(simple_roots_[i][c]);
  std::vector<int> completion;
  for (int k = rank_ - 1; k >= 0 && (int)(base.size()) < rank_; --k) {
    RatMat trial = base;
    RatVec row(rank_, Rat(0));
    row[k] = Rat(1);
    trial.push_back(row);
    // keep only if it increases the row rank: test solvability of trial^T y = 0
    // cheaper: rank via elimination
    RatMat eli = trial;
    int rk = 0;
    for (int c = 0; c < rank_ && rk < (int)eli.size(); ++c) {
      int sel = -1;
      for (int r = rk; r < (int)eli.size(); ++r)
        if (!rat_zero(eli[r][c])) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(eli[sel], eli[rk]);
      for (int r = rk + 1; r < (int)eli.size(); ++r) {
        if (rat_zero(eli[r][c])) continue;
        Rat f = eli[r][c] / eli[rk][c];
        for (int cc = c; cc < rank_; ++cc) eli[r][cc] -= f * eli[rk][cc];
      }
      ++rk;
    }
    if (rk == (int)trial.size()) {
      base = trial;
      completion.push_back(k);
    }
  }
  if ((int)base.size() != rank_)
    throw ConfigError("internal error: cannot complete simple roots to a basis");
  for (int i = 0; i < l; ++i) {
    RatVec rhs(rank_, Rat(0));
    rhs[i] = Rat(1);
    auto sol = solve_linear(base, rhs);
    if (!sol) throw ConfigError("internal error: lifting generator solve failed");
    Int den = 1;
    for (auto& c : *sol) den = std::lcm(den, (Int)c.denominator());
    IntVec h(rank_);
    for (int c = 0; c < rank_; ++c) {
      Rat scaled = (*sol)[c] * Rat(den);
      assert(scaled.denominator() == 1);
      h[c] = scaled.numerator();
    }
    lifting_gens_[i] = h;
    lift_pairing_[i] = den;
    for (int j = 0; j < l; ++j) {
      Int expect = (i == j) ? den : 0;
      if (pair(simple_roots_[j], h) != expect)
        throw ConfigError("internal error: lifting generator pairing");
    }
  }
}

void RootDatum::build_alcove_point() {
  // p with <alpha_i, p> = -1/N for all i and <beta, p> > -1 for every
  // positive root beta; N = 1 + max height
  alcove_point_num_.assign(rank_, 0);
  alcove_point_den_ = 1;
  if (n_simple() == 0) return;
  RatMat m(rank_, RatVec(n_simple()));
  for (int r = 0; r < rank_; ++r)
    for (int j = 0; j < n_simple(); ++j) m[r][j] = Rat(simple_roots_[j][r]);
  Int max_ht = 0;
  for (auto& rp : positive_)
    max_ht = std::max(max_ht, root_height(m, rp.root));
  Int n = max_ht + 1;
  Int d = 1;
  for (int i = 0; i < n_simple(); ++i) d = std::lcm(d, lift_pairing_[i]);
  IntVec num(rank_, 0);
  for (int i = 0; i < n_simple(); ++i)
    num = vec_sub(num, vec_scale(lifting_gens_[i], d / lift_pairing_[i]));
  alcove_point_num_ = num;
  alcove_point_den_ = d * n;
}

bool RootDatum::is_root(const IntVec& r) const { return root_index_.count(r) > 0; }

bool RootDatum::is_positive_root(const IntVec& r) const {
  auto it = root_index_.find(r);
  if (it == root_index_.end()) throw std::invalid_argument("not a root of the datum");
  return it->second > 0;
}

const Coweight& RootDatum::coroot_of(const IntVec& root) const {
  auto it = root_index_.find(root);
  if (it == root_index_.end()) throw std::invalid_argument("not a root of the datum");
  if (it->second > 0) return positive_[it->second - 1].coroot;
  static thread_local Coweight neg;
  neg = vec_scale(positive_[-it->second - 1].coroot, -1);
  return neg;
}

const RootDatum::RootPair& RootDatum::highest_root() const {
  if (!highest_)
    throw std::domain_error("highest root undefined (no roots or not almost simple)");
  return *highest_;
}

Coweight RootDatum::act(int w, const Coweight& cw) const {
  return mat_vec(w_coweight_mats_[w], cw);
}

IntVec RootDatum::act_on_weight(int w, const IntVec& wt) const {
  return mat_vec(w_weight_mats_[w], wt);
}

int RootDatum::reflection_for_root(const IntVec& root) const {
  const Coweight& cr = coroot_of(root);
  IntMat m = identity_mat(rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) m[r][c] -= cr[r] * root[c];
  auto it = w_index_.find(m);
  if (it == w_index_.end()) throw std::logic_error("reflection not found in Weyl group");
  return it->second;
}

bool RootDatum::is_dominant(const Coweight& cw) const {
  for (int i = 0; i < n_simple(); ++i)
    if (pair(simple_roots_[i], cw) < 0) return false;
  return true;
}

Coweight RootDatum::dominant_representative(const Coweight& cw) const {
  Coweight x = cw;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n_simple(); ++i)
      if (pair(simple_roots_[i], x) < 0) {
        x = act(w_simple_[i], x);
        moved = true;
      }
  }
  return x;
}

std::vector<Coweight> RootDatum::weyl_orbit(const Coweight& cw) const {
  std::set<Coweight> seen;
  std::deque<Coweight> queue = {cw};
  seen.insert(cw);
  while (!queue.empty()) {
    Coweight x = queue.front();
    queue.pop_front();
    for (int i = 0; i < n_simple(); ++i) {
      Coweight y = act(w_simple_[i], x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::pair<Coweight, Coweight> RootDatum::dominant_decomposition(const Coweight& lambda) const {
  Coweight lam2(rank_, 0);
  for (int i = 0; i < n_simple(); ++i) {
    Int p = pair(simple_roots_[i], lambda);
    if (p < 0) {
      Int c = (-p + lift_pairing_[i] - 1) / lift_pairing_[i];  // ceil
      lam2 = vec_add(lam2, vec_scale(lifting_gens_[i], c));
    }
  }
  Coweight lam1 = vec_add(lambda, lam2);
  assert(is_dominant(lam1) && is_dominant(lam2));
  return {lam1, lam2};
}

std::optional<IntVec> RootDatum::coroot_coefficients(const Coweight& cw) const {
  if (n_simple() == 0) {
    for (auto c : cw)
      if (c != 0) return std::nullopt;
    return IntVec{};
  }
  RatMat m(rank_, RatVec(n_simple()));
  for (int r = 0; r < rank_; ++r)
    for (int j = 0; j < n_simple(); ++j) m[r][j] = Rat(simple_coroots_[j][r]);
  RatVec b(rank_);
  for (int r = 0; r < rank_; ++r) b[r] = Rat(cw[r]);
  auto sol = solve_linear(m, b);
  if (!sol) return std::nullopt;
  IntVec out(n_simple());
  for (int j = 0; j < n_simple(); ++j) {
    if ((*sol)[j].denominator() != 1) return std::nullopt;
    out[j] = (*sol)[j].numerator();
  }
  return out;
}

std::vector<Coweight> RootDatum::omega_set(const Coweight& mu) const {
  if (!is_dominant(mu)) throw std::invalid_argument("omega_set requires dominant mu");
  Coweight w0mu = act(w_longest_, mu);
  auto cmax = coroot_coefficients(vec_sub(mu, w0mu));
  if (!cmax) throw std::logic_error("mu - w0(mu) not in the coroot lattice");
  std::vector<Coweight> out;
  IntVec c(n_simple(), 0);
  auto test = [&](const Coweight& lam) {
    for (int w = 0; w < weyl_order(); ++w) {
      auto coeffs = coroot_coefficients(vec_sub(mu, act(w, lam)));
      if (!coeffs) return false;
      for (Int cc : *coeffs)
        if (cc < 0) return false;
    }
    return true;
  };
  while (true) {
    Coweight lam = mu;
    for (int j = 0; j < n_simple(); ++j)
      lam = vec_sub(lam, vec_scale(simple_coroots_[j], c[j]));
    if (test(lam)) out.push_back(lam);
    int j = 0;
    while (j < n_simple() && c[j] == (*cmax)[j]) {
      c[j] = 0;
      ++j;
    }
    if (j == n_simple()) break;
    ++c[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
// W-invariant symmetric form on coweights: sum over positive roots beta of
// <beta, x><beta, y>
Int inv_form(const std::vector<RootDatum::RootPair>& pos, const IntVec& x, const IntVec& y) {
  Int s = 0;
  for (auto& rp : pos) s += RootDatum::pair(rp.root, x) * RootDatum::pair(rp.root, y);
  return s;
}
}  // namespace

Int RootDatum::weight_multiplicity(const Coweight& mu, const Coweight& lambda) const {
  if (!is_dominant(mu)) throw std::invalid_argument("weight_multiplicity requires dominant mu");
  auto weights = omega_set(mu);
  std::set<Coweight> wset(weights.begin(), weights.end());
  if (!wset.count(lambda)) return 0;
  // Freudenthal on dominant weights, extended by Weyl invariance
  std::vector<std::pair<Int, Coweight>> doms;  // (height of mu - nu, nu)
  for (auto& nu : weights) {
    if (!is_dominant(nu)) continue;
    auto cc = coroot_coefficients(vec_sub(mu, nu));
    Int ht = 0;
    for (Int x : *cc) ht += x;
    doms.push_back({ht, nu});
  }
  std::sort(doms.begin(), doms.end());
  std::map<Coweight, Int> mult;
  IntVec a = vec_add(vec_scale(mu, 2), two_rho_cw_);
  Int norm_a = inv_form(positive_, a, a);
  for (auto& [ht, nu] : doms) {
    if (ht == 0) {
      mult[nu] = 1;
      continue;
    }
    Int num = 0;
    for (auto& rp : positive_) {
      for (Int k = 1;; ++k) {
        Coweight up = vec_add(nu, vec_scale(rp.coroot, k));
        if (!wset.count(up)) break;
        Int m_up = mult.at(dominant_representative(up));
        num += m_up * inv_form(positive_, up, rp.coroot);
      }
    }
    IntVec b = vec_add(vec_scale(nu, 2), two_rho_cw_);
    Int denom = norm_a - inv_form(positive_, b, b);  // 4 * ((mu+rho)^2 - (nu+rho)^2)
    assert(denom > 0);
    Int val = 8 * num;
    assert(val % denom == 0);
    mult[nu] = val / denom;
  }
  return mult.at(dominant_representative(lambda));
}

Int RootDatum::dual_dimension(const Coweight& mu) const {
  if (!is_dominant(mu)) throw std::invalid_argument("dual_dimension requires dominant mu");
  IntVec a = vec_add(vec_scale(mu, 2), two_rho_cw_);
  Rat dim(1);
  for (auto& rp : positive_) {
    Int num = pair(rp.root, a);
    Int den = pair(rp.root, two_rho_cw_);
    dim *= Rat(num, den);
  }
  assert(dim.denominator() == 1);
  return dim.numerator();
}

}  // namespace affhecke
