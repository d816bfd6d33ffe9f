#include "affhecke/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affhecke/json_io.hpp"
#include "affhecke/kl.hpp"
#include "affhecke/nearby.hpp"
#include "affhecke/parse.hpp"

namespace affhecke {
namespace {

struct Opts {
  std::string group;
  std::string fmt = "table";
  std::string cache;
  std::string x, w, u, v, a, b, mu, lambda;
  std::vector<std::string> sweep_groups;
  int radius = 0;  // 0 = per-group default
};

RootDatum load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return RootDatum::from_config_file(spec);
  return RootDatum::preset(spec);
}

std::string cache_path(const Opts& o) {
  if (!o.cache.empty()) return o.cache;
  const char* env = std::getenv("AFFHECKE_KL_CACHE");
  return env ? env : "";
}

void cache_load(KLTable& kl, const std::string& path) {
  if (!path.empty() && std::filesystem::exists(path)) kl.load(path);
}

void cache_save(const KLTable& kl, const std::string& path) {
  if (!path.empty()) kl.save(path);
}

void emit_json(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

void emit_hecke(std::ostream& out, const Opts& o, const std::string& command,
                const HeckeElt& h) {
  if (o.fmt == "json") {
    ojson j;
    j["command"] = command;
    ojson body = hecke_to_json(h);
    for (auto& [k, val] : body.items()) j[k] = val;
    emit_json(out, j);
    return;
  }
  auto supp = h.support();
  out << "terms: " << supp.size() << "\n";
  for (auto& x : supp)
    out << "  (" << h.coeff(x).to_string() << ")  T~[" << print_element(x)
        << "]\n";
}

void emit_report(std::ostream& out, const Opts& o, const Report& r) {
  if (o.fmt == "json")
    emit_json(out, report_to_json(r));
  else
    out << report_to_table(r);
}

int cmd_length(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  AffineWeylElt x = parse_element(d, o.x);
  if (o.fmt == "json") {
    ojson j;
    j["command"] = "length";
    j["group"] = d.name();
    j["element"] = print_element(x);
    j["length"] = length(x);
    emit_json(out, j);
  } else {
    out << "element: " << print_element(x) << "\n";
    out << "length: " << length(x) << "\n";
  }
  return 0;
}

int cmd_word(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  AffineWeylElt x = parse_element(d, o.x);
  OmegaWord ow = omega_part_and_reduced_word(x);
  std::vector<std::string> letters;
  for (int i : ow.word) letters.push_back("s" + std::to_string(i));
  if (o.fmt == "json") {
    ojson j;
    j["command"] = "word";
    j["group"] = d.name();
    j["element"] = print_element(x);
    j["omega"] = print_element(ow.omega);
    j["word"] = letters;
    j["length"] = length(x);
    emit_json(out, j);
  } else {
    out << "element: " << print_element(x) << "\n";
    out << "omega: " << print_element(ow.omega) << "\n";
    out << "word:";
    for (auto& s : letters) out << " " << s;
    out << "\n";
    out << "length: " << length(x) << "\n";
  }
  return 0;
}

int cmd_bruhat(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  AffineWeylElt x = parse_element(d, o.x);
  AffineWeylElt w = parse_element(d, o.w);
  bool leq = bruhat_leq(x, w);
  if (o.fmt == "json") {
    ojson j;
    j["command"] = "bruhat";
    j["group"] = d.name();
    j["x"] = print_element(x);
    j["w"] = print_element(w);
    j["leq"] = leq;
    emit_json(out, j);
  } else {
    out << (leq ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_adm(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  Coweight mu = parse_coweight(d, o.mu);
  auto adm = admissible_set(d, mu);
  if (o.fmt == "json") {
    ojson j;
    j["command"] = "adm";
    j["group"] = d.name();
    j["mu"] = print_coweight(mu);
    j["count"] = adm.size();
    ojson els = ojson::array();
    for (auto& x : adm) els.push_back(print_element(x));
    j["elements"] = std::move(els);
    emit_json(out, j);
  } else {
    out << "count: " << adm.size() << "\n";
    for (auto& x : adm) out << "  " << print_element(x) << "\n";
  }
  return 0;
}

int cmd_omega_set(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  Coweight mu = parse_coweight(d, o.mu);
  auto ws = d.omega_set(mu);
  std::sort(ws.begin(), ws.end());
  if (o.fmt == "json") {
    ojson j;
    j["command"] = "omega-set";
    j["group"] = d.name();
    j["mu"] = print_coweight(mu);
    j["count"] = ws.size();
    ojson els = ojson::array();
    for (auto& lam : ws) els.push_back(print_coweight(lam));
    j["weights"] = std::move(els);
    emit_json(out, j);
  } else {
    out << "count: " << ws.size() << "\n";
    for (auto& lam : ws) out << "  " << print_coweight(lam) << "\n";
  }
  return 0;
}

int cmd_weight_mult(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  Coweight mu = parse_coweight(d, o.mu);
  Coweight lam = parse_coweight(d, o.lambda);
  Int m = d.weight_multiplicity(mu, lam);
  if (o.fmt == "json") {
    ojson j;
    j["command"] = "weight-mult";
    j["group"] = d.name();
    j["mu"] = print_coweight(mu);
    j["lambda"] = print_coweight(lam);
    j["multiplicity"] = m;
    emit_json(out, j);
  } else {
    out << m << "\n";
  }
  return 0;
}

int cmd_hecke_mul(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  HeckeElt a = HeckeElt::basis(parse_element(d, o.a));
  HeckeElt b = HeckeElt::basis(parse_element(d, o.b));
  emit_hecke(out, o, "hecke-mul", hecke_mul(a, b));
  return 0;
}

int cmd_inv(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  emit_hecke(out, o, "inv", t_tilde_inv(parse_element(d, o.x)));
  return 0;
}

int cmd_wakimoto(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  AffineWeylElt u = parse_element(d, o.u);
  AffineWeylElt v = parse_element(d, o.v);
  emit_hecke(out, o, "wakimoto", wakimoto(u, v));
  return 0;
}

int cmd_theta(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  emit_hecke(out, o, "theta", theta(d, parse_coweight(d, o.lambda)));
  return 0;
}

int cmd_kl(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  AffineWeylElt x = parse_element(d, o.x);
  AffineWeylElt w = parse_element(d, o.w);
  KLTable kl(d);
  std::string path = cache_path(o);
  cache_load(kl, path);
  QPoly p = kl.polynomial(x, w);
  cache_save(kl, path);
  if (o.fmt == "json") {
    ojson j;
    j["command"] = "kl";
    j["group"] = d.name();
    j["x"] = print_element(x);
    j["w"] = print_element(w);
    j["coeffs"] = p;
    j["poly"] = qpoly_to_string(p);
    emit_json(out, j);
  } else {
    out << qpoly_to_string(p) << "\n";
  }
  return 0;
}

int cmd_kottwitz(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  Coweight mu = parse_coweight(d, o.mu);
  emit_hecke(out, o, "kottwitz", kottwitz_trace(d, mu).elt);
  return 0;
}

int cmd_verify_thm1(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  Coweight mu = parse_coweight(d, o.mu);
  KLTable kl(d);
  std::string path = cache_path(o);
  cache_load(kl, path);
  Report r = verify_theorem_1(d, mu, kl);
  cache_save(kl, path);
  emit_report(out, o, r);
  return r.pass ? 0 : 1;
}

int cmd_verify_thm2(std::ostream& out, const Opts& o) {
  RootDatum d = load_group(o.group);
  AffineWeylElt u = parse_element(d, o.u);
  AffineWeylElt v = parse_element(d, o.v);
  KLTable kl(d);
  std::string path = cache_path(o);
  cache_load(kl, path);
  Report r = verify_theorem_2(u, v, kl);
  cache_save(kl, path);
  emit_report(out, o, r);
  return r.pass ? 0 : 1;
}

struct SweepGroupSpec {
  std::string name;
  int radius;
  Int olo, ohi;
  std::vector<Coweight> mus;
};

std::vector<SweepGroupSpec> default_sweep_groups() {
  return {{"SL2", 5, 0, 0, {{1}}},
          {"GL2", 3, -1, 1, {{1, 0}, {1, 1}, {2, 0}, {2, 1}}},
          {"GL3", 3, -1, 1, {{1, 0, 0}, {1, 1, 0}}}};
}

ojson sweep_group(const SweepGroupSpec& sp, int radius_override,
                  const std::string& cache, bool& pass) {
  RootDatum d = RootDatum::preset(sp.name);
  int radius = radius_override > 0 ? radius_override : sp.radius;
  auto ball = length_ball(d, radius, sp.olo, sp.ohi);

  ojson g;
  g["group"] = d.name();
  g["radius"] = radius;
  g["omega_range"] = {sp.olo, sp.ohi};
  g["ball_size"] = ball.size();

  long long pairs = 0, coeffs = 0;
  ojson failures = ojson::array();
  for (auto& u : ball)
    for (auto& v : ball) {
      ++pairs;
      HeckeElt wk = wakimoto(u, v);
      AffineWeylElt uv = u * v;
      int duv = length(uv);
      for (auto& x : wk.support()) {
        ++coeffs;
        int b = duv - length(x);
        QExpansion qe = as_poly_in_Q(wk.coeff(x), b);
        bool ok = bruhat_leq(x, uv) && qe.ok && (int)qe.coeffs.size() - 1 <= b;
        if (!ok) {
          ojson fj;
          fj["u"] = print_element(u);
          fj["v"] = print_element(v);
          fj["x"] = print_element(x);
          fj["coeff"] = wk.coeff(x).to_string();
          failures.push_back(std::move(fj));
        }
      }
    }
  bool wak_pass = failures.empty();
  g["wakimoto_pairs"] = pairs;
  g["wakimoto_coeffs"] = coeffs;
  g["wakimoto_pass"] = wak_pass;
  g["wakimoto_failures"] = std::move(failures);

  KLTable kl(d);
  std::string path = cache.empty() ? "" : cache + "." + d.name() + ".json";
  cache_load(kl, path);
  bool t1_pass = true;
  ojson t1 = ojson::array();
  for (auto& mu : sp.mus) {
    Report r = verify_theorem_1(d, mu, kl);
    t1_pass = t1_pass && r.pass;
    t1.push_back(report_to_json(r));
  }
  cache_save(kl, path);
  g["pipeline"] = std::move(t1);
  g["pipeline_pass"] = t1_pass;
  g["pass"] = wak_pass && t1_pass;
  pass = wak_pass && t1_pass;
  return g;
}

int cmd_sweep(std::ostream& out, const Opts& o) {
  std::vector<SweepGroupSpec> specs = default_sweep_groups();
  if (!o.sweep_groups.empty()) {
    std::vector<SweepGroupSpec> chosen;
    for (auto& want : o.sweep_groups) {
      RootDatum d = load_group(want);  // validates the name
      bool found = false;
      for (auto& sp : specs)
        if (sp.name == d.name()) {
          chosen.push_back(sp);
          found = true;
        }
      if (!found)
        chosen.push_back({d.name(), o.radius > 0 ? o.radius : 3, -1, 1, {}});
    }
    specs = std::move(chosen);
  }
  ojson j;
  j["command"] = "sweep";
  ojson groups = ojson::array();
  bool pass = true;
  for (auto& sp : specs) {
    bool gp = false;
    groups.push_back(sweep_group(sp, o.radius, cache_path(o), gp));
    pass = pass && gp;
  }
  j["groups"] = std::move(groups);
  j["pass"] = pass;
  if (o.fmt == "json") {
    emit_json(out, j);
  } else {
    for (auto& g : j["groups"])
      out << "group " << g["group"].get<std::string>() << ": radius "
          << g["radius"].get<int>() << ", pairs "
          << g["wakimoto_pairs"].get<long long>() << ", wakimoto "
          << (g["wakimoto_pass"].get<bool>() ? "PASS" : "FAIL") << ", pipeline "
          << (g["pipeline_pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    out << "sweep: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"Exact computations in extended affine Weyl groups and Iwahori-Hecke algebras"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_cache = false) {
    sub->add_option("--group", o.group, "group preset (GL2, GL3, SL2, ...) or config file path")
        ->required();
    sub->add_option("--format", o.fmt, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    if (with_cache)
      sub->add_option("--kl-cache", o.cache,
                      "KL polynomial cache file (also via AFFHECKE_KL_CACHE)");
  };

  auto* c_length = app.add_subcommand("length", "length of an element");
  common(c_length);
  c_length->add_option("--x", o.x, "element expression")->required();

  auto* c_word = app.add_subcommand("word", "length-zero part and reduced word");
  common(c_word);
  c_word->add_option("--x", o.x, "element expression")->required();

  auto* c_bruhat = app.add_subcommand("bruhat", "test x <= w in Bruhat order");
  common(c_bruhat);
  c_bruhat->add_option("--x", o.x, "element expression")->required();
  c_bruhat->add_option("--w", o.w, "element expression")->required();

  auto* c_adm = app.add_subcommand("adm", "admissible set of a coweight");
  common(c_adm);
  c_adm->add_option("--mu", o.mu, "coweight, comma-separated")->required();

  auto* c_oset = app.add_subcommand("omega-set", "weights of the dual irrep with highest weight mu");
  common(c_oset);
  c_oset->add_option("--mu", o.mu, "dominant coweight")->required();

  auto* c_wm = app.add_subcommand("weight-mult", "weight multiplicity in the dual irrep");
  common(c_wm);
  c_wm->add_option("--mu", o.mu, "dominant coweight")->required();
  c_wm->add_option("--lambda", o.lambda, "weight")->required();

  auto* c_mul = app.add_subcommand("hecke-mul", "product T~_a * T~_b");
  common(c_mul);
  c_mul->add_option("--a", o.a, "element expression")->required();
  c_mul->add_option("--b", o.b, "element expression")->required();

  auto* c_inv = app.add_subcommand("inv", "inverse of T~_x");
  common(c_inv);
  c_inv->add_option("--x", o.x, "element expression")->required();

  auto* c_wak = app.add_subcommand("wakimoto", "expansion of T~_u (T~_{v^-1})^-1");
  common(c_wak);
  c_wak->add_option("--u", o.u, "element expression")->required();
  c_wak->add_option("--v", o.v, "element expression")->required();

  auto* c_theta = app.add_subcommand("theta", "Bernstein element of a coweight");
  common(c_theta);
  c_theta->add_option("--lambda", o.lambda, "coweight")->required();

  auto* c_kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  common(c_kl, true);
  c_kl->add_option("--x", o.x, "element expression")->required();
  c_kl->add_option("--w", o.w, "element expression")->required();

  auto* c_kot = app.add_subcommand("kottwitz", "nearby-cycles trace function of mu");
  common(c_kot);
  c_kot->add_option("--mu", o.mu, "dominant coweight")->required();

  auto* c_v1 = app.add_subcommand("verify-thm1", "nearby-cycles degree-bound verification");
  common(c_v1, true);
  c_v1->add_option("--mu", o.mu, "dominant coweight")->required();

  auto* c_v2 = app.add_subcommand("verify-thm2", "Wakimoto degree-bound verification");
  common(c_v2, true);
  c_v2->add_option("--u", o.u, "element expression")->required();
  c_v2->add_option("--v", o.v, "element expression")->required();

  auto* c_sweep = app.add_subcommand("sweep", "full verification battery");
  c_sweep->add_option("--group", o.sweep_groups,
                      "restrict to these groups (default: SL2 GL2 GL3)");
  c_sweep->add_option("--radius", o.radius, "override the per-group length radius")
      ->check(CLI::PositiveNumber);
  c_sweep->add_option("--format", o.fmt, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  c_sweep->add_option("--kl-cache", o.cache, "KL cache file prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_length)) return cmd_length(out, o);
    if (app.got_subcommand(c_word)) return cmd_word(out, o);
    if (app.got_subcommand(c_bruhat)) return cmd_bruhat(out, o);
    if (app.got_subcommand(c_adm)) return cmd_adm(out, o);
    if (app.got_subcommand(c_oset)) return cmd_omega_set(out, o);
    if (app.got_subcommand(c_wm)) return cmd_weight_mult(out, o);
    if (app.got_subcommand(c_mul)) return cmd_hecke_mul(out, o);
    if (app.got_subcommand(c_inv)) return cmd_inv(out, o);
    if (app.got_subcommand(c_wak)) return cmd_wakimoto(out, o);
    if (app.got_subcommand(c_theta)) return cmd_theta(out, o);
    if (app.got_subcommand(c_kl)) return cmd_kl(out, o);
    if (app.got_subcommand(c_kot)) return cmd_kottwitz(out, o);
    if (app.got_subcommand(c_v1)) return cmd_verify_thm1(out, o);
    if (app.got_subcommand(c_v2)) return cmd_verify_thm2(out, o);
    if (app.got_subcommand(c_sweep)) return cmd_sweep(out, o);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace affhecke
