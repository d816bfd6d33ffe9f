#include "affhecke/json_io.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "affhecke/parse.hpp"

namespace affhecke {
namespace {

// r as sum_i c_i Q^i with no parity constraint; nullopt when r is not in Z[Q]
std::optional<std::vector<Int>> expand_in_Q(RingElt r) {
  std::vector<Int> out;
  if (r.is_zero()) return out;
  int imax = std::max(std::abs(r.min_exp()), std::abs(r.max_exp()));
  out.assign(imax + 1, 0);
  for (int i = imax; i >= 1; --i) {
    Int c = r.coeff(-i);
    if (c == 0) continue;
    out[i] = c;
    RingElt qi = RingElt::constant(c);
    for (int k = 0; k < i; ++k) qi *= RingElt::Q();
    r -= qi;
  }
  if (!r.is_zero()) {
    if (r.terms().size() != 1 || r.coeff(0) == 0) return std::nullopt;
    out[0] = r.coeff(0);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

ojson ring_to_json(const RingElt& r) {
  ojson j = ojson::object();
  for (auto& [e, c] : r.terms()) j[std::to_string(e)] = c;
  return j;
}

RingElt ring_from_json(const nlohmann::json& j) {
  RingElt r;
  for (auto it = j.begin(); it != j.end(); ++it)
    r += RingElt::v_power(std::stoi(it.key()), it.value().get<Int>());
  return r;
}

ojson hecke_to_json(const HeckeElt& h) {
  ojson j;
  j["group"] = h.datum().name();
  auto& terms = j["terms"] = ojson::array();
  for (auto& x : h.support()) {
    ojson t;
    t["element"] = print_element(x);
    t["coeff_v"] = ring_to_json(h.coeff(x));
    if (auto qc = expand_in_Q(h.coeff(x))) t["coeff_Q"] = *qc;
    terms.push_back(std::move(t));
  }
  return j;
}

HeckeElt hecke_from_json(const RootDatum& d, const nlohmann::json& j) {
  HeckeElt h(d);
  for (auto& t : j.at("terms"))
    h.add_term(parse_element(d, t.at("element").get<std::string>()),
               ring_from_json(t.at("coeff_v")));
  return h;
}

ojson report_to_json(const Report& r) {
  ojson j;
  j["title"] = r.title;
  j["pass"] = r.pass;
  ojson summary = ojson::object();
  for (auto& c : r.summary) summary[c.name] = c.pass;
  j["summary"] = std::move(summary);
  if (!r.observations.empty()) {
    ojson obs = ojson::object();
    for (auto& c : r.observations) obs[c.name] = c.pass;
    j["observations"] = std::move(obs);
  }
  auto& items = j["items"] = ojson::array();
  for (auto& it : r.items) {
    ojson e;
    e["element"] = print_element(it.x);
    e["trace_value"] = it.trace_value.to_string();
    e["multiplicity"] = it.multiplicity.to_string();
    e["degree"] = it.degree;
    e["bound"] = it.bound;
    ojson checks = ojson::object();
    for (auto& c : it.checks) checks[c.name] = c.pass;
    e["checks"] = std::move(checks);
    items.push_back(std::move(e));
  }
  return j;
}

std::string report_to_table(const Report& r) {
  std::ostringstream os;
  os << r.title << "\n";
  for (auto& c : r.summary)
    os << "  " << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
  for (auto& c : r.observations)
    os << "  [obs]  " << c.name << ": " << (c.pass ? "yes" : "no") << "\n";
  if (!r.items.empty()) {
    size_t we = 7, wt = 5, wm = 4;
    for (auto& it : r.items) {
      we = std::max(we, print_element(it.x).size());
      wt = std::max(wt, it.trace_value.to_string().size());
      wm = std::max(wm, it.multiplicity.to_string().size());
    }
    os << "  " << std::left << std::setw((int)we) << "element" << "  "
       << std::setw((int)wt) << "trace" << "  " << std::setw((int)wm) << "mult"
       << "  deg  bound  checks\n";
    for (auto& it : r.items) {
      os << "  " << std::left << std::setw((int)we) << print_element(it.x)
         << "  " << std::setw((int)wt) << it.trace_value.to_string() << "  "
         << std::setw((int)wm) << it.multiplicity.to_string() << "  "
         << std::setw(3) << it.degree << "  " << std::setw(5) << it.bound
         << "  ";
      if (it.all_pass()) {
        os << "ok";
      } else {
        bool first = true;
        for (auto& c : it.checks)
          if (!c.pass) {
            os << (first ? "FAIL:" : ",") << c.name;
            first = false;
          }
      }
      os << "\n";
    }
  }
  os << "result: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace affhecke
