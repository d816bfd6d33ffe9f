#include "affhecke/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace affhecke {
namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

// split on '*', keeping byte offsets of each trimmed piece
std::vector<Token> split_terms(const std::string& s) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '*') {
      std::size_t a = start, b = i;
      while (a < b && std::isspace((unsigned char)s[a])) ++a;
      while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
      out.push_back({s.substr(a, b - a), a});
      start = i + 1;
    }
  }
  return out;
}

Int parse_int(const std::string& s, std::size_t at) {
  if (s.empty()) throw ParseError("expected integer", at);
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') ++i;
  if (i == s.size()) throw ParseError("expected integer", at);
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit((unsigned char)s[k]))
      throw ParseError("bad integer '" + s + "'", at + k);
  return std::strtoll(s.c_str(), nullptr, 10);
}

std::vector<Int> parse_int_list(const std::string& body, std::size_t at) {
  std::vector<Int> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      std::size_t a = start, b = i;
      while (a < b && std::isspace((unsigned char)body[a])) ++a;
      while (b > a && std::isspace((unsigned char)body[b - 1])) --b;
      out.push_back(parse_int(body.substr(a, b - a), at + a));
      start = i + 1;
    }
  }
  return out;
}

AffineWeylElt parse_term(const RootDatum& d, const Token& tok) {
  const std::string& t = tok.text;
  if (t.empty()) throw ParseError("empty term", tok.pos);
  if (t == "e") return AffineWeylElt::identity(d);
  if (t[0] == 's') {
    Int idx = parse_int(t.substr(1), tok.pos + 1);
    if (idx < 0 || idx > d.n_simple())
      throw ParseError("reflection index out of range: " + t, tok.pos);
    SimpleReflections s = simple_reflections(d);
    if (s.size() == 0)
      throw ParseError("group has no reflections", tok.pos);
    return s.refl[(int)idx];
  }
  if (t.size() >= 3 && t.compare(0, 2, "t[") == 0) {
    if (t.back() != ']') throw ParseError("missing ']'", tok.pos + t.size());
    std::vector<Int> v = parse_int_list(t.substr(2, t.size() - 3), tok.pos + 2);
    if ((int)v.size() != d.rank())
      throw ParseError("translation needs " + std::to_string(d.rank()) +
                           " coordinates",
                       tok.pos);
    return AffineWeylElt::from_translation(d, v);
  }
  if (t.size() >= 8 && t.compare(0, 6, "omega(") == 0 && t.back() == ')') {
    Int j = parse_int(t.substr(6, t.size() - 7), tok.pos + 6);
    try {
      return omega_element(d, (int)j);
    } catch (const std::domain_error& e) {
      throw ParseError(e.what(), tok.pos);
    }
  }
  throw ParseError("unrecognized term '" + t + "'", tok.pos);
}

}  // namespace

AffineWeylElt parse_element(const RootDatum& d, const std::string& text) {
  std::vector<Token> toks = split_terms(text);
  AffineWeylElt x = AffineWeylElt::identity(d);
  for (auto& tok : toks) x = x * parse_term(d, tok);
  return x;
}

std::string print_element(const AffineWeylElt& x) {
  const RootDatum& d = *x.datum;
  std::vector<std::string> parts;
  bool zero = true;
  for (Int c : x.translation)
    if (c != 0) zero = false;
  if (!zero) parts.push_back("t[" + print_coweight(x.translation) + "]");
  for (int i : d.weyl_word(x.finite)) parts.push_back("s" + std::to_string(i + 1));
  if (parts.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " * ";
    out += parts[i];
  }
  return out;
}

Coweight parse_coweight(const RootDatum& d, const std::string& text) {
  std::vector<Int> v = parse_int_list(text, 0);
  if ((int)v.size() != d.rank())
    throw ParseError("expected " + std::to_string(d.rank()) + " coordinates",
                     0);
  return v;
}

std::string print_coweight(const Coweight& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace affhecke
