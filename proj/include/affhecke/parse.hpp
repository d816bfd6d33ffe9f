#pragma once

// Text grammar for extended affine Weyl group elements.
//
//   element := term (" * " term)*
//   term    := "e" | "s"<idx> | "t[" int ("," int)* "]" | "omega(" int ")"
//
// s0 is the affine simple reflection, s1..sn the finite ones. Canonical
// output is "t[lambda] * <shortlex word of the finite part>" with redundant
// factors dropped ("e" for the identity).

#include <stdexcept>
#include <string>

#include "affhecke/affine_weyl.hpp"

namespace affhecke {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

AffineWeylElt parse_element(const RootDatum& d, const std::string& text);

std::string print_element(const AffineWeylElt& x);

// "1,0,-2" -> coweight; used by CLI option parsing. Must have d.rank() entries.
Coweight parse_coweight(const RootDatum& d, const std::string& text);

std::string print_coweight(const Coweight& v);

}  // namespace affhecke
