#pragma once

// Text grammar for polynomials:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
//
// Implicit multiplication ("2x", "x y", "(x)(y)") is rejected.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dp2/fp_poly.hpp"

namespace dp2::poly {

struct PolyDomain {
  std::uint64_t prime = 13;
  /// Letters accepted as variables; a subset of "xyzuvtw".
  std::string variables = std::string(kVarNames);
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  /// Zero-based offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `text` over the domain. Characteristic 2 (or any non-odd-prime)
/// is rejected with std::invalid_argument.
FpPoly parse(std::string_view text, const PolyDomain& domain);

}  // namespace dp2::poly
