#pragma once

// Text format for arrangements:
//
//   # comment
//   [arrangement]
//   prime = 13
//   g = 2
//   n = 2
//   m = 0              (or q = 4, giving m = 2q - 8)
//   a_factors = x^2+x*z+z^2
//   b_factors = y-3*z, y-9*z
//   f = (x+y)^2
//
// Factor lists are comma separated; an entry of degree 2 is split into
// linear forms over F_p. Section headers are accepted and do not scope keys.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dp2/refvar.hpp"

namespace dp2::refvar {

class ConfigParseError : public ConfigError {
 public:
  ConfigParseError(const std::string& message, std::size_t line)
      : ConfigError("line " + std::to_string(line) + ": " + message), line_(line) {}
  /// 1-based; 0 when the problem is not tied to a line (e.g. a missing key).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// `prime_override` replaces the prime given in the text.
ArrangementConfig parse_config(std::string_view text, std::optional<std::uint64_t> prime_override = std::nullopt);
ArrangementConfig load_config(const std::string& path, std::optional<std::uint64_t> prime_override = std::nullopt);
/// The built-in example in this format, with A and B given as quadratics
/// so that it can be re-read over another prime.
std::string builtin_example_text();
/// Inverse of parse_config.
std::string to_config_text(const ArrangementConfig& cfg);

}  // namespace dp2::refvar
