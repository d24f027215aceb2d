#pragma once

// The dp2 subcommands as library functions. Each returns a Report holding
// the text rendering, the structured records and the exit code.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dp2/dp2geom.hpp"

namespace dp2::cli {

enum class Format { Text, Json };

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct Report {
  int exit_code = kExitVerified;
  std::string text;
  /// One JSON object per output line; each has "command", and the last one
  /// carries "verdict".
  std::vector<nlohmann::json> records;

  std::string render(Format f) const;
};

Report cmd_lines(geom::SurfaceCase c, unsigned threads = 0);
Report cmd_galois(geom::SurfaceCase c);
Report cmd_invariants(geom::SurfaceCase c, std::size_t closure_bound = 4096);

struct VerifyOptions {
  std::optional<std::string> config_path;  ///< built-in example when empty
  std::optional<std::uint64_t> prime;
  std::optional<int> family_q;
};
Report cmd_verify(const VerifyOptions& opts);

struct ResidueOptions {
  std::string a;
  std::string b;
  std::string at;  ///< linear form; "z" is the line at infinity
  std::uint64_t prime = 13;
  std::optional<bool> expect_trivial;
};
Report cmd_residue(const ResidueOptions& opts);

}  // namespace dp2::cli
