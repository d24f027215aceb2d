#pragma once

// Line arrangements (A, B, f) over F_p, the conditions (i)-(v) on them, the
// bidegree (4g+m, 4) double cover
//
//   w^2 = A z^{4g+m-n} u^4 + B z^{2g+m+n} v^4 + A B z^m (A B + F) t^4,  F = f^2,
//
// and the residue and local certificates attached to it.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp2/brauer_residue.hpp"
#include "dp2/fp_poly.hpp"

namespace dp2::refvar {

using poly::FpPoly;
using Point = std::array<std::uint64_t, 3>;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ArrangementConfig {
  std::uint64_t prime = 13;
  int g = 0;
  int n = 0;
  int m = 0;
  std::optional<int> q;
  std::vector<FpPoly> a_factors;
  std::vector<FpPoly> b_factors;
  FpPoly f{13};

  FpPoly A() const;
  FpPoly B() const;
  FpPoly F() const { return f * f; }
  /// l_1 .. l_2g: the factors of A followed by those of B.
  std::vector<FpPoly> lines() const;
};

/// Throws ConfigError unless n is even with 2 <= n < 2g, m is even and
/// non-negative, the factor counts are n and 2g - n, every factor is a
/// linear form over F_p and f is a nonzero form of degree g.
void validate(const ArrangementConfig& cfg);

struct Witness {
  std::vector<std::size_t> lines;  ///< 0-based indices into cfg.lines()
  std::optional<Point> point;
  std::string note;

  std::string to_string() const;
};

struct ConditionResult {
  std::string id;  ///< "i" .. "v"
  std::string statement;
  bool passed = false;
  std::string detail;
  std::vector<Witness> witnesses;
};

struct ConditionReport {
  std::vector<ConditionResult> conditions;
  bool passed() const;
  const ConditionResult& at(const std::string& id) const;
};

ConditionReport check_conditions(const ArrangementConfig& cfg);

struct Equation {
  FpPoly rhs;   ///< right-hand side in x, y, z, u, v, t
  FpPoly form;  ///< w^2 - rhs
  int e1 = 0;   ///< exponent of z on the u^4 term
  int e2 = 0;   ///< exponent of z on the v^4 term
  std::array<int, 2> bidegree{};
  bool bihomogeneous = false;
  std::string symbolic;
  std::vector<std::string> audit;
};

Equation build_equation(const ArrangementConfig& cfg);

struct ResidueCertificate {
  std::string line;
  std::string entry;  ///< "A" or "B": the factor's own entry
  brauer::ResidueReport residue;
  bool matches_other_entry = false;  ///< residue equals the restriction of the other entry
  bool nontrivial = false;
};

struct AlphaCertificate {
  std::vector<ResidueCertificate> residues;
  bool abc_nonsquare = false;
  bool abc_matches_ab_plus_f = false;
  bool passed() const;
};

AlphaCertificate alpha_certificate(const ArrangementConfig& cfg);

struct LocalCheck {
  std::string bullet;
  std::string where;
  bool passed = false;
  std::string detail;
};

struct LocalCertificates {
  std::vector<LocalCheck> checks;
  bool bullet_passed(int bullet) const;
  bool passed() const;
};

LocalCertificates local_certificates(const ArrangementConfig& cfg);

struct LocalNormalization {
  int e1 = 0;
  int e2 = 0;
  std::string d_choice;  ///< "1" or "z"
  int d_degree = 0;
  bool parity_ok = false;      ///< e1 + e2 even
  bool fourth_power_ok = false;  ///< z^{6g+m} d^2 is a fourth power in z
  std::vector<std::string> notes;
};

LocalNormalization normalize_local_form(const ArrangementConfig& cfg);

/// A = x^2+xz+z^2, B = y^2+yz+z^2 split over F_13, f = (x+y)^2, g = n = 2, m = 0.
ArrangementConfig builtin_example();
/// The seed arrangement with m = 2q - 8; q < 4 is rejected.
ArrangementConfig corollary_family(int q, const ArrangementConfig& seed = builtin_example());

struct VerificationReport {
  ConditionReport conditions;
  std::optional<Equation> equation;
  std::optional<AlphaCertificate> alpha;
  std::optional<LocalCertificates> local;
  LocalNormalization normalization;
  bool passed() const;
};

VerificationReport verify(const ArrangementConfig& cfg);

}  // namespace dp2::refvar
