#pragma once

// Residues of quaternion symbols (A, B) over L = k(x, y) along divisorial
// valuations centered on lines of P^2, with values in the square classes of
// the residue field modulo constants.
//
// A form f of degree d stands for the function f / z^d. The residue along
// v is (-1)^{v(a) v(b)} a^{v(b)} / b^{v(a)} restricted to the center.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp2/fp_poly.hpp"

namespace dp2::brauer {

using poly::BinaryForm;
using poly::FpPoly;

class ResidueUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedValuation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SymbolClass {
  FpPoly a;
  FpPoly b;

  /// Both entries must be nonzero forms in x, y, z over the same F_p.
  SymbolClass(FpPoly a, FpPoly b);
  /// Componentwise product: (a1 a2, b1 b2).
  friend SymbolClass operator*(const SymbolClass& s1, const SymbolClass& s2);
  std::string to_string() const;
};

/// Valuation of k(x, y) attached to a line {l = 0}; z gives the line at
/// infinity. Only linear centers are supported.
class DivisorialValuation {
 public:
  explicit DivisorialValuation(FpPoly center);
  static DivisorialValuation at_infinity(std::uint64_t p);

  const FpPoly& center() const { return center_; }
  bool is_infinity() const { return at_infinity_; }
  /// An auxiliary linear form not vanishing identically on the center.
  const FpPoly& coordinate_unit() const { return unit_; }
  std::string to_string() const { return center_.to_string(); }

 private:
  FpPoly center_;
  FpPoly unit_;
  bool at_infinity_ = false;
};

/// Multiplicity of the center in a form f.
int multiplicity(const FpPoly& f, const DivisorialValuation& v);
/// v(f / z^deg f).
int valuation(const FpPoly& f, const DivisorialValuation& v);

struct SquareClass {
  FpPoly center;
  /// Form whose restriction to the center represents the class.
  FpPoly representative;
  BinaryForm restricted;
  /// Squarefree factors of the restriction with odd exponent.
  std::vector<FpPoly> odd_parts;
  int infinity_multiplicity = 0;

  std::string to_string() const;
};

/// Constant times a square in the function field of the center.
bool square_class_trivial(const SquareClass& c);

/// Square class of a form restricted to a line, for forms of even degree.
SquareClass square_class_of(const FpPoly& form, const DivisorialValuation& v);

struct ResidueReport {
  int v_a = 0;
  int v_b = 0;
  /// (-1)^{v(a) v(b)}; a constant, so it never changes triviality.
  int sign = 1;
  SquareClass value;
  bool trivial = true;
};

/// Throws ResidueUndefined when A or B is zero.
ResidueReport residue(const FpPoly& a, const FpPoly& b, const DivisorialValuation& v);
ResidueReport residue(const SymbolClass& s, const DivisorialValuation& v);

struct Ramification {
  DivisorialValuation valuation;
  ResidueReport residue;
};

/// Linear forms dividing f with multiplicity, when f is a product of linear
/// forms over F_p up to a constant; nullopt otherwise.
std::optional<std::vector<FpPoly>> linear_factorization(const FpPoly& f);

/// Candidate centers: the distinct linear factors of A and B, and z.
/// Throws UnsupportedValuation when A or B has a nonlinear component.
std::vector<DivisorialValuation> candidate_centers(const SymbolClass& s);

/// The candidates with nontrivial residue.
std::vector<Ramification> ramification_divisor(const SymbolClass& s);
std::vector<Ramification> ramification_divisor(const SymbolClass& s, const std::vector<DivisorialValuation>& centers);

}  // namespace dp2::brauer
