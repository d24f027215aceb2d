#pragma once

// The 56 exceptional curves of the diagonal degree-2 del Pezzo surface
//
//   w^2 = A u^4 + B v^4 + C t^4,
//
// realized over Q(zeta_8)[a^±1, b^±1, c^±1] with a^4 = A, b^4 = B, c^4 = C
// treated as independent transcendentals (or c = a b sqrt(d) when
// C = A B d^2). Intersection numbers are computed from the equations, and
// everything else (Gram matrix, classes, Galois matrices) is derived from
// them.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dp2/cyclo.hpp"
#include "dp2/exactalg.hpp"
#include "dp2/sparse_poly.hpp"

namespace dp2::geom {

using poly::CycloElem;
using exactalg::IntMatrix;
using exactalg::IntVector;

/// Laurent polynomial in the three root symbols over Q(zeta_8).
using SplitScalar = poly::SparsePoly<CycloElem, 3>;
/// Picard class in the basis v1..v8.
using PicClass = IntVector;

enum class SurfaceCase {
  Nonsquare,  ///< symbols a, b, c
  SquareD,    ///< C = A B d^2; symbols a, b, sqrt(d), with c = a b sqrt(d)
};

std::string to_string(SurfaceCase c);
/// Accepts "nonsquare" and "square-d".
std::optional<SurfaceCase> parse_surface_case(std::string_view name);
std::array<const char*, 3> symbol_names(SurfaceCase c);

struct CurveLabel {
  enum class Family { T, U, V, Triple };

  Family family = Family::T;
  int delta = 1;  ///< power of zeta_8 in {1, 3, 5, 7} (line families only)
  int sign = 1;   ///< +1 or -1 (line families only)
  std::array<int, 3> triple{};  ///< powers of i for (alpha, beta, gamma)

  static CurveLabel line(Family family, int delta, int sign);
  /// Representative of (i^a, i^b, i^c) modulo the diagonal sign, with gamma
  /// in {1, i}.
  static CurveLabel triple_of(int alpha, int beta, int gamma);

  std::string to_string() const;
  auto operator<=>(const CurveLabel&) const = default;
};

/// Coefficients of u, v, t.
using LinearForm = std::array<SplitScalar, 3>;
/// Coefficients of the point (u, v, t).
using Point = std::array<SplitScalar, 3>;

struct QuadraticForm {
  enum Index { UU, VV, TT, UV, VT, UT };
  std::array<SplitScalar, 6> coeffs{};

  SplitScalar evaluate(const Point& p) const;
  /// Q(x + y) - Q(x) - Q(y)
  SplitScalar polar(const Point& x, const Point& y) const;
  friend QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b);
};

/// The curve {L = 0, w = Q} on the double cover.
struct ExceptionalCurve {
  CurveLabel label;
  LinearForm line;
  QuadraticForm w_value;

  std::string line_string(SurfaceCase c) const;
  std::string w_string(SurfaceCase c) const;
};

class AmbiguousTangency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoMatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<ExceptionalCurve> enumerate_curves(SurfaceCase c);

bool lines_proportional(const LinearForm& l1, const LinearForm& l2);
/// Q restricted to {L = 0}, as coefficients (s^2, s r, r^2) of a binary
/// quadratic in a parametrization of the line.
std::array<SplitScalar, 3> restrict_to_line(const QuadraticForm& q, const LinearForm& l);
/// Same line and same w-values along it.
bool same_curve(const ExceptionalCurve& c1, const ExceptionalCurve& c2);

/// Intersection number on the double cover: -1 for a curve with itself, the
/// number of common points over a shared line, otherwise 1 or 0 according
/// to whether the w-values agree over the unique common point.
int intersection_number(const ExceptionalCurve& c1, const ExceptionalCurve& c2);

struct GaloisGenerator {
  enum class Name { IotaA, IotaB, IotaC, IotaSqrtD };

  Name name;
  std::size_t symbol;  ///< root symbol moved by the generator
  int zeta_power;      ///< symbol -> zeta_8^zeta_power * symbol

  static GaloisGenerator iota_a() { return {Name::IotaA, 0, 2}; }
  static GaloisGenerator iota_b() { return {Name::IotaB, 1, 2}; }
  static GaloisGenerator iota_c() { return {Name::IotaC, 2, 2}; }
  static GaloisGenerator iota_sqrt_d() { return {Name::IotaSqrtD, 2, 4}; }

  std::string to_string() const;
  bool compatible_with(SurfaceCase c) const;
};

std::vector<GaloisGenerator> generators_for(SurfaceCase c);
/// The field automorphism applied to the coefficients of L and Q.
ExceptionalCurve apply_to_equations(const GaloisGenerator& g, const ExceptionalCurve& curve);

/// The surface in one of the two cases, with its curves, the basis
/// v1..v8, the Gram matrix and the classes of all 56 curves.
class Dp2Surface {
 public:
  explicit Dp2Surface(SurfaceCase c);

  SurfaceCase surface_case() const { return case_; }
  const std::vector<ExceptionalCurve>& curves() const { return curves_; }
  std::size_t index_of(const CurveLabel& label) const;
  const ExceptionalCurve& curve(const CurveLabel& label) const { return curves_[index_of(label)]; }

  /// Curve indices making up v1..v8; v8 is a sum of three curves.
  const std::vector<std::vector<std::size_t>>& basis_curves() const { return basis_; }
  const IntMatrix& gram() const { return gram_; }
  const PicClass& anticanonical_class() const { return kappa_; }

  /// Coordinates via G x = (<c, v_1>, ..., <c, v_8>). Throws
  /// std::logic_error if the solution is not integral.
  PicClass class_in_basis(const ExceptionalCurve& c) const;
  const PicClass& class_of(std::size_t index) const { return classes_[index]; }

  /// Image of a curve under the generator, identified among the 56.
  std::size_t apply_galois(const GaloisGenerator& g, std::size_t index) const;
  const ExceptionalCurve& apply_galois(const GaloisGenerator& g, const ExceptionalCurve& c) const;
  std::vector<std::size_t> galois_permutation(const GaloisGenerator& g) const;
  /// Column j is the class of the image of v_j.
  IntMatrix galois_matrix(const GaloisGenerator& g) const;

  /// Full 56x56 matrix of intersection_number, split across threads.
  std::vector<std::vector<int>> intersection_matrix(unsigned threads = 0) const;

 private:
  void require_compatible(const GaloisGenerator& g) const;

  SurfaceCase case_;
  std::vector<ExceptionalCurve> curves_;
  std::vector<std::vector<std::size_t>> basis_;
  IntMatrix gram_;
  PicClass kappa_;
  std::vector<PicClass> classes_;
};

/// Labels of the curves whose classes are v1..v7, and the three summands of v8.
std::vector<std::vector<CurveLabel>> basis_labels();

IntMatrix gram_basis(SurfaceCase c);
PicClass anticanonical_class(SurfaceCase c);
IntMatrix galois_matrix(const GaloisGenerator& g, SurfaceCase c);

}  // namespace dp2::geom
