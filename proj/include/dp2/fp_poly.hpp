#pragma once

// Multivariate polynomials over a prime field F_p (p odd) in the fixed
// variable alphabet x, y, z, u, v, t, w.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dp2::poly {

enum class Var : int { x = 0, y, z, u, v, t, w };
inline constexpr std::size_t kNumVars = 7;
inline constexpr std::string_view kVarNames = "xyzuvtw";

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
/// Square root in F_p (Tonelli-Shanks), nullopt for non-residues.
std::optional<std::uint64_t> mod_sqrt(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
/// Maps a signed integer into [0, p).
std::uint64_t reduce_mod(long long v, std::uint64_t p);

class FpPoly {
 public:
  using Monomial = std::array<int, kNumVars>;
  using Terms = std::map<Monomial, std::uint64_t>;

  /// Placeholder zero polynomial over F_3, meant to be assigned.
  FpPoly() : FpPoly(3) {}
  /// The zero polynomial over F_p. p must be an odd prime below 2^31.
  explicit FpPoly(std::uint64_t p);
  static FpPoly constant(std::uint64_t p, long long c);
  static FpPoly variable(std::uint64_t p, Var v, int power = 1);
  static FpPoly monomial(std::uint64_t p, const Monomial& m, std::uint64_t c);
  /// a*x + b*y + c*z
  static FpPoly linear(std::uint64_t p, long long a, long long b, long long c);

  std::uint64_t prime() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  std::uint64_t constant_term() const;
  std::uint64_t coefficient(const Monomial& m) const;

  int total_degree() const;
  int degree_in(Var v) const;
  bool involves(Var v) const { return degree_in(v) > 0; }
  /// Homogeneous of some degree in the given variables (others ignored).
  bool is_homogeneous(std::span<const Var> vars) const;
  bool is_homogeneous() const;

  /// Largest monomial in lex order x > y > z > u > v > t > w.
  const Monomial& leading_monomial() const;
  std::uint64_t leading_coefficient() const;
  FpPoly monic() const;

  void add_term(const Monomial& m, std::uint64_t c);

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator-(const FpPoly& a);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }
  FpPoly scaled(std::uint64_t c) const;
  FpPoly pow(unsigned n) const;
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  /// Canonical text form, parseable back to the same polynomial.
  std::string to_string() const;

 private:
  void check_compatible(const FpPoly& o) const;

  std::uint64_t p_;
  Terms terms_;
};

FpPoly derivative(const FpPoly& f, Var v);
/// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<FpPoly> divide_exact(const FpPoly& f, const FpPoly& g);
bool divides(const FpPoly& g, const FpPoly& f);
/// Coefficients of f as a polynomial in v: result[k] multiplies v^k.
std::vector<FpPoly> coefficients_in(const FpPoly& f, Var v);
/// Content of f with respect to the main variable v (monic).
FpPoly content_in(const FpPoly& f, Var v);
/// Monic greatest common divisor (zero only when both inputs are zero).
FpPoly gcd_multivar(const FpPoly& f, const FpPoly& g);
/// Substitute each variable by a polynomial; `images` is indexed by Var.
FpPoly substitute(const FpPoly& f, const std::array<std::optional<FpPoly>, kNumVars>& images);

struct SquarefreePart {
  FpPoly factor;  ///< monic, squarefree, positive degree
  int exponent;
};

struct SquarefreeDecomposition {
  std::uint64_t content;  ///< f = content * prod factor^exponent
  std::vector<SquarefreePart> parts;  ///< sorted by exponent; pairwise coprime

  FpPoly reassemble(std::uint64_t p) const;
};

SquarefreeDecomposition squarefree_decomposition(const FpPoly& f);
/// f is a constant times a perfect square (all constants are squares over
/// the algebraic closure).
bool is_square_mod_constants(const FpPoly& f);
/// Monic h with f = c * h^2, when it exists.
std::optional<FpPoly> square_root_mod_constants(const FpPoly& f);

/// Restriction of a ternary form to a line: the binary form
/// G(s0, s1) = f(s0*P0 + s1*P1) recorded as g(x) = G(x, 1) together with the
/// total degree of G. The multiplicity of the point at infinity is
/// degree - deg(g).
struct BinaryForm {
  FpPoly dehomogenized;  ///< univariate in x
  int degree = 0;

  bool is_zero() const { return dehomogenized.is_zero(); }
  int multiplicity_at_infinity() const { return degree - dehomogenized.total_degree(); }
};

/// Two points spanning the line {l = 0} in P^2, in a fixed canonical choice.
std::array<std::array<std::uint64_t, 3>, 2> line_basis(const FpPoly& l);
BinaryForm restrict_to_line(const FpPoly& f, const FpPoly& l);
bool is_square_mod_constants(const BinaryForm& g);

/// Value of f at (x, y, z); f must not involve u, v, t, w.
std::uint64_t evaluate(const FpPoly& f, const std::array<std::uint64_t, 3>& point);

/// Coefficients (a, b, c) of a linear form a*x + b*y + c*z.
std::array<std::uint64_t, 3> linear_coefficients(const FpPoly& l);
bool is_linear_form(const FpPoly& l);
/// Common point of two distinct lines, scaled so that its last nonzero
/// coordinate is 1; (0, 0, 0) for proportional lines.
std::array<std::uint64_t, 3> intersection_point(const FpPoly& l1, const FpPoly& l2);
bool proportional(const FpPoly& l1, const FpPoly& l2);

/// Splits a form of degree <= 2 in x, y, z into linear forms over F_p by the
/// quadratic formula. Returns nullopt when it does not split over F_p.
/// The product of the returned forms equals f up to a nonzero constant.
std::optional<std::vector<FpPoly>> split_into_linear_forms(const FpPoly& f);

}  // namespace dp2::poly
