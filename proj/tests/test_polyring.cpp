#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "dp2/cyclo.hpp"
#include "dp2/fp_poly.hpp"
#include "dp2/poly_parse.hpp"
#include "dp2/sparse_poly.hpp"

using namespace dp2::poly;

namespace {

constexpr std::uint64_t kP = 13;

FpPoly P(const std::string& s, std::uint64_t p = kP) { return parse(s, PolyDomain{p}); }

// complex embedding zeta -> exp(i pi / 4)
std::complex<double> embed(const CycloElem& e) {
  const std::complex<double> z = std::polar(1.0, M_PI / 4);
  std::complex<double> r = 0, pw = 1;
  for (int k = 0; k < 4; ++k) {
    r += e.coeff(k).get_d() * pw;
    pw *= z;
  }
  return r;
}

CycloElem random_cyclo(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  mpq_class half(d(rng), 2);
  half.canonicalize();
  return CycloElem(d(rng), d(rng), half, d(rng));
}

FpPoly random_form(std::mt19937_64& rng, int degree, std::uint64_t p = kP) {
  std::uniform_int_distribution<std::uint64_t> c(0, p - 1);
  FpPoly f(p);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) {
      FpPoly::Monomial m{};
      m[0] = i;
      m[1] = j;
      m[2] = degree - i - j;
      f.add_term(m, c(rng));
    }
  return f;
}

FpPoly random_nonzero_form(std::mt19937_64& rng, int degree, std::uint64_t p = kP) {
  FpPoly f(p);
  while (f.is_zero()) f = random_form(rng, degree, p);
  return f;
}

}  // namespace

namespace dp2::poly {
void PrintTo(const CycloElem& e, std::ostream* os) { *os << e.to_string(); }
void PrintTo(const FpPoly& f, std::ostream* os) { *os << f.to_string(); }
}  // namespace dp2::poly

TEST(Cyclo, Relations) {
  EXPECT_EQ(CycloElem::zeta(8), CycloElem(1));
  EXPECT_EQ(CycloElem::zeta(4), CycloElem(-1));
  EXPECT_EQ(CycloElem::zeta(-1) * CycloElem::zeta(1), CycloElem(1));
  EXPECT_EQ(CycloElem::i() * CycloElem::i(), CycloElem(-1));
  EXPECT_EQ(CycloElem::sqrt2() * CycloElem::sqrt2(), CycloElem(2));
  EXPECT_TRUE(CycloElem().is_zero());
}

TEST(Cyclo, RandomArithmeticMatchesComplexEmbedding) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const CycloElem a = random_cyclo(rng), b = random_cyclo(rng);
    EXPECT_LT(std::abs(embed(a * b) - embed(a) * embed(b)), 1e-9);
    EXPECT_LT(std::abs(embed(a + b) - (embed(a) + embed(b))), 1e-9);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycloElem(1));
  }
}

TEST(SparsePoly, LaurentMonomials) {
  using S = SparsePoly<CycloElem, 2>;
  S a = S::symbol(0), b = S::symbol(1, -2);
  EXPECT_EQ((a * b) * (a * b).monomial_inverse(), S(1));
  EXPECT_THROW((a + b).monomial_inverse(), std::domain_error);
  EXPECT_EQ(a.scale_symbol(0, CycloElem::i()), S(CycloElem::i()) * a);
  EXPECT_EQ((a + S(1)).pow(2), a * a + S(2) * a + S(1));
  EXPECT_EQ((a - b).to_string({"a", "b"}), "a - b^-2");
}

TEST(ModArith, SqrtAgreesWithSquaring) {
  for (std::uint64_t p : {3ull, 5ull, 13ull, 17ull, 97ull, 257ull}) {
    std::vector<bool> square(p, false);
    for (std::uint64_t x = 0; x < p; ++x) square[x * x % p] = true;
    for (std::uint64_t a = 0; a < p; ++a) {
      auto r = mod_sqrt(a, p);
      ASSERT_EQ(r.has_value(), square[a]) << a << " mod " << p;
      if (r) EXPECT_EQ(*r * *r % p, a);
    }
    for (std::uint64_t a = 1; a < p; ++a) EXPECT_EQ(a * mod_inv(a, p) % p, 1u);
  }
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(15));
  EXPECT_EQ(reduce_mod(-1, 13), 12u);
}

TEST(Parse, Basics) {
  FpPoly f = P("x^2 + 2*x*y - 3");
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_EQ(f.constant_term(), 10u);
  EXPECT_EQ(P("(x+y)^2"), P("x^2+2*x*y+y^2"));
  EXPECT_EQ(P("-x"), P("12*x"));
  EXPECT_EQ(P("26*x"), FpPoly(kP));
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("2x"), ParseError);
  EXPECT_THROW(P("x y"), ParseError);
  EXPECT_THROW(P("(x)(y)"), ParseError);
  EXPECT_THROW(P("x^"), ParseError);
  EXPECT_THROW(P("x^2^3"), ParseError);
  EXPECT_THROW(P("(x+y"), ParseError);
  EXPECT_THROW(P("q"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("x $ y"), ParseError);
  EXPECT_THROW(P("x", 2), std::invalid_argument);
  EXPECT_THROW(P("x", 15), std::invalid_argument);
  EXPECT_THROW(parse("u", PolyDomain{13, "xyz"}), ParseError);
  try {
    P("x + 2y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Parse, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const FpPoly f = random_form(rng, trial % 5);
    EXPECT_EQ(P(f.to_string()), f) << f.to_string();
  }
}

TEST(Divide, ExactAndInexact) {
  const FpPoly f = P("(x+y)*(x-z)");
  EXPECT_EQ(divide_exact(f, P("x+y")), P("x-z"));
  EXPECT_FALSE(divide_exact(f, P("x+2*y")).has_value());
  EXPECT_TRUE(divides(P("x-z"), f));
  EXPECT_EQ(derivative(P("x^3+y"), Var::x), P("3*x^2"));
}

TEST(Gcd, PlantedFactor) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const FpPoly h = random_nonzero_form(rng, 1 + trial % 3);
    std::uniform_int_distribution<long long> c(0, kP - 1);
    // distinct variables make the cofactors coprime
    const FpPoly a = FpPoly::linear(kP, 1, 0, c(rng)), b = FpPoly::linear(kP, 0, 1, c(rng));
    EXPECT_EQ(gcd_multivar(h * a, h * b), h.monic()) << h.to_string();
    EXPECT_EQ(gcd_multivar(h * a, FpPoly(kP)), (h * a).monic());
  }
  EXPECT_EQ(gcd_multivar(P("x"), P("y")), P("1"));
  EXPECT_TRUE(gcd_multivar(FpPoly(kP), FpPoly(kP)).is_zero());
}

TEST(Squarefree, ReassemblesAndExponents) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const FpPoly a = random_nonzero_form(rng, 1), b = random_nonzero_form(rng, 1);
    const FpPoly f = (a * b.pow(2)).scaled(1 + trial % 12);
    auto d = squarefree_decomposition(f);
    EXPECT_EQ(d.reassemble(kP), f);
    for (const auto& part : d.parts) {
      EXPECT_GT(part.factor.total_degree(), 0);
      EXPECT_EQ(part.factor.leading_coefficient(), 1u);
      EXPECT_EQ(gcd_multivar(part.factor, derivative(part.factor, Var::x)).total_degree() *
                    (part.factor.involves(Var::x) ? 1 : 0),
                0);
    }
  }
  auto d = squarefree_decomposition(P("x^3*y^2*(x+y)"));
  ASSERT_EQ(d.parts.size(), 3u);
  EXPECT_EQ(d.parts[0].exponent, 1);
  EXPECT_EQ(d.parts[2].exponent, 3);
}

TEST(Squares, ModConstants) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const FpPoly h = random_nonzero_form(rng, 1 + trial % 2);
    const FpPoly sq = (h * h).scaled(1 + trial % 12);
    EXPECT_TRUE(is_square_mod_constants(sq));
    auto r = square_root_mod_constants(sq);
    ASSERT_TRUE(r);
    EXPECT_EQ((*r) * (*r), (h * h).monic());
    EXPECT_FALSE(is_square_mod_constants(sq * P("x + 3*z")));
  }
  EXPECT_TRUE(is_square_mod_constants(P("5")));
}

TEST(Restriction, AgreesWithPointEvaluation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const FpPoly f = random_form(rng, 1 + trial % 4);
    const FpPoly l = random_nonzero_form(rng, 1);
    const auto basis = line_basis(l);
    for (const auto& pt : basis) EXPECT_EQ(evaluate(l, pt), 0u);
    const BinaryForm g = restrict_to_line(f, l);
    for (std::uint64_t s = 0; s < kP; ++s) {
      std::array<std::uint64_t, 3> pt{};
      for (int k = 0; k < 3; ++k) pt[k] = (s * basis[0][k] + basis[1][k]) % kP;
      EXPECT_EQ(evaluate(g.dehomogenized, {s, 0, 0}), evaluate(f, pt));
    }
    if (!g.is_zero()) EXPECT_EQ(g.multiplicity_at_infinity() > 0, evaluate(f, basis[0]) == 0);
  }
}

TEST(Lines, IntersectionAndProportional) {
  const FpPoly l1 = P("x - z"), l2 = P("y + 2*z");
  const auto pt = intersection_point(l1, l2);
  EXPECT_EQ(pt, (std::array<std::uint64_t, 3>{1, 11, 1}));
  EXPECT_EQ(intersection_point(P("x"), P("z")), (std::array<std::uint64_t, 3>{0, 1, 0}));
  EXPECT_TRUE(proportional(P("x+y"), P("2*x+2*y")));
  EXPECT_FALSE(proportional(l1, l2));
  EXPECT_TRUE(is_linear_form(P("x+3*y")));
  EXPECT_FALSE(is_linear_form(P("x+1")));
  EXPECT_FALSE(is_linear_form(P("x*y")));
  EXPECT_EQ(linear_coefficients(P("2*x-z")), (std::array<std::uint64_t, 3>{2, 0, 12}));
}

TEST(Split, QuadraticFormula) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const FpPoly a = random_nonzero_form(rng, 1), b = random_nonzero_form(rng, 1);
    auto parts = split_into_linear_forms(a * b);
    ASSERT_TRUE(parts);
    ASSERT_EQ(parts->size(), 2u);
    EXPECT_EQ(((*parts)[0] * (*parts)[1]).monic(), (a * b).monic());
  }
  // 2 is not a square mod 13
  EXPECT_FALSE(split_into_linear_forms(P("x^2 - 2*z^2")).has_value());
  auto ex = split_into_linear_forms(P("x^2+x*z+z^2"));
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->size(), 2u);
}
