#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dp2/brauer_residue.hpp"
#include "dp2/poly_parse.hpp"
#include "residue_oracle.hpp"

using namespace dp2::brauer;
using dp2::poly::parse;
using dp2::poly::PolyDomain;

namespace {

constexpr std::uint64_t kP = 13;

FpPoly P(const std::string& s) { return parse(s, PolyDomain{kP}); }

}  // namespace

TEST(Valuation, Examples) {
  const DivisorialValuation l(P("x - 2*z"));
  EXPECT_EQ(valuation(P("(x - 2*z)^2"), l), 2);
  EXPECT_EQ(valuation(P("(x - 2*z)*(y + z)"), l), 1);
  EXPECT_EQ(valuation(P("y^2 + z^2"), l), 0);
  const auto inf = DivisorialValuation::at_infinity(kP);
  EXPECT_TRUE(inf.is_infinity());
  EXPECT_EQ(valuation(P("x*y"), inf), -2);
  EXPECT_EQ(valuation(P("z*x"), inf), -1);
  EXPECT_EQ(valuation(P("z^2"), inf), 0);
  EXPECT_EQ(multiplicity(P("z^3*x"), inf), 3);
  // additive
  EXPECT_EQ(valuation(P("(x-2*z)^3*y"), l), valuation(P("(x-2*z)^2"), l) + valuation(P("(x-2*z)*y"), l));
}

TEST(Valuation, ExampleFactorOfA) {
  auto parts = split_into_linear_forms(P("x^2+x*z+z^2"));
  ASSERT_TRUE(parts);
  for (const auto& l : *parts) EXPECT_EQ(valuation(P("x^2+x*z+z^2"), DivisorialValuation(l)), 1);
}

TEST(Valuation, RejectsConicCenter) {
  EXPECT_THROW(DivisorialValuation(P("x^2 + y^2 + z^2")), UnsupportedValuation);
  EXPECT_THROW(DivisorialValuation(P("x + 1")), std::invalid_argument);
}

TEST(Residue, UndefinedForZero) {
  const DivisorialValuation l(P("x"));
  EXPECT_THROW(residue(FpPoly(kP), P("y"), l), ResidueUndefined);
  EXPECT_THROW(residue(P("y"), FpPoly(kP), l), ResidueUndefined);
}

TEST(Residue, UnitsGiveTrivial) {
  const DivisorialValuation l(P("x + y"));
  auto r = residue(P("y^2+z^2"), P("x^2+3*z^2"), l);
  EXPECT_EQ(r.v_a, 0);
  EXPECT_EQ(r.v_b, 0);
  EXPECT_TRUE(r.trivial);
}

TEST(Residue, ExampleAlongFactorsOfA) {
  const FpPoly A = P("x^2+x*z+z^2"), B = P("y^2+y*z+z^2");
  auto parts = split_into_linear_forms(A);
  ASSERT_TRUE(parts);
  for (const auto& l : *parts) {
    const DivisorialValuation v(l);
    auto r = residue(A, B, v);
    EXPECT_EQ(r.v_a, 1);
    EXPECT_EQ(r.v_b, 0);
    EXPECT_FALSE(r.trivial);
    // equal to the class of B on the line
    EXPECT_TRUE(square_class_trivial(square_class_of(r.value.representative * B, v)));
    EXPECT_EQ(residue_oracle::odd_point_count(r.value), 2u);
  }
}

TEST(SquareClass, Triviality) {
  const DivisorialValuation l(P("x"));
  EXPECT_TRUE(square_class_trivial(square_class_of(P("7*z^2"), l)));
  EXPECT_TRUE(square_class_trivial(square_class_of(P("(y+3*z)^2"), l)));
  EXPECT_FALSE(square_class_trivial(square_class_of(P("(y+3*z)*(y-z)"), l)));
  EXPECT_THROW(square_class_of(P("y"), l), std::invalid_argument);
  EXPECT_THROW(square_class_of(P("x*y"), l), ResidueUndefined);
}

TEST(Ramification, Examples) {
  const SymbolClass ex(P("x^2+x*z+z^2"), P("y^2+y*z+z^2"));
  auto ram = ramification_divisor(ex);
  ASSERT_EQ(ram.size(), 4u);
  std::vector<FpPoly> lines = *split_into_linear_forms(ex.a);
  for (const auto& l : *split_into_linear_forms(ex.b)) lines.push_back(l);
  for (const auto& l : lines) {
    bool hit = false;
    for (const auto& r : ram) hit = hit || dp2::poly::proportional(r.valuation.center(), l);
    EXPECT_TRUE(hit) << l.to_string();
  }
  EXPECT_TRUE(ramification_divisor(SymbolClass(P("x + y"), P("x + y"))).empty());
  EXPECT_TRUE(ramification_divisor(SymbolClass(P("1"), P("x*y"))).empty());
  EXPECT_THROW(candidate_centers(SymbolClass(P("x^2 - 2*z^2"), P("y"))), UnsupportedValuation);
  EXPECT_EQ(candidate_centers(ex).size(), 5u);
}

TEST(LinearFactorization, Products) {
  auto f = linear_factorization(P("x*(y+z)*(x-3*y+2*z)*(y+z)"));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->size(), 4u);
  FpPoly prod = P("1");
  for (const auto& l : *f) prod *= l;
  EXPECT_EQ(prod.monic(), P("x*(y+z)*(x-3*y+2*z)*(y+z)").monic());
  EXPECT_FALSE(linear_factorization(P("x*(x^2 - 2*z^2)")).has_value());
}

// Library residues against the root-counting oracle on random products of
// linear forms.
TEST(Property, AgreesWithRootOracle) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    auto inst = residue_oracle::random_instance(rng, kP);
    for (const auto& c : inst.centers) {
      const DivisorialValuation v(residue_oracle::to_poly(c, kP));
      const auto want = residue_oracle::residue(inst.a, inst.b, c, kP);
      const auto got = residue(residue_oracle::to_poly(inst.a, kP), residue_oracle::to_poly(inst.b, kP), v);
      EXPECT_EQ(got.v_a, want.v_a);
      EXPECT_EQ(got.v_b, want.v_b);
      EXPECT_EQ(residue_oracle::odd_point_count(got.value), want.odd_points.size());
      EXPECT_EQ(got.trivial, want.odd_points.empty());
    }
  }
}

TEST(Property, SymbolRelations) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 150; ++trial) {
    auto inst = residue_oracle::random_instance(rng, kP);
    const FpPoly f = residue_oracle::to_poly(inst.a, kP);
    const FpPoly h = residue_oracle::to_poly(inst.b, kP);
    const FpPoly one_minus_f = FpPoly::variable(kP, dp2::poly::Var::z, f.total_degree()) - f;
    for (const auto& c : inst.centers) {
      const DivisorialValuation v(residue_oracle::to_poly(c, kP));
      EXPECT_TRUE(residue(f, -f, v).trivial) << f.to_string() << " at " << v.to_string();
      EXPECT_TRUE(residue(f, f * h * h, v).trivial);
      EXPECT_TRUE(residue(f, f, v).trivial);
      if (!one_minus_f.is_zero()) EXPECT_TRUE(residue(f, one_minus_f, v).trivial);
    }
  }
}

TEST(Property, InvariantUnderSquares) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 150; ++trial) {
    auto inst = residue_oracle::random_instance(rng, kP);
    const FpPoly a = residue_oracle::to_poly(inst.a, kP), b = residue_oracle::to_poly(inst.b, kP);
    for (const auto& c : inst.centers) {
      const FpPoly center = residue_oracle::to_poly(c, kP);
      FpPoly h = residue_oracle::to_poly(residue_oracle::random_line(rng, kP), kP);
      if (dp2::poly::proportional(h, center)) continue;
      const DivisorialValuation v(center);
      const auto base = residue(a, b, v), twisted = residue(a * h * h, b, v);
      EXPECT_EQ(base.trivial, twisted.trivial);
      EXPECT_TRUE(square_class_trivial(square_class_of(base.value.representative * twisted.value.representative, v)));
    }
  }
}

TEST(Property, BilinearInFirstEntry) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 150; ++trial) {
    auto i1 = residue_oracle::random_instance(rng, kP);
    auto i2 = residue_oracle::random_instance(rng, kP);
    auto prod = i1.a;
    prod.insert(prod.end(), i2.a.begin(), i2.a.end());
    for (const auto& c : i1.centers) {
      const DivisorialValuation v(residue_oracle::to_poly(c, kP));
      const auto s1 = residue_oracle::residue(i1.a, i1.b, c, kP).odd_points;
      const auto s2 = residue_oracle::residue(i2.a, i1.b, c, kP).odd_points;
      std::size_t symdiff = 0;
      for (const auto& pt : s1) symdiff += s2.count(pt) ? 0 : 1;
      for (const auto& pt : s2) symdiff += s1.count(pt) ? 0 : 1;
      const auto got = residue(residue_oracle::to_poly(prod, kP), residue_oracle::to_poly(i1.b, kP), v);
      EXPECT_EQ(residue_oracle::odd_point_count(got.value), symdiff);
    }
  }
}
