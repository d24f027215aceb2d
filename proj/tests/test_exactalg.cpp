#include <gtest/gtest.h>

#include <random>

#include "dp2/exactalg.hpp"
#include "exactalg_suite.hpp"
#include "oracles.hpp"

using namespace dp2::exactalg;

TEST(IntMatrix, ArithmeticAndTranspose) {
  IntMatrix a{{1, 2}, {3, 4}};
  IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, (IntMatrix{{1, 3}, {4, 4}}));
  EXPECT_EQ(a - a, IntMatrix(2, 2));
  EXPECT_EQ(a.transpose(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(power(b, 2), IntMatrix::identity(2));
  EXPECT_EQ(a * make_vector({1, -1}), make_vector({-1, -1}));
  EXPECT_EQ(stack(a, b).rows(), 4u);
}

TEST(IntMatrix, ZeroRowsAllowed) {
  IntMatrix empty(0, 3);
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(rank(empty), 0u);
  auto l = IntLattice::span(empty);
  EXPECT_EQ(l.rank(), 0u);
  EXPECT_TRUE(l.contains(make_vector({0, 0, 0})));
  EXPECT_FALSE(l.contains(make_vector({1, 0, 0})));
}

TEST(Determinant, Known) {
  EXPECT_EQ(determinant(IntMatrix{{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  const long diag[] = {-1, -1, -1, -1, -1, -1, -1, 1};
  EXPECT_EQ(determinant(IntMatrix::diagonal(diag)), -1);
}

TEST(Snf, Known) {
  EXPECT_EQ(snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
            (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(snf(IntMatrix{{1, 2}, {2, 4}}), (std::vector<Integer>{1, 0}));
  EXPECT_EQ(snf(IntMatrix(2, 3)), (std::vector<Integer>{0, 0}));
}

TEST(Hnf, Known) {
  auto hf = hnf(IntMatrix{{2, 4}, {3, 5}});
  EXPECT_EQ(hf.h, (IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(hf.u * IntMatrix({{2, 4}, {3, 5}}), hf.h);
}

TEST(Kernel, Known) {
  auto k = kernel_basis(IntMatrix{{1, 1, 1}});
  EXPECT_EQ(k.rank(), 2u);
  EXPECT_TRUE(k.contains(make_vector({1, -1, 0})));
  EXPECT_TRUE(k.contains(make_vector({0, 1, -1})));
  EXPECT_TRUE(k.is_saturated());
  // 2x + 4y = 0 has kernel generated by (2, -1), not (4, -2)
  auto k2 = kernel_basis(IntMatrix{{2, 4}});
  EXPECT_TRUE(k2.contains(make_vector({2, -1})));
}

TEST(Saturate, Known) {
  auto l = IntLattice::span(IntMatrix{{2, 0}, {0, 2}});
  EXPECT_FALSE(l.is_saturated());
  EXPECT_EQ(saturate(l), IntLattice::full(2));
  EXPECT_EQ(index_in(l, IntLattice::full(2)), Integer(4));
  auto line = IntLattice::span(IntMatrix{{2, 4, 6}});
  EXPECT_EQ(saturate(line), IntLattice::span(IntMatrix{{1, 2, 3}}));
}

TEST(Intersect, Known) {
  auto a = IntLattice::span(IntMatrix{{2, 0}, {0, 1}});
  auto b = IntLattice::span(IntMatrix{{1, 0}, {0, 3}});
  EXPECT_EQ(intersect(a, b), IntLattice::span(IntMatrix{{2, 0}, {0, 3}}));
  auto l1 = IntLattice::span(IntMatrix{{1, 0}});
  auto l2 = IntLattice::span(IntMatrix{{1, 1}});
  EXPECT_EQ(intersect(l1, l2).rank(), 0u);
}

TEST(IndexIn, NotASublattice) {
  auto a = IntLattice::span(IntMatrix{{1, 0}});
  auto b = IntLattice::span(IntMatrix{{0, 1}});
  EXPECT_FALSE(index_in(a, b).has_value());
  EXPECT_FALSE(index_in(IntLattice::full(2), a).has_value());
}

TEST(Solve, IntegralAndRational) {
  IntMatrix g{{2, 0}, {0, 1}};
  EXPECT_EQ(solve_integral(g, make_vector({4, 3})), make_vector({2, 3}));
  EXPECT_FALSE(solve_integral(g, make_vector({1, 3})).has_value());
  EXPECT_THROW(solve_integral(IntMatrix{{1, 2}, {2, 4}}, make_vector({1, 2})), SingularMatrixError);
  auto q = solve_rational(g, make_vector({1, 3}));
  ASSERT_TRUE(q);
  EXPECT_EQ((*q)[0], Rational(1, 2));
  EXPECT_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, make_vector({0, 1})).has_value());
}

TEST(LatticeEquality, IndependentOfGenerators) {
  auto a = IntLattice::span(IntMatrix{{1, 2}, {3, 4}});
  auto b = IntLattice::span(IntMatrix{{1, 0}, {0, 2}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(b));
}

TEST(Oracle, LaplaceAgreesWithDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = oracle::random_rows(rng, 4, 4);
    EXPECT_EQ(determinant(oracle::to_matrix(m, 4)), oracle::laplace_det(m));
  }
}

TEST(Property, RandomMatricesAgreeWithOracles) {
  std::mt19937_64 rng(20240611);
  for (std::size_t round = 0; round < 200; ++round) {
    auto out = oracle::run_round(rng, round);
    for (const auto& f : out.failures) ADD_FAILURE() << f;
  }
}
