#include "dp2/reference_data.hpp"

#include <stdexcept>

namespace dp2::reference {

namespace {

using Name = GaloisGenerator::Name;

IntMatrix rows(std::initializer_list<std::initializer_list<long>> r) { return IntMatrix(r); }

RationalVector rational(std::initializer_list<mpq_class> v) { return RationalVector(v); }

const mpq_class kMinusHalf(-1, 2);

}  // namespace

const std::vector<PublishedMatrix>& published_matrices() {
  static const std::vector<PublishedMatrix> data = {
      // C = A B d^2
      {SurfaceCase::SquareD, Name::IotaA, "iota_a",
       rows({{0, 1, 0, 0, 0, 0, 0, 0},
             {-1, 0, 0, 0, 0, 0, -1, -1},
             {0, 0, 1, 0, 0, 0, 0, 0},
             {0, 0, 0, 1, 0, 0, 0, 0},
             {0, 0, 0, 0, 0, -1, -1, -1},
             {0, 0, 0, 0, 1, 0, 0, 0},
             {-1, 0, 0, 0, 0, -1, 0, -1},
             {1, 0, 0, 0, 0, 1, 1, 2}})},
      {SurfaceCase::SquareD, Name::IotaB, "iota_b",
       rows({{1, 0, 0, 0, 0, 0, 0, 0},
             {0, 1, 0, 0, 0, 0, 0, 0},
             {0, 0, 0, -1, 0, 0, -1, -1},
             {0, 0, 1, 0, 0, 0, 0, 0},
             {0, 0, 0, 0, 0, 1, 0, 0},
             {0, 0, 0, 0, -1, 0, -1, -1},
             {0, 0, 0, -1, -1, 0, 0, -1},
             {0, 0, 0, 1, 1, 0, 1, 2}})},
      // ABC not a square
      {SurfaceCase::Nonsquare, Name::IotaA, "iota_a",
       rows({{-2, -1, -1, -1, -1, -1, -1, -3},
             {-1, -2, -1, -1, -1, -1, -1, -3},
             {-1, -1, -1, -2, -1, -1, -1, -3},
             {-1, -1, 0, -1, -1, -1, 0, -2},
             {-1, -1, -1, -1, -1, 0, 0, -2},
             {-1, -1, -1, -1, -2, -1, -1, -3},
             {-1, -1, 0, -1, -1, 0, -1, -2},
             {3, 3, 2, 3, 3, 2, 2, 7}})},
      {SurfaceCase::Nonsquare, Name::IotaB, "iota_b",
       rows({{-1, 0, -1, -1, -1, -1, 0, -2},
             {-2, -1, -1, -1, -1, -1, -1, -3},
             {-1, -1, -2, -1, -1, -1, -1, -3},
             {-1, -1, -1, -2, -1, -1, -1, -3},
             {-1, -1, -1, -1, -1, -2, -1, -3},
             {-1, -1, -1, -1, 0, -1, 0, -2},
             {-1, 0, -1, -1, 0, -1, -1, -2},
             {3, 2, 3, 3, 2, 3, 2, 7}})},
      {SurfaceCase::Nonsquare, Name::IotaC, "iota_c",
       rows({{-1, -2, -1, -1, -1, -1, -1, -3},
             {0, -1, -1, -1, -1, -1, 0, -2},
             {-1, -1, -1, 0, -1, -1, 0, -2},
             {-1, -1, -2, -1, -1, -1, -1, -3},
             {-1, -1, -1, -1, -2, -1, -1, -3},
             {-1, -1, -1, -1, -1, -2, -1, -3},
             {0, -1, -1, 0, -1, -1, -1, -2},
             {2, 3, 3, 2, 3, 3, 2, 7}})},
  };
  return data;
}

const IntMatrix& published_matrix(SurfaceCase c, GaloisGenerator::Name g) {
  for (const auto& m : published_matrices())
    if (m.surface_case == c && m.generator == g) return m.matrix;
  throw std::out_of_range("no published matrix for this generator and case");
}

const ActionRule& action_rule(SurfaceCase c, GaloisGenerator::Name g) {
  // zeta shifts: i = zeta^2, -i = zeta^6, -1 = zeta^4
  static const ActionRule sq_a{{2, 6, 0}, {true, true, false}, {1, 0, 1}};
  static const ActionRule sq_b{{6, 0, 2}, {true, false, true}, {0, 1, 1}};
  static const ActionRule sq_d{{0, 4, 4}, {false, false, false}, {0, 0, 2}};
  static const ActionRule ns_a{{2, 0, 6}, {false, true, false}, {1, 0, 0}};
  static const ActionRule ns_b{{6, 2, 0}, {false, false, true}, {0, 1, 0}};
  static const ActionRule ns_c{{0, 6, 2}, {true, false, false}, {0, 0, 1}};
  if (c == SurfaceCase::SquareD) {
    switch (g) {
      case Name::IotaA: return sq_a;
      case Name::IotaB: return sq_b;
      case Name::IotaSqrtD: return sq_d;
      case Name::IotaC: break;
    }
  } else {
    switch (g) {
      case Name::IotaA: return ns_a;
      case Name::IotaB: return ns_b;
      case Name::IotaC: return ns_c;
      case Name::IotaSqrtD: break;
    }
  }
  throw std::invalid_argument("generator does not act in this case");
}

CurveLabel apply_rule(const ActionRule& rule, const CurveLabel& label) {
  using F = CurveLabel::Family;
  if (label.family == F::Triple)
    return CurveLabel::triple_of(label.triple[0] + rule.triple_i_shift[0], label.triple[1] + rule.triple_i_shift[1],
                                 label.triple[2] + rule.triple_i_shift[2]);
  const std::size_t k = label.family == F::T ? 0 : label.family == F::U ? 1 : 2;
  return CurveLabel::line(label.family, label.delta + rule.line_zeta_shift[k],
                          rule.line_flip[k] ? -label.sign : label.sign);
}

const std::vector<RationalVector>& invariant_space_iota_a() {
  static const std::vector<RationalVector> v = {
      rational({0, 0, 1, 0, 0, 0, 0, 0}),
      rational({0, 0, 0, 1, 0, 0, 0, 0}),
      rational({kMinusHalf, kMinusHalf, 0, 0, kMinusHalf, kMinusHalf, 1, 0}),
      rational({kMinusHalf, kMinusHalf, 0, 0, kMinusHalf, kMinusHalf, 0, 1}),
  };
  return v;
}

const std::vector<RationalVector>& invariant_space_iota_b() {
  static const std::vector<RationalVector> v = {
      rational({1, 0, 0, 0, 0, 0, 0, 0}),
      rational({0, 1, 0, 0, 0, 0, 0, 0}),
      rational({0, 0, kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, 1, 0}),
      rational({0, 0, kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, 0, 1}),
  };
  return v;
}

const std::vector<RationalVector>& invariant_space_intersection() {
  static const std::vector<RationalVector> v = {
      rational({kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, 1, 0}),
      rational({kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, kMinusHalf, 0, 1}),
  };
  return v;
}

const IntVector& mu() {
  static const IntVector v = exactalg::make_vector({0, 0, 0, 0, 0, 0, -1, 1});
  return v;
}

const IntVector& anticanonical() {
  static const IntVector v = exactalg::make_vector({-1, -1, -1, -1, -1, -1, -1, 3});
  return v;
}

const std::vector<CurveLabel>& two_mu_summands() {
  using F = CurveLabel::Family;
  static const std::vector<CurveLabel> v = {CurveLabel::line(F::U, 1, 1), CurveLabel::line(F::U, 3, -1),
                                            CurveLabel::line(F::U, 5, 1), CurveLabel::line(F::U, 7, -1)};
  return v;
}

}  // namespace dp2::reference
