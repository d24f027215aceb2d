#pragma once

// Published values used as golden data: the Galois matrices (rows as
// printed), both action tables, the listed invariant-space generators, and
// the distinguished classes mu and -K.

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dp2/dp2geom.hpp"

namespace dp2::reference {

using exactalg::IntMatrix;
using exactalg::IntVector;
using geom::CurveLabel;
using geom::GaloisGenerator;
using geom::SurfaceCase;

using RationalVector = std::vector<mpq_class>;

struct PublishedMatrix {
  SurfaceCase surface_case;
  GaloisGenerator::Name generator;
  std::string name;
  IntMatrix matrix;
};

/// ι_a, ι_b for C = A B d^2, then ι_a, ι_b, ι_c for the nonsquare case.
const std::vector<PublishedMatrix>& published_matrices();
const IntMatrix& published_matrix(SurfaceCase c, GaloisGenerator::Name g);

/// One row of an action table: on a line family, delta -> zeta^shift * delta
/// with an optional sign flip; on triples, (alpha, beta, gamma) -> i^shift.
struct ActionRule {
  std::array<int, 3> line_zeta_shift;  ///< t, u, v
  std::array<bool, 3> line_flip;       ///< t, u, v
  std::array<int, 3> triple_i_shift;   ///< alpha, beta, gamma
};

const ActionRule& action_rule(SurfaceCase c, GaloisGenerator::Name g);
/// The label predicted by the table.
CurveLabel apply_rule(const ActionRule& rule, const CurveLabel& label);

/// Spanning vectors listed for the fixed spaces of ι_a and ι_b (C = A B d^2)
/// and for their intersection.
const std::vector<RationalVector>& invariant_space_iota_a();
const std::vector<RationalVector>& invariant_space_iota_b();
const std::vector<RationalVector>& invariant_space_intersection();

/// mu = -v7 + v8
const IntVector& mu();
/// -K in the basis v1..v8
const IntVector& anticanonical();
/// The four u-lines whose classes add up to 2 mu.
const std::vector<CurveLabel>& two_mu_summands();

}  // namespace dp2::reference
