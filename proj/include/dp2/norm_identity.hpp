#pragma once

// Norm identity for the C = A B d^2 case: with w^2 = A u^4 + B v^4 + A B d^2 t^4,
//
//   w^2 - A u^4 = B (v^4 + A d^2 t^4)
//   (v^2 + i sA d t^2)(v^2 - i sA d t^2) = v^4 + A d^2 t^4,   sA^2 = A
//
// checked as exact identities in a polynomial ring over Q(zeta_8).

#include <string>
#include <vector>

#include "dp2/cyclo.hpp"
#include "dp2/sparse_poly.hpp"

namespace dp2::geom {

/// Symbols A, B, d, sA, u, v, t, w.
using NormPoly = poly::SparsePoly<poly::CycloElem, 8>;

struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct NormIdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// Reduces sA^2 -> A and w^2 -> A u^4 + k B v^4 + A B d^2 t^4.
NormPoly reduce_norm_relations(const NormPoly& p, long b_coefficient = 1);

/// `b_coefficient` is the coefficient of B v^4 in the relation for w^2; 1 is
/// the surface itself, anything else is a perturbed control.
NormIdentityReport verify_norm_identity(long b_coefficient = 1);

}  // namespace dp2::geom
