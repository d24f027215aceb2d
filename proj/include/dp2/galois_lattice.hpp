#pragma once

// Finite matrix groups acting on Pic, their invariant sublattices, orbits on
// the 56 exceptional curves and orbit-sum sublattices.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp2/dp2geom.hpp"
#include "dp2/exactalg.hpp"

namespace dp2::lattice {

using exactalg::IntLattice;
using exactalg::IntMatrix;
using exactalg::IntVector;
using exactalg::Integer;
using geom::SurfaceCase;

inline constexpr std::size_t kDefaultClosureBound = 4096;

class NotFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixGroup {
  std::vector<IntMatrix> generators;
  std::vector<IntMatrix> elements;  ///< identity first, then breadth-first

  std::size_t order() const { return elements.size(); }
  bool is_abelian() const;
  bool preserves(const IntMatrix& gram) const;
};

/// Closure of the generators under multiplication. Throws NotFiniteError
/// once more than `bound` elements are produced and std::invalid_argument
/// for a generator that is not unimodular.
MatrixGroup group_closure(const std::vector<IntMatrix>& generators,
                          std::size_t bound = kDefaultClosureBound);

/// Saturated kernel of the stacked (M - I) over the generators.
IntLattice invariant_sublattice(const MatrixGroup& g);
IntLattice invariant_sublattice(const IntMatrix& m);

using Permutation = std::vector<std::size_t>;
using Orbit = std::vector<std::size_t>;

/// Orbits of the group generated by the permutations; each orbit is sorted
/// and orbits are ordered by their smallest element.
std::vector<Orbit> orbits(const std::vector<Permutation>& generators, std::size_t n);

/// (span_Q of the vectors) intersected with Z^n, after clearing denominators.
IntLattice saturated_span(const std::vector<std::vector<exactalg::Rational>>& vectors, std::size_t n);

IntVector class_sum(const Orbit& orbit, const std::vector<IntVector>& classes);
/// Lattice spanned by the class sums of the orbits together with kappa.
IntLattice orbit_sum_sublattice(const std::vector<Orbit>& orbits, const std::vector<IntVector>& classes,
                                const IntVector& kappa);

/// The linear map determined by class(c) -> class(perm(c)) on the spanning
/// set of all classes; nullopt if the assignment is not linear or not
/// integral.
std::optional<IntMatrix> matrix_from_permutation(const std::vector<IntVector>& classes, const Permutation& perm);

struct InvariantReport {
  SurfaceCase surface_case;
  std::vector<std::string> generator_names;
  std::vector<IntMatrix> generator_matrices;
  std::size_t group_order = 0;
  IntLattice invariants{8};
  IntVector kappa;
  /// Complement of kappa in a rank-2 invariant lattice.
  std::optional<IntVector> mu;
  /// mu equals -v7 + v8.
  bool mu_is_standard = false;
  /// kappa (and mu, when present) form a Z-basis of the invariants.
  bool distinguished_classes_are_basis = false;
  std::vector<Orbit> orbits;
  std::vector<std::string> orbit_labels_first;  ///< label of the first curve of each orbit
  IntLattice orbit_sums{8};
  std::optional<Integer> orbit_sum_index;
  std::vector<std::string> warnings;

  std::size_t rank() const { return invariants.rank(); }
};

InvariantReport invariant_report(const geom::Dp2Surface& surface, std::size_t closure_bound = kDefaultClosureBound);
InvariantReport invariant_report(SurfaceCase c, std::size_t closure_bound = kDefaultClosureBound);

}  // namespace dp2::lattice
