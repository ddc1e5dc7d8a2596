#pragma once

#include <vector>

#include "pbcell/lattice.hpp"

namespace pbcell {

/// Voronoi-relevant vectors of a lattice, one representative per +- pair.
struct RelevantVectorSet {
  /// Coefficients w.r.t. the basis handed to relevant_vectors(), first
  /// nonzero entry positive, sorted lexicographically.
  std::vector<LatticeVector> vectors;
  std::vector<Vec> cartesians;

  std::size_t pair_count() const { return vectors.size(); }
  /// Number of relevant vectors counting both signs.
  std::size_t vector_count() const { return 2 * vectors.size(); }
};

/// Minkowski's criterion on the classes of L / 2L: the strict (unique up to
/// sign) shortest member of each nonzero class is relevant; a class whose
/// minimum is tied contributes nothing.
RelevantVectorSet relevant_vectors(const Basis& b, const Tolerances& tol = {});

/// { x : normal . x <= offset }
struct Halfspace {
  Vec normal;
  double offset;
};

/// The origin-centred Voronoi cell.
struct VoronoiCell {
  std::vector<Halfspace> halfspaces;  // one per relevant vector, both signs
  std::vector<Vec> vertices;
  double volume = 0;
  double tol_abs = 0;  // absolute geometric tolerance used to build it
};

VoronoiCell voronoi_cell(const Basis& b, const Tolerances& tol = {});
VoronoiCell voronoi_cell(const RelevantVectorSet& relevant, int dim, const Tolerances& tol = {});

/// Half-extents of the cell along the fractional axes of `frame`:
/// h_i = max over vertices x of |(frame^-1 x)_i|.
Vec frac_extents(const VoronoiCell& v, const Basis& frame);

}  // namespace pbcell
