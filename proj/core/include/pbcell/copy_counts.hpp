#pragma once

#include <vector>

#include "pbcell/lattice.hpp"
#include "pbcell/voronoi.hpp"

namespace pbcell {

/// Smallest symmetric block of cell copies containing D = P + V, the set of
/// nearest images of every point of the cell P.
struct CopyCounts {
  std::vector<int> layers;    // m_i >= 1 extra layers on each side of axis i
  std::vector<int> per_axis;  // 2 m_i + 1
  long total = 1;             // product of per_axis
  Vec h;                      // half-extents of V in cell-fractional coordinates
};

/// h_i such that D spans [-h_i, 1 + h_i] along fractional axis i of `cell`.
/// Throws NotAPrimitiveCell unless cell = lattice * U with U unimodular.
Vec domain_extents(const Basis& cell, const Basis& lattice, const Tolerances& tol = {});

/// Same, reusing an already built Voronoi cell of the lattice.
Vec domain_extents(const Basis& cell, const Basis& lattice, const VoronoiCell& v,
                   const Tolerances& tol = {});

CopyCounts copy_counts_from_extents(const Vec& h, const Tolerances& tol = {});
CopyCounts copy_counts(const Basis& cell, const Basis& lattice, const Tolerances& tol = {});

/// V is covered by the 2^n cells around the origin, i.e. every h_i <= 1, so
/// 3^n copies give every periodic distance.
bool is_3n_sufficient(const Basis& cell, const Basis& lattice, const Tolerances& tol = {});

}  // namespace pbcell
