#pragma once

#include <vector>

#include "pbcell/copy_counts.hpp"
#include "pbcell/lattice.hpp"
#include "pbcell/reduction.hpp"

namespace pbcell {

/// A primitive cell spanned by Voronoi-relevant vectors whose 3^n block of
/// copies yields every periodic distance.
struct CellBasisCandidate {
  /// Columns are spanning vectors in reduced-basis coefficients, already in
  /// canonical form: each column sign-normalized, columns sorted.
  IMat coeffs;
  Basis basis;  // Cartesian columns
  Vec h;        // half-extents of V along this cell's axes
};

/// Canonical form under column permutation and per-column sign flips. Cells
/// that differ only by these are lattice translates of one another.
IMat canonical_key(const IMat& coeffs);
bool key_less(const IMat& a, const IMat& b);

struct CellEnumeration {
  ReducedBasis reduced;
  std::vector<CellBasisCandidate> cells;  // sorted by canonical key
  std::size_t relevant_pairs = 0;
  std::size_t unimodular_subsets = 0;  // before the covering filter
};

/// Every fundamental parallelepiped spanned by n relevant vectors (up to
/// translation) for which 3^n copies suffice.
CellEnumeration enumerate_ps(const Basis& lattice, const Tolerances& tol = {});

struct CellReport {
  bool sufficient = false;  // 3^n copies suffice
  CopyCounts counts;
  IMat coeffs;              // cell in reduced-basis coefficients
  bool ps_member = false;   // canonicalizes to an enumerated cell
  bool reduced = false;     // the cell is itself a reduced basis
};

CellReport check_cell(const Basis& cell, const Basis& lattice, const Tolerances& tol = {});

}  // namespace pbcell
