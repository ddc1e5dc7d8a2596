#pragma once

#include "pbcell/lattice.hpp"

namespace pbcell {

/// Shortest linearly independent lattice vectors, ordered by length and
/// sign-normalized so that pairwise inner products are non-positive.
struct ReducedBasis {
  Basis basis;
  /// input.matrix() * transform == basis.matrix(); |det transform| == 1.
  IMat transform;
  /// Every pairwise angle is >= 90 degrees. Always true in 2D.
  bool obtuse = true;
};

/// 2D: Lagrange-Gauss. 3D: Selling reduction to an obtuse superbase, then the
/// successive minima are read off by bounded enumeration in that well-shaped
/// frame. Ties in length are broken towards an obtuse choice, then
/// lexicographically on the input coefficients.
///
/// In 3D a lattice may have no shortest basis with all angles >= 90 degrees
/// (roughly half of random lattices). The shortest basis is still returned,
/// with `obtuse` false and the single positive inner product made as small as
/// the sign choices allow.
ReducedBasis reduce(const Basis& b, const Tolerances& tol = {});

/// True iff the columns are ordered by length, realize the successive minima
/// and have pairwise non-positive inner products.
bool is_reduced(const Basis& b, const Tolerances& tol = {});

/// Obtuse superbase (b0, b1, b2, b3), sum zero, all b_i . b_j <= 0, returned as
/// the integer coefficients of b1..b3 in the input basis (b0 is implied).
/// Exposed for tests; reduce() builds on it.
IMat selling_superbase(const Basis& b, const Tolerances& tol = {});

/// Iteration cap for the Selling loop.
inline constexpr int kMaxSellingSteps = 1000;

}  // namespace pbcell
