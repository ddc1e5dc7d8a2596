#pragma once

#include <optional>
#include <vector>

#include "pbcell/lattice.hpp"
#include "pbcell/periodic_distance.hpp"
#include "pbcell/voronoi.hpp"

/// Brute-force reference implementations. Slow on purpose, and they share no
/// geometry code with the fast paths beyond the lattice-core transforms.
namespace pbcell::oracle {

/// Minimum over every translate with coefficients in [-layers, layers]^n.
DistanceResult brute_distance(const Basis& b, const FracPoint& p1, const FracPoint& p2,
                              int layers);

/// Candidate r in the box [-k, k]^n is kept iff r/2 is strictly nearer to 0
/// (and r) than to every other lattice point of the box.
RelevantVectorSet brute_relevant(const Basis& b, int k, double tol_tie = 1e-9);

struct Witness {
  FracPoint p1, p2;
  double true_distance = 0;
  double block_distance = 0;
  double gap = 0;
};

/// Looks for a pair of cell points whose distance, minimized over the block of
/// copies with `layers[axis] - 1` layers on `axis` (others unchanged), exceeds
/// the true periodic distance by more than 1e-9. Candidates: first points on
/// a grid_per_axis^n grid, second points displaced from them by slightly
/// shrunk Voronoi vertices (the extremal displacements) and, in 2D, by grid
/// steps as well.
std::optional<Witness> minimality_witness(const Basis& cell, const Basis& lattice,
                                          const std::vector<int>& layers, int axis,
                                          int grid_per_axis = 33);

/// Voronoi vertices from the brute relevant set, checked against every lattice
/// point of the box rather than only against the facets.
std::vector<Vec> brute_voronoi_vertices(const Basis& b, int k);

}  // namespace pbcell::oracle
