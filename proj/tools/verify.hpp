#pragma once

#include <string>
#include <vector>

#include "pbcell/cell_enumeration.hpp"
#include "pbcell/periodic_distance.hpp"
#include "pbcell/reduction.hpp"
#include "pbcell/voronoi.hpp"

// Oracle cross-checks behind --verify. Each returns an empty string on
// agreement, otherwise a description of the first disagreement.
namespace pbcell::cli::verify {

std::string reduction(const Basis& input, const ReducedBasis& r);
std::string relevant(const Basis& input, const RelevantVectorSet& rel);
std::string voronoi(const Basis& input, const VoronoiCell& v);
std::string copies(const Basis& cell, const Basis& lattice, const CopyCounts& cc);
std::string cells(const Basis& lattice, const CellEnumeration& en);
std::string distance(const Basis& b, const FracPoint& p1, const FracPoint& p2,
                     const DistanceResult& d);
std::string matrix(const PeriodicPointSet& ps, const Eigen::MatrixXd& m);
std::string neighbors(const PeriodicPointSet& ps, double cutoff,
                      const std::vector<Neighbor>& found);

}  // namespace pbcell::cli::verify
