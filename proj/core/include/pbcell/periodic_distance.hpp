#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "pbcell/copy_counts.hpp"
#include "pbcell/lattice.hpp"
#include "pbcell/reduction.hpp"

namespace pbcell {

struct DistanceResult {
  double distance = 0;
  /// Translate t (caller's basis) minimizing |B (p2 + t - p1)|.
  LatticeVector image;
};

/// Precomputed minimum-image machinery for one lattice: the reduced basis,
/// its unimodular transform and the block of reduced-cell translates that is
/// guaranteed to contain every nearest image. For reduced cells that block is
/// 3^n whenever every h_i <= 1, which is the common case; otherwise it is
/// widened to the cell's copy counts so results stay exact.
class PeriodicMetric {
 public:
  explicit PeriodicMetric(const Basis& b, const Tolerances& tol = {});

  DistanceResult distance(const FracPoint& p1, const FracPoint& p2) const;

  const Basis& basis() const { return basis_; }
  const ReducedBasis& reduced() const { return reduced_; }
  const VoronoiCell& voronoi() const { return voronoi_; }
  const CopyCounts& block() const { return block_; }
  /// Reduced-basis coordinates of a caller-frame point.
  Vec to_reduced(const Vec& frac) const { return inverse_transform_ * frac; }
  const IMat& transform() const { return reduced_.transform; }

 private:
  Basis basis_;
  ReducedBasis reduced_;
  VoronoiCell voronoi_;
  CopyCounts block_;
  Mat inverse_transform_;
  std::vector<IVec> offsets_;
};

DistanceResult min_image_distance(const Basis& b, const FracPoint& p1, const FracPoint& p2,
                                  const Tolerances& tol = {});

/// A basis plus points of R^n / L, stored wrapped into [0, 1)^n.
struct PeriodicPointSet {
  Basis basis;
  std::vector<FracPoint> points;
  std::vector<std::string> labels;  // empty or one per point

  static PeriodicPointSet make(Basis b, std::vector<FracPoint> pts,
                               std::vector<std::string> labels = {});
};

Eigen::MatrixXd pairwise_distances(const PeriodicPointSet& ps, const Tolerances& tol = {});

struct Neighbor {
  std::size_t i = 0, j = 0;
  LatticeVector image;  // caller's basis: distance = |B (p_j + image - p_i)|
  double distance = 0;
};

/// Every pair i <= j and every lattice image within `cutoff`, including
/// self-images (i == j, image != 0). Sorted by (i, j, image).
std::vector<Neighbor> neighbors_within(const PeriodicPointSet& ps, double cutoff,
                                       const Tolerances& tol = {});

/// Exact integer inverse of a unimodular matrix.
IMat unimodular_inverse(const IMat& u);

}  // namespace pbcell
