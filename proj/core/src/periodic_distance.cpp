#include "pbcell/periodic_distance.hpp"

#include <algorithm>
#include <cmath>

namespace pbcell {
namespace {

// Relative slack under which two images count as equally near.
constexpr double kTieSlack = 1e-13;

std::vector<IVec> block_offsets(const std::vector<int>& layers) {
  const int n = static_cast<int>(layers.size());
  std::vector<IVec> out;
  IVec t(n);
  const auto visit = [&](auto&& self, int axis) -> void {
    if (axis == n) {
      out.push_back(t);
      return;
    }
    for (int v = -layers[axis]; v <= layers[axis]; ++v) {
      t[axis] = v;
      self(self, axis + 1);
    }
  };
  visit(visit, 0);
  return out;
}

double image_length(const Basis& b, const Vec& delta, const IVec& image) {
  using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1, 0, 3, 1>;
  const LVec x = delta.cast<long double>() + image.cast<long double>();
  return static_cast<double>((b.matrix().cast<long double>() * x).norm());
}

}  // namespace

IMat unimodular_inverse(const IMat& u) {
  const auto d = determinant(u);
  if (d != 1 && d != -1) {
    throw Error(ErrorCode::kNotAPrimitiveCell, "matrix is not unimodular");
  }
  const auto n = u.rows();
  IMat inv(n, n);
  if (n == 2) {
    inv << u(1, 1), -u(0, 1), -u(1, 0), u(0, 0);
  } else {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
        const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        inv(i, j) = u(r0, c0) * u(r1, c1) - u(r0, c1) * u(r1, c0);
      }
    }
  }
  return inv * d;  // d = +-1, so multiplying equals dividing
}

PeriodicMetric::PeriodicMetric(const Basis& b, const Tolerances& tol)
    : basis_(b),
      reduced_(reduce(b, tol)),
      voronoi_(voronoi_cell(b, tol)),
      block_(copy_counts_from_extents(frac_extents(voronoi_, reduced_.basis), tol)),
      inverse_transform_(unimodular_inverse(reduced_.transform).cast<double>()),
      offsets_(block_offsets(block_.layers)) {}

DistanceResult PeriodicMetric::distance(const FracPoint& p1, const FracPoint& p2) const {
  const Vec delta = p2.coords - p1.coords;
  const Vec in_reduced = inverse_transform_ * delta;
  IVec shift(in_reduced.size());
  for (Eigen::Index i = 0; i < shift.size(); ++i) {
    shift[i] = static_cast<std::int64_t>(std::round(in_reduced[i]));
  }

  DistanceResult best;
  bool first = true;
  for (const IVec& t : offsets_) {
    IVec image = reduced_.transform * (t - shift);
    const double d = image_length(basis_, delta, image);
    const double slack = kTieSlack * std::max(d, best.distance);
    const bool nearer = d < best.distance - slack;
    const bool tie_wins = d <= best.distance + slack && lex_less(image, best.image.coeffs);
    if (first || nearer || tie_wins) {
      best.distance = d;
      best.image.coeffs = std::move(image);
      first = false;
    }
  }
  return best;
}

DistanceResult min_image_distance(const Basis& b, const FracPoint& p1, const FracPoint& p2,
                                  const Tolerances& tol) {
  return PeriodicMetric(b, tol).distance(p1, p2);
}

PeriodicPointSet PeriodicPointSet::make(Basis b, std::vector<FracPoint> pts,
                                        std::vector<std::string> labels) {
  for (auto& p : pts) {
    if (p.coords.size() != b.dim()) {
      throw Error(ErrorCode::kParse, "point dimension does not match the basis");
    }
    p = wrap(std::move(p));
  }
  if (!labels.empty() && labels.size() != pts.size()) {
    throw Error(ErrorCode::kParse, "label count does not match point count");
  }
  return PeriodicPointSet{std::move(b), std::move(pts), std::move(labels)};
}

Eigen::MatrixXd pairwise_distances(const PeriodicPointSet& ps, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(ps.points.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  const PeriodicMetric metric(ps.basis, tol);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = metric.distance(ps.points[i], ps.points[j]).distance;
      m(i, j) = d;
      m(j, i) = d;
    }
  }
  return m;
}

std::vector<Neighbor> neighbors_within(const PeriodicPointSet& ps, double cutoff,
                                       const Tolerances& tol) {
  if (!(cutoff > 0)) throw Error(ErrorCode::kParse, "cutoff must be positive");
  const PeriodicMetric metric(ps.basis, tol);
  const Basis& red = metric.reduced().basis;
  const IMat& u = metric.transform();
  const int n = red.dim();

  double diameter = 0;
  for (const auto& v : metric.voronoi().vertices) diameter = std::max(diameter, 2 * v.norm());
  std::vector<int> layers(n);
  for (int k = 0; k < n; ++k) {
    const double width = 1.0 / red.inverse().row(k).norm();
    layers[k] = static_cast<int>(std::ceil((cutoff + diameter) / width));
  }
  const auto offsets = block_offsets(layers);

  // Points in reduced coordinates, wrapped, and the integer shift back to the
  // caller's wrapped coordinates: U q = p + a.
  std::vector<Vec> q;
  std::vector<IVec> a;
  for (const auto& p : ps.points) {
    Vec qi = wrap(FracPoint{metric.to_reduced(p.coords)}).coords;
    const Vec back = u.cast<double>() * qi - p.coords;
    IVec ai(n);
    for (int k = 0; k < n; ++k) ai[k] = static_cast<std::int64_t>(std::round(back[k]));
    q.push_back(std::move(qi));
    a.push_back(std::move(ai));
  }

  const double limit = cutoff * (1 + 1e-12);
  std::vector<Neighbor> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i; j < q.size(); ++j) {
      const Vec delta = q[j] - q[i];
      for (const IVec& t : offsets) {
        if (i == j && t.isZero()) continue;
        if ((red.matrix() * (delta + t.cast<double>())).norm() > limit * (1 + 1e-9)) continue;
        IVec image = u * t + a[j] - a[i];
        const double d =
            image_length(ps.basis, ps.points[j].coords - ps.points[i].coords, image);
        if (d > limit) continue;
        out.push_back(Neighbor{i, j, LatticeVector{std::move(image)}, d});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Neighbor& x, const Neighbor& y) {
    if (x.i != y.i) return x.i < y.i;
    if (x.j != y.j) return x.j < y.j;
    return lex_less(x.image.coeffs, y.image.coeffs);
  });
  return out;
}

}  // namespace pbcell
