#include "pbcell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>

namespace pbcell::oracle {
namespace {

template <typename F>
void for_each_in_box(int n, const std::vector<int>& radius, F&& f) {
  IVec t(n);
  const auto visit = [&](auto&& self, int axis) -> void {
    if (axis == n) {
      f(t);
      return;
    }
    for (int v = -radius[axis]; v <= radius[axis]; ++v) {
      t[axis] = v;
      self(self, axis + 1);
    }
  };
  visit(visit, 0);
}

double block_minimum(const Basis& b, const Vec& delta, const std::vector<int>& layers) {
  double best = std::numeric_limits<double>::infinity();
  for_each_in_box(b.dim(), layers, [&](const IVec& t) {
    best = std::min(best, (b.matrix() * (delta + t.cast<double>())).norm());
  });
  return best;
}

// Repeated pairwise size reduction: subtract the nearest integer multiple of
// one column from another while that shortens it. Crude but enough to make a
// [-3, 3]^n box contain every relevant vector in two and three dimensions.
Basis crude_frame(const Basis& b) {
  Mat m = b.matrix();
  const int n = b.dim();
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double k = std::round(m.col(i).dot(m.col(j)) / m.col(j).squaredNorm());
        const Vec shorter = m.col(i) - k * m.col(j);
        if (k != 0 && shorter.squaredNorm() < m.col(i).squaredNorm() * (1 - 1e-12)) {
          m.col(i) = shorter;
          changed = true;
        }
      }
    }
  }
  return validate_basis(m);
}

}  // namespace

DistanceResult brute_distance(const Basis& b, const FracPoint& p1, const FracPoint& p2,
                              int layers) {
  if (layers < 1) throw Error(ErrorCode::kParse, "brute_distance needs at least one layer");
  const int n = b.dim();
  const Vec delta = p2.coords - p1.coords;
  DistanceResult best{std::numeric_limits<double>::infinity(), {}};
  for_each_in_box(n, std::vector<int>(n, layers), [&](const IVec& t) {
    const double d = (b.matrix() * (delta + t.cast<double>())).norm();
    if (d < best.distance) best = DistanceResult{d, LatticeVector{t}};
  });
  return best;
}

RelevantVectorSet brute_relevant(const Basis& b, int k, double tol_tie) {
  const int n = b.dim();
  std::vector<IVec> box;
  for_each_in_box(n, std::vector<int>(n, k), [&](const IVec& t) {
    if (!t.isZero()) box.push_back(t);
  });
  RelevantVectorSet out;
  for (const IVec& r : box) {
    if (r != canonical_sign(r)) continue;
    const Vec mid = 0.5 * (b.matrix() * r.cast<double>());
    const double rlen = 2 * mid.norm();
    const bool facet = std::all_of(box.begin(), box.end(), [&](const IVec& w) {
      if (w == r) return true;
      const Vec x = b.matrix() * w.cast<double>();
      return (mid - x).norm() > mid.norm() + tol_tie * rlen;
    });
    if (facet) out.vectors.push_back(LatticeVector{r});
  }
  std::sort(out.vectors.begin(), out.vectors.end(),
            [](const LatticeVector& p, const LatticeVector& q) { return lex_less(p.coeffs, q.coeffs); });
  for (const auto& v : out.vectors) out.cartesians.push_back(b.matrix() * v.coeffs.cast<double>());
  return out;
}

std::vector<Vec> brute_voronoi_vertices(const Basis& b, int k) {
  const int n = b.dim();
  const RelevantVectorSet rel = brute_relevant(b, k);
  std::vector<Vec> normals;
  for (const auto& x : rel.cartesians) {
    normals.push_back(x);
    normals.push_back(-x);
  }
  std::vector<Vec> lattice;
  for_each_in_box(n, std::vector<int>(n, k), [&](const IVec& t) {
    if (!t.isZero()) lattice.push_back(b.matrix() * t.cast<double>());
  });
  double scale = 0;
  for (const auto& x : normals) scale = std::max(scale, x.norm());
  const double eps = 1e-8 * scale;

  std::vector<Vec> out;
  const int m = static_cast<int>(normals.size());
  std::vector<int> idx(n);
  const auto choose = [&](auto&& self, int depth, int start) -> void {
    if (depth == n) {
      Mat a(n, n);
      Vec rhs(n);
      for (int i = 0; i < n; ++i) {
        a.row(i) = normals[idx[i]].transpose();
        rhs[i] = 0.5 * normals[idx[i]].squaredNorm();
      }
      Eigen::FullPivLU<Mat> lu(a);
      if (!lu.isInvertible()) return;
      const Vec x = lu.solve(rhs);
      // Nearest lattice point must be the origin (ties allowed).
      for (const auto& w : lattice) {
        if ((x - w).norm() < x.norm() - eps) return;
      }
      for (const auto& y : out) {
        if ((x - y).norm() <= eps) return;
      }
      out.push_back(x);
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  choose(choose, 0, 0);
  return out;
}

std::optional<Witness> minimality_witness(const Basis& cell, const Basis& lattice,
                                          const std::vector<int>& layers, int axis,
                                          int grid_per_axis) {
  const int n = cell.dim();
  if (axis < 0 || axis >= n || static_cast<int>(layers.size()) != n) {
    throw Error(ErrorCode::kParse, "axis or layer vector does not match the dimension");
  }
  primitive_cell_coeffs(cell, lattice);
  std::vector<int> restricted = layers;
  restricted[axis] -= 1;
  if (restricted[axis] < 0) return std::nullopt;
  const int deep = *std::max_element(layers.begin(), layers.end()) + 3;
  const std::vector<int> deep_layers(n, deep);

  // Displacements: Voronoi vertices pulled slightly inward, so the displaced
  // point has a unique nearest image.
  std::vector<Vec> displacements;
  for (const Vec& x : brute_voronoi_vertices(crude_frame(lattice), 3)) {
    for (double shrink : {1e-5, 1e-3, 1e-2, 0.03, 0.1, 0.2}) {
      displacements.push_back(cell.inverse() * (x * (1.0 - shrink)));
    }
  }
  std::vector<Vec> grid;
  // Near-corner points first: D reaches furthest from the cell there.
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec p(n);
    for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? 1.0 - 1e-6 : 1e-6;
    grid.push_back(p);
  }
  std::vector<int> g(n, 0);
  const auto fill = [&](auto&& self, int a) -> void {
    if (a == n) {
      Vec p(n);
      for (int i = 0; i < n; ++i) p[i] = static_cast<double>(g[i]) / grid_per_axis;
      grid.push_back(p);
      return;
    }
    for (g[a] = 0; g[a] < grid_per_axis; ++g[a]) self(self, a + 1);
  };
  fill(fill, 0);
  if (n == 2) {
    for (std::size_t i = 1u << n; i < grid.size(); ++i) displacements.push_back(grid[i]);
  }

  for (const auto& d : displacements) {
    for (const auto& p1 : grid) {
      const FracPoint a{p1};
      const FracPoint b = wrap(FracPoint{p1 + d});
      const Vec delta = b.coords - a.coords;
      const double exact = block_minimum(cell, delta, deep_layers);
      const double seen = block_minimum(cell, delta, restricted);
      if (seen - exact > 1e-9) return Witness{a, b, exact, seen, seen - exact};
    }
  }
  return std::nullopt;
}

}  // namespace pbcell::oracle
