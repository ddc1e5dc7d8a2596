#include "pbcell/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "pbcell/reduction.hpp"

namespace pbcell {
namespace {

// |w_i| <= this in reduced coordinates covers every coset minimum.
constexpr int kCosetRadius = 2;

double polygon_area_3d(std::vector<Vec> pts, const Vec& normal) {
  const Vec n = normal.normalized();
  Vec centre = Vec::Zero(3);
  for (const auto& p : pts) centre += p;
  centre /= static_cast<double>(pts.size());
  Eigen::Vector3d axis_u = (pts.front() - centre).head<3>();
  axis_u.normalize();
  const Eigen::Vector3d axis_w = Eigen::Vector3d(n.head<3>()).cross(axis_u);
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    const Eigen::Vector3d da = (a - centre).head<3>(), db = (b - centre).head<3>();
    return std::atan2(da.dot(axis_w), da.dot(axis_u)) < std::atan2(db.dot(axis_w), db.dot(axis_u));
  });
  Eigen::Vector3d acc = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Eigen::Vector3d p = pts[i].head<3>(), q = pts[(i + 1) % pts.size()].head<3>();
    acc += p.cross(q);
  }
  return 0.5 * std::abs(acc.dot(n.head<3>()));
}

double polygon_area_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
  });
  double acc = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec& p = pts[i];
    const Vec& q = pts[(i + 1) % pts.size()];
    acc += p[0] * q[1] - p[1] * q[0];
  }
  return 0.5 * std::abs(acc);
}

}  // namespace

RelevantVectorSet relevant_vectors(const Basis& b, const Tolerances& tol) {
  const int n = b.dim();
  const ReducedBasis red = reduce(b, tol);
  const Mat& r = red.basis.matrix();
  const int span = 2 * kCosetRadius + 1;

  RelevantVectorSet out;
  for (int cls = 1; cls < (1 << n); ++cls) {
    // All class members w with w_i = c_i mod 2 and |w_i| <= span.
    std::vector<std::pair<double, IVec>> members;
    IVec w(n);
    const auto visit = [&](auto&& self, int axis) -> void {
      if (axis == n) {
        members.emplace_back((r * w.cast<double>()).norm(), w);
        return;
      }
      const int parity = (cls >> axis) & 1;
      for (int v = -span; v <= span; ++v) {
        if (((v % 2) + 2) % 2 != parity) continue;
        w[axis] = v;
        self(self, axis + 1);
      }
    };
    visit(visit, 0);
    const double best =
        std::min_element(members.begin(), members.end(), [](const auto& p, const auto& q) {
          return p.first < q.first;
        })->first;
    std::vector<IVec> tied;
    for (const auto& [len, m] : members) {
      if (len <= best * (1 + tol.tie)) tied.push_back(m);
    }
    if (tied.size() != 2) continue;  // +-w only; anything more is a tie
    const IVec coeffs = canonical_sign(red.transform * tied.front());
    out.vectors.push_back(LatticeVector{coeffs});
  }
  std::sort(out.vectors.begin(), out.vectors.end(),
            [](const LatticeVector& p, const LatticeVector& q) { return lex_less(p.coeffs, q.coeffs); });
  for (const auto& v : out.vectors) out.cartesians.push_back(b.matrix() * v.coeffs.cast<double>());
  return out;
}

VoronoiCell voronoi_cell(const Basis& b, const Tolerances& tol) {
  return voronoi_cell(relevant_vectors(b, tol), b.dim(), tol);
}

VoronoiCell voronoi_cell(const RelevantVectorSet& relevant, int n, const Tolerances& tol) {
  VoronoiCell cell;
  double scale = 0;
  for (const auto& x : relevant.cartesians) {
    const double off = 0.5 * x.squaredNorm();
    cell.halfspaces.push_back({x, off});
    cell.halfspaces.push_back({-x, off});
    scale = std::max(scale, x.norm());
  }
  cell.tol_abs = tol.geom * scale;
  const auto& hs = cell.halfspaces;
  const int m = static_cast<int>(hs.size());

  const auto feasible = [&](const Vec& x) {
    return std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) {
      return h.normal.dot(x) - h.offset <= cell.tol_abs * h.normal.norm();
    });
  };
  const auto add_vertex = [&](const Vec& x) {
    for (const auto& v : cell.vertices) {
      if ((v - x).norm() <= cell.tol_abs) return;
    }
    cell.vertices.push_back(x);
  };

  std::vector<int> idx(n);
  const auto choose = [&](auto&& self, int depth, int start) -> void {
    if (depth == n) {
      Mat a(n, n);
      Vec rhs(n);
      double norms = 1;
      for (int i = 0; i < n; ++i) {
        a.row(i) = hs[idx[i]].normal.transpose();
        rhs[i] = hs[idx[i]].offset;
        norms *= hs[idx[i]].normal.norm();
      }
      if (std::abs(a.determinant()) <= 1e-10 * norms) return;
      const Vec x = a.partialPivLu().solve(rhs);
      if (feasible(x)) add_vertex(x);
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  choose(choose, 0, 0);

  if (static_cast<int>(cell.vertices.size()) < n + 1) {
    throw Error(ErrorCode::kDegenerateCell,
                "only " + std::to_string(cell.vertices.size()) + " Voronoi vertices found");
  }
  std::sort(cell.vertices.begin(), cell.vertices.end(), [](const Vec& p, const Vec& q) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p[i] != q[i]) return p[i] < q[i];
    }
    return false;
  });

  if (n == 2) {
    cell.volume = polygon_area_2d(cell.vertices);
  } else {
    // Pyramids from the origin over each facet.
    double vol = 0;
    for (const auto& h : hs) {
      std::vector<Vec> face;
      for (const auto& v : cell.vertices) {
        if (std::abs(h.normal.dot(v) - h.offset) <= cell.tol_abs * h.normal.norm()) face.push_back(v);
      }
      if (face.size() < 3) continue;
      vol += polygon_area_3d(face, h.normal) * (h.offset / h.normal.norm()) / 3.0;
    }
    cell.volume = vol;
  }
  return cell;
}

Vec frac_extents(const VoronoiCell& v, const Basis& frame) {
  Vec h = Vec::Zero(frame.dim());
  for (const auto& x : v.vertices) {
    h = h.cwiseMax((frame.inverse() * x).cwiseAbs());
  }
  return h;
}

}  // namespace pbcell
