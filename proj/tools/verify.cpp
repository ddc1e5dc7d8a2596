#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <Eigen/LU>

#include "pbcell/oracle.hpp"

namespace pbcell::cli::verify {
namespace {

std::string fmt_vec(const IVec& v) {
  std::ostringstream s;
  s << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

// Largest layer count the brute checks need for this cell, with headroom.
int deep_layers(const Basis& cell) {
  const auto cc = copy_counts(cell, cell);
  return *std::max_element(cc.layers.begin(), cc.layers.end()) + 3;
}

// Samples point pairs and compares the block minimum against a deep brute
// minimum in the cell's own frame.
std::string sampled_sufficiency(const Basis& cell, const std::vector<int>& layers) {
  const int n = cell.dim();
  const int grid = n == 2 ? 9 : 5;
  const int deep = *std::max_element(layers.begin(), layers.end()) + 3;
  std::vector<Vec> pts;
  std::vector<int> g(n, 0);
  const auto fill = [&](auto&& self, int a) -> void {
    if (a == n) {
      Vec p(n);
      for (int i = 0; i < n; ++i) p[i] = (g[i] + 0.37) / grid;
      pts.push_back(p);
      return;
    }
    for (g[a] = 0; g[a] < grid; ++g[a]) self(self, a + 1);
  };
  fill(fill, 0);
  for (const auto& p1 : pts) {
    for (const auto& p2 : pts) {
      double block = 1e300;
      IVec t(n);
      const auto visit = [&](auto&& self, int a) -> void {
        if (a == n) {
          block = std::min(block, (cell.matrix() * (p2 - p1 + t.cast<double>())).norm());
          return;
        }
        for (int v = -layers[a]; v <= layers[a]; ++v) {
          t[a] = v;
          self(self, a + 1);
        }
      };
      visit(visit, 0);
      const double exact = oracle::brute_distance(cell, {p1}, {p2}, deep).distance;
      if (block - exact > 1e-9 * std::max(1.0, exact)) {
        std::ostringstream s;
        s << "block of copies misses a nearer image: " << block << " vs " << exact;
        return s.str();
      }
    }
  }
  return {};
}

}  // namespace

std::string reduction(const Basis& input, const ReducedBasis& r) {
  const int n = input.dim();
  if (std::abs(determinant(r.transform)) != 1) return "transform is not unimodular";
  const Mat diff = input.matrix() * r.transform.cast<double>() - r.basis.matrix();
  if (diff.cwiseAbs().maxCoeff() > 1e-9 * input.scale()) return "input * transform != reduced";
  // Successive minima by brute enumeration in the reduced frame.
  std::vector<std::pair<double, Vec>> all;
  IVec t(n);
  const int k = 4;
  const auto visit = [&](auto&& self, int a) -> void {
    if (a == n) {
      if (!t.isZero()) {
        const Vec x = r.basis.matrix() * t.cast<double>();
        all.emplace_back(x.norm(), x);
      }
      return;
    }
    for (int v = -k; v <= k; ++v) {
      t[a] = v;
      self(self, a + 1);
    }
  };
  visit(visit, 0);
  std::sort(all.begin(), all.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<double> lambda;
  Mat chosen(n, 0);
  for (const auto& [len, x] : all) {
    Mat trial(n, chosen.cols() + 1);
    trial << chosen, x;
    Eigen::FullPivLU<Mat> lu(trial);
    lu.setThreshold(1e-9);
    if (lu.rank() == trial.cols()) {
      chosen = trial;
      lambda.push_back(len);
      if (static_cast<int>(lambda.size()) == n) break;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (r.basis.column(i).norm() > lambda[static_cast<std::size_t>(i)] * (1 + 1e-9)) {
      return "reduced vector " + std::to_string(i + 1) + " is not a successive minimum";
    }
  }
  return {};
}

std::string relevant(const Basis& input, const RelevantVectorSet& rel) {
  const ReducedBasis r = reduce(input);
  const auto brute = oracle::brute_relevant(r.basis, 3);
  std::set<std::vector<std::int64_t>> want, got;
  for (const auto& v : brute.vectors) {
    const IVec c = canonical_sign(r.transform * v.coeffs);
    want.insert({c.data(), c.data() + c.size()});
  }
  for (const auto& v : rel.vectors) got.insert({v.coeffs.data(), v.coeffs.data() + v.coeffs.size()});
  if (want != got) {
    return "relevant vectors differ from the facet oracle (" + std::to_string(got.size()) +
           " vs " + std::to_string(want.size()) + " pairs)";
  }
  return {};
}

std::string voronoi(const Basis& input, const VoronoiCell& v) {
  const double det = std::abs(input.det());
  if (std::abs(v.volume - det) > 1e-9 * det) {
    std::ostringstream s;
    s << "volume " << v.volume << " differs from |det B| = " << det;
    return s.str();
  }
  const auto brute = oracle::brute_voronoi_vertices(reduce(input).basis, 3);
  if (brute.size() != v.vertices.size()) {
    return "vertex count " + std::to_string(v.vertices.size()) + " differs from oracle " +
           std::to_string(brute.size());
  }
  return {};
}

std::string copies(const Basis& cell, const Basis& lattice, const CopyCounts& cc) {
  if (auto msg = sampled_sufficiency(cell, cc.layers); !msg.empty()) return msg;
  if (cell.dim() == 2) {
    for (int axis = 0; axis < 2; ++axis) {
      if (!oracle::minimality_witness(cell, lattice, cc.layers, axis)) {
        return "no witness that axis " + std::to_string(axis + 1) + " needs " +
               std::to_string(cc.layers[static_cast<std::size_t>(axis)]) + " layers";
      }
    }
  }
  return {};
}

std::string cells(const Basis& lattice, const CellEnumeration& en) {
  (void)lattice;
  for (const auto& c : en.cells) {
    const int n = c.basis.dim();
    if (auto msg = sampled_sufficiency(c.basis, std::vector<int>(static_cast<std::size_t>(n), 1));
        !msg.empty()) {
      std::ostringstream s;
      s << "cell " << c.coeffs.transpose().format(Eigen::IOFormat(0, Eigen::DontAlignCols, " ", ";"))
        << ": " << msg;
      return s.str();
    }
  }
  return {};
}

std::string distance(const Basis& b, const FracPoint& p1, const FracPoint& p2,
                     const DistanceResult& d) {
  const auto brute = oracle::brute_distance(b, p1, p2, deep_layers(b));
  if (std::abs(brute.distance - d.distance) > 1e-12 * std::max(1.0, brute.distance)) {
    std::ostringstream s;
    s.precision(17);
    s << "distance " << d.distance << " vs oracle " << brute.distance << " at image "
      << fmt_vec(brute.image.coeffs);
    return s.str();
  }
  return {};
}

std::string matrix(const PeriodicPointSet& ps, const Eigen::MatrixXd& m) {
  const int deep = deep_layers(ps.basis);
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    for (std::size_t j = 0; j < ps.points.size(); ++j) {
      const double want = oracle::brute_distance(ps.basis, ps.points[i], ps.points[j], deep).distance;
      const double got = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (std::abs(want - got) > 1e-12 * std::max(1.0, want)) {
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") disagrees with oracle";
      }
    }
  }
  return {};
}

std::string neighbors(const PeriodicPointSet& ps, double cutoff,
                      const std::vector<Neighbor>& found) {
  const Basis& b = ps.basis;
  const int n = b.dim();
  std::vector<int> box(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    box[static_cast<std::size_t>(k)] =
        static_cast<int>(std::ceil(cutoff * b.inverse().row(k).norm())) + 1;
  }
  std::set<std::vector<std::int64_t>> want, got;
  for (const auto& nb : found) {
    std::vector<std::int64_t> key{static_cast<std::int64_t>(nb.i), static_cast<std::int64_t>(nb.j)};
    key.insert(key.end(), nb.image.coeffs.data(), nb.image.coeffs.data() + n);
    got.insert(key);
  }
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    for (std::size_t j = i; j < ps.points.size(); ++j) {
      const Vec delta = ps.points[j].coords - ps.points[i].coords;
      IVec t(n);
      const auto visit = [&](auto&& self, int a) -> void {
        if (a == n) {
          if (i == j && t.isZero()) return;
          if ((b.matrix() * (delta + t.cast<double>())).norm() <= cutoff * (1 + 1e-12)) {
            std::vector<std::int64_t> key{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
            key.insert(key.end(), t.data(), t.data() + n);
            want.insert(key);
          }
          return;
        }
        for (int v = -box[static_cast<std::size_t>(a)]; v <= box[static_cast<std::size_t>(a)]; ++v) {
          t[a] = v;
          self(self, a + 1);
        }
      };
      visit(visit, 0);
    }
  }
  if (want != got) {
    return "neighbor list has " + std::to_string(got.size()) + " entries, oracle has " +
           std::to_string(want.size());
  }
  return {};
}

}  // namespace pbcell::cli::verify
