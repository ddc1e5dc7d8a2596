#include "pbcell/reduction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include <Eigen/LU>

namespace pbcell {
namespace {

constexpr int kMaxPairSteps = 100000;

Vec cart(const Basis& b, const IVec& coeffs) { return b.matrix() * coeffs.cast<double>(); }

double snapped_dot(const Vec& x, const Vec& y, const Tolerances& tol) {
  const double d = x.dot(y);
  return std::abs(d) < tol.angle * x.norm() * y.norm() ? 0.0 : d;
}

// Pairwise size reduction until no column can be shortened by subtracting an
// integer multiple of another. Works on integer coefficients w.r.t. the input
// so that the transform stays exact.
IMat pairwise_reduce(const Basis& b) {
  const int n = b.dim();
  IMat u = IMat::Identity(n, n);
  for (int step = 0; step < kMaxPairSteps; ++step) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Vec vi = cart(b, u.col(i));
        const Vec vj = cart(b, u.col(j));
        const double mu = std::round(vi.dot(vj) / vj.squaredNorm());
        if (mu == 0.0) continue;
        const IVec cand = u.col(i) - static_cast<std::int64_t>(mu) * u.col(j);
        if (cart(b, cand).squaredNorm() < vi.squaredNorm() * (1.0 - 1e-14)) {
          u.col(i) = cand;
          changed = true;
        }
      }
    }
    if (!changed) return u;
  }
  throw Error(ErrorCode::kReductionNonConvergence, "pairwise size reduction did not settle");
}

// 2D Lagrange-Gauss on the two columns.
IMat gauss_reduce(const Basis& b) {
  IMat u = IMat::Identity(2, 2);
  for (int step = 0; step < kMaxPairSteps; ++step) {
    Vec v1 = cart(b, u.col(0));
    Vec v2 = cart(b, u.col(1));
    if (v1.squaredNorm() > v2.squaredNorm()) {
      u.col(0).swap(u.col(1));
      std::swap(v1, v2);
    }
    const double mu = std::round(v1.dot(v2) / v1.squaredNorm());
    if (mu == 0.0) return u;
    const IVec cand = u.col(1) - static_cast<std::int64_t>(mu) * u.col(0);
    if (!(cart(b, cand).squaredNorm() < v2.squaredNorm())) return u;
    u.col(1) = cand;
  }
  throw Error(ErrorCode::kReductionNonConvergence, "Lagrange-Gauss reduction did not settle");
}

struct Candidate {
  IVec coeffs;  // w.r.t. the input basis, canonical sign
  Vec x;
  double norm;
};

// Every lattice vector (one per +- pair) of length at most `radius`, found by
// enumerating the Fincke-Pohst box of the well-shaped `frame` (columns given
// as input-basis coefficients).
std::vector<Candidate> short_vectors(const Basis& b, const IMat& frame, double radius) {
  const int n = b.dim();
  const Mat f = b.matrix() * frame.cast<double>();
  const Mat ginv = (f.transpose() * f).inverse();
  std::array<std::int64_t, 3> k{0, 0, 0};
  for (int i = 0; i < n; ++i) {
    k[i] = static_cast<std::int64_t>(std::floor(radius * std::sqrt(ginv(i, i)) * (1 + 1e-9) + 1e-9));
  }
  std::vector<Candidate> out;
  IVec z(n);
  const std::int64_t k2 = n == 3 ? k[2] : 0;
  for (std::int64_t a = -k[0]; a <= k[0]; ++a) {
    for (std::int64_t c = -k[1]; c <= k[1]; ++c) {
      for (std::int64_t e = -k2; e <= k2; ++e) {
        z[0] = a;
        z[1] = c;
        if (n == 3) z[2] = e;
        if (z.isZero()) continue;
        IVec coeffs = frame * z;
        if (coeffs != canonical_sign(coeffs)) continue;  // keep one of +-
        Vec x = cart(b, coeffs);
        const double len = x.norm();
        if (len <= radius) out.push_back({std::move(coeffs), std::move(x), len});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& p, const Candidate& q) {
    if (p.norm != q.norm) return p.norm < q.norm;
    return lex_less(p.coeffs, q.coeffs);
  });
  return out;
}

int rank_of(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  Mat m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
  Eigen::FullPivLU<Mat> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

// Successive minima from a sorted candidate list.
std::vector<double> minima_of(const std::vector<Candidate>& cands, int n) {
  std::vector<Vec> chosen;
  std::vector<double> lambda;
  for (const auto& c : cands) {
    chosen.push_back(c.x);
    if (rank_of(chosen) == static_cast<int>(chosen.size())) {
      lambda.push_back(c.norm);
      if (static_cast<int>(lambda.size()) == n) break;
    } else {
      chosen.pop_back();
    }
  }
  return lambda;
}

// Best sign pattern for columns 1.. given column 0 fixed. Returns the number of
// positive (snapped) inner products; zero means the triple is obtuse.
int normalize_signs(std::vector<Candidate>& cols, const Tolerances& tol) {
  const int n = static_cast<int>(cols.size());
  int best_bad = n * n;
  double best_pos = 0;
  int best_mask = 0;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<Vec> x;
    for (int i = 0; i < n; ++i) {
      const bool flip = i > 0 && ((mask >> (i - 1)) & 1);
      x.push_back(flip ? Vec(-cols[i].x) : cols[i].x);
    }
    int bad = 0;
    double pos = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double d = snapped_dot(x[i], x[j], tol);
        if (d > 0) {
          ++bad;
          pos += d / (x[i].norm() * x[j].norm());
        }
      }
    }
    if (bad < best_bad || (bad == best_bad && pos < best_pos - 1e-15)) {
      best_bad = bad;
      best_pos = pos;
      best_mask = mask;
    }
  }
  for (int i = 1; i < n; ++i) {
    if ((best_mask >> (i - 1)) & 1) {
      cols[i].coeffs = -cols[i].coeffs;
      cols[i].x = -cols[i].x;
    }
  }
  return best_bad;
}

// A column orthogonal to all others can take either sign; pick the canonical
// one so outputs are deterministic.
void canonicalize_free_signs(std::vector<Candidate>& cols, const Tolerances& tol) {
  const int n = static_cast<int>(cols.size());
  for (int i = 1; i < n; ++i) {
    bool free = true;
    for (int j = 0; j < n; ++j) {
      if (j != i && snapped_dot(cols[i].x, cols[j].x, tol) != 0.0) free = false;
    }
    if (free && cols[i].coeffs != canonical_sign(cols[i].coeffs)) {
      cols[i].coeffs = -cols[i].coeffs;
      cols[i].x = -cols[i].x;
    }
  }
}

bool obtuse_possible(const std::vector<const Candidate*>& cols, const Tolerances& tol) {
  if (cols.size() < 3) return true;  // a pair can always be flipped
  const double d01 = snapped_dot(cols[0]->x, cols[1]->x, tol);
  const double d02 = snapped_dot(cols[0]->x, cols[2]->x, tol);
  const double d12 = snapped_dot(cols[1]->x, cols[2]->x, tol);
  return d01 * d02 * d12 <= 0.0;
}

// The well-shaped starting frame: Lagrange-Gauss in 2D, obtuse superbase in 3D.
IMat preliminary_frame(const Basis& b, const Tolerances& tol) {
  if (b.dim() == 2) return gauss_reduce(b);
  return selling_superbase(b, tol);
}

}  // namespace

IMat selling_superbase(const Basis& b, const Tolerances& tol) {
  if (b.dim() != 3) {
    throw Error(ErrorCode::kUnsupportedDimension, "Selling reduction is implemented for 3D");
  }
  const IMat start = pairwise_reduce(b);
  std::array<IVec, 4> sb;
  sb[1] = start.col(0);
  sb[2] = start.col(1);
  sb[3] = start.col(2);
  sb[0] = -(sb[1] + sb[2] + sb[3]);

  for (int step = 0;; ++step) {
    std::array<Vec, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = cart(b, sb[i]);
    int bi = -1, bj = -1;
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const double d = snapped_dot(x[i], x[j], tol);
        if (d > worst) {
          worst = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    if (step >= kMaxSellingSteps) {
      throw Error(ErrorCode::kReductionNonConvergence,
                  "Selling reduction exceeded " + std::to_string(kMaxSellingSteps) + " steps");
    }
    for (int k = 0; k < 4; ++k) {
      if (k != bi && k != bj) sb[k] += sb[bi];
    }
    sb[bi] = -sb[bi];
  }
  IMat out(3, 3);
  out << sb[1], sb[2], sb[3];
  return out;
}

ReducedBasis reduce(const Basis& b, const Tolerances& tol) {
  const int n = b.dim();
  const IMat frame = preliminary_frame(b, tol);

  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, cart(b, frame.col(i)).norm());
  const auto cands = short_vectors(b, frame, radius * (1 + tol.tie));
  const auto lambda = minima_of(cands, n);
  if (static_cast<int>(lambda.size()) != n) {
    throw Error(ErrorCode::kReductionNonConvergence, "successive minima enumeration failed");
  }

  // Pools of vectors that realize each minimum (up to ties).
  std::array<std::vector<const Candidate*>, 3> pool;
  for (int k = 0; k < n; ++k) {
    for (const auto& c : cands) {
      if (c.norm <= lambda[k] * (1 + tol.tie)) pool[k].push_back(&c);
    }
  }

  std::optional<std::vector<const Candidate*>> best;
  bool best_obtuse = false;
  const auto consider = [&](std::vector<const Candidate*> cols) {
    IMat u(n, n);
    for (int i = 0; i < n; ++i) u.col(i) = cols[i]->coeffs;
    const auto d = determinant(u);
    if (d != 1 && d != -1) return;
    const bool ob = obtuse_possible(cols, tol);
    if (best && best_obtuse && !ob) return;
    if (best && best_obtuse == ob) return;  // pools are sorted: first is lexicographically least
    best = std::move(cols);
    best_obtuse = ob;
  };
  for (const Candidate* a : pool[0]) {
    for (const Candidate* c : pool[1]) {
      if (c == a) continue;
      if (n == 2) {
        consider({a, c});
        continue;
      }
      for (const Candidate* e : pool[2]) {
        if (e == a || e == c) continue;
        consider({a, c, e});
      }
    }
  }
  if (!best) {
    throw Error(ErrorCode::kReductionNonConvergence, "no unimodular shortest basis found");
  }

  std::vector<Candidate> cols;
  for (const Candidate* c : *best) cols.push_back(*c);
  std::stable_sort(cols.begin(), cols.end(), [](const Candidate& p, const Candidate& q) {
    return p.norm < q.norm;
  });
  const int positive = normalize_signs(cols, tol);
  canonicalize_free_signs(cols, tol);

  IMat u(n, n);
  for (int i = 0; i < n; ++i) u.col(i) = cols[i].coeffs;
  return ReducedBasis{b.transformed(u), u, positive == 0};
}

bool is_reduced(const Basis& b, const Tolerances& tol) {
  const int n = b.dim();
  for (int i = 0; i + 1 < n; ++i) {
    if (b.column(i).norm() > b.column(i + 1).norm() * (1 + tol.num)) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (snapped_dot(b.column(i), b.column(j), tol) > 0) return false;
    }
  }
  const IMat frame = preliminary_frame(b, tol);
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, b.column(i).norm());
  const auto lambda = minima_of(short_vectors(b, frame, radius * (1 + tol.tie)), n);
  if (static_cast<int>(lambda.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (b.column(i).norm() > lambda[i] * (1 + tol.num)) return false;
  }
  return true;
}

}  // namespace pbcell
