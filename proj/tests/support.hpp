#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "pbcell/lattice.hpp"
#include "pbcell/reduction.hpp"
#include "pbcell/types.hpp"

namespace pbtest {

using namespace pbcell;

inline Basis basis2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, c, b, d;  // columns (a, b) and (c, d)
  return validate_basis(m);
}

inline Basis basis3(const Vec& v1, const Vec& v2, const Vec& v3) {
  Mat m(3, 3);
  m.col(0) = v1;
  m.col(1) = v2;
  m.col(2) = v3;
  return validate_basis(m);
}

inline Basis hexagonal() { return basis2(1, 0, -0.5, std::sqrt(3.0) / 2); }

inline Basis fcc() {
  Mat m(3, 3);
  m << 0, 1, 1,
       1, 0, 1,
       1, 1, 0;
  return validate_basis(m);
}

inline IMat imat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IMat u(2, 2);
  u << a, b, c, d;
  return u;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double normal() { return std::normal_distribution<double>()(gen_); }

  Basis gaussian(int n) {
    for (;;) {
      Mat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = normal();
      const double cond = m.jacobiSvd().singularValues()(0) / m.jacobiSvd().singularValues()(n - 1);
      if (cond < 50) return validate_basis(m);
    }
  }

  // Random basis whose columns have condition number up to `max_cond`.
  Basis conditioned(int n, double max_cond) {
    for (;;) {
      Mat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = normal();
      Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Vec s(n);
      const double logmax = std::log(max_cond);
      for (int i = 0; i < n; ++i) s[i] = std::exp(uniform(0, logmax));
      s[0] = 1;
      Mat out = svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
      return validate_basis(out);
    }
  }

  IMat unimodular(int n, int steps = 6) {
    IMat u = IMat::Identity(n, n);
    for (int s = 0; s < steps; ++s) {
      const int i = integer(0, n - 1);
      int j = integer(0, n - 2);
      if (j >= i) ++j;
      const int k = integer(-2, 2);
      u.col(i) += k * u.col(j);
      if (integer(0, 3) == 0) u.col(i) = -u.col(i);
    }
    return u;
  }

  // Skewed cell of a lattice: a random unimodular recoordinatization with
  // larger shear entries.
  IMat shear(int n) {
    IMat u = IMat::Identity(n, n);
    for (int s = 0; s < 3; ++s) {
      const int i = integer(0, n - 1);
      int j = integer(0, n - 2);
      if (j >= i) ++j;
      u.col(i) += integer(-4, 4) * u.col(j);
    }
    return u;
  }

  // Lattices whose reduced basis has every pairwise inner product below
  // -margin times the product of lengths, so no coset minimum is tied.
  Basis strictly_obtuse(int n, double margin = 0.05) {
    for (;;) {
      const Basis b = gaussian(n);
      const ReducedBasis r = reduce(b);
      if (!r.obtuse) continue;
      const Mat& m = r.basis.matrix();
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j)
          ok = m.col(i).dot(m.col(j)) < -margin * m.col(i).norm() * m.col(j).norm();
      if (ok && tie_free(r.basis)) return b;
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  // The lengths of the seven (or three) 0/1 combinations are pairwise distinct
  // from the lengths of their coset partners.
  static bool tie_free(const Basis& reduced) {
    const int n = reduced.dim();
    const Mat& m = reduced.matrix();
    std::vector<double> lengths;
    for (int mask = 1; mask < (1 << n); ++mask) {
      Vec v = Vec::Zero(n);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) v += m.col(i);
      lengths.push_back(v.norm());
    }
    for (std::size_t i = 0; i < lengths.size(); ++i)
      for (std::size_t j = i + 1; j < lengths.size(); ++j)
        if (std::abs(lengths[i] - lengths[j]) < 1e-6 * lengths[i]) return false;
    return true;
  }

  std::mt19937_64 gen_;
};

// Entries rounded to multiples of 2^-20, so products with small integer
// matrices are exact and a recoordinatized basis spans exactly the same lattice.
inline Basis dyadic(const Basis& b) {
  const double q = std::ldexp(1.0, 20);
  return validate_basis((b.matrix() * q).array().round().matrix() / q);
}

inline Basis rectangular(Random& rng, int n) {
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = rng.uniform(0.3, 3.0);
  return validate_basis(m);
}

// Set of canonical keys; std::set over flattened column-major entries.
inline std::vector<std::int64_t> flatten(const IMat& m) {
  return std::vector<std::int64_t>(m.data(), m.data() + m.size());
}

}  // namespace pbtest
