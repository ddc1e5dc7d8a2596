#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "pbcell/reduction.hpp"
#include "support.hpp"

using namespace pbcell;
using pbtest::basis2;

namespace {

// Successive minima by exhaustive enumeration of coefficients in [-k, k]^n.
std::vector<double> brute_minima(const Basis& b, int k) {
  const int n = b.dim();
  std::vector<Vec> vs;
  IVec c = IVec::Constant(n, -k);
  for (;;) {
    if (!c.isZero()) vs.push_back(b.matrix() * c.cast<double>());
    int i = 0;
    while (i < n && c[i] == k) c[i++] = -k;
    if (i == n) break;
    ++c[i];
  }
  std::sort(vs.begin(), vs.end(), [](const Vec& a, const Vec& v) { return a.squaredNorm() < v.squaredNorm(); });
  std::vector<double> minima;
  Mat span(n, 0);
  for (const Vec& v : vs) {
    Mat trial(n, span.cols() + 1);
    trial << span, v;
    Eigen::FullPivLU<Mat> lu(trial);
    lu.setThreshold(1e-9);
    if (lu.rank() == trial.cols()) {
      span = trial;
      minima.push_back(v.norm());
      if (static_cast<int>(minima.size()) == n) break;
    }
  }
  return minima;
}

void expect_valid(const Basis& input, const ReducedBasis& r) {
  const int n = input.dim();
  EXPECT_EQ(std::abs(determinant(r.transform)), 1);
  EXPECT_LT((input.matrix() * r.transform.cast<double>() - r.basis.matrix()).norm(),
            1e-12 * input.matrix().norm() * r.transform.cast<double>().norm());
  const Mat& m = r.basis.matrix();
  for (int i = 0; i + 1 < n; ++i) EXPECT_LE(m.col(i).norm(), m.col(i + 1).norm() * (1 + 1e-9));
  if (r.obtuse) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        EXPECT_LE(m.col(i).dot(m.col(j)), 1e-9 * m.col(i).norm() * m.col(j).norm());
  }
}

}  // namespace

TEST(Reduce, Identity) {
  const ReducedBasis r = reduce(identity_basis(3));
  EXPECT_TRUE(r.obtuse);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(r.transform.col(i).cwiseAbs().sum(), 1);
    EXPECT_DOUBLE_EQ(r.basis.column(i).norm(), 1.0);
  }
}

TEST(Reduce, SkewedSquareLattice) {
  const Basis b = basis2(1, 0, 10.3, 1);
  const ReducedBasis r = reduce(b);
  expect_valid(b, r);
  const auto minima = brute_minima(b, 15);
  EXPECT_NEAR(r.basis.column(0).norm(), minima[0], 1e-12);
  EXPECT_NEAR(r.basis.column(1).norm(), minima[1], 1e-12);
  EXPECT_LE(r.basis.column(1).norm(), b.column(1).norm());
}

TEST(Reduce, HexagonalCellParams) {
  const Basis b = cell_params_to_basis({1, 1, 1, 90, 90, 120});
  const ReducedBasis r = reduce(b);
  expect_valid(b, r);
  const Mat& m = r.basis.matrix();
  std::vector<double> cosines;
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(m.col(i).norm(), 1, 1e-12);
    for (int j = i + 1; j < 3; ++j) cosines.push_back(m.col(i).dot(m.col(j)));
  }
  std::sort(cosines.begin(), cosines.end());
  EXPECT_NEAR(cosines[0], -0.5, 1e-12);
  EXPECT_NEAR(cosines[1], 0, 1e-12);
  EXPECT_NEAR(cosines[2], 0, 1e-12);
  const auto minima = brute_minima(b, 3);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(m.col(i).norm(), minima[i], 1e-12);
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(identity_basis(2)));
  EXPECT_TRUE(is_reduced(identity_basis(3)));
  EXPECT_FALSE(is_reduced(basis2(1, 0, 0.9, 1)));
  EXPECT_TRUE(is_reduced(pbtest::hexagonal()));
  // Right length order but acute.
  EXPECT_FALSE(is_reduced(basis2(1, 0, 0.2, 1)));
}

TEST(Reduce, RandomDistortionsOfReducedBases) {
  pbtest::Random rng(21);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + k % 2;
    const Basis base = rng.gaussian(n);
    const Basis b = base.transformed(rng.unimodular(n, 10));
    const ReducedBasis r = reduce(b);
    expect_valid(b, r);
    if (r.obtuse) {
      EXPECT_TRUE(is_reduced(r.basis)) << "case " << k;
    }
    // Same lattice; the undistorted frame keeps the search box honest.
    const auto minima = brute_minima(base, 10);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(r.basis.column(i).norm(), minima[i], 1e-9 * minima[i]);
  }
}

TEST(Reduce, TwoDimensionalAlwaysObtuse) {
  pbtest::Random rng(4);
  for (int k = 0; k < 200; ++k) {
    const ReducedBasis r = reduce(rng.conditioned(2, 1000));
    EXPECT_TRUE(r.obtuse);
    EXPECT_TRUE(is_reduced(r.basis));
  }
}

TEST(Reduce, Idempotent) {
  pbtest::Random rng(8);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 2;
    const ReducedBasis once = reduce(rng.gaussian(n).transformed(rng.unimodular(n)));
    const ReducedBasis twice = reduce(once.basis);
    for (int i = 0; i < n; ++i)
      EXPECT_NEAR(once.basis.column(i).norm(), twice.basis.column(i).norm(), 1e-12);
  }
}

TEST(Reduce, Deterministic) {
  const Basis b = cell_params_to_basis({1.3, 1.1, 2.2, 71, 64, 99});
  const ReducedBasis a = reduce(b), c = reduce(b);
  EXPECT_EQ(a.transform, c.transform);
}

TEST(Reduce, CubicTiesResolvedDeterministically) {
  const Basis b = identity_basis(3).transformed(
      (IMat(3, 3) << 1, 1, 0, 0, 1, 1, 0, 0, 1).finished());
  const ReducedBasis r = reduce(b);
  EXPECT_TRUE(r.obtuse);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.basis.column(i).norm(), 1, 1e-12);
}

TEST(Selling, SuperbaseIsObtuse) {
  pbtest::Random rng(13);
  for (int k = 0; k < 100; ++k) {
    const Basis b = rng.gaussian(3).transformed(rng.unimodular(3, 8));
    const IMat c = selling_superbase(b);
    EXPECT_EQ(std::abs(determinant(c)), 1);
    const Mat v = b.matrix() * c.cast<double>();
    Eigen::MatrixXd sb(3, 4);
    sb << -v.rowwise().sum(), v;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) EXPECT_LE(sb.col(i).dot(sb.col(j)), 1e-9 * sb.squaredNorm());
  }
}

// Some lattices have no shortest basis with all angles >= 90 degrees. Found by
// random search; the successive minima force one acute pair.
TEST(Reduce, NonObtuseShortestBasisReported) {
  pbtest::Random rng(1);
  int non_obtuse = 0;
  for (int k = 0; k < 200; ++k) {
    const Basis b = rng.gaussian(3);
    const ReducedBasis r = reduce(b);
    if (r.obtuse) continue;
    ++non_obtuse;
    const Mat& m = r.basis.matrix();
    int positive = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) positive += m.col(i).dot(m.col(j)) > 0;
    EXPECT_EQ(positive, 1);
  }
  EXPECT_GT(non_obtuse, 0);
}
