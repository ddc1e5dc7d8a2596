#include <gtest/gtest.h>

#include <cmath>

#include "pbcell/copy_counts.hpp"
#include "pbcell/error.hpp"
#include "pbcell/oracle.hpp"
#include "pbcell/reduction.hpp"
#include "support.hpp"

using namespace pbcell;
using pbtest::basis2;

TEST(DomainExtents, Square) {
  const Vec h = domain_extents(identity_basis(2), identity_basis(2));
  EXPECT_NEAR(h[0], 0.5, 1e-12);
  EXPECT_NEAR(h[1], 0.5, 1e-12);
}

TEST(DomainExtents, Hexagonal) {
  const Vec h = domain_extents(pbtest::hexagonal(), pbtest::hexagonal());
  EXPECT_NEAR(h[0], 2.0 / 3, 1e-12);
  // Vertex (0, 1/sqrt(3)) sits at fractional (1/3, 2/3), so both extents
  // are 2/3, as the symmetry swapping v1 and v2 requires.
  EXPECT_NEAR(h[1], 2.0 / 3, 1e-12);
}

TEST(DomainExtents, SkewedSquareCell) {
  const Vec h = domain_extents(basis2(1, 0, -5, 1), identity_basis(2));
  EXPECT_NEAR(h[0], 3, 1e-12);
  EXPECT_NEAR(h[1], 0.5, 1e-12);
}

TEST(DomainExtents, RejectsNonPrimitiveCells) {
  EXPECT_THROW(domain_extents(basis2(2, 0, 0, 1), identity_basis(2)), Error);
  EXPECT_THROW(domain_extents(basis2(1, 0, 0.5, 1), identity_basis(2)), Error);
}

TEST(CopyCounts, Orthogonal) {
  pbtest::Random rng(41);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 2;
    const Basis b = pbtest::rectangular(rng, n);
    const CopyCounts c = copy_counts(b, b);
    EXPECT_EQ(c.total, n == 2 ? 9 : 27);
    for (int p : c.per_axis) EXPECT_EQ(p, 3);
  }
}

TEST(CopyCounts, Hexagonal) {
  const CopyCounts c = copy_counts(pbtest::hexagonal(), pbtest::hexagonal());
  EXPECT_EQ(c.layers, (std::vector<int>{1, 1}));
  EXPECT_EQ(c.total, 9);
}

TEST(CopyCounts, SkewedSquareCell) {
  const CopyCounts c = copy_counts(basis2(1, 0, -5, 1), identity_basis(2));
  EXPECT_EQ(c.layers, (std::vector<int>{3, 1}));
  EXPECT_EQ(c.per_axis, (std::vector<int>{7, 3}));
  EXPECT_EQ(c.total, 21);
}

TEST(CopyCounts, SnapsNearIntegers) {
  Vec h(2);
  h << 1 + 1e-12, 2 - 1e-12;
  const CopyCounts c = copy_counts_from_extents(h);
  EXPECT_EQ(c.layers, (std::vector<int>{1, 2}));
  h << 1 + 1e-6, 0.1;
  EXPECT_EQ(copy_counts_from_extents(h).layers, (std::vector<int>{2, 1}));
}

TEST(CopyCounts, ScaleInvariant) {
  pbtest::Random rng(43);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 2;
    const Basis lattice = rng.gaussian(n);
    const Basis cell = lattice.transformed(rng.shear(n));
    const double s = std::exp(rng.uniform(-5, 5));
    const CopyCounts a = copy_counts(cell, lattice);
    const CopyCounts b = copy_counts(cell.scaled(s), lattice.scaled(s));
    EXPECT_EQ(a.layers, b.layers);
    EXPECT_LT((a.h - b.h).norm(), 1e-9 * (1 + a.h.norm()));
  }
}

TEST(Sufficiency, Examples) {
  EXPECT_FALSE(is_3n_sufficient(basis2(1, 0, -5, 1), identity_basis(2)));
  EXPECT_TRUE(is_3n_sufficient(basis2(1, 0, -1, 1), identity_basis(2)));
  EXPECT_TRUE(is_3n_sufficient(pbtest::hexagonal(), pbtest::hexagonal()));
}

TEST(Sufficiency, ReducedCellsMostly) {
  pbtest::Random rng(47);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 2;
    const Basis b = rng.gaussian(n);
    const Basis r = reduce(b).basis;
    EXPECT_TRUE(is_3n_sufficient(r, b)) << "case " << k;
    EXPECT_EQ(copy_counts(r, b).total, n == 2 ? 9 : 27);
  }
}

// A lattice found by random search whose shortest basis (obtuse, unique up to
// signs) needs a fourth layer along its first axis: h_1 ~ 1.031.
TEST(Sufficiency, ShortestBasisCanNeedMoreThanThreeToTheN) {
  Mat g(3, 3);
  g << 0.1479, -0.0738, -0.0691,
       -0.0738, 0.5848, -0.2119,
       -0.0691, -0.2119, 1.0165;
  const Basis b = validate_basis(Eigen::LLT<Mat>(g).matrixU().toDenseMatrix());
  const ReducedBasis r = reduce(b);
  ASSERT_TRUE(r.obtuse);
  const CopyCounts c = copy_counts(r.basis, b);
  EXPECT_GT(c.h.maxCoeff(), 1.0);
  EXPECT_EQ(c.total, 45);
}

TEST(Sufficiency, BlockMatchesLargerBlock) {
  pbtest::Random rng(53);
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + k % 2;
    const Basis lattice = rng.gaussian(n);
    const Basis cell = lattice.transformed(rng.shear(n));
    const CopyCounts c = copy_counts(cell, lattice);
    const int big = *std::max_element(c.layers.begin(), c.layers.end()) + 3;
    for (int t = 0; t < 10; ++t) {
      Vec a(n), b(n);
      for (int i = 0; i < n; ++i) {
        a[i] = rng.uniform(0, 1);
        b[i] = rng.uniform(0, 1);
      }
      // Minimum over the CopyCounts block (anisotropic) by hand.
      double best = 1e300;
      IVec z = IVec::Zero(n);
      for (int i = 0; i < n; ++i) z[i] = -c.layers[i];
      for (;;) {
        best = std::min(best, (cell.matrix() * (b + z.cast<double>() - a)).norm());
        int i = 0;
        while (i < n && z[i] == c.layers[i]) {
          z[i] = -c.layers[i];
          ++i;
        }
        if (i == n) break;
        ++z[i];
      }
      const double truth = oracle::brute_distance(cell, {a}, {b}, big).distance;
      EXPECT_NEAR(best, truth, 1e-12 * (1 + truth));
    }
  }
}

TEST(Minimality, SkewedSquareCellEveryAxis) {
  const Basis cell = basis2(1, 0, -5, 1);
  const CopyCounts c = copy_counts(cell, identity_basis(2));
  for (int axis = 0; axis < 2; ++axis) {
    const auto w = oracle::minimality_witness(cell, identity_basis(2), c.layers, axis);
    ASSERT_TRUE(w.has_value()) << "axis " << axis;
    EXPECT_GT(w->gap, 1e-9);
  }
}
