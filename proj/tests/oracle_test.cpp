#include <gtest/gtest.h>

#include <set>

#include "pbcell/copy_counts.hpp"
#include "pbcell/oracle.hpp"
#include "pbcell/reduction.hpp"
#include "support.hpp"

using namespace pbcell;

namespace {

std::set<std::vector<std::int64_t>> coeff_set(const RelevantVectorSet& s) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& v : s.vectors) out.insert({v.coeffs.data(), v.coeffs.data() + v.coeffs.size()});
  return out;
}

}  // namespace

TEST(BruteDistance, Wraparound) {
  const DistanceResult r = oracle::brute_distance(identity_basis(2), {(Vec(2) << 0.1, 0.1).finished()},
                                                  {(Vec(2) << 0.9, 0.1).finished()}, 1);
  EXPECT_NEAR(r.distance, 0.2, 1e-15);
}

TEST(BruteRelevant, Examples) {
  EXPECT_EQ(oracle::brute_relevant(identity_basis(2), 2).vector_count(), 4u);
  EXPECT_EQ(oracle::brute_relevant(pbtest::hexagonal(), 2).vector_count(), 6u);
  EXPECT_EQ(oracle::brute_relevant(pbtest::fcc(), 3).vector_count(), 12u);
}

TEST(BruteRelevant, StableInBoxSize) {
  pbtest::Random rng(107);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 2;
    // The box lives in the input frame, so probe on reduced frames.
    const Basis b = reduce(rng.gaussian(n)).basis;
    EXPECT_EQ(coeff_set(oracle::brute_relevant(b, 3)), coeff_set(oracle::brute_relevant(b, 4))) << k;
  }
}

TEST(Witness, OrthogonalWithoutCopies) {
  const Basis b = identity_basis(2);
  for (int axis = 0; axis < 2; ++axis) EXPECT_TRUE(oracle::minimality_witness(b, b, {1, 1}, axis).has_value());
}

TEST(Witness, SkewedSquareCellTwoLayers) {
  const Basis cell = pbtest::basis2(1, 0, -5, 1);
  const auto w = oracle::minimality_witness(cell, identity_basis(2), {3, 1}, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_GT(w->gap, 1e-9);
  EXPECT_NEAR(w->gap, w->block_distance - w->true_distance, 1e-15);
}

TEST(Witness, HexagonalNoCopies) {
  const Basis hex = pbtest::hexagonal();
  EXPECT_TRUE(oracle::minimality_witness(hex, hex, {1, 1}, 0).has_value());
}

TEST(Witness, NoneWhenCountsSuffice) {
  // Dropping to the computed counts plus one on the axis means the probed
  // block is the computed one, which is always sufficient.
  const Basis cell = pbtest::basis2(1, 0, -5, 1);
  EXPECT_FALSE(oracle::minimality_witness(cell, identity_basis(2), {4, 1}, 0).has_value());
}
