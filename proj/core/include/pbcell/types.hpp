#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace pbcell {

// Everything here lives in two or three dimensions; the max-size template
// arguments keep these on the stack.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 3, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;
using IVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1, 0, 3, 1>;
using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

/// Lattice coordinates (dimensionless). Reduced mod 1 it names a point of the
/// torus R^n / L.
struct FracPoint {
  Vec coords;
};

/// Ambient coordinates (length units).
struct CartPoint {
  Vec coords;
};

/// An element of the lattice, stored by its integer coefficients with respect
/// to whichever basis the producing operation documents.
struct LatticeVector {
  IVec coeffs;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coeffs.size() == b.coeffs.size() && a.coeffs == b.coeffs;
  }
};

/// Numerical tolerances. Relative unless noted; the defaults are the ones the
/// test-suite is calibrated against.
struct Tolerances {
  double singular = 1e-10;  // |det| vs product of column norms
  double num = 1e-9;        // coordinate round-trips, integrality checks
  double tie = 1e-9;        // equal-length lattice vectors
  double snap = 1e-9;       // integer snapping of half-extents
  double geom = 1e-8;       // feasibility / dedup, times the cell scale
  double angle = 1e-9;      // |cos| below this counts as a right angle
};

inline bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

/// Flips v so that its first nonzero entry is positive.
inline IVec canonical_sign(IVec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return v;
}

std::int64_t determinant(const IMat& m);

}  // namespace pbcell
