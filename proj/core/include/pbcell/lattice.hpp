#pragma once

#include <array>

#include "pbcell/error.hpp"
#include "pbcell/types.hpp"

namespace pbcell {

class GramMatrix;

/// n linearly independent column vectors (n = 2 or 3) spanning the cell P and
/// generating the lattice B Z^n. Immutable once built; the only way in is
/// validate_basis(), so every Basis satisfies the independence invariant.
class Basis {
 public:
  int dim() const { return static_cast<int>(m_.cols()); }
  const Mat& matrix() const { return m_; }
  const Mat& inverse() const { return inv_; }
  Vec column(int i) const { return m_.col(i); }
  double det() const { return det_; }

  /// Columns B * u for an integer change of basis u. Throws SingularBasis if
  /// u is not invertible.
  Basis transformed(const IMat& u) const;
  Basis scaled(double s) const;

  GramMatrix gram() const;

  /// Half of the longest cell diagonal; used as a length scale.
  double scale() const;

 private:
  friend Basis validate_basis(const Mat& columns, const Tolerances& tol);
  Basis(Mat m, Mat inv, double det) : m_(std::move(m)), inv_(std::move(inv)), det_(det) {}

  Mat m_;
  Mat inv_;
  double det_;
};

/// g_ij = v_i . v_j
class GramMatrix {
 public:
  explicit GramMatrix(Mat entries) : g_(std::move(entries)) {}

  const Mat& entries() const { return g_; }
  bool is_symmetric(double tol = 1e-12) const;
  bool is_positive_definite() const;

 private:
  Mat g_;
};

Basis validate_basis(const Mat& columns, const Tolerances& tol = {});
Basis identity_basis(int n);

/// Crystallographic cell parameters: edge lengths and the angles alpha =
/// angle(b, c), beta = angle(a, c), gamma = angle(a, b), in degrees.
struct CellParams {
  double a = 1, b = 1, c = 1;
  double alpha = 90, beta = 90, gamma = 90;
};

/// Standard setting: v1 along x, v2 in the xy-plane, v3 with positive z.
Basis cell_params_to_basis(const CellParams& p);
/// Inverse of the above up to rotation (3D only).
CellParams basis_to_cell_params(const Basis& b);
/// 2D analogue: v1 = (a, 0), v2 at angle gamma.
Basis cell_params_to_basis_2d(double a, double b, double gamma_deg);

CartPoint frac_to_cart(const Basis& b, const FracPoint& p);
FracPoint cart_to_frac(const Basis& b, const CartPoint& p);

/// Reduces every coordinate into [0, 1).
FracPoint wrap(FracPoint p);

/// Integer matrix C with cell = lattice * C, or nullopt-like failure via
/// NotAPrimitiveCell when C is not integral or not unimodular.
IMat primitive_cell_coeffs(const Basis& cell, const Basis& lattice,
                           const Tolerances& tol = {});

}  // namespace pbcell
