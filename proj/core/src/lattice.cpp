#include "pbcell/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

namespace pbcell {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularBasis: return "SingularBasis";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kInvalidCellParameters: return "InvalidCellParameters";
    case ErrorCode::kReductionNonConvergence: return "ReductionNonConvergence";
    case ErrorCode::kDegenerateCell: return "DegenerateCell";
    case ErrorCode::kNotAPrimitiveCell: return "NotAPrimitiveCell";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

std::int64_t determinant(const IMat& m) {
  if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (m.rows() == 3) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  if (m.rows() == 1) return m(0, 0);
  return 0;
}

Basis validate_basis(const Mat& columns, const Tolerances& tol) {
  const auto n = columns.cols();
  if (n != 2 && n != 3) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "dimension " + std::to_string(n) + " (only 2 and 3 supported)");
  }
  if (columns.rows() != n) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "basis must be square: " + std::to_string(columns.rows()) + "x" +
                    std::to_string(n));
  }
  if (!columns.allFinite()) {
    throw Error(ErrorCode::kSingularBasis, "non-finite basis entry");
  }
  const double det = columns.determinant();
  double norms = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) norms *= columns.col(i).norm();
  if (!(std::abs(det) > tol.singular * norms)) {
    throw Error(ErrorCode::kSingularBasis, "columns are linearly dependent");
  }
  Mat inv = columns.inverse();
  return Basis(columns, std::move(inv), det);
}

Basis identity_basis(int n) { return validate_basis(Mat::Identity(n, n)); }

Basis Basis::transformed(const IMat& u) const {
  // Long double accumulation: skewed transforms cancel heavily.
  using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;
  const LMat prod = m_.cast<long double>() * u.cast<long double>();
  return validate_basis(prod.cast<double>());
}

Basis Basis::scaled(double s) const { return validate_basis(m_ * s); }

GramMatrix Basis::gram() const { return GramMatrix(m_.transpose() * m_); }

double Basis::scale() const {
  double best = 0;
  const int n = dim();
  // Longest of the 2^(n-1) cell diagonals.
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    Vec d = m_.col(n - 1);
    for (int i = 0; i < n - 1; ++i) d += ((mask >> i) & 1 ? -1.0 : 1.0) * m_.col(i);
    best = std::max(best, d.norm());
  }
  return 0.5 * best;
}

bool GramMatrix::is_symmetric(double tol) const {
  const double s = g_.cwiseAbs().maxCoeff();
  return (g_ - g_.transpose()).cwiseAbs().maxCoeff() <= tol * s;
}

bool GramMatrix::is_positive_definite() const {
  for (Eigen::Index k = 1; k <= g_.rows(); ++k) {
    if (!(g_.topLeftCorner(k, k).determinant() > 0)) return false;
  }
  return true;
}

namespace {

double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }

// Exact at right angles so orthogonal cells come out exactly orthogonal.
double cos_deg(double d) { return d == 90.0 ? 0.0 : std::cos(deg_to_rad(d)); }
double sin_deg(double d) { return d == 90.0 ? 1.0 : std::sin(deg_to_rad(d)); }

}  // namespace

Basis cell_params_to_basis(const CellParams& p) {
  const auto bad = [](const std::string& msg) {
    return Error(ErrorCode::kInvalidCellParameters, msg);
  };
  if (!(p.a > 0 && p.b > 0 && p.c > 0)) throw bad("edge lengths must be positive");
  for (double ang : {p.alpha, p.beta, p.gamma}) {
    if (!(ang > 0 && ang < 180)) throw bad("angles must lie in (0, 180) degrees");
  }
  const double ca = cos_deg(p.alpha), cb = cos_deg(p.beta), cg = cos_deg(p.gamma);
  const double sg = sin_deg(p.gamma);
  const double vol2 = 1.0 - ca * ca - cb * cb - cg * cg + 2.0 * ca * cb * cg;
  if (!(vol2 > 0)) throw bad("angles do not define a positive cell volume");

  Mat m = Mat::Zero(3, 3);
  m(0, 0) = p.a;
  m(0, 1) = p.b * cg;
  m(1, 1) = p.b * sg;
  m(0, 2) = p.c * cb;
  m(1, 2) = p.c * (ca - cb * cg) / sg;
  m(2, 2) = p.c * std::sqrt(vol2) / sg;
  return validate_basis(m);
}

CellParams basis_to_cell_params(const Basis& b) {
  if (b.dim() != 3) {
    throw Error(ErrorCode::kUnsupportedDimension, "cell parameters need a 3D basis");
  }
  const Mat g = b.gram().entries();
  const auto angle = [&](int i, int j) {
    const double c = std::clamp(g(i, j) / std::sqrt(g(i, i) * g(j, j)), -1.0, 1.0);
    return std::acos(c) * 180.0 / std::numbers::pi;
  };
  return CellParams{std::sqrt(g(0, 0)), std::sqrt(g(1, 1)), std::sqrt(g(2, 2)),
                    angle(1, 2),        angle(0, 2),        angle(0, 1)};
}

Basis cell_params_to_basis_2d(double a, double b, double gamma_deg) {
  if (!(a > 0 && b > 0) || !(gamma_deg > 0 && gamma_deg < 180)) {
    throw Error(ErrorCode::kInvalidCellParameters, "invalid 2D cell parameters");
  }
  Mat m(2, 2);
  m << a, b * cos_deg(gamma_deg), 0.0, b * sin_deg(gamma_deg);
  return validate_basis(m);
}

CartPoint frac_to_cart(const Basis& b, const FracPoint& p) {
  return CartPoint{b.matrix() * p.coords};
}

FracPoint cart_to_frac(const Basis& b, const CartPoint& p) {
  return FracPoint{b.inverse() * p.coords};
}

FracPoint wrap(FracPoint p) {
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
    double x = p.coords[i] - std::floor(p.coords[i]);
    if (x >= 1.0) x = 0.0;  // -1e-17 - floor(-1e-17) rounds to 1.0
    p.coords[i] = x;
  }
  return p;
}

IMat primitive_cell_coeffs(const Basis& cell, const Basis& lattice, const Tolerances& tol) {
  if (cell.dim() != lattice.dim()) {
    throw Error(ErrorCode::kNotAPrimitiveCell, "cell and lattice dimensions differ");
  }
  const Mat c = lattice.inverse() * cell.matrix();
  IMat out(c.rows(), c.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      const double r = std::round(c(i, j));
      if (std::abs(c(i, j) - r) > tol.num * (1.0 + std::abs(r)) * 10.0) {
        throw Error(ErrorCode::kNotAPrimitiveCell,
                    "cell vectors are not integer combinations of the lattice basis");
      }
      out(i, j) = static_cast<std::int64_t>(r);
    }
  }
  const auto d = determinant(out);
  if (d != 1 && d != -1) {
    throw Error(ErrorCode::kNotAPrimitiveCell,
                "cell spans a sublattice of index " + std::to_string(std::abs(d)));
  }
  return out;
}

}  // namespace pbcell
