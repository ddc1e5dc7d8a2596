#include "pbcell/copy_counts.hpp"

#include <algorithm>
#include <cmath>

namespace pbcell {

Vec domain_extents(const Basis& cell, const Basis& lattice, const Tolerances& tol) {
  primitive_cell_coeffs(cell, lattice, tol);
  return frac_extents(voronoi_cell(lattice, tol), cell);
}

Vec domain_extents(const Basis& cell, const Basis& lattice, const VoronoiCell& v,
                   const Tolerances& tol) {
  primitive_cell_coeffs(cell, lattice, tol);
  return frac_extents(v, cell);
}

CopyCounts copy_counts_from_extents(const Vec& h, const Tolerances& tol) {
  CopyCounts cc;
  cc.h = h;
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    // D is closed: a copy touching its boundary still holds those points.
    const int m = std::max(1, static_cast<int>(std::ceil(h[i] - tol.snap)));
    cc.layers.push_back(m);
    cc.per_axis.push_back(2 * m + 1);
    cc.total *= 2 * m + 1;
  }
  return cc;
}

CopyCounts copy_counts(const Basis& cell, const Basis& lattice, const Tolerances& tol) {
  return copy_counts_from_extents(domain_extents(cell, lattice, tol), tol);
}

bool is_3n_sufficient(const Basis& cell, const Basis& lattice, const Tolerances& tol) {
  const Vec h = domain_extents(cell, lattice, tol);
  return (h.array() <= 1.0 + tol.snap).all();
}

}  // namespace pbcell
