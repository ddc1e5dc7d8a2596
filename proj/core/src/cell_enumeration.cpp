#include "pbcell/cell_enumeration.hpp"

#include <algorithm>

#include "pbcell/voronoi.hpp"

namespace pbcell {

IMat canonical_key(const IMat& coeffs) {
  std::vector<IVec> cols;
  for (Eigen::Index j = 0; j < coeffs.cols(); ++j) cols.push_back(canonical_sign(coeffs.col(j)));
  std::sort(cols.begin(), cols.end(), lex_less);
  IMat out(coeffs.rows(), coeffs.cols());
  for (Eigen::Index j = 0; j < coeffs.cols(); ++j) out.col(j) = cols[static_cast<std::size_t>(j)];
  return out;
}

bool key_less(const IMat& a, const IMat& b) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (a.col(j) != b.col(j)) return lex_less(a.col(j), b.col(j));
  }
  return false;
}

CellEnumeration enumerate_ps(const Basis& lattice, const Tolerances& tol) {
  CellEnumeration out{reduce(lattice, tol), {}, 0, 0};
  const Basis& red = out.reduced.basis;
  const int n = red.dim();
  const RelevantVectorSet rel = relevant_vectors(red, tol);
  const VoronoiCell v = voronoi_cell(rel, n, tol);
  out.relevant_pairs = rel.pair_count();

  const int m = static_cast<int>(rel.vectors.size());
  std::vector<int> idx(n);
  std::vector<IMat> seen;
  const auto choose = [&](auto&& self, int depth, int start) -> void {
    if (depth == n) {
      IMat c(n, n);
      for (int i = 0; i < n; ++i) c.col(i) = rel.vectors[idx[i]].coeffs;
      const auto d = determinant(c);
      if (d != 1 && d != -1) return;
      ++out.unimodular_subsets;
      const IMat key = canonical_key(c);
      if (std::any_of(seen.begin(), seen.end(), [&](const IMat& k) { return k == key; })) return;
      const Basis cell = red.transformed(key);
      const Vec h = frac_extents(v, cell);
      if (!(h.array() <= 1.0 + tol.snap).all()) return;
      seen.push_back(key);
      out.cells.push_back(CellBasisCandidate{key, cell, h});
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  choose(choose, 0, 0);

  std::sort(out.cells.begin(), out.cells.end(),
            [](const CellBasisCandidate& a, const CellBasisCandidate& b) {
              return key_less(a.coeffs, b.coeffs);
            });
  return out;
}

CellReport check_cell(const Basis& cell, const Basis& lattice, const Tolerances& tol) {
  primitive_cell_coeffs(cell, lattice, tol);
  CellReport report;
  const CellEnumeration en = enumerate_ps(lattice, tol);
  report.coeffs = primitive_cell_coeffs(cell, en.reduced.basis, tol);
  report.counts = copy_counts(cell, lattice, tol);
  report.sufficient = (report.counts.h.array() <= 1.0 + tol.snap).all();
  const IMat key = canonical_key(report.coeffs);
  report.ps_member = std::any_of(en.cells.begin(), en.cells.end(),
                                 [&](const CellBasisCandidate& c) { return c.coeffs == key; });
  report.reduced = is_reduced(cell, tol);
  return report;
}

}  // namespace pbcell
