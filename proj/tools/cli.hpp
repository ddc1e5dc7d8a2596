#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pbcell/lattice.hpp"

namespace pbcell::cli {

/// Runs one subcommand. Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 domain error or --verify disagreement, 2 usage or
/// parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// SVG of a 2D lattice: lattice points, the cell, the Voronoi cell with its
/// relevant points, the domain D = P + V and the block of copies covering it.
std::string render_2d_svg(const Basis& lattice, const Basis& cell);
void render_2d(const Basis& lattice, const Basis& cell, const std::string& path);

/// Rounds to 12 significant digits (and turns -0 into 0) so printed numbers
/// are stable across platforms.
double round12(double x);

}  // namespace pbcell::cli
