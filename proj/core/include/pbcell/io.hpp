#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pbcell/lattice.hpp"

namespace pbcell::io {

/// {"dim": n, "columns": [[...], ...]} or {"cell": [a, b, c, alpha, beta, gamma]}
/// ({"cell": [a, b, gamma]} for 2D). Angles in degrees.
Basis parse_lattice_json(std::string_view text);

/// Inline form: "identity2", "identity3", "hex", or 4 / 9 whitespace-separated
/// numbers listing the basis vectors one after another.
Basis parse_inline_basis(std::string_view text);

/// "a b c alpha beta gamma" (3D) or "a b gamma" (2D).
Basis parse_cell_params(std::string_view text);

/// {"frac": [[...], ...]} or plain text with one fractional point per line.
/// Blank lines and lines starting with '#' are skipped.
std::vector<FracPoint> parse_points(std::string_view text);

FracPoint parse_inline_point(std::string_view text);

std::vector<double> parse_numbers(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace pbcell::io
