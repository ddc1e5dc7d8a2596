#include "pbcell/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pbcell::io {
namespace {

Error parse_error(const std::string& msg) { return Error(ErrorCode::kParse, msg); }

Basis from_flat(const std::vector<double>& v) {
  int n = 0;
  if (v.size() == 4) n = 2;
  else if (v.size() == 9) n = 3;
  else throw parse_error("expected 4 or 9 basis entries, got " + std::to_string(v.size()));
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = v[static_cast<std::size_t>(j * n + i)];
  }
  return validate_basis(m);
}

Basis from_params(const std::vector<double>& p) {
  if (p.size() == 6) return cell_params_to_basis(CellParams{p[0], p[1], p[2], p[3], p[4], p[5]});
  if (p.size() == 3) return cell_params_to_basis_2d(p[0], p[1], p[2]);
  throw parse_error("cell parameters need 6 values (3D) or 3 values (2D)");
}

}  // namespace

std::vector<double> parse_numbers(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw parse_error("not a number: '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(x)) throw parse_error("not a number: '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

Basis parse_lattice_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("lattice JSON: ") + e.what());
  }
  try {
    if (j.contains("cell")) return from_params(j.at("cell").get<std::vector<double>>());
    const auto cols = j.at("columns").get<std::vector<std::vector<double>>>();
    const auto n = cols.size();
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != n) {
      throw parse_error("\"dim\" does not match the number of columns");
    }
    if (n != 2 && n != 3) {
      throw Error(ErrorCode::kUnsupportedDimension, "dimension " + std::to_string(n));
    }
    Mat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t c = 0; c < n; ++c) {
      if (cols[c].size() != n) throw parse_error("every column needs " + std::to_string(n) + " entries");
      for (std::size_t r = 0; r < n; ++r) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cols[c][r];
      }
    }
    return validate_basis(m);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("lattice JSON: ") + e.what());
  }
}

Basis parse_inline_basis(std::string_view text) {
  const std::string s(text);
  if (s == "identity2") return identity_basis(2);
  if (s == "identity3") return identity_basis(3);
  if (s == "hex") return cell_params_to_basis_2d(1.0, 1.0, 120.0);
  return from_flat(parse_numbers(text));
}

Basis parse_cell_params(std::string_view text) { return from_params(parse_numbers(text)); }

std::vector<FracPoint> parse_points(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::vector<FracPoint> out;
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      for (const auto& row : j.at("frac").get<std::vector<std::vector<double>>>()) {
        out.push_back(FracPoint{Eigen::Map<const Eigen::VectorXd>(row.data(), static_cast<Eigen::Index>(row.size()))});
      }
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(std::string("points JSON: ") + e.what());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out.push_back(parse_inline_point(line));
    }
  }
  for (const auto& p : out) {
    if (p.coords.size() != 2 && p.coords.size() != 3) {
      throw parse_error("points must have 2 or 3 coordinates");
    }
    if (p.coords.size() != out.front().coords.size()) throw parse_error("mixed point dimensions");
  }
  return out;
}

FracPoint parse_inline_point(std::string_view text) {
  const auto v = parse_numbers(text);
  if (v.size() != 2 && v.size() != 3) throw parse_error("a point needs 2 or 3 coordinates");
  return FracPoint{Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pbcell::io
