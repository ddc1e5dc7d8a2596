#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pbcell/cell_enumeration.hpp"
#include "pbcell/copy_counts.hpp"
#include "pbcell/io.hpp"
#include "pbcell/periodic_distance.hpp"
#include "pbcell/reduction.hpp"
#include "pbcell/voronoi.hpp"
#include "verify.hpp"

namespace pbcell::cli {

using nlohmann::json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

struct RunConfig {
  std::string lattice, lattice_file, cell_params;
  std::string cell, cell_file;
  std::string p1, p2, points_file, out_path;
  std::string format = "json";
  double cutoff = 0;
  bool verify = false;
  Tolerances tol;
};

json num(double x) { return round12(x); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(num(v[i]));
  return a;
}

json ivec_json(const IVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json columns_json(const Mat& m) {
  json a = json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) a.push_back(vec_json(m.col(j)));
  return a;
}

json icolumns_json(const IMat& m) {
  json a = json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) a.push_back(ivec_json(m.col(j)));
  return a;
}

json ints_json(const std::vector<int>& v) { return json(v); }

Basis load_lattice(const RunConfig& c) {
  if (!c.lattice_file.empty()) return io::parse_lattice_json(io::read_file(c.lattice_file));
  if (!c.lattice.empty()) return io::parse_inline_basis(c.lattice);
  if (!c.cell_params.empty()) return io::parse_cell_params(c.cell_params);
  throw Error(ErrorCode::kParse, "no lattice given (use --lattice, --lattice-file or --cell-params)");
}

std::optional<Basis> load_cell(const RunConfig& c) {
  if (!c.cell_file.empty()) return io::parse_lattice_json(io::read_file(c.cell_file));
  if (!c.cell.empty()) return io::parse_inline_basis(c.cell);
  return std::nullopt;
}

std::string fmt_csv(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

PeriodicPointSet load_points(const RunConfig& c, const Basis& b) {
  if (c.points_file.empty()) throw Error(ErrorCode::kParse, "--points is required");
  return PeriodicPointSet::make(b, io::parse_points(io::read_file(c.points_file)));
}

void add_lattice_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--lattice", c.lattice,
                  "Lattice basis inline: identity2, identity3, hex, or 4/9 numbers listing the "
                  "basis vectors one after another");
  sub->add_option("--lattice-file", c.lattice_file, "Lattice JSON file (overrides inline forms)");
  sub->add_option("--cell-params", c.cell_params, "\"a b c alpha beta gamma\" or \"a b gamma\"");
}

void add_cell_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--cell", c.cell, "Cell basis inline (same syntax as --lattice)");
  sub->add_option("--cell-file", c.cell_file, "Cell JSON file");
}

// Executes the selected subcommand; returns "" or a --verify disagreement.
std::string dispatch(const std::string& name, const RunConfig& c, std::ostream& out) {
  const Basis lattice = load_lattice(c);
  const Tolerances& tol = c.tol;
  json result;
  std::string mismatch;
  std::string csv;

  if (name == "reduce") {
    const ReducedBasis r = reduce(lattice, tol);
    json norms = json::array();
    for (int i = 0; i < r.basis.dim(); ++i) norms.push_back(num(r.basis.column(i).norm()));
    result = {{"basis", columns_json(r.basis.matrix())},
              {"transform", icolumns_json(r.transform)},
              {"norms", norms},
              {"obtuse", r.obtuse}};
    if (c.verify) mismatch = verify::reduction(lattice, r);
  } else if (name == "relevant") {
    const RelevantVectorSet rel = relevant_vectors(lattice, tol);
    json coeffs = json::array(), cart = json::array();
    for (std::size_t i = 0; i < rel.vectors.size(); ++i) {
      coeffs.push_back(ivec_json(rel.vectors[i].coeffs));
      cart.push_back(vec_json(rel.cartesians[i]));
    }
    result = {{"count", rel.vector_count()}, {"relevant", coeffs}, {"cartesian", cart}};
    if (c.verify) mismatch = verify::relevant(lattice, rel);
  } else if (name == "voronoi") {
    const VoronoiCell v = voronoi_cell(lattice, tol);
    json verts = json::array();
    for (const auto& x : v.vertices) verts.push_back(vec_json(x));
    result = {{"facets", v.halfspaces.size()}, {"vertices", verts}, {"volume", num(v.volume)}};
    if (c.verify) mismatch = verify::voronoi(lattice, v);
  } else if (name == "copies" || name == "check-cell") {
    const Basis cell = load_cell(c).value_or(lattice);
    if (name == "copies") {
      const CopyCounts cc = copy_counts(cell, lattice, tol);
      result = {{"h", vec_json(cc.h)},
                {"layers", ints_json(cc.layers)},
                {"per_axis", ints_json(cc.per_axis)},
                {"total", cc.total}};
      if (c.verify) mismatch = verify::copies(cell, lattice, cc);
    } else {
      const CellReport rep = check_cell(cell, lattice, tol);
      result = {{"coeffs", icolumns_json(rep.coeffs)},
                {"h", vec_json(rep.counts.h)},
                {"layers", ints_json(rep.counts.layers)},
                {"per_axis", ints_json(rep.counts.per_axis)},
                {"total", rep.counts.total},
                {"sufficient", rep.sufficient},
                {"ps_member", rep.ps_member},
                {"reduced", rep.reduced}};
      if (c.verify) mismatch = verify::copies(cell, lattice, rep.counts);
    }
  } else if (name == "cells") {
    const CellEnumeration en = enumerate_ps(lattice, tol);
    result = json::array();
    for (const auto& cand : en.cells) result.push_back(icolumns_json(cand.coeffs));
    if (c.verify) mismatch = verify::cells(lattice, en);
  } else if (name == "dist") {
    if (c.p1.empty() || c.p2.empty()) throw Error(ErrorCode::kParse, "--p1 and --p2 are required");
    const FracPoint p1 = io::parse_inline_point(c.p1), p2 = io::parse_inline_point(c.p2);
    if (p1.coords.size() != lattice.dim() || p2.coords.size() != lattice.dim()) {
      throw Error(ErrorCode::kParse, "point dimension does not match the lattice");
    }
    const DistanceResult d = min_image_distance(lattice, p1, p2, tol);
    result = {{"distance", num(d.distance)}, {"image", ivec_json(d.image.coeffs)}};
    if (c.verify) mismatch = verify::distance(lattice, p1, p2, d);
  } else if (name == "matrix") {
    const PeriodicPointSet ps = load_points(c, lattice);
    const Eigen::MatrixXd m = pairwise_distances(ps, tol);
    if (c.format == "csv") {
      std::ostringstream s;
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) s << (j ? "," : "") << fmt_csv(m(i, j));
        s << "\n";
      }
      csv = s.str();
    } else {
      json rows = json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i).transpose()));
      result = {{"distances", rows}};
    }
    if (c.verify) mismatch = verify::matrix(ps, m);
  } else if (name == "neighbors") {
    const PeriodicPointSet ps = load_points(c, lattice);
    const auto nbrs = neighbors_within(ps, c.cutoff, tol);
    if (c.format == "csv") {
      std::ostringstream s;
      s << "i,j";
      for (int k = 0; k < lattice.dim(); ++k) s << ",t" << k + 1;
      s << ",distance\n";
      for (const auto& nb : nbrs) {
        s << nb.i << "," << nb.j;
        for (Eigen::Index k = 0; k < nb.image.coeffs.size(); ++k) s << "," << nb.image.coeffs[k];
        s << "," << fmt_csv(nb.distance) << "\n";
      }
      csv = s.str();
    } else {
      json is = json::array(), js = json::array(), images = json::array(), ds = json::array();
      for (const auto& nb : nbrs) {
        is.push_back(nb.i);
        js.push_back(nb.j);
        images.push_back(ivec_json(nb.image.coeffs));
        ds.push_back(num(nb.distance));
      }
      result = {{"i", is}, {"j", js}, {"image", images}, {"distance", ds}};
    }
    if (c.verify) mismatch = verify::neighbors(ps, c.cutoff, nbrs);
  } else if (name == "render") {
    if (c.out_path.empty()) throw Error(ErrorCode::kParse, "--out is required");
    const Basis cell = load_cell(c).value_or(lattice);
    render_2d(lattice, cell, c.out_path);
    const CopyCounts cc = copy_counts(cell, lattice, tol);
    result = {{"svg", c.out_path}, {"total", cc.total}};
  }

  if (!csv.empty() || (c.format == "csv" && (name == "matrix" || name == "neighbors"))) {
    out << csv;
  } else {
    out << result.dump() << "\n";
  }
  return mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic distances and minimal cell-copy blocks for skewed lattices", "pbcell"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--format", c.format, "Output format for matrix/neighbors")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--verify", c.verify, "Cross-check against brute-force oracles");
  app.add_option("--tol-tie", c.tol.tie, "Relative tolerance for equal-length vectors");
  app.add_option("--tol-snap", c.tol.snap, "Snapping tolerance for half-extents");
  app.add_option("--tol-geom", c.tol.geom, "Geometric tolerance relative to the cell size");
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"reduce", "Shortest basis with pairwise angles >= 90 degrees"},
      {"relevant", "Voronoi-relevant vectors"},
      {"voronoi", "Voronoi cell vertices and volume"},
      {"copies", "Copy counts for a cell of a lattice"},
      {"cells", "Enumerate cells for which 3^n copies suffice"},
      {"check-cell", "Report on a single cell"},
      {"dist", "Minimum-image distance between two points"},
      {"matrix", "Pairwise distance matrix of a point file"},
      {"neighbors", "Neighbor list within a cutoff"},
      {"render", "Write a 2D SVG diagram"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_lattice_options(sub, c);
    if (name == "copies" || name == "check-cell" || name == "render") add_cell_options(sub, c);
    if (name == "dist") {
      sub->add_option("--p1", c.p1, "First point, fractional coordinates");
      sub->add_option("--p2", c.p2, "Second point, fractional coordinates");
    }
    if (name == "matrix" || name == "neighbors") {
      sub->add_option("--points", c.points_file, "Point file (JSON or text)");
    }
    if (name == "neighbors") sub->add_option("--cutoff", c.cutoff, "Cutoff distance")->required();
    if (name == "render") sub->add_option("--out", c.out_path, "Output SVG path");
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string name;
  for (auto* sub : subs) {
    if (sub->parsed()) name = sub->get_name();
  }

  try {
    const std::string mismatch = dispatch(name, c, out);
    if (c.verify) {
      if (!mismatch.empty()) {
        err << "verify: MISMATCH: " << mismatch << "\n";
        return 1;
      }
      err << "verify: ok\n";
    }
  } catch (const Error& e) {
    err << "pbcell: " << e.what() << "\n";
    return e.code() == ErrorCode::kParse ? 2 : 1;
  }
  return 0;
}

}  // namespace pbcell::cli
