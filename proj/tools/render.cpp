#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pbcell/copy_counts.hpp"
#include "pbcell/voronoi.hpp"

namespace pbcell::cli {
namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;

struct P2 {
  double x, y;
};

double cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain, counter-clockwise.
std::vector<P2> convex_hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

class Canvas {
 public:
  Canvas(double xmin, double xmax, double ymin, double ymax) : xmin_(xmin), ymax_(ymax) {
    scale_ = (kCanvas - 2 * kMargin) / std::max(xmax - xmin, ymax - ymin);
    dx_ = kMargin + 0.5 * (kCanvas - 2 * kMargin - (xmax - xmin) * scale_);
    dy_ = kMargin + 0.5 * (kCanvas - 2 * kMargin - (ymax - ymin) * scale_);
  }

  std::string pt(const P2& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", dx_ + (p.x - xmin_) * scale_,
                  dy_ + (ymax_ - p.y) * scale_);
    return buf;
  }

  std::string polygon(const std::vector<P2>& pts, const std::string& style) const {
    std::string s = "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + pt(pts[i]);
    return s + "\" " + style + "/>\n";
  }

  std::string circle(const P2& c, double r, const std::string& style) const {
    const std::string p = pt(c);
    const auto comma = p.find(',');
    return "<circle cx=\"" + p.substr(0, comma) + "\" cy=\"" + p.substr(comma + 1) + "\" r=\"" +
           std::to_string(static_cast<int>(r)) + "\" " + style + "/>\n";
  }

 private:
  double xmin_, ymax_, scale_, dx_ = 0, dy_ = 0;
};

P2 at(const Basis& b, double s, double t) {
  const Vec v = b.matrix() * (Vec(2) << s, t).finished();
  return {v[0], v[1]};
}

std::vector<P2> parallelogram(const Basis& b, double s, double t) {
  return {at(b, s, t), at(b, s + 1, t), at(b, s + 1, t + 1), at(b, s, t + 1)};
}

}  // namespace

std::string render_2d_svg(const Basis& lattice, const Basis& cell) {
  if (lattice.dim() != 2 || cell.dim() != 2) {
    throw Error(ErrorCode::kUnsupportedDimension, "rendering is only available in 2D");
  }
  const VoronoiCell v = voronoi_cell(lattice);
  const RelevantVectorSet rel = relevant_vectors(lattice);
  const CopyCounts cc = copy_counts(cell, lattice);

  std::vector<P2> voronoi_pts;
  for (const auto& x : v.vertices) voronoi_pts.push_back({x[0], x[1]});
  voronoi_pts = convex_hull(voronoi_pts);

  std::vector<P2> sums;
  for (const auto& corner : parallelogram(cell, 0, 0)) {
    for (const auto& x : voronoi_pts) sums.push_back({corner.x + x.x, corner.y + x.y});
  }
  const std::vector<P2> domain = convex_hull(sums);

  // Extent: the copy block and D.
  std::vector<P2> extent = domain;
  const int m0 = cc.layers[0], m1 = cc.layers[1];
  for (const auto& p : {at(cell, -m0, -m1), at(cell, m0 + 1, -m1), at(cell, -m0, m1 + 1),
                        at(cell, m0 + 1, m1 + 1)}) {
    extent.push_back(p);
  }
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : extent) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const Canvas cv(xmin, xmax, ymin, ymax);

  std::string svg;
  char header[256];
  std::snprintf(header, sizeof header,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\">\n",
                static_cast<int>(kCanvas), static_cast<int>(kCanvas + 60),
                static_cast<int>(kCanvas), static_cast<int>(kCanvas + 60));
  svg += header;
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  svg += "<g id=\"block\">\n";
  for (int s = -m0; s <= m0; ++s) {
    for (int t = -m1; t <= m1; ++t) {
      svg += cv.polygon(parallelogram(cell, s, t),
                        "fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"");
    }
  }
  svg += "</g>\n<g id=\"domain\">\n";
  svg += cv.polygon(domain, "fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\"");
  svg += "</g>\n<g id=\"cell\">\n";
  svg += cv.polygon(parallelogram(cell, 0, 0),
                    "fill=\"#08519c\" fill-opacity=\"0.7\" stroke=\"#08306b\"");
  svg += "</g>\n<g id=\"voronoi\">\n";
  svg += cv.polygon(voronoi_pts, "fill=\"none\" stroke=\"red\" stroke-width=\"2\"");
  svg += "</g>\n<g id=\"lattice\">\n";

  // Lattice points inside the extent box.
  const Mat& inv = lattice.inverse();
  double cmin[2] = {1e300, 1e300}, cmax[2] = {-1e300, -1e300};
  for (const auto& corner : {P2{xmin, ymin}, P2{xmax, ymin}, P2{xmin, ymax}, P2{xmax, ymax}}) {
    const Vec f = inv * (Vec(2) << corner.x, corner.y).finished();
    for (int k = 0; k < 2; ++k) {
      cmin[k] = std::min(cmin[k], f[k]);
      cmax[k] = std::max(cmax[k], f[k]);
    }
  }
  const double slack = 1e-9 * (xmax - xmin);
  for (long i = static_cast<long>(std::floor(cmin[0])); i <= static_cast<long>(std::ceil(cmax[0])); ++i) {
    for (long j = static_cast<long>(std::floor(cmin[1])); j <= static_cast<long>(std::ceil(cmax[1])); ++j) {
      const P2 p = at(lattice, static_cast<double>(i), static_cast<double>(j));
      if (p.x < xmin - slack || p.x > xmax + slack || p.y < ymin - slack || p.y > ymax + slack) continue;
      svg += cv.circle(p, 3, "fill=\"#31a354\"");
    }
  }
  svg += "</g>\n<g id=\"relevant\">\n";
  for (const auto& x : rel.cartesians) {
    for (double sign : {1.0, -1.0}) {
      svg += cv.circle({sign * x[0], sign * x[1]}, 8, "fill=\"none\" stroke=\"red\" stroke-width=\"2\"");
    }
  }
  svg += "</g>\n<g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n";
  const struct {
    const char* colour;
    const char* label;
  } legend[] = {{"#31a354", "lattice"},
                {"#08519c", "cell P"},
                {"red", "Voronoi cell V, relevant points"},
                {"#9ecae1", "domain D = P + V"},
                {"#bbbbbb", "copy block"}};
  double x = 20;
  for (const auto& item : legend) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.0f\" y=\"%.0f\" width=\"12\" height=\"12\" fill=\"%s\"/>"
                  "<text x=\"%.0f\" y=\"%.0f\">%s</text>\n",
                  x, kCanvas + 20, item.colour, x + 16, kCanvas + 31, item.label);
    svg += buf;
    x += 40 + 7.5 * static_cast<double>(std::char_traits<char>::length(item.label));
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void render_2d(const Basis& lattice, const Basis& cell, const std::string& path) {
  const std::string svg = render_2d_svg(lattice, cell);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << svg;
}

}  // namespace pbcell::cli
