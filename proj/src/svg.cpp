#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "duniform/io.hpp"

namespace duniform {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

}  // namespace

std::string render_svg(const AugmentedDisk& aug, const PlaneLayout& layout, const ConformalStructure& cs,
                       const Label& f, const SvgOptions& opts) {
  if (layout.positions.empty()) throw Error(ErrorCode::EmptyLayout, "nothing to render");
  const std::size_t nv = layout.positions.size();

  // Extent covers every drawn circle, not only the centers.
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  std::vector<double> radius(nv, 0.0);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    if (cs.alpha[i] > 0.0) radius[v] = std::sqrt(cs.alpha[i]) * std::exp(f[i]);
    const Vec2& p = layout.positions[v];
    xmin = std::min(xmin, p.x() - radius[v]);
    xmax = std::max(xmax, p.x() + radius[v]);
    ymin = std::min(ymin, p.y() - radius[v]);
    ymax = std::max(ymax, p.y() + radius[v]);
  }
  double extent = std::max(xmax - xmin, ymax - ymin);
  if (!(extent > 0.0)) extent = 1.0;
  const double pad = opts.margin * extent;
  const double scale = opts.width / (extent + 2.0 * pad);
  const double height = (ymax - ymin + 2.0 * pad) * scale;

  auto X = [&](double x) { return (x - xmin + pad) * scale; };
  auto Y = [&](double y) { return (ymax + pad - y) * scale; };
  auto pt = [&](int v) {
    const Vec2& p = layout.positions[static_cast<std::size_t>(v)];
    return num(X(p.x())) + "," + num(Y(p.y()));
  };
  auto drawn = [&](int v) { return static_cast<std::size_t>(v) < nv; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(opts.width) + "\" height=\"" +
         num(height) + "\">\n";

  out += "<g id=\"faces\" stroke=\"none\">\n";
  for (const auto& face : aug.faces()) {
    if (!drawn(face.v[0]) || !drawn(face.v[1]) || !drawn(face.v[2])) continue;
    const bool folded = face.cls == SimplexClass::Augmented;
    out += "<polygon points=\"" + pt(face.v[0]) + " " + pt(face.v[1]) + " " + pt(face.v[2]) + "\" fill=\"" +
           (folded ? "#d95f02\" fill-opacity=\"0.10" : "#1b9e77\" fill-opacity=\"0.25") + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"edges\" stroke=\"#333333\" stroke-width=\"1\">\n";
  for (const auto& e : aug.edges()) {
    if (!drawn(e.v[0]) || !drawn(e.v[1])) continue;
    const Vec2& a = layout.positions[static_cast<std::size_t>(e.v[0])];
    const Vec2& b = layout.positions[static_cast<std::size_t>(e.v[1])];
    out += "<line x1=\"" + num(X(a.x())) + "\" y1=\"" + num(Y(a.y())) + "\" x2=\"" + num(X(b.x())) + "\" y2=\"" +
           num(Y(b.y())) + "\"";
    if (e.cls == SimplexClass::Augmented) out += " stroke-dasharray=\"4,3\"";
    out += "/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"circles\" fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"1\">\n";
  for (std::size_t v = 0; v < nv; ++v) {
    const Vec2& p = layout.positions[v];
    const bool apex = static_cast<int>(v) == aug.apex();
    if (radius[v] > 0.0) {
      out += "<circle cx=\"" + num(X(p.x())) + "\" cy=\"" + num(Y(p.y())) + "\" r=\"" + num(radius[v] * scale) + "\"";
      if (apex) out += " stroke=\"#c0392b\" stroke-width=\"2.5\"";
      out += "/>\n";
    } else {
      out += "<circle cx=\"" + num(X(p.x())) + "\" cy=\"" + num(Y(p.y())) + "\" r=\"2.500000000\" fill=\"" +
             (apex ? "#c0392b" : "#1f3a93") + "\" stroke=\"none\"/>\n";
    }
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace duniform
