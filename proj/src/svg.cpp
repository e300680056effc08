#include "updag/svg.hpp"

#include <algorithm>
#include <sstream>

namespace updag {

namespace {

// fixed-point decimal with 3 fractional digits, computed in integer math
std::string coord(const Rat& v, double scale) {
  Rat scaled = v * Rat(static_cast<long>(scale * 1000));
  BigInt q = rat_floor(scaled);
  std::ostringstream out;
  BigInt whole = q / 1000, frac = q % 1000;
  if (frac < 0) {
    frac += 1000;
    whole -= 1;
  }
  out << whole.str() << "." << (frac < 100 ? (frac < 10 ? "00" : "0") : "") << frac.str();
  return out.str();
}

}  // namespace

std::string render_svg(const Drawing& d, const SvgOptions& opt) {
  // bounding box
  Rat xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  auto upd = [&](const Point& p) {
    if (first) {
      xmin = xmax = p.x;
      ymin = ymax = p.y;
      first = false;
    } else {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  };
  for (auto& p : d.position) upd(p);
  for (auto& r : d.route)
    for (auto& p : r) upd(p);

  Rat pad = 1;
  xmin -= pad;
  ymin -= pad;
  xmax += pad;
  ymax += pad;
  // flip y: screen_y = ymax - y
  auto px = [&](const Point& p) { return coord(p.x - xmin, opt.scale); };
  auto py = [&](const Point& p) { return coord(ymax - p.y, opt.scale); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << coord(xmax - xmin, opt.scale) << "\" height=\"" << coord(ymax - ymin, opt.scale)
      << "\">\n";
  out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#444\"/></marker></defs>\n";
  for (int e = 0; e < d.dag.m(); e++) {
    auto pts = d.polyline(e);
    out << "  <polyline fill=\"none\" stroke=\"#444\" stroke-width=\"1.5\" "
           "marker-end=\"url(#arrow)\" points=\"";
    for (size_t i = 0; i < pts.size(); i++) {
      if (i) out << " ";
      out << px(pts[i]) << "," << py(pts[i]);
    }
    out << "\"/>\n";
  }
  if (opt.mark_crossings) {
    auto rep = analyze_drawing(d, true, false);
    for (auto& c : rep.crossings)
      out << "  <circle class=\"crossing\" cx=\"" << px(c.p) << "\" cy=\"" << py(c.p)
          << "\" r=\"4\" fill=\"none\" stroke=\"#d33\"/>\n";
  }
  for (int v = 0; v < d.dag.n; v++) {
    const Point& p = d.position[v];
    out << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p)
        << "\" r=\"7\" fill=\"#fff\" stroke=\"#000\"/>\n";
    if (opt.show_labels) {
      std::string lbl = (v < static_cast<int>(d.dag.labels.size()) && !d.dag.labels[v].empty())
                            ? d.dag.labels[v]
                            : std::to_string(v);
      out << "  <text x=\"" << px(p) << "\" y=\"" << py(p)
          << "\" font-size=\"8\" text-anchor=\"middle\" dominant-baseline=\"central\">" << lbl
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace updag
