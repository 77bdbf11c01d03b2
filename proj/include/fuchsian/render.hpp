#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "fuchsian/attractor.hpp"
#include "fuchsian/boundary.hpp"

namespace fuchsian {

enum class figure_kind { polygon, attractor, both };

struct figure_spec {
  figure_kind kind = figure_kind::both;
  int size = 800;  // canvas edge in pixels
  double side_stroke = 1.5;
  double rect_stroke = 0.5;
  bool labels = true;
  std::vector<std::string> palette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

  const std::string& color(int block) const {
    return palette[std::size_t(block - 1) % palette.size()];
  }
  void check() const {
    if (size < 100) throw error(errc::parse_error, "canvas must be at least 100 px");
    if (palette.empty()) throw error(errc::parse_error, "palette is empty");
  }
};

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

inline std::string svg_open(int w, int h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) +
         " " + std::to_string(h) + "\">\n<rect x=\"0\" y=\"0\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" fill=\"white\"/>\n";
}

/// Disk coordinates to pixels, y pointing down.
struct disk_chart {
  double cx, cy, r;
  std::pair<double, double> operator()(complex z) const { return {cx + r * z.real(), cy - r * z.imag()}; }
};

}  // namespace detail

inline std::string render_polygon(const marked_polygon& poly, const partition& part,
                                  const figure_spec& spec = {}) {
  spec.check();
  using detail::fmt;
  const double S = spec.size;
  detail::disk_chart px{S / 2, S / 2, 0.45 * S};
  std::string out = detail::svg_open(spec.size, spec.size);
  out += "<g id=\"sectors\">\n";
  for (const auto& b : poly.blocks) {
    auto [x0, y0] = px(complex(0.0));
    auto [x1, y1] = px(std::polar(1.0, b.rotation));
    out += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(y0) + "\" x2=\"" + fmt(x1) + "\" y2=\"" + fmt(y1) +
           "\" stroke=\"" + spec.color(b.index) + "\" stroke-width=\"0.75\" stroke-dasharray=\"4 3\"/>\n";
  }
  out += "</g>\n";
  out += "<circle cx=\"" + fmt(px.cx) + "\" cy=\"" + fmt(px.cy) + "\" r=\"" + fmt(px.r) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<g id=\"sides\">\n";
  for (int k = 1; k <= poly.N; ++k) {
    const geodesic& g = poly.side(k);
    complex z0 = poly.V(k - 1).z, z1 = poly.V(k).z;
    auto [x0, y0] = px(z0);
    auto [x1, y1] = px(z1);
    const std::string& col = spec.color(poly.block_of_vertex(k - 1).index);
    std::string attrs = " fill=\"none\" stroke=\"" + col + "\" stroke-width=\"" + fmt(spec.side_stroke) +
                        "\" data-side=\"" + std::to_string(k) + "\"";
    if (g.is_diameter()) {
      out += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(y0) + "\" x2=\"" + fmt(x1) + "\" y2=\"" + fmt(y1) +
             "\"" + attrs + "/>\n";
    } else {
      const auto& c = g.circle();
      complex d0 = z0 - c.center, d1 = z1 - c.center;
      double cross = d0.real() * d1.imag() - d0.imag() * d1.real();
      out += "<path d=\"M " + fmt(x0) + " " + fmt(y0) + " A " + fmt(c.radius * px.r) + " " +
             fmt(c.radius * px.r) + " 0 0 " + (cross > 0 ? "1" : "0") + " " + fmt(x1) + " " + fmt(y1) +
             "\"" + attrs + "/>\n";
    }
  }
  out += "</g>\n<g id=\"vertices\">\n";
  for (int k = 0; k < poly.N; ++k) {
    const vertex& v = poly.V(k);
    auto [x, y] = px(v.z);
    if (v.ideal) {
      out += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3\" fill=\"black\"/>\n";
    } else {
      out += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3.5\" fill=\"white\" stroke=\"black\"/>\n";
      if (spec.labels)
        out += "<text x=\"" + fmt(x + 6) + "\" y=\"" + fmt(y - 6) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(v.order) + "</text>\n";
    }
  }
  out += "</g>\n<g id=\"partition\">\n";
  for (int k = 0; k < part.size(); ++k) {
    complex z = part.at(k).z();
    auto [x0, y0] = px(0.97 * z);
    auto [x1, y1] = px(1.03 * z);
    out += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(y0) + "\" x2=\"" + fmt(x1) + "\" y2=\"" + fmt(y1) +
           "\" stroke=\"" + (part.elliptic[k] ? "red" : "black") + "\" stroke-width=\"1.5\"/>\n";
  }
  out += "</g>\n";
  if (spec.labels)
    out += "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">(" + poly.sig.to_string() +
           ")</text>\n";
  out += "</svg>\n";
  return out;
}

/// Rectangles in the (theta_u, theta_w) chart; seam-crossing rectangles are drawn in pieces
/// grouped under one element per rectangle.
inline std::string render_attractor(const std::vector<rect>& rects, const figure_spec& spec = {},
                                    const std::string& title = "") {
  spec.check();
  using detail::fmt;
  const double S = spec.size, m = 0.06 * S, L = S - 2 * m;
  auto X = [&](double t) { return m + L * t / two_pi; };
  auto Y = [&](double t) { return m + L * (1.0 - t / two_pi); };
  std::string out = detail::svg_open(spec.size, spec.size);
  out += "<rect x=\"" + fmt(m) + "\" y=\"" + fmt(m) + "\" width=\"" + fmt(L) + "\" height=\"" + fmt(L) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n<g id=\"rects\">\n";
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const rect& r = rects[i];
    out += "<g class=\"rect\" data-index=\"" + std::to_string(i) + "\" data-block=\"" + std::to_string(r.block) +
           "\" data-gamma=\"" + std::to_string(r.gamma) + "\" data-label=\"" + r.label + "\">\n";
    for (const auto& b : to_boxes(r))
      out += "<rect x=\"" + fmt(X(b.x0)) + "\" y=\"" + fmt(Y(b.y1)) + "\" width=\"" + fmt(X(b.x1) - X(b.x0)) +
             "\" height=\"" + fmt(Y(b.y0) - Y(b.y1)) + "\" fill=\"" + spec.color(r.block) +
             "\" fill-opacity=\"0.6\" stroke=\"black\" stroke-width=\"" + fmt(spec.rect_stroke) + "\"/>\n";
    out += "</g>\n";
  }
  out += "</g>\n";
  if (spec.labels) {
    out += "<text x=\"" + fmt(S / 2) + "\" y=\"" + fmt(S - 0.015 * S) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">theta_u</text>\n";
    out += "<text x=\"" + fmt(0.02 * S) + "\" y=\"" + fmt(S / 2) +
           "\" font-family=\"sans-serif\" font-size=\"12\">theta_w</text>\n";
    if (!title.empty())
      out += "<text x=\"" + fmt(m) + "\" y=\"" + fmt(0.7 * m) + "\" font-family=\"sans-serif\" font-size=\"14\">" +
             title + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

inline std::string render_attractor(const marked_polygon& poly, const attractor_domain& dom,
                                    const figure_spec& spec = {}) {
  return render_attractor(dom.rects, spec, "(" + poly.sig.to_string() + ")");
}

}  // namespace fuchsian
