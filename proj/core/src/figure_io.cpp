#include "gosset/figure_io.hpp"

#include <cmath>
#include <cstdio>

namespace gosset::coxplane {

namespace {

std::string fixed6(double v) {
  char buf[64];
  if (v == 0) v = 0;  // normalize -0
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> p = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                             "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  return p;
}

std::string emit_svg(const FigureSpec& fig, const SvgOptions& opts) {
  const std::vector<std::string>& palette = opts.palette.empty() ? default_palette() : opts.palette;
  const double size = opts.size;
  const double margin = 0.06 * size;
  double rmax = 0;
  for (double r : fig.circle_radii) rmax = r > rmax ? r : rmax;
  for (const auto& p : fig.points) {
    double m = std::hypot(p.x, p.y);
    rmax = m > rmax ? m : rmax;
  }
  if (rmax <= 0) rmax = 1;
  const double s = (size / 2 - margin) / rmax;
  const double c = size / 2;
  auto px = [&](double x) { return fixed6(c + s * x); };
  auto py = [&](double y) { return fixed6(c - s * y); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opts.size) +
         "\" height=\"" + std::to_string(opts.size) + "\" viewBox=\"0 0 " + std::to_string(opts.size) +
         " " + std::to_string(opts.size) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(opts.size) + "\" height=\"" +
         std::to_string(opts.size) + "\" fill=\"#ffffff\"/>\n";

  out += "<g fill=\"none\" stroke=\"#9aa0a6\" stroke-width=\"1\">\n";
  for (double r : fig.circle_radii) {
    out += "<circle class=\"ring\" cx=\"" + fixed6(c) + "\" cy=\"" + fixed6(c) + "\" r=\"" +
           fixed6(s * r) + "\"/>\n";
  }
  out += "</g>\n";

  if (!fig.edges.empty()) {
    out += "<g stroke=\"#c9ccd1\" stroke-width=\"0.6\">\n";
    for (auto [a, b] : fig.edges) {
      const auto& pa = fig.points[a];
      const auto& pb = fig.points[b];
      out += "<line class=\"edge\" x1=\"" + px(pa.x) + "\" y1=\"" + py(pa.y) + "\" x2=\"" + px(pb.x) +
             "\" y2=\"" + py(pb.y) + "\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g stroke=\"none\">\n";
  for (const auto& p : fig.points) {
    const std::string& color = palette[p.class_index % palette.size()];
    out += "<circle class=\"pt\" cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) + "\" r=\"" +
           fixed6(0.008 * size) + "\" fill=\"" + color + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string emit_csv(const FigureSpec& fig) {
  std::string out = "x,y,radius,class_index,re_nu,im_nu\n";
  for (const auto& p : fig.points) {
    out += fixed6(p.x) + "," + fixed6(p.y) + "," + fixed6(fig.circle_radii[p.class_index]) + "," +
           std::to_string(p.class_index) + "," + fixed6(p.nu.real()) + "," + fixed6(p.nu.imag()) + "\n";
  }
  return out;
}

}  // namespace gosset::coxplane
