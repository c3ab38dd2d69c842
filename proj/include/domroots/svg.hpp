#pragma once

#include <cstddef>
#include <sstream>
#include <string>

#include "domroots/families.hpp"

namespace domroots {

struct ScatterStyle {
  int width = 640;
  int height = 640;
  int margin = 40;
  double radius = 2.0;
};

/// Static scatter of a root cloud. The window maps linearly onto the plot
/// area (imaginary axis pointing up); points outside the window are dropped.
inline std::string render_scatter_svg(const RootCloud& cloud, const Window& window, const ScatterStyle& style = {}) {
  if (window.degenerate()) throw Error(ErrorKind::Invalid, "window is degenerate");
  const double plot_w = style.width - 2.0 * style.margin;
  const double plot_h = style.height - 2.0 * style.margin;
  const auto sx = [&](double re) { return style.margin + (re - window.re_min) / (window.re_max - window.re_min) * plot_w; };
  const auto sy = [&](double im) { return style.margin + (window.im_max - im) / (window.im_max - window.im_min) * plot_h; };

  std::ostringstream svg;
  svg.precision(6);
  svg << std::fixed;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height << "\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << style.margin << "\" y=\"" << style.margin << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"#888\"/>\n";
  if (window.re_min <= 0.0 && 0.0 <= window.re_max)
    svg << "<line x1=\"" << sx(0.0) << "\" y1=\"" << sy(window.im_min) << "\" x2=\"" << sx(0.0) << "\" y2=\""
        << sy(window.im_max) << "\" stroke=\"#bbb\"/>\n";
  if (window.im_min <= 0.0 && 0.0 <= window.im_max)
    svg << "<line x1=\"" << sx(window.re_min) << "\" y1=\"" << sy(0.0) << "\" x2=\"" << sx(window.re_max)
        << "\" y2=\"" << sy(0.0) << "\" stroke=\"#bbb\"/>\n";
  svg << "<g fill=\"#1f4e9c\" fill-opacity=\"0.7\">\n";
  for (const auto& p : cloud.points()) {
    if (p.re < window.re_min || p.re > window.re_max || p.im < window.im_min || p.im > window.im_max) continue;
    svg << "<circle cx=\"" << sx(p.re) << "\" cy=\"" << sy(p.im) << "\" r=\"" << style.radius << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"" << style.margin << "\" y=\"" << style.height - 12 << "\" font-size=\"12\" font-family=\"sans-serif\">"
      << "Re [" << window.re_min << ", " << window.re_max << "]  Im [" << window.im_min << ", " << window.im_max
      << "]  points " << cloud.points().size() << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace domroots
