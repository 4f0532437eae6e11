#include "manhattan/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace manhattan {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kMarginLeft = 70;
constexpr double kMarginRight = 30;
constexpr double kMarginTop = 50;
constexpr double kMarginBottom = 60;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Axis {
  double lo = 0;
  double hi = 1;
  double to_px(double v, double px_lo, double px_hi) const {
    if (hi == lo) return (px_lo + px_hi) / 2;
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

// Round tick spacing to 1/2/5 * 10^k.
double tick_step(double span) {
  if (span <= 0) return 1;
  const double raw = span / 8;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  if (frac <= 1) return mag;
  if (frac <= 2) return 2 * mag;
  if (frac <= 5) return 5 * mag;
  return 10 * mag;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

std::string render_svg_plot(const SvgPlotSpec& spec) {
  double x_max = 1, y_max = 1;
  auto grow = [&](double x, double y) {
    x_max = std::max(x_max, x);
    y_max = std::max(y_max, y);
  };
  for (const auto& p : spec.curve) grow(p.x, p.y);
  for (const auto& p : spec.oracle_points) grow(p.x, p.y);
  for (const auto& p : spec.mc_points) grow(p.x, p.y + p.half_width);
  if (spec.asymptote_slope) grow(x_max, *spec.asymptote_slope * x_max);
  y_max *= 1.05;

  const Axis xa{0, x_max};
  const Axis ya{0, y_max};
  const double px_l = kMarginLeft, px_r = kWidth - kMarginRight;
  const double px_b = kHeight - kMarginBottom, px_t = kMarginTop;
  auto X = [&](double v) { return xa.to_px(v, px_l, px_r); };
  auto Y = [&](double v) { return ya.to_px(v, px_b, px_t); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
       "width=\"800\" height=\"600\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  s << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"18\">"
    << spec.title << "</text>\n";

  // Axes and ticks.
  s << "<line x1=\"" << num(px_l) << "\" y1=\"" << num(px_b) << "\" x2=\""
    << num(px_r) << "\" y2=\"" << num(px_b)
    << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s << "<line x1=\"" << num(px_l) << "\" y1=\"" << num(px_b) << "\" x2=\""
    << num(px_l) << "\" y2=\"" << num(px_t)
    << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  const double xstep = tick_step(x_max);
  for (double v = 0; v <= x_max + 1e-9; v += xstep) {
    s << "<line x1=\"" << num(X(v)) << "\" y1=\"" << num(px_b) << "\" x2=\""
      << num(X(v)) << "\" y2=\"" << num(px_b + 5) << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << num(X(v)) << "\" y=\"" << num(px_b + 20)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << tick_label(v) << "</text>\n";
  }
  const double ystep = tick_step(y_max);
  for (double v = 0; v <= y_max + 1e-9; v += ystep) {
    s << "<line x1=\"" << num(px_l - 5) << "\" y1=\"" << num(Y(v)) << "\" x2=\""
      << num(px_l) << "\" y2=\"" << num(Y(v)) << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << num(px_l - 8) << "\" y=\"" << num(Y(v) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << tick_label(v) << "</text>\n";
  }
  s << "<text x=\"" << num((px_l + px_r) / 2) << "\" y=\"" << num(kHeight - 15)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
    << spec.x_label << "</text>\n";
  s << "<text x=\"20\" y=\"" << num((px_t + px_b) / 2)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
       "transform=\"rotate(-90 20 "
    << num((px_t + px_b) / 2) << ")\">" << spec.y_label << "</text>\n";

  if (spec.asymptote_slope) {
    s << "<line x1=\"" << num(X(0)) << "\" y1=\"" << num(Y(0)) << "\" x2=\""
      << num(X(x_max)) << "\" y2=\"" << num(Y(*spec.asymptote_slope * x_max))
      << "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }

  if (!spec.curve.empty()) {
    s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < spec.curve.size(); ++i) {
      if (i != 0) s << " ";
      s << num(X(spec.curve[i].x)) << "," << num(Y(spec.curve[i].y));
    }
    s << "\"/>\n";
  }

  for (const auto& p : spec.oracle_points) {
    s << "<circle cx=\"" << num(X(p.x)) << "\" cy=\"" << num(Y(p.y))
      << "\" r=\"3\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
  }

  for (const auto& p : spec.mc_points) {
    const double x = X(p.x);
    s << "<line x1=\"" << num(x) << "\" y1=\"" << num(Y(p.y - p.half_width))
      << "\" x2=\"" << num(x) << "\" y2=\"" << num(Y(p.y + p.half_width))
      << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    s << "<circle cx=\"" << num(x) << "\" cy=\"" << num(Y(p.y))
      << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
  }

  // Legend.
  const double lx = px_l + 15, ly = px_t + 10;
  s << "<rect x=\"" << num(lx - 8) << "\" y=\"" << num(ly - 14)
    << "\" width=\"210\" height=\"78\" fill=\"white\" stroke=\"#cccccc\"/>\n";
  s << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 26)
    << "\" y2=\"" << num(ly) << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  s << "<text x=\"" << num(lx + 34) << "\" y=\"" << num(ly + 4)
    << "\" font-family=\"sans-serif\" font-size=\"12\">closed form</text>\n";
  s << "<circle cx=\"" << num(lx + 13) << "\" cy=\"" << num(ly + 18)
    << "\" r=\"3\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
  s << "<text x=\"" << num(lx + 34) << "\" y=\"" << num(ly + 22)
    << "\" font-family=\"sans-serif\" font-size=\"12\">exact oracle</text>\n";
  s << "<line x1=\"" << num(lx + 13) << "\" y1=\"" << num(ly + 30) << "\" x2=\""
    << num(lx + 13) << "\" y2=\"" << num(ly + 42)
    << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  s << "<text x=\"" << num(lx + 34) << "\" y=\"" << num(ly + 40)
    << "\" font-family=\"sans-serif\" font-size=\"12\">Monte Carlo +/- stderr</text>\n";
  s << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly + 54) << "\" x2=\""
    << num(lx + 26) << "\" y2=\"" << num(ly + 54)
    << "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  s << "<text x=\"" << num(lx + 34) << "\" y=\"" << num(ly + 58)
    << "\" font-family=\"sans-serif\" font-size=\"12\">diffusive asymptote</text>\n";

  s << "</svg>\n";
  return s.str();
}

}  // namespace manhattan
