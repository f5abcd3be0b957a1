#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "format.hpp"

namespace argrn::svg {

struct Series {
  std::string label;
  std::vector<double> values;  // y at x = 0, 1, 2, ...
};

// Fixed-size line chart. Output depends only on the data, so equal inputs
// give byte-identical files.
struct LineChart {
  std::string title;
  std::string x_label = "cycle";
  std::string y_label = "concentration";
  int width = 960;
  int height = 540;
  std::vector<Series> series;
};

// Colour for series i; cycles through a fixed 10-colour palette.
inline std::string_view series_color(std::size_t i) {
  static constexpr std::array<std::string_view, 10> palette{
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return palette[i % palette.size()];
}

inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace detail {

// Rounds the data maximum up to a 1-2-5 tick step.
inline double nice_step(double range, int ticks) {
  const double raw = range / ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace detail

inline std::string render(const LineChart& chart) {
  constexpr double left = 70, right = 150, top = 40, bottom = 50;
  const double plot_w = chart.width - left - right;
  const double plot_h = chart.height - top - bottom;

  std::size_t points = 1;
  double y_min = 0.0, y_max = 0.0;
  bool any = false;
  for (const auto& s : chart.series) {
    points = std::max(points, s.values.size());
    for (double v : s.values) {
      if (!std::isfinite(v)) continue;
      y_min = any ? std::min(y_min, v) : v;
      y_max = any ? std::max(y_max, v) : v;
      any = true;
    }
  }
  y_min = std::min(y_min, 0.0);
  if (y_max <= y_min) y_max = y_min + 1.0;
  const double y_step = detail::nice_step(y_max - y_min, 5);
  y_min = std::floor(y_min / y_step) * y_step;
  y_max = std::ceil(y_max / y_step) * y_step;
  const double x_max = static_cast<double>(std::max<std::size_t>(points - 1, 1));

  auto px = [&](double x) { return left + plot_w * x / x_max; };
  auto py = [&](double y) { return top + plot_h * (1.0 - (y - y_min) / (y_max - y_min)); };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << chart.width << "\" height=\""
    << chart.height << "\" viewBox=\"0 0 " << chart.width << ' ' << chart.height << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << fixed(left + plot_w / 2, 2) << "\" y=\"24\" text-anchor=\"middle\" "
    << "font-family=\"sans-serif\" font-size=\"16\">" << escape(chart.title) << "</text>\n";

  o << "<g font-family=\"sans-serif\" font-size=\"11\" stroke-width=\"1\">\n";
  for (double y = y_min; y <= y_max + y_step * 1e-9; y += y_step) {
    o << "<line x1=\"" << fixed(left, 2) << "\" y1=\"" << fixed(py(y), 2) << "\" x2=\""
      << fixed(left + plot_w, 2) << "\" y2=\"" << fixed(py(y), 2) << "\" stroke=\"#e0e0e0\"/>\n"
      << "<text x=\"" << fixed(left - 6, 2) << "\" y=\"" << fixed(py(y) + 4, 2)
      << "\" text-anchor=\"end\">" << shortest(std::round(y / y_step) * y_step) << "</text>\n";
  }
  const double x_step = detail::nice_step(x_max, 10);
  for (double x = 0; x <= x_max + 1e-9; x += x_step) {
    o << "<text x=\"" << fixed(px(x), 2) << "\" y=\"" << fixed(top + plot_h + 16, 2)
      << "\" text-anchor=\"middle\">" << shortest(x) << "</text>\n";
  }
  o << "<rect x=\"" << fixed(left, 2) << "\" y=\"" << fixed(top, 2) << "\" width=\""
    << fixed(plot_w, 2) << "\" height=\"" << fixed(plot_h, 2)
    << "\" fill=\"none\" stroke=\"black\"/>\n"
    << "<text x=\"" << fixed(left + plot_w / 2, 2) << "\" y=\"" << chart.height - 12
    << "\" text-anchor=\"middle\">" << escape(chart.x_label) << "</text>\n"
    << "<text transform=\"translate(18," << fixed(top + plot_h / 2, 2)
    << ") rotate(-90)\" text-anchor=\"middle\">" << escape(chart.y_label) << "</text>\n"
    << "</g>\n";

  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const auto& s = chart.series[i];
    o << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << series_color(i)
      << "\" points=\"";
    for (std::size_t k = 0; k < s.values.size(); ++k) {
      if (k) o << ' ';
      const double v = std::isfinite(s.values[k]) ? s.values[k] : 0.0;
      o << fixed(px(static_cast<double>(k)), 2) << ',' << fixed(py(v), 2);
    }
    o << "\"/>\n";
  }

  o << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const double y = top + 10 + 18.0 * static_cast<double>(i);
    const double x = left + plot_w + 14;
    o << "<line x1=\"" << fixed(x, 2) << "\" y1=\"" << fixed(y, 2) << "\" x2=\""
      << fixed(x + 22, 2) << "\" y2=\"" << fixed(y, 2) << "\" stroke=\"" << series_color(i)
      << "\" stroke-width=\"3\"/>\n"
      << "<text x=\"" << fixed(x + 28, 2) << "\" y=\"" << fixed(y + 4, 2) << "\">"
      << escape(chart.series[i].label) << "</text>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace argrn::svg
