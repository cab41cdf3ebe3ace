// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include "proxshift/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "proxshift/errors.hpp"

namespace proxshift {

namespace {

constexpr double kClamp = 1e-18;

constexpr int kWidth = 760;
constexpr int kHeight = 520;
constexpr int kLeft = 64;
constexpr int kRight = 24;
constexpr int kTop = 40;
constexpr int kBottom = 48;

const char* const kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void emit_plot(std::ostream& out, const std::string& title,
               const std::vector<PlotSeries>& series) {
  std::size_t max_len = 0;
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const PlotSeries& s : series) {
    if (s.values.size() < 2) continue;
    max_len = std::max(max_len, s.values.size());
    for (double v : s.values) {
      if (!std::isfinite(v)) continue;
      const double c = std::log10(std::max(v, kClamp));
      if (!any) {
        lo = hi = c;
        any = true;
      } else {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
    }
  }
  if (!any || max_len < 2) {
    throw DomainError("plot needs a series with at least two finite points");
  }
  lo = std::floor(lo);
  hi = std::ceil(hi);
  if (hi <= lo) hi = lo + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto x_of = [&](std::size_t i) {
    return kLeft + plot_w * static_cast<double>(i) /
                       static_cast<double>(max_len - 1);
  };
  const auto y_of = [&](double v) {
    const double c = std::log10(std::max(v, kClamp));
    return kTop + plot_h * (1.0 - (c - lo) / (hi - lo));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">"
      << escape(title) << "</text>\n";

  // Frame.
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << num(plot_w) << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  // Decade ticks, thinned so labels stay readable.
  const int decades = static_cast<int>(hi - lo);
  const int y_step = std::max(1, (decades + 9) / 10);
  for (int e = static_cast<int>(lo); e <= static_cast<int>(hi); e += y_step) {
    const double y = y_of(std::pow(10.0, e));
    out << "<line x1=\"" << kLeft << "\" y1=\"" << num(y) << "\" x2=\""
        << kWidth - kRight << "\" y2=\"" << num(y)
        << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">1e"
        << e << "</text>\n";
  }
  const std::size_t x_ticks = 5;
  for (std::size_t t = 0; t <= x_ticks; ++t) {
    const std::size_t i = t * (max_len - 1) / x_ticks;
    const double x = x_of(i);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << kTop + plot_h
        << "\" x2=\"" << num(x) << "\" y2=\"" << num(kTop + plot_h + 5)
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << i << "</text>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">iteration</text>\n";

  // Curves.
  std::size_t color = 0;
  for (const PlotSeries& s : series) {
    if (s.values.size() < 2) continue;
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[color % kPaletteSize]
        << "\" stroke-width=\"1.5\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << " points=\"";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      double v = s.values[i];
      if (!std::isfinite(v)) v = kClamp;
      if (i > 0) out << ' ';
      out << num(x_of(i)) << ',' << num(y_of(v));
    }
    out << "\"/>\n";
    ++color;
  }

  // Legend, top right inside the frame.
  double ly = kTop + 16;
  color = 0;
  for (const PlotSeries& s : series) {
    if (s.values.size() < 2) continue;
    const double lx = kWidth - kRight - 190;
    out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4)
        << "\" x2=\"" << num(lx + 26) << "\" y2=\"" << num(ly - 4)
        << "\" stroke=\"" << kPalette[color % kPaletteSize]
        << "\" stroke-width=\"1.5\"";
    if (s.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n";
    out << "<text x=\"" << num(lx + 32) << "\" y=\"" << num(ly)
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << escape(s.label) << "</text>\n";
    ly += 16;
    ++color;
  }

  out << "</svg>\n";
  if (!out) throw IoError("failed writing plot");
}

void emit_region_svg(std::ostream& out, const RegionMap& map) {
  const std::size_t ni = map.mu_grid.size();
  const std::size_t nj = map.rho_grid.size();
  if (ni == 0 || nj == 0 || map.cells.size() != ni * nj) {
    throw DomainError("region map is empty or inconsistent");
  }

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double cw = plot_w / static_cast<double>(ni);
  const double ch = plot_h / static_cast<double>(nj);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">"
         "faster certified rate by region</text>\n";

  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t j = 0; j < nj; ++j) {
      const char* fill = "#cccccc";
      switch (map.at(i, j)) {
        case Region::kFbsBetter: fill = "#d62728"; break;
        case Region::kFista0Better: fill = "#1f77b4"; break;
        case Region::kTie: break;
      }
      const double x = kLeft + cw * static_cast<double>(i);
      // rho grows upward.
      const double y = kTop + plot_h - ch * static_cast<double>(j + 1);
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
          << num(cw + 0.5) << "\" height=\"" << num(ch + 0.5)
          << "\" fill=\"" << fill << "\"/>\n";
    }
  }

  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << num(plot_w) << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  // Corner tick labels are enough for a winner map.
  out << "<text x=\"" << kLeft << "\" y=\"" << num(kTop + plot_h + 20)
      << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << num(map.mu_grid.front()) << "</text>\n";
  out << "<text x=\"" << kWidth - kRight << "\" y=\""
      << num(kTop + plot_h + 20)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">"
      << num(map.mu_grid.back()) << "</text>\n";
  out << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(kTop + plot_h)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">"
      << num(map.rho_grid.front()) << "</text>\n";
  out << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 10
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">"
      << num(map.rho_grid.back()) << "</text>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">mu</text>\n";
  out << "<text x=\"14\" y=\"" << kHeight / 2
      << "\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 14 "
      << kHeight / 2 << ")\">rho</text>\n";

  // Legend.
  out << "<rect x=\"" << kWidth - kRight - 180 << "\" y=\"" << kTop + 8
      << "\" width=\"12\" height=\"12\" fill=\"#d62728\"/>\n";
  out << "<text x=\"" << kWidth - kRight - 162 << "\" y=\"" << kTop + 18
      << "\" font-family=\"sans-serif\" font-size=\"11\">forward-backward"
         "</text>\n";
  out << "<rect x=\"" << kWidth - kRight - 180 << "\" y=\"" << kTop + 26
      << "\" width=\"12\" height=\"12\" fill=\"#1f77b4\"/>\n";
  out << "<text x=\"" << kWidth - kRight - 162 << "\" y=\"" << kTop + 36
      << "\" font-family=\"sans-serif\" font-size=\"11\">inertial"
         "</text>\n";

  out << "</svg>\n";
  if (!out) throw IoError("failed writing region map");
}

}  // namespace proxshift
