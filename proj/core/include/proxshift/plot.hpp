// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "proxshift/rates.hpp"

namespace proxshift {

/// One curve on a convergence plot; values are plotted on a log scale
/// against their index, and entries below 1e-18 are clamped for display.
struct PlotSeries {
  std::string label;
  bool dashed = false;
  std::vector<double> values;
};

/// Writes a self-contained SVG line chart with a log-scaled vertical axis,
/// decade ticks, and a legend. Throws DomainError when no series carries
/// at least two points and IoError when the stream fails.
void emit_plot(std::ostream& out, const std::string& title,
               const std::vector<PlotSeries>& series);

/// Writes the (mu, rho) winner map as an SVG cell grid: one colored cell
/// per grid node, mu on the horizontal axis. Throws DomainError on an
/// empty map and IoError when the stream fails.
void emit_region_svg(std::ostream& out, const RegionMap& map);

}  // namespace proxshift
