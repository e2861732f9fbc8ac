// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_TOOLS_SVG_HPP
#define THERMOSEMI_TOOLS_SVG_HPP

#include <string>
#include <vector>
#include <thermosemi/region.hpp>

namespace thermosemi::cli
{

struct Series
{
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool markers = false;
};

struct Axes
{
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool log_x = false;
  bool log_y = false;
  // Optional horizontal reference line.
  double reference = 0.0;
  bool has_reference = false;
  std::string reference_label;
};

// Static line plot; non-positive values are dropped on log axes.
std::string line_plot_svg(const Axes &axes, const std::vector<Series> &series);

// Region map over [0,1]², beta to the right and alpha upward, cells colored by S-class with the
// R-class written on a coarse overlay.
std::string region_map_svg(const std::vector<RegionRow> &rows, int points_per_side);

}  // namespace thermosemi::cli

#endif  // THERMOSEMI_TOOLS_SVG_HPP
