// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace thermosemi::cli
{

namespace
{

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string num(double x)
{
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4g", x);
  return buffer;
}

std::string coord(double x)
{
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", x);
  return buffer;
}

std::string escape(const std::string &text)
{
  std::string out;
  for (char c : text)
  {
    switch (c)
    {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Scale
{
  double lo;
  double hi;
  bool log;
  double pixel_lo;
  double pixel_hi;

  double operator()(double v) const
  {
    const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
    return pixel_lo + t * (pixel_hi - pixel_lo);
  }
};

Scale make_scale(std::vector<double> values, bool log, double p0, double p1)
{
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values)
  {
    if (!std::isfinite(v) || (log && v <= 0.0))
    {
      continue;
    }
    const double w = log ? std::log10(v) : v;
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  if (!std::isfinite(lo))
  {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi - lo < 1e-12 * (1.0 + std::abs(hi)))
  {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.04 * (hi - lo);
  return {lo - pad, hi + pad, log, p0, p1};
}

std::string tick_label(const Scale &s, double t)
{
  const double v = s.lo + t * (s.hi - s.lo);
  return s.log ? "1e" + num(v) : num(v);
}

}  // namespace

std::string line_plot_svg(const Axes &axes, const std::vector<Series> &series)
{
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto &s : series)
  {
    xs.insert(xs.end(), s.x.begin(), s.x.end());
    ys.insert(ys.end(), s.y.begin(), s.y.end());
  }
  if (axes.has_reference)
  {
    ys.push_back(axes.reference);
  }
  const Scale sx = make_scale(xs, axes.log_x, kLeft, kWidth - kRight);
  const Scale sy = make_scale(ys, axes.log_y, kHeight - kBottom, kTop);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(axes.title) << "</text>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; i++)
  {
    const double t = i / 4.0;
    const double px = kLeft + t * (kWidth - kLeft - kRight);
    const double py = kHeight - kBottom - t * (kHeight - kTop - kBottom);
    out << "<text x=\"" << coord(px) << "\" y=\"" << kHeight - kBottom + 16
        << "\" text-anchor=\"middle\">" << tick_label(sx, t) << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << coord(py + 4)
        << "\" text-anchor=\"end\">" << tick_label(sy, t) << "</text>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">" << escape(axes.xlabel) << "</text>\n";
  out << "<text transform=\"translate(16," << kHeight / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(axes.ylabel) << "</text>\n";
  if (axes.has_reference && (!axes.log_y || axes.reference > 0.0))
  {
    const double py = sy(axes.reference);
    out << "<line x1=\"" << kLeft << "\" x2=\"" << kWidth - kRight << "\" y1=\"" << coord(py)
        << "\" y2=\"" << coord(py) << "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";
    out << "<text x=\"" << kWidth - kRight - 4 << "\" y=\"" << coord(py - 4)
        << "\" text-anchor=\"end\" fill=\"gray\">" << escape(axes.reference_label)
        << "</text>\n";
  }
  int legend = 0;
  for (const auto &s : series)
  {
    std::string path;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); i++)
    {
      if ((axes.log_x && s.x[i] <= 0.0) || (axes.log_y && s.y[i] <= 0.0) ||
          !std::isfinite(s.y[i]))
      {
        continue;
      }
      path += (path.empty() ? "M" : " L") + coord(sx(s.x[i])) + "," + coord(sy(s.y[i]));
      if (s.markers)
      {
        out << "<circle cx=\"" << coord(sx(s.x[i])) << "\" cy=\"" << coord(sy(s.y[i]))
            << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
      }
    }
    out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\"/>\n";
    if (!s.label.empty())
    {
      const double ly = kTop + 16 + 16 * legend++;
      out << "<line x1=\"" << kWidth - kRight - 150 << "\" x2=\"" << kWidth - kRight - 130
          << "\" y1=\"" << ly - 4 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color
          << "\" stroke-width=\"2\"/>\n";
      out << "<text x=\"" << kWidth - kRight - 125 << "\" y=\"" << ly << "\">"
          << escape(s.label) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string region_map_svg(const std::vector<RegionRow> &rows, int points_per_side)
{
  static const std::map<SClass, std::string> fill{{SClass::S, "#cfe8cf"},
                                                   {SClass::S1, "#f6d6a8"},
                                                   {SClass::S2, "#c9d8f2"},
                                                   {SClass::S3, "#e6b8b8"}};
  const double side = 400.0;
  const double left = 60.0;
  const double top = 40.0;
  const double cell = side / points_per_side;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << left + side + 170
      << "\" height=\"" << top + side + 50 << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << left + side / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"15\">Regions in the (beta, alpha) square</text>\n";
  for (const auto &r : rows)
  {
    const double x = left + r.beta * (side - cell);
    const double y = top + (1.0 - r.alpha) * (side - cell);
    out << "<rect x=\"" << coord(x) << "\" y=\"" << coord(y) << "\" width=\"" << coord(cell)
        << "\" height=\"" << coord(cell) << "\" fill=\"" << fill.at(r.label.s_class)
        << "\"/>\n";
  }
  // Coarse R-class labels at every tenth grid point.
  const int stride = std::max(1, points_per_side / 10);
  for (std::size_t k = 0; k < rows.size(); k++)
  {
    const int i = static_cast<int>(k) / points_per_side;
    const int j = static_cast<int>(k) % points_per_side;
    if (i % stride != stride / 2 || j % stride != stride / 2)
    {
      continue;
    }
    const auto &r = rows[k];
    if (r.label.r_class == RClass::BoundaryOther)
    {
      continue;
    }
    out << "<text x=\"" << coord(left + r.beta * (side - cell) + cell / 2) << "\" y=\""
        << coord(top + (1.0 - r.alpha) * (side - cell) + cell / 2 + 4)
        << "\" text-anchor=\"middle\" font-size=\"9\" fill=\"#333\">"
        << to_string(r.label.r_class) << "</text>\n";
  }
  // Boundary lines of S: α = 2β, α = 2β - 1, α = 1 - 2β.
  auto line = [&](double b0, double a0, double b1, double a1)
  {
    out << "<line x1=\"" << coord(left + b0 * side) << "\" y1=\"" << coord(top + (1 - a0) * side)
        << "\" x2=\"" << coord(left + b1 * side) << "\" y2=\"" << coord(top + (1 - a1) * side)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  };
  line(0.0, 0.0, 0.5, 1.0);
  line(0.5, 0.0, 1.0, 1.0);
  line(0.0, 1.0, 0.5, 0.0);
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << side << "\" height=\""
      << side << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << left + side / 2 << "\" y=\"" << top + side + 30
      << "\" text-anchor=\"middle\">beta</text>\n";
  out << "<text transform=\"translate(20," << top + side / 2
      << ") rotate(-90)\" text-anchor=\"middle\">alpha</text>\n";
  int row = 0;
  for (const auto &[s, color] : fill)
  {
    const double y = top + 20 + 22 * row++;
    out << "<rect x=\"" << left + side + 20 << "\" y=\"" << y - 12 << "\" width=\"16\" "
        << "height=\"16\" fill=\"" << color << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left + side + 44 << "\" y=\"" << y << "\">" << to_string(s)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace thermosemi::cli
