// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/region.hpp"

#include <cmath>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"

namespace thermosemi
{

namespace
{

constexpr double eps = 1e-12;

bool le(double x, double y)
{
  return x <= y + eps;
}

bool lt(double x, double y)
{
  return x < y - eps;
}

bool eq(double x, double y)
{
  return std::abs(x - y) <= eps;
}

bool in_s(double b, double a)
{
  return le(std::abs(2.0 * b - 1.0), a) && le(a, 2.0 * b);
}

bool in_s1(double b, double a)
{
  return lt(2.0 * b, a) && lt(0.5, a);
}

bool in_s2(double b, double a)
{
  return lt(a, 1.0 - 2.0 * b) && le(a, 0.5);
}

bool in_s3(double b, double a)
{
  return lt(a, 2.0 * b - 1.0);
}

struct Texts
{
  const char *regularity;
  const char *stability;
};

constexpr Texts kNotDifferentiableStable{"not differentiable", "exponentially stable"};

Texts texts_for(RClass r)
{
  switch (r)
  {
    case RClass::R1:
      return {"analytic", "exponentially stable"};
    case RClass::R2:
      return {"Gevrey class δ>1/(2(2β−α))", "exponentially stable"};
    case RClass::R3:
      return {"Gevrey class δ>1/(2(2β+α)−2)", "exponentially stable"};
    case RClass::R4:
      return {"Gevrey class δ>β/α", "exponentially stable"};
    case RClass::R5:
      return {"Gevrey class δ>β/α", "not asymptotically stable"};
    case RClass::SI:
      return {"not differentiable", "not asymptotically stable"};
    case RClass::BoundaryOther:
      break;
  }
  return kNotDifferentiableStable;
}

Texts texts_for(SClass s)
{
  switch (s)
  {
    case SClass::S1:
      return {"not differentiable", "polynomially stable of order 1/(2(α−2β))"};
    case SClass::S2:
      return {"not differentiable", "polynomially stable of order 1/(2−2(2β+α))"};
    case SClass::S3:
      return {"not differentiable", "not asymptotically stable"};
    case SClass::S:
      break;
  }
  return kNotDifferentiableStable;
}

RClass r_class_of(double b, double a)
{
  if (le(b, a) && le(a, 2.0 * b - 0.5))
  {
    return RClass::R1;
  }
  if (lt(2.0 * b - 0.5, a) && lt(0.5, a) && lt(a, 2.0 * b))
  {
    return RClass::R2;
  }
  if (le(0.0, 1.0 - 2.0 * b) && lt(1.0 - 2.0 * b, a) && le(a, 0.5) &&
      !(eq(b, 0.5) && eq(a, 0.5)))
  {
    return RClass::R3;
  }
  if (lt(0.0, 2.0 * b - 1.0) && le(2.0 * b - 1.0, a) && lt(a, b))
  {
    return RClass::R4;
  }
  if (lt(0.0, a) && lt(a, 2.0 * b - 1.0))
  {
    return RClass::R5;
  }
  if (eq(a, 0.0) && lt(0.5, b) && le(b, 1.0))
  {
    return RClass::SI;
  }
  return RClass::BoundaryOther;
}

}  // namespace

std::string_view to_string(SClass c)
{
  switch (c)
  {
    case SClass::S:
      return "S";
    case SClass::S1:
      return "S1";
    case SClass::S2:
      return "S2";
    case SClass::S3:
      return "S3";
  }
  return "unknown";
}

std::string_view to_string(RClass c)
{
  switch (c)
  {
    case RClass::R1:
      return "R1";
    case RClass::R2:
      return "R2";
    case RClass::R3:
      return "R3";
    case RClass::R4:
      return "R4";
    case RClass::R5:
      return "R5";
    case RClass::SI:
      return "SI";
    case RClass::BoundaryOther:
      return "BoundaryOther";
  }
  return "unknown";
}

RegionLabel classify_region(double beta, double alpha)
{
  if (!(beta >= 0.0 && beta <= 1.0 && alpha >= 0.0 && alpha <= 1.0))
  {
    throw DomainError("(beta, alpha) = (" + format_double(beta) + ", " + format_double(alpha) +
                      ") is outside [0,1]^2");
  }
  RegionLabel label;
  if (in_s(beta, alpha))
  {
    label.s_class = SClass::S;
  }
  else if (in_s1(beta, alpha))
  {
    label.s_class = SClass::S1;
  }
  else if (in_s2(beta, alpha))
  {
    label.s_class = SClass::S2;
  }
  else if (in_s3(beta, alpha))
  {
    label.s_class = SClass::S3;
  }
  label.in_q = label.s_class != SClass::S3;
  label.r_class = r_class_of(beta, alpha);

  Texts texts = label.r_class == RClass::BoundaryOther ? texts_for(label.s_class)
                                                       : texts_for(label.r_class);
  label.expected_regularity = texts.regularity;
  label.expected_stability = texts.stability;
  return label;
}

std::vector<RegionRow> region_table(int points_per_side)
{
  if (points_per_side < 2)
  {
    throw ValidationError("region grid needs at least 2 points per side");
  }
  std::vector<RegionRow> rows;
  rows.reserve(static_cast<std::size_t>(points_per_side) * points_per_side);
  const double step = 1.0 / (points_per_side - 1);
  for (int i = 0; i < points_per_side; i++)
  {
    const double beta = i == points_per_side - 1 ? 1.0 : i * step;
    for (int j = 0; j < points_per_side; j++)
    {
      const double alpha = j == points_per_side - 1 ? 1.0 : j * step;
      rows.push_back({beta, alpha, classify_region(beta, alpha)});
    }
  }
  return rows;
}

void write_region_csv(std::ostream &out, const std::vector<RegionRow> &rows)
{
  write_csv_row(out, {"beta", "alpha", "s_class", "r_class", "in_q", "expected_regularity",
                      "expected_stability"});
  for (const auto &row : rows)
  {
    write_csv_row(out, {format_double(row.beta), format_double(row.alpha),
                        std::string(to_string(row.label.s_class)),
                        std::string(to_string(row.label.r_class)),
                        row.label.in_q ? "true" : "false",
                        "\"" + row.label.expected_regularity + "\"",
                        "\"" + row.label.expected_stability + "\""});
  }
}

}  // namespace thermosemi
