// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_REGION_HPP
#define THERMOSEMI_REGION_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace thermosemi
{

// Coordinates are (beta, alpha) everywhere.
//
//   S   |2β-1| ≤ α ≤ 2β          S1  2β < α, 1/2 < α
//   S2  α < 1-2β, α ≤ 1/2         S3  α < 2β-1
//
//   R1  β ≤ α ≤ 2β-1/2            R2  2β-1/2 < α < 2β, 1/2 < α
//   R3  0 ≤ 1-2β < α ≤ 1/2, (β,α) ≠ (1/2,1/2)
//   R4  0 < 2β-1 ≤ α < β          R5  0 < α < 2β-1
//   SI  α = 0, 1/2 < β ≤ 1
//
// Q = {2β - α ≤ 1} = S ∪ S1 ∪ S2.
enum class SClass
{
  S,
  S1,
  S2,
  S3
};

enum class RClass
{
  R1,
  R2,
  R3,
  R4,
  R5,
  SI,
  BoundaryOther
};

std::string_view to_string(SClass c);
std::string_view to_string(RClass c);

struct RegionLabel
{
  SClass s_class = SClass::S;
  RClass r_class = RClass::BoundaryOther;
  bool in_q = true;
  std::string expected_regularity;
  std::string expected_stability;
};

// Throws DomainError outside [0,1]^2.
RegionLabel classify_region(double beta, double alpha);

struct RegionRow
{
  double beta;
  double alpha;
  RegionLabel label;
};

// Uniform grid of points per side (≥ 2) over [0,1]^2, beta outer, alpha inner.
std::vector<RegionRow> region_table(int points_per_side);

void write_region_csv(std::ostream &out, const std::vector<RegionRow> &rows);

}  // namespace thermosemi

#endif  // THERMOSEMI_REGION_HPP
