// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include "oracles.hpp"

namespace oracle
{

// β = i/100, α = j/100; every inequality is multiplied through by 100.
ExactLabel exact_region(int i, int j)
{
  ExactLabel out;
  const bool s = std::abs(2 * i - 100) <= j && j <= 2 * i;
  const bool s1 = 2 * i < j && 50 < j;
  const bool s2 = j < 100 - 2 * i && j <= 50;
  const bool s3 = j < 2 * i - 100;
  if (s)
  {
    out.s = "S";
  }
  else if (s1 + s2 + s3 == 1)
  {
    out.s = s1 ? "S1" : (s2 ? "S2" : "S3");
  }

  const bool r1 = i <= j && j <= 2 * i - 50;
  const bool r2 = 2 * i - 50 < j && 50 < j && j < 2 * i;
  const bool r3 = 0 <= 100 - 2 * i && 100 - 2 * i < j && j <= 50 && !(i == 50 && j == 50);
  const bool r4 = 0 < 2 * i - 100 && 2 * i - 100 <= j && j < i;
  const bool r5 = 0 < j && j < 2 * i - 100;
  const bool si = j == 0 && 50 < i && i <= 100;
  const int count = r1 + r2 + r3 + r4 + r5 + si;
  if (count == 0)
  {
    out.r = "BoundaryOther";
  }
  else if (count == 1)
  {
    out.r = r1 ? "R1" : r2 ? "R2" : r3 ? "R3" : r4 ? "R4" : r5 ? "R5" : "SI";
  }
  return out;
}

}  // namespace oracle
