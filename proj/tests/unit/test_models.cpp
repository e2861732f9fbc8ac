// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <thermosemi/error.hpp>
#include <thermosemi/models.hpp>
#include <thermosemi/region.hpp>
#include <thermosemi/witness.hpp>

using namespace thermosemi;

TEST_CASE("preset examples")
{
  const Preset plate = preset("plate-1d");
  CHECK(plate.params.kind == SystemKind::DelayHyperbolic);
  CHECK(plate.params.beta == 0.5);
  CHECK(plate.params.alpha == 0.5);
  const auto label = classify_region(plate.params.beta, plate.params.alpha);
  CHECK(label.s_class == SClass::S);
  CHECK(label.in_q);
  CHECK(make_spectrum(plate.spectrum).eigenvalue(2) == doctest::Approx(16.0));

  CHECK(make_spectrum(preset("beam").spectrum).eigenvalue(2) == doctest::Approx(16.0));
  PresetGeometry g;
  g.length = 2.0 * std::acos(-1.0);
  CHECK(make_spectrum(preset("beam", g).spectrum).eigenvalue(2) == doctest::Approx(1.0));

  const Preset string = preset("string");
  CHECK(string.params.kind == SystemKind::DelayedDampingString);
  CHECK(make_spectrum(string.spectrum).eigenvalue(3) == doctest::Approx(9.0));

  PresetGeometry power;
  power.power = 3.0;
  power.kind = SystemKind::DelayParabolic;
  const Preset abstract = preset("abstract-power", power);
  CHECK(abstract.params.kind == SystemKind::DelayParabolic);
  CHECK(make_spectrum(abstract.spectrum).eigenvalue(2) == doctest::Approx(8.0));

  CHECK_THROWS_AS(preset("membrane"), ValidationError);
}

TEST_CASE("every preset lies in Q and certifies a positive witness limit")
{
  for (const std::string &name : preset_names())
  {
    const Preset p = preset(name);
    INFO("preset=", name);
    CHECK(p.params.in_q());
    CHECK_NOTHROW(p.params.validate());
    CHECK_FALSE(p.notes.empty());
    CHECK(to_config(p).find(std::string(to_string(p.params.kind))) != std::string::npos);
    if (p.params.kind == SystemKind::DelayedDampingString)
    {
      const auto w = string_witness(1001, p.params.a, p.params.tau);
      CHECK(w.row.ratio > 0.0);
      continue;
    }
    const auto sweep = witness_sweep(p.params, make_spectrum(p.spectrum), {16, 64, 256, 1024});
    CHECK(sweep.limit_estimate > 0.0);
    CHECK(sweep.max_relative_residual <= 1e-9);
  }
}
