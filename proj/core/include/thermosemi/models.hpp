// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_MODELS_HPP
#define THERMOSEMI_MODELS_HPP

#include <optional>
#include <string>
#include <vector>
#include "thermosemi/params.hpp"
#include "thermosemi/spectrum.hpp"

namespace thermosemi
{

struct Preset
{
  std::string name;
  ModelParams params;
  SpectrumSpec spectrum;
  std::string notes;
};

struct PresetGeometry
{
  std::optional<double> length;  // beam length L, default π
  std::optional<double> power;   // abstract-power exponent s, default 2
  std::optional<SystemKind> kind;  // abstract-power kind, default DelayHyperbolic
};

//   plate-1d        DelayHyperbolic, (β,α) = (1/2,1/2), μ_n = n⁴ (hinged Δ² on (0,π))
//   string          DelayedDampingString, μ_n = n², witnesses on odd n
//   beam            DelayParabolic, (β,α) = (1/2,1/2), μ_n = (nπ/L)⁴
//   abstract-power  caller-chosen kind, μ_n = n^s
// Throws ValidationError for an unknown name.
Preset preset(const std::string &name, const PresetGeometry &geometry = {});

std::vector<std::string> preset_names();

// Global key=value lines of the frontend config format.
std::string to_config(const Preset &p);

}  // namespace thermosemi

#endif  // THERMOSEMI_MODELS_HPP
