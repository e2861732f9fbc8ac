// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/models.hpp"

#include <numbers>
#include <sstream>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"

namespace thermosemi
{

Preset preset(const std::string &name, const PresetGeometry &geometry)
{
  Preset p;
  p.name = name;
  if (name == "plate-1d")
  {
    p.params.kind = SystemKind::DelayHyperbolic;
    p.params.alpha = 0.5;
    p.params.beta = 0.5;
    p.spectrum.kind = SpectrumSpec::Kind::Plate;
    p.notes = "u_tt + D^4 u(t-tau) + a D^4 u_t + D^2 theta = 0, theta_t - D^2 theta - D^2 u_t = 0 "
              "on (0,pi), hinged; A = D^4 with mu_n = n^4";
  }
  else if (name == "string")
  {
    p.params.kind = SystemKind::DelayedDampingString;
    p.params.alpha = 1.0;
    p.params.beta = 0.5;
    p.spectrum.kind = SpectrumSpec::Kind::String;
    p.notes = "u_tt - u_xx - a u_xxt(t-tau) + theta_x = 0, theta_t - theta_xx + u_xt = 0 on "
              "(0,pi); u ~ sin(nx), theta ~ cos(nx), n >= 1 (the zero-mean mode n = 0 is "
              "excluded); witnesses use odd n";
  }
  else if (name == "beam")
  {
    p.params.kind = SystemKind::DelayParabolic;
    p.params.alpha = 0.5;
    p.params.beta = 0.5;
    p.params.a = 2.0;
    p.params.kappa = 1.0;
    p.spectrum.kind = SpectrumSpec::Kind::Beam;
    p.spectrum.length = geometry.length.value_or(std::numbers::pi);
    p.notes = "u_tt + u_xxxx - theta_xx = 0, theta_t - a theta_xx - kappa theta_xx(t-tau) + "
              "u_xxt = 0 on (0,L), hinged; mu_n = (n pi / L)^4";
  }
  else if (name == "abstract-power")
  {
    p.params.kind = geometry.kind.value_or(SystemKind::DelayHyperbolic);
    p.spectrum.kind = SpectrumSpec::Kind::Power;
    p.spectrum.c = 1.0;
    p.spectrum.s = geometry.power.value_or(2.0);
    p.notes = "abstract operator with mu_n = n^s";
  }
  else
  {
    throw ValidationError("unknown preset '" + name + "'");
  }
  make_spectrum(p.spectrum);
  p.params.validate();
  return p;
}

std::vector<std::string> preset_names()
{
  return {"plate-1d", "string", "beam", "abstract-power"};
}

std::string to_config(const Preset &p)
{
  std::ostringstream out;
  out << "# preset " << p.name << ": " << p.notes << "\n";
  out << "kind = \"" << to_string(p.params.kind) << "\"\n";
  out << "alpha = " << format_double(p.params.alpha) << "\n";
  out << "beta = " << format_double(p.params.beta) << "\n";
  out << "a = " << format_double(p.params.a) << "\n";
  out << "kappa = " << format_double(p.params.kappa) << "\n";
  out << "tau = " << format_double(p.params.tau) << "\n";
  out << "xi = " << format_double(p.params.xi) << "\n";
  out << "spectrum = \"" << p.spectrum.to_string() << "\"\n";
  return out.str();
}

}  // namespace thermosemi
