// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_TOOLS_RUN_CONFIG_HPP
#define THERMOSEMI_TOOLS_RUN_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>
#include <thermosemi/params.hpp>
#include <thermosemi/spectrum.hpp>

namespace thermosemi::cli
{

enum class Command
{
  Region,
  Witness,
  Scan,
  Simulate,
  Abscissa,
  Report
};

std::string_view to_string(Command c);

//
// Resolved run configuration. Sources in increasing precedence: built-in defaults, --preset,
// the --config file, command-line flags.
//
// Config file: UTF-8 key=value lines, '#' comments. Global keys (preset, kind, alpha, beta, a,
// kappa, tau, xi, spectrum, out, plot) come first; command keys live in a section named after
// the command, e.g.
//
//   kind = "DelayHyperbolic"
//   spectrum = "string"
//   [witness]
//   indices = "16,64,256,1024"
//
// A section selects its command when none is given on the command line.
//
struct RunConfig
{
  Command command = Command::Region;
  std::string preset;
  ModelParams params;
  SpectrumSpec spectrum;
  std::string out_dir = ".";
  bool plot = false;

  // region
  int grid = 101;

  // witness, report
  std::vector<long> indices{16, 64, 256, 1024};
  std::optional<double> delta;

  // scan
  std::vector<double> lambdas{1e2, 1e3, 1e4};
  int K = 0;
  long n_max = 64;

  // simulate
  long modes = 32;
  double horizon = 40.0;
  int steps_per_delay = 64;
  double fit_start = 20.0;
  double fit_end = 40.0;
  std::string fit_model = "exponential";
  bool upwind_check = false;
  double init_scale = 1.0;

  // abscissa, report
  std::vector<double> mus{1e1, 1e2, 1e3, 1e4};
  std::optional<double> re_min;
  std::optional<double> re_max;
  std::optional<double> im_max;
  int samples = 64;
  double tolerance = 1e-10;

  bool operator==(const RunConfig &) const = default;
};

// Parses argv-style arguments (without the program name). Throws ValidationError on bad input;
// help requests throw HelpRequested carrying the text to print.
RunConfig parse_arguments(const std::vector<std::string> &args);

struct HelpRequested
{
  std::string text;
};

// Checks module preconditions for the selected command; throws an InputError naming the
// failing precondition.
void validate(const RunConfig &config);

// Serializes to the config format; parse_arguments({"--config", file}) yields an equal
// RunConfig.
std::string echo(const RunConfig &config);

}  // namespace thermosemi::cli

#endif  // THERMOSEMI_TOOLS_RUN_CONFIG_HPP
