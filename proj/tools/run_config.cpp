// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <CLI11.hpp>
#include <thermosemi/error.hpp>
#include <thermosemi/io.hpp>
#include <thermosemi/models.hpp>
#include <thermosemi/witness.hpp>

namespace thermosemi::cli
{

namespace
{

// Values as read, before precedence is applied.
struct Raw
{
  std::optional<std::string> preset, kind, spectrum, out;
  std::optional<double> alpha, beta, a, kappa, tau, xi;
  bool plot = false;
  std::optional<int> grid;
  std::optional<std::string> indices, report_indices;
  std::optional<double> delta, report_delta;
  std::optional<std::string> lambdas;
  std::optional<int> K;
  std::optional<long> n_max;
  std::optional<long> modes;
  std::optional<double> horizon;
  std::optional<int> steps_per_delay;
  std::optional<double> fit_start, fit_end;
  std::optional<std::string> fit_model;
  bool upwind_check = false;
  std::optional<double> init_scale;
  std::optional<std::string> mus, report_mus;
  std::optional<double> re_min, re_max, im_max;
  std::optional<int> samples;
  std::optional<double> tolerance;
};

template <class T>
void assign_if(const std::optional<T> &from, T &to)
{
  if (from)
  {
    to = *from;
  }
}

std::vector<long> to_longs(const std::vector<std::size_t> &v)
{
  return {v.begin(), v.end()};
}

std::string join(const std::vector<long> &v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); i++)
  {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s;
}

std::string join(const std::vector<double> &v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); i++)
  {
    s += (i ? "," : "") + format_double(v[i]);
  }
  return s;
}

std::string quoted(const std::string &s)
{
  return "\"" + s + "\"";
}

}  // namespace

std::string_view to_string(Command c)
{
  switch (c)
  {
    case Command::Region:
      return "region";
    case Command::Witness:
      return "witness";
    case Command::Scan:
      return "scan";
    case Command::Simulate:
      return "simulate";
    case Command::Abscissa:
      return "abscissa";
    case Command::Report:
      return "report";
  }
  return "unknown";
}

RunConfig parse_arguments(const std::vector<std::string> &args)
{
  CLI::App app{"thermosemi: spectral toolkit for delayed abstract thermoelastic systems"};
  app.set_config("--config", "", "Read key=value options from a file (flags take precedence)");
  app.fallthrough();
  app.require_subcommand(0, 1);
  Raw raw;

  app.add_option("--preset", raw.preset, "plate-1d | string | beam | abstract-power");
  app.add_option("--kind", raw.kind,
                 "DelayHyperbolic | DelayParabolic | NoDelayBaseline | DelayedDampingString");
  app.add_option("--alpha", raw.alpha, "Exponent of the thermal dissipation A^alpha");
  app.add_option("--beta", raw.beta, "Coupling exponent A^beta");
  app.add_option("--a", raw.a, "Damping or delay weight a > 0");
  app.add_option("--kappa", raw.kappa, "Delayed thermal weight (DelayParabolic)");
  app.add_option("--tau", raw.tau, "Delay tau > 0");
  app.add_option("--xi", raw.xi, "Energy weight of the transport variable");
  app.add_option("--spectrum", raw.spectrum,
                 "list:v1,v2,.. | power:c,s | string | plate | beam:L");
  app.add_option("--out", raw.out, "Output directory");
  app.add_flag("--plot", raw.plot, "Also write SVG plots");
  bool list_presets = false;
  app.add_flag("--list-presets", list_presets, "Print the presets as config snippets and exit")
      ->configurable(false);

  auto *region = app.add_subcommand("region", "Classify a uniform (beta, alpha) grid");
  region->configurable();
  region->add_option("--grid", raw.grid, "Points per side");

  auto *witness = app.add_subcommand("witness", "Witness sweep along the spectrum");
  witness->configurable();
  witness->add_option("--indices", raw.indices, "Mode indices: 16,64 or 4:9 or 2^4:12");
  witness->add_option("--delta", raw.delta, "Override the small exponent delta");

  auto *scan = app.add_subcommand("scan", "Resolvent lower bounds along the imaginary axis");
  scan->configurable();
  scan->add_option("--lambdas", raw.lambdas, "Increasing positive frequencies");
  scan->add_option("--K", raw.K, "Fourier modes |k| <= K in the trial space");
  scan->add_option("--n-max", raw.n_max, "Number of modes to scan");

  auto *simulate = app.add_subcommand("simulate", "Time-domain energy decay");
  simulate->configurable();
  simulate->add_option("--modes", raw.modes, "Number of retained modes");
  simulate->add_option("--horizon", raw.horizon, "Final time T");
  simulate->add_option("--steps-per-delay", raw.steps_per_delay, "M >= 8");
  simulate->add_option("--fit-start", raw.fit_start, "Start of the fit window");
  simulate->add_option("--fit-end", raw.fit_end, "End of the fit window");
  simulate->add_option("--fit-model", raw.fit_model, "exponential | polynomial");
  simulate->add_flag("--upwind-check", raw.upwind_check,
                     "Cross-check the transport energy with an upwind grid");
  simulate->add_option("--init-scale", raw.init_scale,
                       "Initial data u0_n = scale / (n sqrt(mu_n)), u1 = theta0 = 0");

  auto *abscissa = app.add_subcommand("abscissa", "Per-mode spectral abscissa estimates");
  abscissa->configurable();
  abscissa->add_option("--mu", raw.mus, "Mode eigenvalues");
  abscissa->add_option("--re-min", raw.re_min, "Left edge of the search window");
  abscissa->add_option("--re-max", raw.re_max, "Right edge of the search window");
  abscissa->add_option("--im-max", raw.im_max, "Top edge of the search window");
  abscissa->add_option("--samples", raw.samples, "Initial samples per rectangle edge");
  abscissa->add_option("--tolerance", raw.tolerance, "Root refinement tolerance");

  auto *report = app.add_subcommand("report", "Region, admissibility, witness and abscissa");
  report->configurable();
  report->add_option("--indices", raw.report_indices, "Witness mode indices");
  report->add_option("--delta", raw.report_delta, "Override the small exponent delta");
  report->add_option("--mu", raw.report_mus, "Mode eigenvalues for the abscissa");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try
  {
    app.parse(reversed);
  }
  catch (const CLI::CallForHelp &)
  {
    std::string text = app.help();
    for (const auto *sub : app.get_subcommands())
    {
      text = sub->help();
    }
    throw HelpRequested{text};
  }
  catch (const CLI::CallForAllHelp &)
  {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  }
  catch (const CLI::ParseError &e)
  {
    throw ValidationError(std::string("command line: ") + e.what());
  }

  if (list_presets)
  {
    std::string text;
    for (const std::string &name : preset_names())
    {
      text += to_config(preset(name)) + "\n";
    }
    throw HelpRequested{text};
  }

  RunConfig config;
  const std::pair<CLI::App *, Command> commands[] = {
      {region, Command::Region},     {witness, Command::Witness},
      {scan, Command::Scan},         {simulate, Command::Simulate},
      {abscissa, Command::Abscissa}, {report, Command::Report}};
  int selected = 0;
  for (const auto &[sub, command] : commands)
  {
    if (sub->parsed())
    {
      config.command = command;
      selected++;
    }
  }
  if (selected != 1)
  {
    throw ValidationError(
        "exactly one command is required: region, witness, scan, simulate, abscissa, report");
  }

  if (raw.preset)
  {
    PresetGeometry geometry;
    if (raw.kind && *raw.preset == "abstract-power")
    {
      geometry.kind = parse_system_kind(*raw.kind);
    }
    const Preset p = preset(*raw.preset, geometry);
    config.preset = p.name;
    config.params = p.params;
    config.spectrum = p.spectrum;
  }
  if (raw.kind)
  {
    config.params.kind = parse_system_kind(*raw.kind);
  }
  assign_if(raw.alpha, config.params.alpha);
  assign_if(raw.beta, config.params.beta);
  assign_if(raw.a, config.params.a);
  assign_if(raw.kappa, config.params.kappa);
  assign_if(raw.tau, config.params.tau);
  assign_if(raw.xi, config.params.xi);
  if (raw.spectrum)
  {
    config.spectrum = SpectrumSpec::parse(*raw.spectrum);
  }
  assign_if(raw.out, config.out_dir);
  config.plot = raw.plot;

  assign_if(raw.grid, config.grid);
  if (config.command == Command::Report)
  {
    raw.indices = raw.report_indices;
    raw.delta = raw.report_delta;
    raw.mus = raw.report_mus;
  }
  if (raw.indices)
  {
    config.indices = to_longs(parse_index_list(*raw.indices));
  }
  config.delta = raw.delta;
  if (raw.lambdas)
  {
    config.lambdas = parse_double_list(*raw.lambdas);
  }
  assign_if(raw.K, config.K);
  assign_if(raw.n_max, config.n_max);
  assign_if(raw.modes, config.modes);
  assign_if(raw.horizon, config.horizon);
  assign_if(raw.steps_per_delay, config.steps_per_delay);
  assign_if(raw.fit_start, config.fit_start);
  assign_if(raw.fit_end, config.fit_end);
  assign_if(raw.fit_model, config.fit_model);
  config.upwind_check = raw.upwind_check;
  assign_if(raw.init_scale, config.init_scale);
  if (raw.mus)
  {
    config.mus = parse_double_list(*raw.mus);
  }
  config.re_min = raw.re_min;
  config.re_max = raw.re_max;
  config.im_max = raw.im_max;
  assign_if(raw.samples, config.samples);
  assign_if(raw.tolerance, config.tolerance);
  return config;
}

void validate(const RunConfig &c)
{
  c.params.validate();
  const Spectrum spectrum = make_spectrum(c.spectrum);
  auto need = [](bool ok, const std::string &what)
  {
    if (!ok)
    {
      throw ValidationError("precondition failed: " + what);
    }
  };
  auto within_spectrum = [&](long n, const std::string &what)
  {
    need(!spectrum.finite() || n <= static_cast<long>(spectrum.size()),
         what + " <= number of listed eigenvalues");
  };
  switch (c.command)
  {
    case Command::Region:
      need(c.grid >= 2, "grid >= 2");
      break;
    case Command::Report:
    case Command::Witness:
      need(!c.indices.empty(), "indices nonempty");
      for (std::size_t i = 0; i < c.indices.size(); i++)
      {
        need(c.indices[i] >= 1 && (i == 0 || c.indices[i] > c.indices[i - 1]),
             "indices positive and increasing");
      }
      within_spectrum(c.indices.back(), "largest index");
      if (c.command == Command::Witness)
      {
        if (c.params.kind == SystemKind::DelayedDampingString)
        {
          for (long n : c.indices)
          {
            need(n % 2 == 1, "string witness indices odd");
          }
        }
        else
        {
          select_exponents(c.params, c.delta);
        }
      }
      if (c.command == Command::Report)
      {
        for (double mu : c.mus)
        {
          need(mu > 0.0, "mu > 0");
        }
      }
      break;
    case Command::Scan:
      need(c.K >= 0, "K >= 0");
      need(c.n_max >= 1, "n-max >= 1");
      within_spectrum(c.n_max, "n-max");
      for (std::size_t i = 0; i < c.lambdas.size(); i++)
      {
        need(c.lambdas[i] > 0.0 && (i == 0 || c.lambdas[i] > c.lambdas[i - 1]),
             "lambdas positive and increasing");
      }
      break;
    case Command::Simulate:
      need(c.modes >= 1, "modes >= 1");
      within_spectrum(c.modes, "modes");
      need(c.horizon > 0.0, "horizon > 0");
      need(c.steps_per_delay >= 8, "steps-per-delay >= 8");
      need(c.fit_model == "exponential" || c.fit_model == "polynomial",
           "fit-model is exponential or polynomial");
      need(c.fit_start < c.fit_end && c.fit_start >= 0.0 && c.fit_end <= c.horizon,
           "0 <= fit-start < fit-end <= horizon");
      need(c.fit_model == "exponential" || c.fit_start > 0.0,
           "fit-start > 0 for the polynomial fit");
      need(std::isfinite(c.init_scale), "init-scale finite");
      break;
    case Command::Abscissa:
      need(!c.mus.empty(), "mu list nonempty");
      for (double mu : c.mus)
      {
        need(mu > 0.0, "mu > 0");
      }
      need(c.samples >= 4, "samples >= 4");
      need(c.tolerance > 0.0, "tolerance > 0");
      need(!(c.re_min && c.re_max) || *c.re_min < *c.re_max, "re-min < re-max");
      need(!c.im_max || *c.im_max > 0.0, "im-max > 0");
      break;
  }
}

std::string echo(const RunConfig &c)
{
  std::ostringstream out;
  out << "# thermosemi run configuration\n";
  if (!c.preset.empty())
  {
    out << "preset = " << quoted(c.preset) << "\n";
  }
  out << "kind = " << quoted(std::string(to_string(c.params.kind))) << "\n";
  out << "alpha = " << format_double(c.params.alpha) << "\n";
  out << "beta = " << format_double(c.params.beta) << "\n";
  out << "a = " << format_double(c.params.a) << "\n";
  out << "kappa = " << format_double(c.params.kappa) << "\n";
  out << "tau = " << format_double(c.params.tau) << "\n";
  out << "xi = " << format_double(c.params.xi) << "\n";
  out << "spectrum = " << quoted(c.spectrum.to_string()) << "\n";
  out << "out = " << quoted(c.out_dir) << "\n";
  out << "plot = " << (c.plot ? "true" : "false") << "\n";
  out << "[" << to_string(c.command) << "]\n";
  switch (c.command)
  {
    case Command::Region:
      out << "grid = " << c.grid << "\n";
      break;
    case Command::Witness:
    case Command::Report:
      out << "indices = " << quoted(join(c.indices)) << "\n";
      if (c.delta)
      {
        out << "delta = " << format_double(*c.delta) << "\n";
      }
      if (c.command == Command::Report)
      {
        out << "mu = " << quoted(join(c.mus)) << "\n";
      }
      break;
    case Command::Scan:
      out << "lambdas = " << quoted(join(c.lambdas)) << "\n";
      out << "K = " << c.K << "\n";
      out << "n-max = " << c.n_max << "\n";
      break;
    case Command::Simulate:
      out << "modes = " << c.modes << "\n";
      out << "horizon = " << format_double(c.horizon) << "\n";
      out << "steps-per-delay = " << c.steps_per_delay << "\n";
      out << "fit-start = " << format_double(c.fit_start) << "\n";
      out << "fit-end = " << format_double(c.fit_end) << "\n";
      out << "fit-model = " << quoted(c.fit_model) << "\n";
      out << "upwind-check = " << (c.upwind_check ? "true" : "false") << "\n";
      out << "init-scale = " << format_double(c.init_scale) << "\n";
      break;
    case Command::Abscissa:
      out << "mu = " << quoted(join(c.mus)) << "\n";
      if (c.re_min)
      {
        out << "re-min = " << format_double(*c.re_min) << "\n";
      }
      if (c.re_max)
      {
        out << "re-max = " << format_double(*c.re_max) << "\n";
      }
      if (c.im_max)
      {
        out << "im-max = " << format_double(*c.im_max) << "\n";
      }
      out << "samples = " << c.samples << "\n";
      out << "tolerance = " << format_double(c.tolerance) << "\n";
      break;
  }
  return out.str();
}

}  // namespace thermosemi::cli
