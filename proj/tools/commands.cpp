// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thermosemi/characteristic.hpp>
#include <thermosemi/dynamics.hpp>
#include <thermosemi/error.hpp>
#include <thermosemi/io.hpp>
#include <thermosemi/region.hpp>
#include <thermosemi/witness.hpp>
#include "svg.hpp"

namespace thermosemi::cli
{

namespace
{

namespace fs = std::filesystem;

void write_file(const fs::path &path, const std::string &content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ValidationError("cannot write " + path.string());
  }
  out << content;
  if (!out)
  {
    throw ValidationError("write failed for " + path.string());
  }
}

std::string dump(const nlohmann::json &j)
{
  return j.dump(2) + "\n";
}

nlohmann::json params_json(const ModelParams &p)
{
  return {{"kind", std::string(to_string(p.kind))},
          {"alpha", p.alpha},
          {"beta", p.beta},
          {"a", p.a},
          {"kappa", p.kappa},
          {"tau", p.tau},
          {"xi", p.xi}};
}

nlohmann::json region_json(const RegionLabel &l)
{
  return {{"s_class", std::string(to_string(l.s_class))},
          {"r_class", std::string(to_string(l.r_class))},
          {"in_q", l.in_q},
          {"expected_regularity", l.expected_regularity},
          {"expected_stability", l.expected_stability}};
}

WitnessSweep sweep_for(const RunConfig &c, const Spectrum &spectrum)
{
  if (c.params.kind != SystemKind::DelayedDampingString)
  {
    return witness_sweep(c.params, spectrum, c.indices, c.delta);
  }
  WitnessSweep sweep;
  std::vector<double> n;
  std::vector<double> r;
  for (long index : c.indices)
  {
    const auto row = string_witness(index, c.params.a, c.params.tau, c.params.xi).row;
    sweep.rows.push_back(row);
    n.push_back(static_cast<double>(index));
    r.push_back(row.ratio);
    sweep.max_relative_residual =
        std::max(sweep.max_relative_residual, row.residual / row.norm_F);
  }
  sweep.min_ratio = *std::min_element(r.begin(), r.end());
  sweep.limit_estimate = richardson_limit(n, r);
  sweep.certified = sweep.limit_estimate > 0.0 && sweep.max_relative_residual <= 1e-9;
  return sweep;
}

void run_region(const RunConfig &c, const fs::path &dir, std::ostream &log)
{
  const auto rows = region_table(c.grid);
  std::ostringstream csv;
  write_region_csv(csv, rows);
  write_file(dir / "region.csv", csv.str());
  std::map<std::string, int> counts;
  for (const auto &r : rows)
  {
    counts[std::string(to_string(r.label.s_class))]++;
  }
  log << "region: " << rows.size() << " points";
  for (const auto &[k, v] : counts)
  {
    log << ", " << k << "=" << v;
  }
  log << "\n";
  const RegionLabel here = classify_region(c.params.beta, c.params.alpha);
  log << "(beta, alpha) = (" << format_double(c.params.beta) << ", "
      << format_double(c.params.alpha) << "): " << to_string(here.s_class) << " / "
      << to_string(here.r_class) << ", " << here.expected_regularity << ", "
      << here.expected_stability << "\n";
  if (c.plot)
  {
    write_file(dir / "region.svg", region_map_svg(rows, c.grid));
  }
}

void run_witness(const RunConfig &c, const Spectrum &spectrum, const fs::path &dir,
                 std::ostream &log)
{
  const WitnessSweep sweep = sweep_for(c, spectrum);
  std::ostringstream csv;
  write_witness_csv(csv, sweep.rows);
  write_file(dir / "witness.csv", csv.str());
  nlohmann::json summary = witness_summary(sweep, c.params);
  if (c.params.kind == SystemKind::DelayedDampingString)
  {
    summary["case"] = "string";
  }
  write_file(dir / "witness_summary.json", dump(summary));
  log << "witness: limit_estimate = " << format_double(sweep.limit_estimate)
      << " (tau/sqrt(3) = " << format_double(c.params.tau / std::sqrt(3.0))
      << "), certified = " << (sweep.certified ? "true" : "false") << "\n";
  if (c.plot)
  {
    Series s{"ratio", {}, {}, "#1f77b4", true};
    for (const auto &row : sweep.rows)
    {
      s.x.push_back(static_cast<double>(row.n));
      s.y.push_back(row.ratio);
    }
    Axes axes{"Witness ratio ||U_n|| / ||F_n||", "n", "ratio", true, false,
              c.params.tau / std::sqrt(3.0), true, "tau/sqrt(3)"};
    write_file(dir / "witness_ratio.svg", line_plot_svg(axes, {s}));
  }
}

void run_scan(const RunConfig &c, const Spectrum &spectrum, const fs::path &dir,
              std::ostream &log)
{
  const auto rows = resolvent_scan(c.params, spectrum, c.lambdas, c.K, c.n_max);
  std::ostringstream csv;
  write_scan_csv(csv, rows);
  write_file(dir / "scan.csv", csv.str());
  for (const auto &r : rows)
  {
    log << "scan: lambda = " << format_double(r.lambda) << ", sup_lb = "
        << format_double(r.sup_lb) << " (mode " << r.argmax_n << ", "
        << r.skipped_modes.size() << " skipped)\n";
  }
  if (c.plot)
  {
    Series s{"sup LB", {}, {}, "#d62728", true};
    for (const auto &r : rows)
    {
      s.x.push_back(r.lambda);
      s.y.push_back(r.sup_lb);
    }
    Axes axes{"Resolvent lower bound along i*lambda", "lambda", "sup over modes", true, true, 0.0, false, ""};
    write_file(dir / "scan.svg", line_plot_svg(axes, {s}));
  }
}

void run_simulate(const RunConfig &c, const Spectrum &spectrum, const fs::path &dir,
                  std::ostream &log)
{
  std::string reason;
  const bool hypotheses = stability_hypotheses_hold(c.params, &reason);
  if (!hypotheses)
  {
    log << "warning: stability hypotheses unmet (" << reason
        << "); the fit is reported without asserting stability\n";
  }
  SimulationSetup setup;
  setup.n_modes = c.modes;
  setup.horizon = c.horizon;
  setup.steps_per_delay = c.steps_per_delay;
  setup.upwind_check = c.upwind_check;
  for (long n = 1; n <= c.modes; n++)
  {
    const double mu = spectrum.eigenvalue(static_cast<std::size_t>(n));
    setup.initial.push_back({c.init_scale / (static_cast<double>(n) * std::sqrt(mu)), 0.0, 0.0});
  }
  const Trajectory traj = simulate(c.params, spectrum, setup);
  for (const auto &w : traj.warnings)
  {
    log << "warning: " << w << "\n";
  }
  std::ostringstream csv;
  write_trajectory_csv(csv, traj);
  write_file(dir / "trajectory.csv", csv.str());

  double worst = 0.0;
  for (std::size_t i = 1; i < traj.total_energy.size(); i++)
  {
    if (traj.total_energy[i - 1] > 0.0)
    {
      worst = std::max(worst, (traj.total_energy[i] - traj.total_energy[i - 1]) /
                                  traj.total_energy[i - 1]);
    }
  }
  const DecayModel model =
      c.fit_model == "polynomial" ? DecayModel::Polynomial : DecayModel::Exponential;
  nlohmann::json j;
  j["params"] = params_json(c.params);
  j["hypotheses_hold"] = hypotheses;
  if (!hypotheses)
  {
    j["hypotheses_note"] = reason;
  }
  j["max_relative_energy_increase_per_step"] = worst;
  j["energy_nonincreasing"] = worst <= 1e-8;
  const RegionLabel label = classify_region(c.params.beta, c.params.alpha);
  j["region"] = region_json(label);
  j["note"] = "fits describe the truncated " + std::to_string(c.modes) +
              "-mode system; the infinite-system polynomial order is not reproduced at finite "
              "truncation";
  try
  {
    const DecayFit fit = fit_decay(traj, c.fit_start, c.fit_end, model);
    j["fit"] = to_json(fit);
    log << "simulate: " << (model == DecayModel::Exponential ? "rate " : "order ")
        << format_double(fit.value) << ", R^2 "
        << (fit.quality_defined ? format_double(fit.fit_quality) : std::string("undefined"))
        << ", max per-step energy increase " << format_double(worst) << "\n";
  }
  catch (const FitUndefinedError &e)
  {
    j["fit"] = nullptr;
    j["fit_error"] = e.what();
    log << "simulate: fit undefined (" << e.what() << ")\n";
  }
  if (!traj.upwind_total_energy.empty())
  {
    double dev = 0.0;
    for (std::size_t i = 0; i < traj.total_energy.size(); i++)
    {
      if (traj.total_energy[i] > 0.0)
      {
        dev = std::max(dev, std::abs(traj.upwind_total_energy[i] - traj.total_energy[i]) /
                                traj.total_energy[i]);
      }
    }
    j["upwind_max_relative_deviation"] = dev;
  }
  write_file(dir / "decay_fit.json", dump(j));
  if (c.plot)
  {
    Series s{"E_total", traj.times, traj.total_energy, "#2ca02c", false};
    Axes axes{"Total energy", "t", "E(t)", false, true, 0.0, false, ""};
    write_file(dir / "energy.svg", line_plot_svg(axes, {s}));
  }
}

nlohmann::json abscissa_entry(const ModelParams &p, double mu, const AbscissaSearch &search)
{
  const AbscissaResult r = spectral_abscissa_estimate(p, mu, search);
  return {{"mu", mu},
          {"abscissa", r.abscissa},
          {"root", {{"re", r.root.real()}, {"im", r.root.imag()}}},
          {"residual", r.residual},
          {"diagnostics", r.diagnostics}};
}

AbscissaSearch search_for(const RunConfig &c)
{
  AbscissaSearch s;
  s.re_min = c.re_min;
  s.re_max = c.re_max;
  s.im_max = c.im_max;
  s.samples_per_edge = c.samples;
  s.tolerance = c.tolerance;
  return s;
}

void run_abscissa(const RunConfig &c, const fs::path &dir, std::ostream &log)
{
  nlohmann::json entries = nlohmann::json::array();
  Series s{"-abscissa", {}, {}, "#9467bd", true};
  for (double mu : c.mus)
  {
    try
    {
      entries.push_back(abscissa_entry(c.params, mu, search_for(c)));
    }
    catch (const NotFoundError &e)
    {
      entries.push_back({{"mu", mu},
                         {"error", e.what()},
                         {"diagnostics", nlohmann::json::parse(e.diagnostics())}});
      write_file(dir / "abscissa.json", dump({{"params", params_json(c.params)},
                                              {"results", entries}}));
      throw;
    }
    const double x = entries.back()["abscissa"].get<double>();
    log << "abscissa: mu = " << format_double(mu) << " -> " << format_double(x) << "\n";
    s.x.push_back(mu);
    s.y.push_back(-x);
  }
  write_file(dir / "abscissa.json",
             dump({{"params", params_json(c.params)}, {"results", entries}}));
  if (c.plot)
  {
    Axes axes{"Distance of the rightmost root from the imaginary axis", "mu", "-abscissa",
              true, true, 0.0, false, ""};
    write_file(dir / "abscissa.svg", line_plot_svg(axes, {s}));
  }
}

void run_report(const RunConfig &c, const Spectrum &spectrum, const fs::path &dir,
                std::ostream &log)
{
  nlohmann::json j;
  j["params"] = params_json(c.params);
  j["spectrum"] = spectrum.description();
  const RegionLabel label = classify_region(c.params.beta, c.params.alpha);
  j["region"] = region_json(label);
  std::string reason;
  j["stability_hypotheses_hold"] = stability_hypotheses_hold(c.params, &reason);
  try
  {
    j["xi_admissible"] = xi_admissible(c.params).to_string();
  }
  catch (const AdmissibilityError &e)
  {
    j["xi_admissible"] = nullptr;
    j["xi_admissible_error"] = e.what();
  }
  try
  {
    const WitnessSweep sweep = sweep_for(c, spectrum);
    j["witness"] = witness_summary(sweep, c.params);
  }
  catch (const Error &e)
  {
    j["witness"] = {{"error", e.what()}};
  }
  nlohmann::json abscissa = nlohmann::json::array();
  for (double mu : c.mus)
  {
    try
    {
      nlohmann::json e = abscissa_entry(c.params, mu, search_for(c));
      e.erase("diagnostics");
      abscissa.push_back(e);
    }
    catch (const NumericalError &e)
    {
      abscissa.push_back({{"mu", mu}, {"error", e.what()}});
    }
  }
  j["abscissa"] = abscissa;
  write_file(dir / "report.json", dump(j));

  std::ostringstream md;
  md << "# thermosemi report\n\n";
  md << "| parameter | value |\n|---|---|\n";
  for (const auto &[k, v] : j["params"].items())
  {
    md << "| " << k << " | " << (v.is_string() ? v.get<std::string>() : v.dump()) << " |\n";
  }
  md << "\nRegion: " << to_string(label.s_class) << " / " << to_string(label.r_class)
     << ". Expected: " << label.expected_regularity << ", " << label.expected_stability
     << ".\n\n";
  md << "Admissible xi: " << (j["xi_admissible"].is_null()
                                  ? j["xi_admissible_error"].get<std::string>()
                                  : j["xi_admissible"].get<std::string>())
     << "\n\n";
  if (j["witness"].contains("limit_estimate"))
  {
    md << "Witness limit estimate: " << format_double(j["witness"]["limit_estimate"])
       << " (" << j["witness"]["conclusion"].get<std::string>() << ")\n\n";
  }
  else
  {
    md << "Witness: " << j["witness"]["error"].get<std::string>() << "\n\n";
  }
  md << "| mu | spectral abscissa |\n|---|---|\n";
  for (const auto &e : abscissa)
  {
    md << "| " << format_double(e["mu"]) << " | "
       << (e.contains("abscissa") ? format_double(e["abscissa"])
                                  : e["error"].get<std::string>())
       << " |\n";
  }
  write_file(dir / "report.md", md.str());
  log << "report: written to " << (dir / "report.md").string() << "\n";
}

}  // namespace

void run(const RunConfig &config, std::ostream &log)
{
  validate(config);
  const fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
  {
    throw ValidationError("output directory " + dir.string() + " is not writable");
  }
  write_file(dir / "config.ini", echo(config));
  const Spectrum spectrum = make_spectrum(config.spectrum);
  switch (config.command)
  {
    case Command::Region:
      run_region(config, dir, log);
      break;
    case Command::Witness:
      run_witness(config, spectrum, dir, log);
      break;
    case Command::Scan:
      run_scan(config, spectrum, dir, log);
      break;
    case Command::Simulate:
      run_simulate(config, spectrum, dir, log);
      break;
    case Command::Abscissa:
      run_abscissa(config, dir, log);
      break;
    case Command::Report:
      run_report(config, spectrum, dir, log);
      break;
  }
}

int exit_code_for(const std::exception &e)
{
  if (dynamic_cast<const InputError *>(&e))
  {
    return 2;
  }
  if (dynamic_cast<const NumericalError *>(&e))
  {
    return 3;
  }
  return 1;
}

}  // namespace thermosemi::cli
