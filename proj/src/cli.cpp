// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include "photostat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "photostat/cavity.hpp"
#include "photostat/distributions.hpp"
#include "photostat/error.hpp"
#include "photostat/montecarlo.hpp"
#include "photostat/planck.hpp"
#include "photostat/report.hpp"
#include "photostat/transmission.hpp"

#ifndef PHOTOSTAT_VERSION
#define PHOTOSTAT_VERSION "0.0.0"
#endif

namespace photostat {
namespace {

constexpr std::uint64_t kDefaultTrials = 1'000'000;
constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string format = "csv";
  std::string model;
  double mean = 0.0;
  double a = 1.0;
  double tail_tol = kDefaultTailTolerance;
  std::optional<std::size_t> imax;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  bool cavity = false;
  std::optional<std::size_t> cutoff;
  unsigned threads = 0;
  std::vector<double> a_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::optional<double> x;
  std::optional<double> omega;
  std::optional<double> temperature;
};

OutputFormat parse_format(const std::string& f) {
  return f == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

OutputDocument start_document(const std::string& command) {
  OutputDocument doc;
  doc.add_metadata("tool", "photostat");
  doc.add_metadata("version", PHOTOSTAT_VERSION);
  doc.add_metadata("command", command);
  return doc;
}

double z_score(double estimate, double analytic, double std_error) {
  if (std_error > 0.0) {
    return (estimate - analytic) / std_error;
  }
  if (estimate == analytic) {
    return 0.0;
  }
  return estimate > analytic ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity();
}

void add_moment_summary(OutputDocument& doc, const std::string& prefix,
                        const MomentReport& m) {
  doc.add_summary(prefix + "mean", m.mean);
  doc.add_summary(prefix + "second_moment", m.second_moment);
  doc.add_summary(prefix + "variance", m.variance);
  doc.add_summary(prefix + "fano_factor",
                  m.fano_factor ? Value(*m.fano_factor) : Value());
}

OutputDocument cmd_pmf(const Options& o) {
  const MeanOccupancy mean(o.mean);
  const auto p = bose_einstein_pmf(mean, o.tail_tol);
  auto doc = start_document("pmf");
  doc.add_metadata("mean", o.mean);
  doc.add_metadata("tail_tol", o.tail_tol);
  doc.add_metadata("n_max", p.n_max());
  doc.add_metadata("tail_mass", p.tail_mass());
  doc.set_columns({"n", "probability"});
  for (std::size_t n = 0; n < p.size(); ++n) {
    doc.add_row({n, p[n]});
  }
  add_moment_summary(doc, "", pmf_moments(p));
  doc.add_summary("einstein_second_moment", einstein_second_moment(mean));
  return doc;
}

OutputDocument cmd_transmit(const Options& o) {
  const auto model = parse_transmission_model(o.model);
  const MeanOccupancy mean(o.mean);
  const Transmittance a(o.a);
  const auto p_in = bose_einstein_pmf(mean, o.tail_tol);
  const auto p_out = model == TransmissionModel::Independent
                         ? independent_transmit_closed_form(mean, a, o.tail_tol)
                         : wave_transmit(p_in, a);

  auto doc = start_document("transmit");
  doc.add_metadata("model", std::string(to_string(model)));
  doc.add_metadata("mean", o.mean);
  doc.add_metadata("a", o.a);
  doc.add_metadata("tail_tol", o.tail_tol);
  doc.add_metadata("tail_mass_in", p_in.tail_mass());
  doc.add_metadata("tail_mass_out", p_out.tail_mass());
  doc.set_columns({"n", "p_in", "p_out"});
  const std::size_t support = std::max(p_in.size(), p_out.size());
  for (std::size_t n = 0; n < support; ++n) {
    doc.add_row({n, p_in[n], p_out[n]});
  }
  add_moment_summary(doc, "in.", pmf_moments(p_in));
  add_moment_summary(doc, "out.", pmf_moments(p_out));
  doc.add_summary("a_times_mean_in", o.a * pmf_moments(p_in).mean);
  doc.add_summary("kirchhoff_residual", kirchhoff_mean_check(p_in, p_out, a));
  return doc;
}

OutputDocument cmd_cavity(const Options& o) {
  const auto model = parse_transmission_model(o.model);
  const MeanOccupancy mean(o.mean);
  const Transmittance a(o.a);
  const auto series = build_bounce_series(model, mean, a, o.imax, o.tail_tol);
  const auto report = model == TransmissionModel::Independent
                          ? independent_cavity_second_moment(mean, a, series.i_max())
                          : wave_cavity_second_moment(mean, a, series.i_max());

  auto doc = start_document("cavity");
  doc.add_metadata("model", std::string(to_string(model)));
  doc.add_metadata("mean", o.mean);
  doc.add_metadata("a", o.a);
  doc.add_metadata("tail_tol", o.tail_tol);
  doc.add_metadata("i_max", series.i_max());
  doc.add_metadata("i_max_rule", o.imax ? "user" : "default");
  doc.set_columns({"i", "weight", "bounce_mean", "bounce_second_moment"});
  for (std::size_t i = 0; i < series.weights.size(); ++i) {
    const auto m = pmf_moments(series.per_bounce[i]);
    doc.add_row({i, series.weights[i], m.mean, m.second_moment});
  }
  doc.add_summary("series_aggregate", report.second_moment_series);
  doc.add_summary("closed_form", report.second_moment_closed);
  doc.add_summary("einstein", einstein_second_moment(mean));
  doc.add_summary("truncation_residual", report.truncation_residual);
  doc.add_summary("residual_weight", series.residual_weight);
  doc.add_summary("energy_series", cavity_energy_series(a, series.i_max()));
  const auto input = bose_einstein_pmf(mean, o.tail_tol);
  if (model == TransmissionModel::Wave) {
    doc.add_summary("decomposition_residual", wave_decomposition_check(series, input));
  } else {
    // The unweighted per-bounce distributions do not add up to the input.
    doc.add_summary("decomposition_residual", Value());
    doc.add_summary("unweighted_bounce_sum_n0", bounce_sum(series, 0));
    doc.add_summary("input_p0", input[0]);
  }
  return doc;
}

OutputDocument cmd_montecarlo(const Options& o) {
  const auto model = parse_transmission_model(o.model);
  const MeanOccupancy mean(o.mean);
  const Transmittance a(o.a);
  const double m = o.mean;
  const double t = o.a;
  if (o.trials < 1) {
    throw DomainError("--trials must be at least 1");
  }

  auto doc = start_document("montecarlo");
  doc.add_metadata("model", std::string(to_string(model)));
  doc.add_metadata("mean", m);
  doc.add_metadata("a", t);
  doc.add_metadata("trials", o.trials);
  doc.add_metadata("seed", o.seed);
  doc.add_metadata("generator", kGeneratorName);
  doc.add_metadata("cavity", o.cavity);
  doc.set_columns(
      {"quantity", "bounce", "count", "estimate", "std_error", "analytic", "z_score"});
  auto row = [&doc](const char* name, Value bounce, std::uint64_t count,
                    double est, double se, double analytic) {
    doc.add_row({name, std::move(bounce), count, est, se, analytic,
                 z_score(est, analytic, se)});
  };

  if (!o.cavity) {
    const auto s = run_transmission_experiment(model, mean, a, o.trials,
                                               RngSeed{o.seed}, o.threads);
    const double second = model == TransmissionModel::Independent
                              ? t * m + 2.0 * t * t * m * m
                              : t * (m + 2.0 * m * m);
    row("output_mean", Value(), s.count, s.mean, s.stderr_mean, t * m);
    row("output_second_moment", Value(), s.count, s.second_moment,
        s.stderr_second_moment, second);
    return doc;
  }

  const std::size_t cutoff = o.cutoff.value_or(default_trial_cutoff(a));
  doc.add_metadata("cutoff", cutoff);
  const auto r = run_cavity_experiment(model, mean, a, o.trials, cutoff,
                                       RngSeed{o.seed}, o.threads);
  const double einstein = einstein_second_moment(mean);
  for (std::size_t i = 0; i < r.per_bounce.size(); ++i) {
    const auto& s = r.per_bounce[i];
    const double w = t * std::pow(1.0 - t, static_cast<double>(i));
    const double mi = w * m;
    const double second = model == TransmissionModel::Independent
                              ? mi + 2.0 * mi * mi
                              : w * einstein;
    row("bounce_mean", i, s.count, s.mean, s.stderr_mean, mi);
    row("bounce_second_moment", i, s.count, s.second_moment,
        s.stderr_second_moment, second);
  }
  const double aggregate_target = model == TransmissionModel::Independent
                                      ? independent_cavity_closed_form(mean, a)
                                      : wave_cavity_closed_form(mean, a);
  row("aggregate_second_moment", Value(), o.trials, r.aggregate_second_moment.value,
      r.aggregate_second_moment.std_error, aggregate_target);
  row("total_escaped_mean", Value(), r.total_escaped.count, r.total_escaped.mean,
      r.total_escaped.stderr_mean, m);
  row("total_escaped_second_moment", Value(), r.total_escaped.count,
      r.total_escaped.second_moment, r.total_escaped.stderr_second_moment, einstein);
  doc.add_summary("residual_trials", r.residual_trials);
  doc.add_summary("residual_photons", r.residual_photons);
  return doc;
}

OutputDocument cmd_compare(const Options& o) {
  const MeanOccupancy mean(o.mean);
  auto doc = start_document("compare");
  doc.add_metadata("mean", o.mean);
  std::string grid;
  for (std::size_t i = 0; i < o.a_grid.size(); ++i) {
    grid += (i ? "," : "") + format_real(o.a_grid[i]);
  }
  doc.add_metadata("a_grid", grid);
  doc.set_columns({"a", "eq13_value", "eq14_value", "deficit"});
  for (double value : o.a_grid) {
    const Transmittance a(value);
    const auto independent = independent_cavity_second_moment(mean, a);
    const auto wave = wave_cavity_second_moment(mean, a);
    doc.add_row({value, independent.second_moment_closed, wave.second_moment_closed,
                 wave.second_moment_closed - independent.second_moment_closed});
  }
  doc.add_summary("einstein", einstein_second_moment(mean));
  return doc;
}

OutputDocument cmd_planck(const Options& o) {
  const Transmittance a(o.a);
  auto doc = start_document("planck");
  doc.add_metadata("a", o.a);
  if (o.x) {
    const ReducedFrequency x(*o.x);
    const double occupancy = mean_occupancy(x).value();
    const double density = reduced_spectral_density(x);
    doc.add_metadata("x", *o.x);
    doc.add_metadata("density_units", "(kT)^3/(pi^2 c^3 hbar^2) per unit x");
    doc.set_columns({"x", "mean_occupancy", "spectral_density", "graybody_density"});
    doc.add_row({x.value(), occupancy, density, o.a * density});
    return doc;
  }
  if (!o.omega || !o.temperature) {
    throw DomainError("planck needs either --x or both --omega and --temperature");
  }
  const auto consts = PhysicalConstants::codata2018();
  const auto x = reduced_frequency(*o.omega, *o.temperature, consts);
  doc.add_metadata("omega", *o.omega);
  doc.add_metadata("temperature", *o.temperature);
  doc.add_metadata("constants", "CODATA 2018");
  doc.add_metadata("hbar", consts.hbar);
  doc.add_metadata("c", consts.c);
  doc.add_metadata("k", consts.k);
  doc.add_metadata("density_units", "J s m^-3 per unit omega");
  doc.set_columns({"x", "mean_occupancy", "spectral_density", "graybody_density"});
  doc.add_row({x.value(), mean_occupancy(x).value(),
               spectral_density(*o.omega, *o.temperature, consts),
               graybody_density(*o.omega, *o.temperature, a, consts)});
  return doc;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_model(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "Transmission hypothesis")
      ->required()
      ->check(CLI::IsMember({"independent", "wave"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Photon-number statistics of thermal light leaving a body surface",
               "photostat"};
  app.set_version_flag("--version", PHOTOSTAT_VERSION);
  app.require_subcommand(1);

  auto* pmf = app.add_subcommand("pmf", "Bose-Einstein photon-number distribution");
  pmf->add_option("--mean", o.mean, "Mean occupancy")->required();
  pmf->add_option("--tail-tol", o.tail_tol, "Tail mass tolerance")->capture_default_str();
  add_format(pmf, o);

  auto* transmit = app.add_subcommand("transmit", "Distribution after one surface crossing");
  add_model(transmit, o);
  transmit->add_option("--mean", o.mean, "Mean occupancy inside the body")->required();
  transmit->add_option("--a", o.a, "Surface transmittance")->required();
  transmit->add_option("--tail-tol", o.tail_tol, "Tail mass tolerance")->capture_default_str();
  add_format(transmit, o);

  auto* cavity = app.add_subcommand("cavity", "Body-mirror cavity bounce series");
  add_model(cavity, o);
  cavity->add_option("--mean", o.mean, "Mean occupancy")->required();
  cavity->add_option("--a", o.a, "Surface transmittance")->required();
  cavity->add_option("--imax", o.imax, "Highest reflection order (default: residual < 1e-12)");
  cavity->add_option("--tail-tol", o.tail_tol, "Tail mass tolerance")->capture_default_str();
  add_format(cavity, o);

  auto* mc = app.add_subcommand("montecarlo", "Monte Carlo moment estimates");
  add_model(mc, o);
  mc->add_option("--mean", o.mean, "Mean occupancy")->required();
  mc->add_option("--a", o.a, "Surface transmittance")->required();
  mc->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  mc->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  mc->add_flag("--cavity", o.cavity, "Simulate multi-bounce cavity escape");
  mc->add_option("--cutoff", o.cutoff, "Bounce cutoff (default: (1-a)^i < 1e-9)");
  mc->add_option("--threads", o.threads, "Worker threads, 0 = all cores (does not affect results)");
  add_format(mc, o);

  auto* compare = app.add_subcommand("compare", "Cavity second moments of both hypotheses");
  compare->add_option("--mean", o.mean, "Mean occupancy")->required();
  compare->add_option("--a-grid", o.a_grid, "Comma-separated transmittances")
      ->delimiter(',')
      ->capture_default_str();
  add_format(compare, o);

  auto* planck = app.add_subcommand("planck", "Planck occupancy and spectral density");
  auto* x_opt = planck->add_option("--x", o.x, "Reduced frequency hbar*omega/(k*T)");
  auto* omega_opt = planck->add_option("--omega", o.omega, "Angular frequency, rad/s");
  auto* temp_opt = planck->add_option("--temperature", o.temperature, "Temperature, K");
  x_opt->excludes(omega_opt)->excludes(temp_opt);
  omega_opt->needs(temp_opt);
  temp_opt->needs(omega_opt);
  planck->add_option("--a", o.a, "Surface transmittance (graybody)")->capture_default_str();
  add_format(planck, o);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    OutputDocument doc;
    if (pmf->parsed()) {
      doc = cmd_pmf(o);
    } else if (transmit->parsed()) {
      doc = cmd_transmit(o);
    } else if (cavity->parsed()) {
      doc = cmd_cavity(o);
    } else if (mc->parsed()) {
      doc = cmd_montecarlo(o);
    } else if (compare->parsed()) {
      doc = cmd_compare(o);
    } else {
      doc = cmd_planck(o);
    }
    out << doc.render(parse_format(o.format));
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace photostat
