// Command-line front end: simulate / fit / bootstrap / pot / grid / study.
// All randomized subcommands require an explicit --seed so runs are
// reproducible; numeric output is rendered with 17 significant digits.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bvp/bootstrap.hpp"
#include "bvp/bvpa.hpp"
#include "bvp/csv.hpp"
#include "bvp/em.hpp"
#include "bvp/errors.hpp"
#include "bvp/pot.hpp"
#include "bvp/sampler.hpp"
#include "bvp/study.hpp"
#include "bvp/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;

const char* bool_str(bool v) { return v ? "true" : "false"; }

void add_params7(CLI::App* cmd, bvp::Params7& p) {
  cmd->add_option("--mu1", p.mu1, "location, margin 1");
  cmd->add_option("--mu2", p.mu2, "location, margin 2");
  cmd->add_option("--sigma1", p.sigma1, "scale, margin 1");
  cmd->add_option("--sigma2", p.sigma2, "scale, margin 2");
  cmd->add_option("--alpha0", p.alpha0, "common shock shape")->required();
  cmd->add_option("--alpha1", p.alpha1, "margin-1 shape")->required();
  cmd->add_option("--alpha2", p.alpha2, "margin-2 shape")->required();
}

void add_fit_config(CLI::App* cmd, bvp::FitConfig& cfg) {
  cmd->add_option("--init-alpha0", cfg.init.alpha0, "initial alpha0");
  cmd->add_option("--init-alpha1", cfg.init.alpha1, "initial alpha1");
  cmd->add_option("--init-alpha2", cfg.init.alpha2, "initial alpha2");
  cmd->add_option("--init-sigma1", cfg.init_sigma1,
                  "initial sigma1 (seven-parameter fit)");
  cmd->add_option("--init-sigma2", cfg.init_sigma2,
                  "initial sigma2 (seven-parameter fit)");
  cmd->add_option("--tol", cfg.tol, "relative Q-change stopping tolerance");
  cmd->add_option("--max-iter", cfg.max_iter, "iteration cap");
  cmd->add_option("--step-size", cfg.step_size,
                  "scale gradient step (seven-parameter fit)");
  cmd->add_option("--sigma-floor", cfg.sigma_floor, "lower bound for scales");
}

struct FitterChoice {
  std::string fitter = "ac3";
  std::string variant = "log_modified";

  bvp::FitterId id() const {
    if (fitter == "singular") return bvp::FitterId::singular;
    if (fitter == "ac7") return bvp::FitterId::ac7;
    return variant == "legacy" ? bvp::FitterId::ac3_legacy
                               : bvp::FitterId::ac3_modified;
  }
};

void add_fitter_choice(CLI::App* cmd, FitterChoice& fc) {
  cmd->add_option("--fitter", fc.fitter, "estimation procedure")
      ->check(CLI::IsMember({"singular", "ac3", "ac7"}));
  cmd->add_option("--variant", fc.variant,
                  "pseudo-data variant for the ac3 fitter")
      ->check(CLI::IsMember({"legacy", "log_modified"}));
}

bvp::FitReport run_fitter(bvp::FitterId id, const bvp::BivariateSample& data,
                          const bvp::FitConfig& cfg) {
  switch (id) {
    case bvp::FitterId::singular: return bvp::em_singular_fit(data, cfg);
    case bvp::FitterId::ac3_legacy:
      return bvp::em_ac3_fit(data, cfg, bvp::PseudoVariant::legacy);
    case bvp::FitterId::ac3_modified:
      return bvp::em_ac3_fit(data, cfg, bvp::PseudoVariant::log_modified);
    case bvp::FitterId::ac7: return bvp::em_ac7_fit(data, cfg);
  }
  throw std::logic_error("unreachable");
}

void print_fit_report(bvp::FitterId id, const bvp::FitReport& rep) {
  std::cout << "fitter=" << bvp::fitter_name(id) << '\n';
  if (id == bvp::FitterId::ac7) {
    std::cout << "mu1=" << bvp::format_double(rep.params.mu1) << '\n'
              << "mu2=" << bvp::format_double(rep.params.mu2) << '\n'
              << "sigma1=" << bvp::format_double(rep.params.sigma1) << '\n'
              << "sigma2=" << bvp::format_double(rep.params.sigma2) << '\n';
  }
  std::cout << "alpha0=" << bvp::format_double(rep.params.alpha0) << '\n'
            << "alpha1=" << bvp::format_double(rep.params.alpha1) << '\n'
            << "alpha2=" << bvp::format_double(rep.params.alpha2) << '\n'
            << "iterations=" << rep.iterations << '\n'
            << "converged=" << bool_str(rep.converged) << '\n'
            << "capped=" << bool_str(rep.capped) << '\n'
            << "boundary=" << bool_str(rep.boundary) << '\n'
            << "q_final=" << bvp::format_double(rep.q_final()) << '\n';
}

int cmd_simulate(const std::string& variant, std::size_t n,
                 const bvp::Params7& p, std::uint64_t seed,
                 const std::string& out) {
  const bvp::BivariateSample sample = variant == "bvpa"
                                          ? bvp::sample_bvpa(n, p, seed)
                                          : bvp::sample_bvpac(n, p, seed);
  bvp::write_csv(sample, out);
  return kExitOk;
}

int cmd_fit(const std::string& data_path, const FitterChoice& fc,
            const bvp::FitConfig& cfg) {
  const bvp::BivariateSample data = bvp::read_csv(data_path);
  const bvp::FitReport rep = run_fitter(fc.id(), data, cfg);
  print_fit_report(fc.id(), rep);
  return rep.converged ? kExitOk : kExitNotConverged;
}

int cmd_bootstrap(const bvp::Params7& p, std::size_t n, std::size_t b,
                  const FitterChoice& fc, const bvp::FitConfig& cfg,
                  double gamma, std::uint64_t seed, unsigned threads) {
  const bvp::BootstrapReport rep = bvp::parametric_bootstrap(
      p, n, b, fc.id(), cfg, gamma, seed, threads);
  std::cout << "fitter=" << bvp::fitter_name(fc.id()) << '\n'
            << "replicates=" << rep.replicates << '\n'
            << "failures=" << rep.failure_count << '\n';
  for (const bvp::ParamSummary& s : rep.params) {
    std::cout << s.name << ".mean=" << bvp::format_double(s.mean) << '\n'
              << s.name << ".mse=" << bvp::format_double(s.mse) << '\n'
              << s.name << ".lower=" << bvp::format_double(s.lower) << '\n'
              << s.name << ".upper=" << bvp::format_double(s.upper) << '\n';
  }
  return kExitOk;
}

int cmd_pot(const std::string& data_path, const bvp::PotConfig& cfg,
            const std::string& out, std::string report_path) {
  const bvp::BivariateSample raw = bvp::read_csv(data_path);
  const bvp::PotResult res = bvp::pot_transform(raw, cfg);
  bvp::write_csv(res.data, out);
  if (report_path.empty()) report_path = out + ".report";
  std::ofstream rep(report_path);
  if (!rep) throw std::runtime_error("cannot open " + report_path);
  rep << "x0_1=" << bvp::format_double(res.x0_1) << '\n'
      << "x0_2=" << bvp::format_double(res.x0_2) << '\n'
      << "retained=" << res.retained << '\n'
      << "input_rows=" << raw.size() << '\n';
  return kExitOk;
}

int cmd_grid(const bvp::Params7& p, double x_min, double x_max, double y_min,
             double y_max, std::size_t res, const std::string& out) {
  p.validate();
  if (res < 2) throw std::domain_error("grid resolution must be at least 2");
  if (!(x_max > x_min) || !(y_max > y_min)) {
    throw std::domain_error("grid ranges must be nonempty");
  }
  if (x_min < p.mu1 || y_min < p.mu2) {
    throw std::domain_error("grid range outside the density support");
  }
  std::vector<double> xs(res);
  std::vector<double> ys(res);
  for (std::size_t i = 0; i < res; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(res - 1);
    xs[i] = x_min + t * (x_max - x_min);
    ys[i] = y_min + t * (y_max - y_min);
  }
  std::ofstream outf(out);
  if (!outf) throw std::runtime_error("cannot open " + out);
  for (double y : ys) outf << ',' << bvp::format_double(y);
  outf << '\n';
  for (double x : xs) {
    outf << bvp::format_double(x);
    for (double y : ys) {
      const double z1 = (x - p.mu1) / p.sigma1;
      const double z2 = (y - p.mu2) / p.sigma2;
      double v = 0.0;
      if (z1 < z2) {
        v = bvp::bvpac_wedge_density(x, y, p, bvp::PdfCase::f1);
      } else if (z1 > z2) {
        v = bvp::bvpac_wedge_density(x, y, p, bvp::PdfCase::f2);
      } else {
        // Exact diagonal cell: mean of the two one-sided limits.
        v = 0.5 * (bvp::bvpac_wedge_density(x, y, p, bvp::PdfCase::f1) +
                   bvp::bvpac_wedge_density(x, y, p, bvp::PdfCase::f2));
      }
      outf << ',' << bvp::format_double(v);
    }
    outf << '\n';
  }
  if (!outf) throw std::runtime_error("write failed for " + out);
  return kExitOk;
}

int cmd_study(bvp::StudyConfig cfg, const FitterChoice& fc,
              const std::string& out) {
  cfg.fitter = fc.id();
  const std::vector<bvp::StudyBlock> blocks = bvp::run_study(cfg);
  bvp::write_study_csv(blocks, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marshall-Olkin bivariate Pareto toolkit"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "draw a sample and write CSV");
  std::string sim_variant = "bvpac";
  std::size_t sim_n = 0;
  std::uint64_t sim_seed = 0;
  std::string sim_out;
  bvp::Params7 sim_params;
  sim->add_option("--variant", sim_variant, "bvpa (full law) or bvpac")
      ->check(CLI::IsMember({"bvpa", "bvpac"}));
  sim->add_option("--n", sim_n, "sample size")->required()
      ->check(CLI::PositiveNumber);
  sim->add_option("--seed", sim_seed, "RNG seed")->required();
  sim->add_option("--out", sim_out, "output CSV path")->required();
  add_params7(sim, sim_params);

  // fit
  auto* fit = app.add_subcommand("fit", "fit a CSV dataset");
  std::string fit_data;
  FitterChoice fit_fc;
  bvp::FitConfig fit_cfg;
  fit->add_option("--data", fit_data, "input CSV path")->required();
  add_fitter_choice(fit, fit_fc);
  add_fit_config(fit, fit_cfg);

  // bootstrap
  auto* boot = app.add_subcommand(
      "bootstrap", "parametric bootstrap around given parameters");
  bvp::Params7 boot_params;
  std::size_t boot_n = 0;
  std::size_t boot_b = 0;
  double boot_gamma = 0.05;
  std::uint64_t boot_seed = 0;
  unsigned boot_threads = 1;
  FitterChoice boot_fc;
  bvp::FitConfig boot_cfg;
  add_params7(boot, boot_params);
  boot->add_option("--n", boot_n, "sample size per replicate")->required()
      ->check(CLI::PositiveNumber);
  boot->add_option("--b", boot_b, "bootstrap replicates")->required()
      ->check(CLI::PositiveNumber);
  boot->add_option("--gamma", boot_gamma, "1 - confidence level");
  boot->add_option("--seed", boot_seed, "RNG seed")->required();
  boot->add_option("--threads", boot_threads, "worker threads");
  add_fitter_choice(boot, boot_fc);
  add_fit_config(boot, boot_cfg);

  // pot
  auto* pot = app.add_subcommand(
      "pot", "peak-over-threshold transform of a CSV dataset");
  std::string pot_data;
  std::string pot_out;
  std::string pot_report;
  double pot_q1 = 0.0;
  double pot_q2 = 0.0;
  double pot_x1 = 0.0;
  double pot_x2 = 0.0;
  pot->add_option("--data", pot_data, "input CSV path")->required();
  pot->add_option("--out", pot_out, "output CSV path")->required();
  pot->add_option("--report", pot_report,
                  "threshold report path (default <out>.report)");
  auto* q1_opt = pot->add_option("--q1", pot_q1, "quantile level, column 1");
  auto* q2_opt = pot->add_option("--q2", pot_q2, "quantile level, column 2");
  auto* x1_opt = pot->add_option("--x0-1", pot_x1, "absolute threshold 1");
  auto* x2_opt = pot->add_option("--x0-2", pot_x2, "absolute threshold 2");
  q1_opt->needs(q2_opt);
  x1_opt->needs(x2_opt);
  q1_opt->excludes(x1_opt);

  // grid
  auto* grid = app.add_subcommand(
      "grid", "density values of the absolutely continuous law on a grid");
  bvp::Params7 grid_params;
  double gx_min = 0.0;
  double gx_max = 0.0;
  double gy_min = 0.0;
  double gy_max = 0.0;
  std::size_t grid_res = 2;
  std::string grid_out;
  add_params7(grid, grid_params);
  grid->add_option("--x-min", gx_min, "first axis lower bound")->required();
  grid->add_option("--x-max", gx_max, "first axis upper bound")->required();
  grid->add_option("--y-min", gy_min, "second axis lower bound")->required();
  grid->add_option("--y-max", gy_max, "second axis upper bound")->required();
  grid->add_option("--grid-res", grid_res, "points per axis")->required();
  grid->add_option("--out", grid_out, "output CSV path")->required();

  // study
  auto* study = app.add_subcommand(
      "study", "simulation study table (AE, MSE, optional bootstrap CI)");
  bvp::StudyConfig study_cfg;
  FitterChoice study_fc;
  std::string study_out;
  add_params7(study, study_cfg.truth);
  study->add_option("--sizes", study_cfg.sizes, "sample sizes")
      ->required()
      ->delimiter(',');
  study->add_option("--replications", study_cfg.replications,
                    "datasets per size")
      ->required()
      ->check(CLI::PositiveNumber);
  study->add_option("--seed", study_cfg.seed, "RNG seed")->required();
  study->add_option("--b", study_cfg.bootstrap_b,
                    "bootstrap replicates for the CI columns (0 = none)");
  study->add_option("--gamma", study_cfg.gamma, "1 - confidence level");
  study->add_option("--threads", study_cfg.threads, "worker threads");
  study->add_option("--out", study_out, "output CSV path")->required();
  add_fitter_choice(study, study_fc);
  add_fit_config(study, study_cfg.fit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      return cmd_simulate(sim_variant, sim_n, sim_params, sim_seed, sim_out);
    }
    if (fit->parsed()) return cmd_fit(fit_data, fit_fc, fit_cfg);
    if (boot->parsed()) {
      return cmd_bootstrap(boot_params, boot_n, boot_b, boot_fc, boot_cfg,
                           boot_gamma, boot_seed, boot_threads);
    }
    if (pot->parsed()) {
      bvp::PotConfig cfg;
      if (*x1_opt) {
        cfg.mode = bvp::ThresholdMode::absolute;
        cfg.x0_1 = pot_x1;
        cfg.x0_2 = pot_x2;
      } else if (*q1_opt) {
        cfg.mode = bvp::ThresholdMode::quantile;
        cfg.q1 = pot_q1;
        cfg.q2 = pot_q2;
      } else {
        throw std::domain_error("need either --q1/--q2 or --x0-1/--x0-2");
      }
      return cmd_pot(pot_data, cfg, pot_out, pot_report);
    }
    if (grid->parsed()) {
      return cmd_grid(grid_params, gx_min, gx_max, gy_min, gy_max, grid_res,
                      grid_out);
    }
    if (study->parsed()) return cmd_study(study_cfg, study_fc, study_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
