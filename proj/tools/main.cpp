// fcad: capacities of the fully correlated two-qubit amplitude damping channel.
//
//   fcad sweep  --eta-start 0 --eta-end 1 --eta-step 0.02 --out table.csv
//   fcad point  --eta 0.6 --quantity c1
//   fcad verify inequalities --samples 100000

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

using Slots = std::map<std::string, std::string*>;

// Flags given on the command line override the config file, key by key.
fcad::cli::SweepConfig resolve(CLI::App* app, const std::string& config_path,
                               const Slots& slots) {
  fcad::cli::SweepConfig cfg;
  if (!config_path.empty()) fcad::cli::apply_config(fcad::cli::read_config_file(config_path), cfg);
  std::map<std::string, std::string> given;
  for (const auto& [name, slot] : slots) {
    if (app->count(name) > 0) given[name.substr(2)] = *slot;
  }
  fcad::cli::apply_config(given, cfg);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacities of the fully correlated two-qubit amplitude damping channel"};
  app.require_subcommand(1);

  // Shared sweep/point settings as raw strings; parsed by fcad::cli.
  struct Raw {
    std::string eta_start, eta_end, eta_step, quantities, coarse_step, refine_tol, seed, out;
  };
  Raw sweep_raw, point_raw;
  std::string sweep_config, point_config;

  auto* sweep = app.add_subcommand("sweep", "Capacity table over an eta grid, as CSV");
  sweep->add_option("--eta-start", sweep_raw.eta_start, "first eta (default 0)");
  sweep->add_option("--eta-end", sweep_raw.eta_end, "last eta (default 1)");
  sweep->add_option("--eta-step", sweep_raw.eta_step, "eta increment (default 0.05)");
  sweep->add_option("--quantities", sweep_raw.quantities,
                    "comma list of c1,q,ce,bounds,coeffs,p_opt,c_ad1,entanglement or all");
  sweep->add_option("--coarse-step", sweep_raw.coarse_step,
                    "coarse simplex grid step (default 1e-2)");
  sweep->add_option("--refine-tol", sweep_raw.refine_tol,
                    "final refinement step (default 1e-7)");
  sweep->add_option("--seed", sweep_raw.seed, "random seed (default 1)");
  sweep->add_option("--out", sweep_raw.out, "output CSV path (default stdout)");
  sweep->add_option("--config", sweep_config, "key = value config file; flags take precedence");
  const Slots sweep_slots{
      {"--eta-start", &sweep_raw.eta_start},     {"--eta-end", &sweep_raw.eta_end},
      {"--eta-step", &sweep_raw.eta_step},       {"--quantities", &sweep_raw.quantities},
      {"--coarse-step", &sweep_raw.coarse_step}, {"--refine-tol", &sweep_raw.refine_tol},
      {"--seed", &sweep_raw.seed},               {"--out", &sweep_raw.out}};

  auto* point = app.add_subcommand("point", "Single-eta value, coefficients and diagnostics");
  double eta = 0.0;
  std::string quantity = "c1";
  point->add_option("--eta", eta, "transmissivity in [0, 1]")->required();
  point->add_option("--quantity", quantity,
                    "c1, c1_opt, q, ce, chi_lb1, chi_lb2, p_opt, c_ad1 or entanglement");
  point->add_option("--coarse-step", point_raw.coarse_step,
                    "coarse simplex grid step (default 1e-2)");
  point->add_option("--refine-tol", point_raw.refine_tol,
                    "final refinement step (default 1e-7)");
  point->add_option("--config", point_config, "key = value config file; flags take precedence");
  const Slots point_slots{
      {"--coarse-step", &point_raw.coarse_step}, {"--refine-tol", &point_raw.refine_tol}};

  auto* verify = app.add_subcommand("verify", "Numerical verification suites");
  fcad::cli::VerifyConfig vcfg;
  verify->add_option("suite", vcfg.suite,
                     "covariance, degradability, inequalities, symmetrization, composition or all");
  verify->add_option("--samples", vcfg.samples, "samples per check (0: suite default)");
  verify->add_option("--seed", vcfg.seed, "random seed (default 1)");
  verify->add_option("--tol", vcfg.tol, "threshold replacing every per-check default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fcad::cli::kExitConfig;
  }

  try {
    if (*sweep) {
      fcad::cli::cmd_sweep(resolve(sweep, sweep_config, sweep_slots), std::cout);
      return fcad::cli::kExitOk;
    }
    if (*point) {
      fcad::cli::cmd_point(eta, quantity, resolve(point, point_config, point_slots),
                           std::cout);
      return fcad::cli::kExitOk;
    }
    return fcad::cli::cmd_verify(vcfg, std::cout);
  } catch (const fcad::cli::InvalidConfig& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return fcad::cli::kExitConfig;
  } catch (const fcad::cli::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return fcad::cli::kExitConfig;
  } catch (const fcad::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fcad::cli::kExitConfig;
  }
}
