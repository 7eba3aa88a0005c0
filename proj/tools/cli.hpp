#pragma once

// Sweep, point and verify front ends behind the `fcad` executable.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fcad/errors.hpp"

namespace fcad::cli {

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;

/// Selectable quantity groups, in column order.
inline const std::vector<std::string> kQuantities{"c1",     "q",     "ce",    "bounds",
                                                  "coeffs", "p_opt", "c_ad1", "entanglement"};

struct SweepConfig {
  double eta_start = 0.0;
  double eta_end = 1.0;
  double eta_step = 0.05;
  std::vector<std::string> quantities = kQuantities;
  double coarse_step = 1e-2;
  double refine_tol = 1e-7;
  std::uint64_t seed = 1;
  std::string output_path;  // empty: standard output
};

/// Throws InvalidConfig.
void validate(const SweepConfig& cfg);

/// "c1,q" -> {"c1", "q"}; "all" selects every group. Throws InvalidConfig.
std::vector<std::string> parse_quantities(std::string_view list);

/// key = value lines; '#' starts a comment. Throws IoError / InvalidConfig.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Keys: eta_start, eta_end, eta_step, quantities, coarse_step, refine_tol,
/// seed, out ('-' may replace '_'). Throws InvalidConfig on unknown keys or
/// malformed values.
void apply_config(const std::map<std::string, std::string>& values, SweepConfig& cfg);

/// eta_start, eta_start + step, ...; eta_end is included when it lies on the
/// grid within 1e-9 * step.
std::vector<double> eta_grid(const SweepConfig& cfg);

/// Nine significant digits, '.' separator, independent of the global locale.
std::string format_number(double x);

/// Header names for the selected groups.
std::vector<std::string> csv_columns(const std::vector<std::string>& quantities);

/// Full CSV text (header plus one row per eta, ascending).
std::string sweep_csv(const SweepConfig& cfg);

/// Writes sweep_csv to cfg.output_path, or to `out` if the path is empty.
void cmd_sweep(const SweepConfig& cfg, std::ostream& out);

/// Point quantities: c1, c1_opt, q, ce, chi_lb1, chi_lb2, p_opt, c_ad1,
/// entanglement. Throws InvalidConfig.
void cmd_point(double eta, std::string_view quantity, const SweepConfig& cfg,
               std::ostream& out);

inline const std::vector<std::string> kSuites{"covariance",     "degradability", "inequalities",
                                              "symmetrization", "composition",   "all"};

struct VerifyConfig {
  std::string suite = "all";
  std::size_t samples = 0;  // 0: per-suite default
  std::uint64_t seed = 1;
  double tol = 0.0;         // 0: per-check default
};

/// Prints one `CHECK <name> PASS|FAIL margin=<val>` line per check and
/// returns kExitOk or kExitVerifyFailed. Throws InvalidConfig.
int cmd_verify(const VerifyConfig& cfg, std::ostream& out);

}  // namespace fcad::cli
