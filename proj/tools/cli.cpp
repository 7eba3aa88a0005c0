#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <locale>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "fcad/capacities.hpp"
#include "fcad/channels.hpp"
#include "fcad/covariance.hpp"
#include "fcad/entropy.hpp"

namespace fcad::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

double parse_double(const std::string& key, const std::string& v) {
  double x = 0.0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, x);
  if (r.ec != std::errc{} || r.ptr != end || !std::isfinite(x)) {
    throw InvalidConfig(key + ": not a number: '" + v + "'");
  }
  return x;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, x);
  if (r.ec != std::errc{} || r.ptr != end) {
    throw InvalidConfig(key + ": not a non-negative integer: '" + v + "'");
  }
  return x;
}

SimplexSearchOptions search_options(const SweepConfig& cfg) {
  return {cfg.coarse_step, cfg.refine_tol};
}

bool selected(const std::vector<std::string>& q, std::string_view name) {
  return std::find(q.begin(), q.end(), name) != q.end();
}

std::string format_margin(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::scientific << std::setprecision(6) << x;
  return os.str();
}

// --- verification -----------------------------------------------------------

class CheckWriter {
 public:
  CheckWriter(std::ostream& out, double tol_override) : out_(out), tol_(tol_override) {}

  // Passes when value <= threshold.
  void at_most(const std::string& name, double value, double threshold,
               const std::string& what) {
    const double t = tol_ > 0.0 ? tol_ : threshold;
    emit(name, value <= t, value, what + " <= " + format_margin(t));
  }
  // Passes when value >= -threshold.
  void at_least_minus(const std::string& name, double value, double threshold,
                      const std::string& what) {
    const double t = tol_ > 0.0 ? tol_ : threshold;
    emit(name, value >= -t, value, what + " >= " + format_margin(-t));
  }
  void flag(const std::string& name, bool ok, double margin, const std::string& what) {
    emit(name, ok, margin, what);
  }

  bool all_passed() const { return failures_ == 0; }

 private:
  void emit(const std::string& name, bool ok, double margin, const std::string& what) {
    out_ << "# " << name << ": " << what << '\n';
    out_ << "CHECK " << name << ' ' << (ok ? "PASS" : "FAIL")
         << " margin=" << format_margin(margin) << '\n';
    if (!ok) ++failures_;
  }

  std::ostream& out_;
  double tol_;
  int failures_ = 0;
};

std::size_t or_default(std::size_t v, std::size_t def) { return v == 0 ? def : v; }

void suite_covariance(const VerifyConfig& cfg, CheckWriter& w) {
  const std::size_t n = or_default(cfg.samples, 100);
  for (const auto& op : symmetry_ops()) {
    double dev = 0.0;
    for (int k = 0; k <= 10; ++k) {
      const Deviation d = check_covariance(Transmissivity(k / 10.0), op, n,
                                           derive_seed(cfg.seed, k), 1e-12);
      dev = std::max(dev, d.max_deviation);
    }
    w.at_most("covariance_" + std::string(to_string(op.name)), dev, 1e-12,
              "max deviation over eta in {0, 0.1, ..., 1} x " + std::to_string(n) + " states");
  }
  const CommutationReport r = check_kraus_commutation();
  w.flag("kraus_commutation", r.passed, r.max_residual,
         std::to_string(r.relations.size()) + " relations, residual <= 1e-14");
}

void suite_degradability(const VerifyConfig& cfg, CheckWriter& w) {
  const std::size_t n = or_default(cfg.samples, 100);
  double dev = 0.0, table_dev = 0.0;
  const QuantumChannel stage = degrading_ancilla_stage();
  for (int k = 0; k <= 10; ++k) {
    const Transmissivity eta(0.5 + 0.05 * k);
    dev = std::max(dev, check_degradability(eta, n, derive_seed(cfg.seed, k), 1e-12).max_deviation);

    // The ancilla stage maps fc(rho) onto span{|00>, |11>} entrywise.
    const QuantumChannel ch = fc_channel(eta);
    const double e = eta.value();
    for (std::size_t i = 0; i < n; ++i) {
      const ComplexMatrix rho = random_density(4, derive_seed(cfg.seed + 1, k * n + i));
      const double delta = rho(3, 3).real();
      const Complex vs = rho(0, 3);
      ComplexMatrix expected(4);
      expected(0, 0) = 1.0 - e * delta;
      expected(0, 3) = std::sqrt(e) * vs;
      expected(3, 0) = std::sqrt(e) * std::conj(vs);
      expected(3, 3) = e * delta;
      table_dev = std::max(table_dev, max_abs_diff(apply(stage, apply(ch, rho)), expected));
    }
  }
  w.at_most("degradability", dev, 1e-12,
            "max |D(fc(rho)) - fc^c(rho)| over eta in {0.50, 0.55, ..., 1.00} x " +
                std::to_string(n) + " states");
  w.at_most("degradability_elementwise", table_dev, 1e-12,
            "ancilla stage vs entrywise table");
  bool rejected = false;
  try {
    (void)degrading_map(Transmissivity(0.49));
  } catch (const EtaOutOfRange&) {
    rejected = true;
  }
  w.flag("degradability_domain", rejected, 0.0, "degrading map rejects eta = 0.49");
}

void suite_inequalities(const VerifyConfig& cfg, CheckWriter& w) {
  const std::size_t n = or_default(cfg.samples, 100000);
  const StepInequalityReport s = verify_step_inequality(n, cfg.seed);
  w.at_least_minus("step_inequality", s.min_margin, 1e-10,
                   "min LHS - RHS over " + std::to_string(s.samples) + " samples (" +
                       std::to_string(s.strict_samples) + " strict)");
  w.at_most("step_inequality_equality", s.max_equality_gap, 1e-12,
            "max |LHS - RHS| over " + std::to_string(s.equality_samples) +
                " samples with eta = 1, b = 0 or d = 0");
  const EntropyRatioReport a = verify_entropy_ratio_inequality(100.0, 50);
  w.at_least_minus("entropy_ratio_inequality", a.min_margin, 1e-10,
                   "min margin on " + std::to_string(a.points) +
                       " (eta, x) points, x in [1, 100]");
  w.at_most("entropy_ratio_equality", a.max_equality_gap, 1e-10, "max |margin| at x = 1");
}

void suite_symmetrization(const VerifyConfig& cfg, CheckWriter& w) {
  const std::size_t n = or_default(cfg.samples, 100);
  const SymmetrizationReport r = verify_symmetrization_chain(n, cfg.seed);
  const std::string over = " over " + std::to_string(n) + " random ensembles";
  w.at_least_minus("symmetrization_phase_flip", r.min_gain_phase_flip, 1e-10,
                   "min chi gain from the R_i orbit" + over);
  w.at_least_minus("symmetrization_swap", r.min_gain_swap, 1e-10,
                   "min chi gain from the SWAP orbit" + over);
  w.at_most("symmetrization_merge", r.max_merge_change, 1e-10,
            "max |chi change| from merging b and c" + over);
  w.at_least_minus("symmetrization_pairing", r.min_gain_pairing, 1e-10,
                   "min chi gain from the pair replacement" + over);
  w.at_least_minus("symmetrization_convexity", r.min_gain_convexity, 1e-10,
                   "min chi gain from moving to ensemble B" + over);
  w.flag("symmetrization_entangling", r.strict_entangling == r.ensembles, r.min_gain_entangling,
         std::to_string(r.strict_entangling) + "/" + std::to_string(r.ensembles) +
             " separable ensembles gain more than 1e-12");
}

void suite_composition(const VerifyConfig& cfg, CheckWriter& w) {
  const std::size_t n = or_default(cfg.samples, 100);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double dev = 0.0, dpi = -1.0;
  const QuantumChannel half = fc_channel(Transmissivity(0.5));
  for (int pair = 0; pair < 20; ++pair) {
    const double e1 = unit(rng), e2 = unit(rng);
    const QuantumChannel seq = compose(fc_channel(Transmissivity(e2)), fc_channel(Transmissivity(e1)));
    const QuantumChannel direct = fc_channel(Transmissivity(e1 * e2));
    const QuantumChannel degraded = fc_channel(Transmissivity(0.5 * e2));
    for (std::size_t i = 0; i < n; ++i) {
      const ComplexMatrix rho = random_density(4, derive_seed(cfg.seed, pair * n + i));
      dev = std::max(dev, max_abs_diff(apply(seq, rho), apply(direct, rho)));
      dpi = std::max(dpi, coherent_info(degraded, rho) - coherent_info(half, rho));
    }
  }
  w.at_most("composition", dev, 1e-12,
            "max |fc(e2) o fc(e1) - fc(e1 e2)| over 20 eta pairs x " + std::to_string(n) +
                " states");
  w.at_most("data_processing", dpi, 1e-10, "max I_c(fc(e2 / 2)) - I_c(fc(1 / 2))");
}

}  // namespace

// --- configuration ----------------------------------------------------------------

void validate(const SweepConfig& cfg) {
  if (!(cfg.eta_start >= 0.0 && cfg.eta_start <= cfg.eta_end && cfg.eta_end <= 1.0)) {
    throw InvalidConfig("need 0 <= eta_start <= eta_end <= 1");
  }
  if (!(cfg.eta_step > 0.0)) throw InvalidConfig("eta_step must be > 0");
  if (cfg.quantities.empty()) throw InvalidConfig("no quantities selected");
  for (const auto& q : cfg.quantities) {
    if (!selected(kQuantities, q)) throw InvalidConfig("unknown quantity '" + q + "'");
  }
  if (!(cfg.coarse_step > 0.0 && cfg.coarse_step <= 1.0)) {
    throw InvalidConfig("coarse_step must lie in (0, 1]");
  }
  const double cells = std::round(1.0 / cfg.coarse_step);
  if (std::abs(cells * cfg.coarse_step - 1.0) > 1e-9) {
    throw InvalidConfig("1 / coarse_step must be an integer");
  }
  if (!(cfg.refine_tol > 0.0)) throw InvalidConfig("refine_tol must be > 0");
}

std::vector<std::string> parse_quantities(std::string_view list) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = list.find(',', pos);
    const std::string item =
        trim(list.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                              : comma - pos));
    if (item == "all") {
      out = kQuantities;
    } else if (!item.empty()) {
      if (!selected(kQuantities, item)) throw InvalidConfig("unknown quantity '" + item + "'");
      if (!selected(out, item)) out.push_back(item);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw InvalidConfig("empty quantity list");
  // Canonical column order.
  std::vector<std::string> ordered;
  for (const auto& q : kQuantities) {
    if (selected(out, q)) ordered.push_back(q);
  }
  return ordered;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw InvalidConfig(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    values[normalize_key(trim(body.substr(0, eq)))] = trim(body.substr(eq + 1));
  }
  return values;
}

void apply_config(const std::map<std::string, std::string>& values, SweepConfig& cfg) {
  for (const auto& [raw_key, v] : values) {
    const std::string key = normalize_key(raw_key);
    if (key == "eta_start") {
      cfg.eta_start = parse_double(key, v);
    } else if (key == "eta_end") {
      cfg.eta_end = parse_double(key, v);
    } else if (key == "eta_step") {
      cfg.eta_step = parse_double(key, v);
    } else if (key == "quantities") {
      cfg.quantities = parse_quantities(v);
    } else if (key == "coarse_step") {
      cfg.coarse_step = parse_double(key, v);
    } else if (key == "refine_tol") {
      cfg.refine_tol = parse_double(key, v);
    } else if (key == "seed") {
      cfg.seed = parse_u64(key, v);
    } else if (key == "out" || key == "output_path") {
      cfg.output_path = v;
    } else {
      throw InvalidConfig("unknown config key '" + raw_key + "'");
    }
  }
}

std::vector<double> eta_grid(const SweepConfig& cfg) {
  validate(cfg);
  const double span = cfg.eta_end - cfg.eta_start;
  const auto n = static_cast<std::size_t>(std::floor(span / cfg.eta_step + 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    grid.push_back(std::min(cfg.eta_start + static_cast<double>(i) * cfg.eta_step, cfg.eta_end));
  }
  if (std::abs(grid.back() - cfg.eta_end) <= 1e-9 * cfg.eta_step) grid.back() = cfg.eta_end;
  return grid;
}

std::string format_number(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  os << std::setprecision(9) << std::showpoint << x;
  return os.str();
}

std::vector<std::string> csv_columns(const std::vector<std::string>& quantities) {
  std::vector<std::string> cols{"eta"};
  auto add = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) cols.emplace_back(n);
  };
  if (selected(quantities, "c1")) add({"c1", "c1_chain_check"});
  if (selected(quantities, "q")) add({"q"});
  if (selected(quantities, "ce")) add({"ce"});
  if (selected(quantities, "bounds")) add({"chi_lb1", "chi_lb2"});
  if (selected(quantities, "coeffs")) {
    add({"alpha_c1", "beta_c1", "delta_c1", "alpha_q", "beta_q", "delta_q", "alpha_ce",
         "beta_ce", "delta_ce"});
  }
  if (selected(quantities, "p_opt")) add({"p_opt"});
  if (selected(quantities, "c_ad1")) add({"c_ad1"});
  if (selected(quantities, "entanglement")) add({"e_phi", "e_avg"});
  return cols;
}

std::string sweep_csv(const SweepConfig& cfg) {
  const std::vector<double> grid = eta_grid(cfg);
  const SimplexSearchOptions opts = search_options(cfg);

  // Rows are independent; workers take interleaved indices.
  std::vector<std::optional<CapacityPoint>> points(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.size());
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < grid.size(); i += workers) {
          points[i] = capacity_point(Transmissivity(grid[i]), opts);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const auto& q = cfg.quantities;
  std::ostringstream os;
  const auto cols = csv_columns(q);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& p : points) {
    std::vector<double> row{p->eta};
    auto push_pt = [&](const SimplexPoint& s) {
      row.insert(row.end(), {s.alpha(), s.beta(), s.delta()});
    };
    if (selected(q, "c1")) row.insert(row.end(), {p->c1, p->c1_optimized});
    if (selected(q, "q")) row.push_back(p->q);
    if (selected(q, "ce")) row.push_back(p->ce);
    if (selected(q, "bounds")) row.insert(row.end(), {p->chi_lb1, p->chi_lb2});
    if (selected(q, "coeffs")) {
      push_pt(p->coeffs_c1);
      push_pt(p->coeffs_q);
      push_pt(p->coeffs_ce);
    }
    if (selected(q, "p_opt")) row.push_back(p->p_opt);
    if (selected(q, "c_ad1")) row.push_back(p->c_ad1);
    if (selected(q, "entanglement")) {
      const EntanglementB e = entanglement_B(p->coeffs_c1);
      row.insert(row.end(), {e.e_phi, e.e_avg});
    }
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
  return os.str();
}

void cmd_sweep(const SweepConfig& cfg, std::ostream& out) {
  const std::string csv = sweep_csv(cfg);
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    out << csv;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw IoError("cannot open output file '" + cfg.output_path + "'");
  f << csv;
  if (!f) throw IoError("write failed for '" + cfg.output_path + "'");
}

void cmd_point(double eta_value, std::string_view quantity, const SweepConfig& cfg,
               std::ostream& out) {
  validate(cfg);
  if (!(eta_value >= 0.0 && eta_value <= 1.0)) throw InvalidConfig("eta must lie in [0, 1]");
  const Transmissivity eta(eta_value);
  const SimplexSearchOptions opts = search_options(cfg);

  auto report = [&](double value, const SimplexPoint* pt, std::size_t evals, double step) {
    out << "quantity " << quantity << '\n';
    out << "eta " << format_number(eta_value) << '\n';
    out << "value " << format_number(value) << '\n';
    if (pt != nullptr) {
      out << "alpha " << format_number(pt->alpha()) << '\n';
      out << "beta " << format_number(pt->beta()) << '\n';
      out << "delta " << format_number(pt->delta()) << '\n';
    }
    out << "evaluations " << evals << '\n';
    out << "grid_step_final " << format_margin(step) << '\n';
  };
  auto report_result = [&](const CapacityResult& r) {
    report(r.value, &r.point, r.evaluations, r.grid_step_final);
  };

  if (quantity == "c1") {
    report_result(c1(eta));
  } else if (quantity == "c1_opt") {
    report_result(c1_via_optimization(eta, opts));
  } else if (quantity == "q") {
    report_result(q_capacity(eta, opts));
  } else if (quantity == "ce") {
    report_result(ce_capacity(eta, opts));
  } else if (quantity == "chi_lb1" || quantity == "chi_lb2") {
    const LowerBounds lb = c1_lower_bounds(eta, opts);
    const OptimResult& r = quantity == "chi_lb1" ? lb.ensemble_a : lb.ensemble_b;
    report(r.value, &r.point, r.evaluations, r.grid_step_final);
  } else if (quantity == "p_opt" || quantity == "c_ad1") {
    const ScalarOptimResult ad = c_ad1_search(eta);
    const double v = quantity == "c_ad1" ? ad.value : 1.0 / (1.0 + std::exp2(1.0 - ad.value));
    report(v, nullptr, ad.evaluations, ad.grid_step_final);
    out << "p1 " << format_number(ad.argmax) << '\n';
  } else if (quantity == "entanglement") {
    const CapacityResult r = c1_via_optimization(eta, opts);
    const EntanglementB e = entanglement_B(r.point);
    report(e.e_phi, &r.point, r.evaluations, r.grid_step_final);
    out << "e_avg " << format_number(e.e_avg) << '\n';
  } else {
    throw InvalidConfig("unknown point quantity '" + std::string(quantity) + "'");
  }
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  if (!selected(kSuites, cfg.suite)) throw InvalidConfig("unknown suite '" + cfg.suite + "'");
  if (cfg.tol < 0.0) throw InvalidConfig("tol must be >= 0");
  CheckWriter w(out, cfg.tol);
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "covariance") suite_covariance(cfg, w);
  if (all || cfg.suite == "degradability") suite_degradability(cfg, w);
  if (all || cfg.suite == "inequalities") suite_inequalities(cfg, w);
  if (all || cfg.suite == "symmetrization") suite_symmetrization(cfg, w);
  if (all || cfg.suite == "composition") suite_composition(cfg, w);
  return w.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace fcad::cli
