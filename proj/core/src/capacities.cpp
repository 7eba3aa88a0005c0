#include "fcad/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fcad/covariance.hpp"
#include "fcad/errors.hpp"
#include "fcad/qmat.hpp"

namespace fcad {

namespace {

constexpr double kGainTol = 1e-10;
constexpr double kStrictGain = 1e-12;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }
double h2c(double x) { return h2(clamp01(x)); }

// H2((1 + sqrt(1 - z2)) / 2), z2 clamped to [0, 1].
double h2_of_z2(double z2) { return h2c(0.5 * (1.0 + std::sqrt(1.0 - clamp01(z2)))); }

// Output entropy of diag(alpha, beta, beta, delta) through fc(eta).
double output_entropy(const SimplexPoint& pt, double eta) {
  const double a = pt.alpha(), b = pt.beta(), d = pt.delta();
  return -xlog2x(a + (1.0 - eta) * d) - 2.0 * xlog2x(b) - xlog2x(eta * d);
}

double input_entropy(const SimplexPoint& pt) {
  return -xlog2x(pt.alpha()) - 2.0 * xlog2x(pt.beta()) - xlog2x(pt.delta());
}

// Exact Ensemble probabilities from weights that sum to 1 up to rounding.
Ensemble make_ensemble(std::vector<Ensemble::Item> items) {
  std::vector<Ensemble::Item> kept;
  kept.reserve(items.size());
  double total = 0.0;
  for (auto& it : items) {
    if (it.probability > 0.0) {
      total += it.probability;
      kept.push_back(std::move(it));
    }
  }
  for (auto& it : kept) it.probability /= total;
  return Ensemble(std::move(kept));
}

StateVector two_level(double a, double d, double sign) {
  return StateVector::normalized({a, 0.0, 0.0, sign * d});
}

CapacityResult from_optim(const OptimResult& r) {
  return {r.value, r.point, r.evaluations, r.grid_step_final};
}

Ensemble random_ensemble(std::size_t n_states, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<Ensemble::Item> items;
  for (std::size_t k = 0; k < n_states; ++k) {
    items.push_back({u(rng), random_pure(4, derive_seed(seed, k))});
  }
  return make_ensemble(std::move(items));
}

Ensemble random_separable_ensemble(std::size_t n_states, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> gh(0.05, 0.95);
  std::vector<Ensemble::Item> items;
  for (std::size_t k = 0; k < n_states; ++k) {
    const double g = gh(rng), h = gh(rng);
    const StateVector q1({g, std::sqrt(1.0 - g * g)});
    const StateVector q2({h, std::sqrt(1.0 - h * h)});
    items.push_back({u(rng), kron(q1, q2)});
  }
  return make_ensemble(std::move(items));
}

SimplexPoint populations(const Ensemble& ens) {
  const ComplexMatrix avg = ens.average_state();
  const double a = avg(0, 0).real(), d = avg(3, 3).real();
  return SimplexPoint::from_alpha_delta(a, d);
}

}  // namespace

// --- ensembles ---------------------------------------------------------------

Ensemble ensemble_A(const SimplexPoint& pt) {
  return make_ensemble({{pt.alpha(), StateVector::basis(4, 0)},
                        {pt.beta(), StateVector::basis(4, 1)},
                        {pt.beta(), StateVector::basis(4, 2)},
                        {pt.delta(), StateVector::basis(4, 3)}});
}

Ensemble ensemble_B(const SimplexPoint& pt) {
  std::vector<Ensemble::Item> items;
  const double w = pt.alpha() + pt.delta();
  if (w > 0.0) {
    const double a = std::sqrt(pt.alpha() / w), d = std::sqrt(pt.delta() / w);
    items.push_back({0.5 * w, two_level(a, d, 1.0)});
    items.push_back({0.5 * w, two_level(a, d, -1.0)});
  }
  items.push_back({pt.beta(), StateVector::basis(4, 1)});
  items.push_back({pt.beta(), StateVector::basis(4, 2)});
  return make_ensemble(std::move(items));
}

double chi_ensemble_A(const SimplexPoint& pt, Transmissivity eta) {
  const double e = eta.value();
  return output_entropy(pt, e) - pt.delta() * h2(e);
}

double chi_ensemble_B(const SimplexPoint& pt, Transmissivity eta) {
  const double e = eta.value();
  const double w = pt.alpha() + pt.delta();
  double pair_term = 0.0;
  if (w > 0.0) {
    const double r = pt.delta() / w;
    pair_term = w * h2_of_z2(4.0 * e * (1.0 - e) * r * r);
  }
  return output_entropy(pt, e) - pair_term;
}

LowerBounds c1_lower_bounds(Transmissivity eta, const SimplexSearchOptions& options) {
  return {maximize_simplex([eta](const SimplexPoint& p) { return chi_ensemble_A(p, eta); },
                           options),
          maximize_simplex([eta](const SimplexPoint& p) { return chi_ensemble_B(p, eta); },
                           options)};
}

// --- closed-form C1 ------------------------------------------------------------

double c_ad1_objective(double p1, Transmissivity eta) {
  const double e = eta.value();
  return h2c(e * p1) - h2_of_z2(4.0 * e * (1.0 - e) * p1 * p1);
}

ScalarOptimResult c_ad1_search(Transmissivity eta) {
  return maximize_1d([eta](double p1) { return c_ad1_objective(p1, eta); }, 0.0, 1.0);
}

double c_ad1(Transmissivity eta) { return c_ad1_search(eta).value; }

double p_opt(Transmissivity eta) { return 1.0 / (1.0 + std::exp2(1.0 - c_ad1(eta))); }

CapacityResult c1(Transmissivity eta) {
  const ScalarOptimResult ad = c_ad1_search(eta);
  const double p = 1.0 / (1.0 + std::exp2(1.0 - ad.value));
  const double value = 1.0 + h2c(p) - p * (1.0 - ad.value);
  const double delta = p * ad.argmax;
  return {value, SimplexPoint(p - delta, 0.5 * (1.0 - p), delta), ad.evaluations,
          ad.grid_step_final};
}

CapacityResult c1_via_optimization(Transmissivity eta, const SimplexSearchOptions& options) {
  return from_optim(maximize_simplex(
      [eta](const SimplexPoint& p) { return chi_ensemble_B(p, eta); }, options));
}

// --- quantum capacity ----------------------------------------------------------

double q_objective(const SimplexPoint& pt, Transmissivity eta) {
  const double leak = (1.0 - eta.value()) * pt.delta();
  return output_entropy(pt, eta.value()) + xlog2x(1.0 - leak) + xlog2x(leak);
}

CapacityResult q_single_letter(Transmissivity eta, const SimplexSearchOptions& options) {
  return from_optim(maximize_simplex(
      [eta](const SimplexPoint& p) { return q_objective(p, eta); }, options));
}

CapacityResult q_capacity(Transmissivity eta, const SimplexSearchOptions& options) {
  if (eta.value() >= 0.5) return q_single_letter(eta, options);
  return {kLog2Of3, SimplexPoint(1.0 / 3.0, 1.0 / 3.0, 0.0), 0, 0.0};
}

// --- entanglement-assisted capacity -------------------------------------------

double ce_objective(const SimplexPoint& pt, Transmissivity eta) {
  return input_entropy(pt) + q_objective(pt, eta);
}

CapacityResult ce_capacity(Transmissivity eta, const SimplexSearchOptions& options) {
  return from_optim(maximize_simplex(
      [eta](const SimplexPoint& p) { return ce_objective(p, eta); }, options));
}

// --- entanglement --------------------------------------------------------------

EntanglementB entanglement_B(const SimplexPoint& pt) {
  const double w = pt.alpha() + pt.delta();
  if (!(w > 0.0)) throw ZeroSubspaceWeight("entanglement_B: alpha + delta = 0");
  const double e_phi = h2c(pt.alpha() / w);
  return {e_phi, w * e_phi};
}

// --- full row ------------------------------------------------------------------

CapacityPoint capacity_point(Transmissivity eta, const SimplexSearchOptions& options) {
  const LowerBounds lb = c1_lower_bounds(eta, options);
  const CapacityResult closed = c1(eta);
  const CapacityResult q = q_capacity(eta, options);
  const CapacityResult ce = ce_capacity(eta, options);
  const double ad = c_ad1(eta);
  return CapacityPoint{eta.value(),
                       closed.value,
                       lb.chi_lb2(),
                       q.value,
                       ce.value,
                       lb.chi_lb1(),
                       lb.chi_lb2(),
                       lb.ensemble_b.point,
                       q.point,
                       ce.point,
                       1.0 / (1.0 + std::exp2(1.0 - ad)),
                       ad};
}

// --- step inequality ------------------------------------------------------------

double step_inequality_margin(double a, double b, double d, double eta) {
  const double lhs = h2_of_z2(4.0 * (1.0 - eta) * d * d * (2.0 * b * b + eta * d * d));
  const double w = a * a + d * d;
  double rhs = 0.0;
  if (w > 0.0) {
    const double r = d * d / w;
    rhs = w * h2_of_z2(4.0 * eta * (1.0 - eta) * r * r);
  }
  return lhs - rhs;
}

StepInequalityReport verify_step_inequality(std::size_t n_samples, std::uint64_t seed) {
  StepInequalityReport rep;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto octant_point = [&](double& x, double& y, double& z) {
    double n = 0.0;
    do {
      x = std::abs(normal(rng));
      y = std::abs(normal(rng));
      z = std::abs(normal(rng));
      n = std::sqrt(x * x + y * y + z * z);
    } while (n == 0.0);
    x /= n;
    y /= n;
    z /= n;
  };

  bool first = true;
  for (std::size_t i = 0; i < n_samples; ++i) {
    double x, y, z;
    octant_point(x, y, z);
    double eta = 0.0;
    do eta = unit(rng);
    while (eta == 0.0);
    const double m = step_inequality_margin(x, y / std::numbers::sqrt2, z, eta);
    rep.min_margin = first ? m : std::min(rep.min_margin, m);
    first = false;
    if (m > kStrictGain) ++rep.strict_samples;

    // Equality faces: eta = 1, b = 0, d = 0.
    const double theta = 0.5 * std::numbers::pi * unit(rng);
    const double gaps[] = {
        step_inequality_margin(x, y / std::numbers::sqrt2, z, 1.0),
        step_inequality_margin(std::cos(theta), 0.0, std::sin(theta), eta),
        step_inequality_margin(std::cos(theta), std::sin(theta) / std::numbers::sqrt2, 0.0,
                               eta)};
    for (double g : gaps) rep.max_equality_gap = std::max(rep.max_equality_gap, std::abs(g));
    rep.equality_samples += 3;
  }
  rep.samples = n_samples;
  rep.passed = n_samples > 0 && rep.min_margin >= -kGainTol && rep.max_equality_gap <= kStrictGain;
  return rep;
}

// --- H2(eta) >= x H2(...) --------------------------------------------------------

double entropy_ratio_margin(double x, double eta) {
  return h2c(eta) - x * h2_of_z2(4.0 * eta * (1.0 - eta) / (x * x));
}

EntropyRatioReport verify_entropy_ratio_inequality(double grid_x_max, std::size_t n_points) {
  if (!(grid_x_max > 1.0)) throw DomainError("verify_entropy_ratio_inequality: grid_x_max <= 1");
  if (n_points < 2) throw DomainError("verify_entropy_ratio_inequality: need n_points >= 2");
  EntropyRatioReport rep;
  bool first = true, first_inner = true;
  const double log_max = std::log(grid_x_max);
  for (int k = 1; k <= 99; ++k) {
    const double eta = k / 100.0;
    for (std::size_t j = 0; j < n_points; ++j) {
      const double x =
          j == 0 ? 1.0 : std::exp(log_max * static_cast<double>(j) / (n_points - 1));
      const double m = entropy_ratio_margin(x, eta);
      ++rep.points;
      rep.min_margin = first ? m : std::min(rep.min_margin, m);
      first = false;
      if (j == 0) {
        rep.max_equality_gap = std::max(rep.max_equality_gap, std::abs(m));
      } else {
        rep.min_margin_x_gt_1 = first_inner ? m : std::min(rep.min_margin_x_gt_1, m);
        first_inner = false;
      }
    }
  }
  rep.passed = rep.min_margin >= -kGainTol && rep.max_equality_gap <= kGainTol;
  return rep;
}

// --- symmetrization chain -----------------------------------------------------------

Ensemble phase_flip_orbit(const Ensemble& ens) {
  std::vector<ComplexMatrix> ops{ComplexMatrix::identity(4)};
  for (const auto& op : symmetry_ops()) {
    if (op.name != SymmetryName::Swap) ops.push_back(op.matrix);
  }
  std::vector<Ensemble::Item> items;
  for (const auto& it : ens.items()) {
    for (const auto& u : ops) items.push_back({0.25 * it.probability, u * it.state});
  }
  return make_ensemble(std::move(items));
}

Ensemble swap_orbit(const Ensemble& ens) {
  const ComplexMatrix swap = symmetry_op(SymmetryName::Swap).matrix;
  std::vector<Ensemble::Item> items;
  for (const auto& it : ens.items()) {
    items.push_back({0.5 * it.probability, it.state});
    items.push_back({0.5 * it.probability, swap * it.state});
  }
  return make_ensemble(std::move(items));
}

Ensemble merge_bc(const Ensemble& ens) {
  auto phase = [](Complex z) { return std::abs(z) > 0.0 ? z / std::abs(z) : Complex{1.0}; };
  std::vector<Ensemble::Item> items;
  for (const auto& it : ens.items()) {
    const auto& s = it.state;
    const double m = std::sqrt(0.5 * (std::norm(s[1]) + std::norm(s[2])));
    items.push_back(
        {it.probability, StateVector::normalized({s[0], m * phase(s[1]), m * phase(s[2]), s[3]})});
  }
  return make_ensemble(std::move(items));
}

Ensemble pair_replacement(const Ensemble& ens) {
  const auto n = static_cast<double>(ens.items().size());
  std::vector<Ensemble::Item> items;
  double k = 1.0;
  for (const auto& it : ens.items()) {
    const auto& s = it.state;
    const double a = std::abs(s[0]), d = std::abs(s[3]);
    const double w_ad = a * a + d * d;
    const double w_bc = std::norm(s[1]) + std::norm(s[2]);
    if (w_ad > 0.0) {
      items.push_back({0.5 * it.probability * w_ad, two_level(a, d, 1.0)});
      items.push_back({0.5 * it.probability * w_ad, two_level(a, d, -1.0)});
    }
    if (w_bc > 0.0) {
      const Complex ph = std::polar(1.0, std::numbers::pi * k / n);
      const double r = 1.0 / std::numbers::sqrt2;
      items.push_back({0.5 * it.probability * w_bc, StateVector({0.0, r, r * ph, 0.0})});
      items.push_back({0.5 * it.probability * w_bc, StateVector({0.0, r, -r * ph, 0.0})});
    }
    k += 1.0;
  }
  return make_ensemble(std::move(items));
}

Ensemble entangle_separable(const Ensemble& ens) {
  std::vector<Ensemble::Item> items;
  for (const auto& it : ens.items()) {
    const auto& s = it.state;
    const double a = std::abs(s[0]), d = std::abs(s[3]);
    const double w_ad = a * a + d * d;
    if (w_ad > 0.0) {
      items.push_back({0.5 * it.probability * w_ad, two_level(a, d, 1.0)});
      items.push_back({0.5 * it.probability * w_ad, two_level(a, d, -1.0)});
    }
    items.push_back({it.probability * std::norm(s[1]), StateVector::basis(4, 1)});
    items.push_back({it.probability * std::norm(s[2]), StateVector::basis(4, 2)});
  }
  return make_ensemble(std::move(items));
}

SymmetrizationReport verify_symmetrization_chain(std::size_t n_ensembles,
                                                 std::uint64_t seed) {
  constexpr std::size_t kStates = 4;
  SymmetrizationReport rep;
  rep.ensembles = n_ensembles;
  bool first = true;
  for (std::size_t n = 0; n < n_ensembles; ++n) {
    const std::uint64_t s = derive_seed(seed, n);
    std::mt19937_64 rng(s);
    const double eta = std::uniform_real_distribution<double>(0.02, 0.98)(rng);
    const QuantumChannel ch = fc_channel(Transmissivity(eta));

    const Ensemble e0 = random_ensemble(kStates, derive_seed(s, 1));
    const Ensemble e1 = phase_flip_orbit(e0);
    const Ensemble e2 = swap_orbit(e1);
    const Ensemble e3 = merge_bc(e2);
    const Ensemble e4 = pair_replacement(e3);
    const Ensemble e5 = ensemble_B(populations(e4));
    const double chi[] = {holevo(ch, e0), holevo(ch, e1), holevo(ch, e2),
                          holevo(ch, e3), holevo(ch, e4), holevo(ch, e5)};

    const Ensemble sep = phase_flip_orbit(random_separable_ensemble(kStates, derive_seed(s, 2)));
    const double gain_ent = holevo(ch, entangle_separable(sep)) - holevo(ch, sep);

    auto lower = [&](double& slot, double v) { slot = first ? v : std::min(slot, v); };
    lower(rep.min_gain_phase_flip, chi[1] - chi[0]);
    lower(rep.min_gain_swap, chi[2] - chi[1]);
    lower(rep.min_gain_pairing, chi[4] - chi[3]);
    lower(rep.min_gain_convexity, chi[5] - chi[4]);
    lower(rep.min_gain_entangling, gain_ent);
    rep.max_merge_change = std::max(rep.max_merge_change, std::abs(chi[3] - chi[2]));
    if (gain_ent > kStrictGain) ++rep.strict_entangling;
    first = false;
  }
  rep.passed = n_ensembles > 0 && rep.min_gain_phase_flip >= -kGainTol &&
               rep.min_gain_swap >= -kGainTol && rep.max_merge_change <= kGainTol &&
               rep.min_gain_pairing >= -kGainTol && rep.min_gain_convexity >= -kGainTol &&
               rep.strict_entangling == n_ensembles;
  return rep;
}

}  // namespace fcad
