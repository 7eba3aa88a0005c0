#pragma once

// Capacities of the fully correlated amplitude damping channel: single-shot
// classical capacity C1 (closed form and direct optimization), quantum
// capacity Q, entanglement-assisted capacity C_E, their building blocks and
// the numerical inequality verifiers behind the optimal-ensemble argument.

#include <cstddef>
#include <cstdint>

#include "fcad/channels.hpp"
#include "fcad/entropy.hpp"
#include "fcad/optimizer.hpp"

namespace fcad {

/// log2(3): capacity of the noiseless span{|00>, |01>, |10>}.
inline constexpr double kLog2Of3 = 1.5849625007211562;

struct CapacityResult {
  double value;
  SimplexPoint point;
  std::size_t evaluations;
  double grid_step_final;
};

// --- ensembles and their Holevo quantities --------------------------------

/// Product ensemble {(alpha, |00>), (beta, |01>), (beta, |10>), (delta, |11>)}.
Ensemble ensemble_A(const SimplexPoint& pt);
/// {((alpha+delta)/2, sqrt(alpha/(alpha+delta))|00> +- sqrt(delta/(alpha+delta))|11>),
///  (beta, |01>), (beta, |10>)}; the entangled pair is dropped when alpha+delta = 0.
Ensemble ensemble_B(const SimplexPoint& pt);

double chi_ensemble_A(const SimplexPoint& pt, Transmissivity eta);
double chi_ensemble_B(const SimplexPoint& pt, Transmissivity eta);

struct LowerBounds {
  OptimResult ensemble_a;  // chi_lb1
  OptimResult ensemble_b;  // chi_lb2
  double chi_lb1() const noexcept { return ensemble_a.value; }
  double chi_lb2() const noexcept { return ensemble_b.value; }
};

LowerBounds c1_lower_bounds(Transmissivity eta, const SimplexSearchOptions& options = {});

// --- closed-form C1 ----------------------------------------------------------

/// H2(eta p1) - H2((1 + sqrt(1 - 4 eta (1 - eta) p1^2)) / 2).
double c_ad1_objective(double p1, Transmissivity eta);
/// Maximizer p1 and value of c_ad1_objective over [0, 1].
ScalarOptimResult c_ad1_search(Transmissivity eta);
/// Product-state capacity of the single-qubit amplitude damping channel.
double c_ad1(Transmissivity eta);

/// Weight of span{|00>, |11>} in the optimal ensemble: 1 / (1 + 2^(1 - C_ad1)).
double p_opt(Transmissivity eta);

/// C1 = 1 + H2(p_opt) - p_opt (1 - C_ad1). The reported point is
/// alpha + delta = p_opt, delta / (alpha + delta) = argmax p1 of C_ad1.
CapacityResult c1(Transmissivity eta);

/// Direct maximization of chi_ensemble_B over the simplex.
CapacityResult c1_via_optimization(Transmissivity eta,
                                   const SimplexSearchOptions& options = {});

// --- quantum capacity --------------------------------------------------------

/// Coherent information of diag(alpha, beta, beta, delta) through fc(eta).
double q_objective(const SimplexPoint& pt, Transmissivity eta);

/// Maximum of q_objective for any eta. Equals Q only for eta >= 1/2.
CapacityResult q_single_letter(Transmissivity eta, const SimplexSearchOptions& options = {});

/// Q: q_single_letter for eta >= 1/2, exactly log2(3) below, reported at the
/// noiseless-subspace input alpha = beta = 1/3, delta = 0.
CapacityResult q_capacity(Transmissivity eta, const SimplexSearchOptions& options = {});

// --- entanglement-assisted capacity -----------------------------------------

/// Quantum mutual information of diag(alpha, beta, beta, delta) through fc(eta).
double ce_objective(const SimplexPoint& pt, Transmissivity eta);
CapacityResult ce_capacity(Transmissivity eta, const SimplexSearchOptions& options = {});

// --- entanglement of the optimal ensemble -----------------------------------

struct EntanglementB {
  double e_phi;  // entropy of entanglement of the pair states
  double e_avg;  // (alpha + delta) e_phi
};

/// Throws ZeroSubspaceWeight when alpha + delta = 0.
EntanglementB entanglement_B(const SimplexPoint& pt);

// --- full row ---------------------------------------------------------------

struct CapacityPoint {
  double eta;
  double c1;
  double c1_optimized;
  double q;
  double ce;
  double chi_lb1;
  double chi_lb2;
  SimplexPoint coeffs_c1;
  SimplexPoint coeffs_q;
  SimplexPoint coeffs_ce;
  double p_opt;
  double c_ad1;
};

CapacityPoint capacity_point(Transmissivity eta, const SimplexSearchOptions& options = {});

// --- inequality verifiers ---------------------------------------------------

struct StepInequalityReport {
  std::size_t samples = 0;
  double min_margin = 0.0;         // min LHS - RHS over random samples
  std::size_t strict_samples = 0;  // samples with margin > 1e-12
  std::size_t equality_samples = 0;
  double max_equality_gap = 0.0;   // max |LHS - RHS| on eta = 1, b = 0, d = 0
  bool passed = false;
};

/// H2((1 + sqrt(1 - 4 (1 - eta) d^2 (2 b^2 + eta d^2))) / 2) minus
/// (a^2 + d^2) H2((1 + sqrt(1 - 4 eta (1 - eta) d^4 / (a^2 + d^2)^2)) / 2).
double step_inequality_margin(double a, double b, double d, double eta);

/// Samples (a, b, d) >= 0 with a^2 + 2 b^2 + d^2 = 1 and eta in (0, 1).
/// Passes when min_margin >= -1e-10 and the equality cases close to 1e-12.
StepInequalityReport verify_step_inequality(std::size_t n_samples, std::uint64_t seed);

struct EntropyRatioReport {
  std::size_t points = 0;
  double min_margin = 0.0;
  double max_equality_gap = 0.0;  // |margin| at x = 1
  double min_margin_x_gt_1 = 0.0; // smallest margin strictly inside x > 1
  bool passed = false;
};

/// H2(eta) - x H2((1 + sqrt(1 - 4 eta (1 - eta) / x^2)) / 2), x >= 1.
double entropy_ratio_margin(double x, double eta);

/// eta in {0.01, ..., 0.99} times n_points log-spaced x in [1, grid_x_max].
EntropyRatioReport verify_entropy_ratio_inequality(double grid_x_max, std::size_t n_points);

struct SymmetrizationReport {
  std::size_t ensembles = 0;
  double min_gain_phase_flip = 0.0;   // R_i orbit
  double min_gain_swap = 0.0;         // SWAP orbit
  double max_merge_change = 0.0;      // |chi change| when b, c get a common modulus
  double min_gain_pairing = 0.0;      // {00, 11} pairs + {01, 10} pairs
  double min_gain_convexity = 0.0;    // paired ensemble -> ensemble B
  double min_gain_entangling = 0.0;   // separable -> entangled replacement
  std::size_t strict_entangling = 0;  // separable ensembles with gain > 1e-12
  bool passed = false;
};

// Ensemble transformations of the chain. Each keeps the average input state
// (phase_flip_orbit and swap_orbit make it diagonal with equal 01/10 weight).

/// Each item (p, psi) -> (p/4, R psi) for R in {1, R1, R2, R3}.
Ensemble phase_flip_orbit(const Ensemble& ens);
/// Each item (p, psi) -> (p/2, psi), (p/2, SWAP psi).
Ensemble swap_orbit(const Ensemble& ens);
/// b, c -> sqrt((|b|^2 + |c|^2) / 2) keeping their phases.
Ensemble merge_bc(const Ensemble& ens);
/// Item k of N -> (p (|a|^2+|d|^2)/2, (|a||00> +- |d||11>)/norm) and
/// (p (|b|^2+|c|^2)/2, (|01> +- e^{i pi k/N}|10>)/sqrt 2).
Ensemble pair_replacement(const Ensemble& ens);
/// Item -> (p (a^2+d^2)/2, (|a||00> +- |d||11>)/norm), (p |b|^2, |01>), (p |c|^2, |10>).
Ensemble entangle_separable(const Ensemble& ens);

/// Pushes random ensembles through phase_flip_orbit, swap_orbit, merge_bc,
/// pair_replacement and the final move to ensemble B at the same
/// populations, requiring chi never to drop by more than 1e-10. Random
/// separable ensembles passed through entangle_separable must gain > 1e-12.
SymmetrizationReport verify_symmetrization_chain(std::size_t n_ensembles,
                                                 std::uint64_t seed);

}  // namespace fcad
