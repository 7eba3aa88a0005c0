#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "fcad/capacities.hpp"
#include "fcad/errors.hpp"
#include "oracles.hpp"

using namespace fcad;

namespace {

using Items = std::vector<std::pair<double, StateVector>>;

// Values frozen from an independent numpy/scipy evaluation.
constexpr double kCad1At025 = 0.269820742425;
constexpr double kCad1At05 = 0.471729390599;
constexpr double kCad1At06 = 0.552956706463;
constexpr double kCad1At075 = 0.683665630305;
constexpr double kPoptAt025 = 0.376103130208;
constexpr double kPoptAt05 = 0.409466981012;
constexpr double kPoptAt06 = 0.423147252175;
constexpr double kPoptAt075 = 0.445402001320;
constexpr double kC1At025 = 1.680620523710;
constexpr double kC1At05 = 1.759910366344;
constexpr double kC1At06 = 1.793725003218;
constexpr double kC1At075 = 1.850485684605;

struct Reference {
  double eta, q, ce, lb1, lb2;
};
constexpr Reference kReference[] = {
    {0.5, 1.5849625007, 3.4187322768, 1.7004397181, 1.7599103663},
    {0.6, 1.5927721073, 3.5097723255, 1.7336710974, 1.7937250032},
    {0.75, 1.6846724834, 3.6583844855, 1.7959623938, 1.8504856846},
    {0.9, 1.8383309971, 3.8327262734, 1.8862915567, 1.9224514578},
};

StateVector ket(double a, double b, double c, double d) {
  return StateVector(std::vector<Complex>{a, b, c, d});
}

Items ensemble_A_items(const SimplexPoint& p) {
  return {{p.alpha(), ket(1, 0, 0, 0)},
          {p.beta(), ket(0, 1, 0, 0)},
          {p.beta(), ket(0, 0, 1, 0)},
          {p.delta(), ket(0, 0, 0, 1)}};
}

Items ensemble_B_items(const SimplexPoint& p) {
  const double w = p.alpha() + p.delta();
  const double a = std::sqrt(p.alpha() / w), d = std::sqrt(p.delta() / w);
  return {{w / 2, ket(a, 0, 0, d)},
          {w / 2, ket(a, 0, 0, -d)},
          {p.beta(), ket(0, 1, 0, 0)},
          {p.beta(), ket(0, 0, 1, 0)}};
}

std::vector<SimplexPoint> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> g(1.0, 1.0);
  std::vector<SimplexPoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = g(rng), y = g(rng), z = g(rng), s = x + 2 * y + z;
    pts.push_back(SimplexPoint::from_alpha_delta(x / s, z / s));
  }
  return pts;
}

}  // namespace

// --- ensembles ------------------------------------------------------------------

TEST(ChiEnsembleA, NoiselessUniform) {
  EXPECT_NEAR(chi_ensemble_A(SimplexPoint(0.25, 0.25, 0.25), Transmissivity(1.0)), 2.0, 1e-12);
}

TEST(ChiEnsembleA, FullyDampedIsPopulationEntropy) {
  for (const auto& p : random_points(20, 1)) {
    EXPECT_NEAR(chi_ensemble_A(p, Transmissivity(0.0)),
                oracle::diag_entropy_bits({p.alpha() + p.delta(), p.beta(), p.beta()}), 1e-12);
  }
}

TEST(ChiEnsembleA, MatchesDilationOracle) {
  const SimplexPoint p(0.25, 0.25, 0.25);
  EXPECT_NEAR(chi_ensemble_A(p, Transmissivity(0.5)), 1.655639062230, 1e-12);
  EXPECT_NEAR(chi_ensemble_A(p, Transmissivity(0.5)), oracle::fc_holevo(0.5, ensemble_A_items(p)),
              1e-12);
  for (const auto& q : random_points(20, 2)) {
    for (double eta : {0.1, 0.5, 0.8}) {
      EXPECT_NEAR(chi_ensemble_A(q, Transmissivity(eta)),
                  oracle::fc_holevo(eta, ensemble_A_items(q)), 1e-10);
      EXPECT_NEAR(chi_ensemble_A(q, Transmissivity(eta)),
                  holevo(fc_channel(Transmissivity(eta)), ensemble_A(q)), 1e-10);
    }
  }
}

TEST(ChiEnsembleB, NoiselessUniform) {
  EXPECT_NEAR(chi_ensemble_B(SimplexPoint(0.25, 0.25, 0.25), Transmissivity(1.0)), 2.0, 1e-12);
}

TEST(ChiEnsembleB, ReducesToAWithoutDoubleExcitation) {
  for (double alpha : {0.0, 0.2, 0.6, 1.0}) {
    const SimplexPoint p = SimplexPoint::from_alpha_delta(alpha, 0.0);
    EXPECT_NEAR(chi_ensemble_B(p, Transmissivity(0.5)), chi_ensemble_A(p, Transmissivity(0.5)),
                1e-12);
  }
}

TEST(ChiEnsembleB, EmptyPairSubspaceUsesConvention) {
  const SimplexPoint p(0.0, 0.5, 0.0);
  EXPECT_NEAR(chi_ensemble_B(p, Transmissivity(0.3)), 1.0, 1e-12);
  EXPECT_EQ(ensemble_B(p).items().size(), 2u);
}

TEST(ChiEnsembleB, MatchesDilationOracle) {
  const SimplexPoint p(0.25, 0.25, 0.25);
  EXPECT_NEAR(chi_ensemble_B(p, Transmissivity(0.5)), 1.728349610897, 1e-12);
  EXPECT_NEAR(chi_ensemble_B(p, Transmissivity(0.5)), oracle::fc_holevo(0.5, ensemble_B_items(p)),
              1e-12);
  for (const auto& q : random_points(20, 3)) {
    for (double eta : {0.1, 0.5, 0.8}) {
      EXPECT_NEAR(chi_ensemble_B(q, Transmissivity(eta)),
                  oracle::fc_holevo(eta, ensemble_B_items(q)), 1e-10);
      EXPECT_NEAR(chi_ensemble_B(q, Transmissivity(eta)),
                  holevo(fc_channel(Transmissivity(eta)), ensemble_B(q)), 1e-10);
    }
  }
}

TEST(ChiEnsembleB, DominatesA) {
  for (const auto& q : random_points(50, 4)) {
    for (double eta : {0.0, 0.3, 0.7, 1.0}) {
      EXPECT_GE(chi_ensemble_B(q, Transmissivity(eta)),
                chi_ensemble_A(q, Transmissivity(eta)) - 1e-12);
    }
  }
}

// --- lower bounds ------------------------------------------------------------------

TEST(C1LowerBounds, FullyDamped) {
  const LowerBounds lb = c1_lower_bounds(Transmissivity(0.0));
  EXPECT_NEAR(lb.chi_lb1(), kLog2Of3, 1e-9);
  EXPECT_NEAR(lb.chi_lb2(), kLog2Of3, 1e-9);
}

TEST(C1LowerBounds, Noiseless) {
  const LowerBounds lb = c1_lower_bounds(Transmissivity(1.0));
  EXPECT_NEAR(lb.chi_lb1(), 2.0, 1e-9);
  EXPECT_NEAR(lb.chi_lb2(), 2.0, 1e-9);
}

TEST(C1LowerBounds, EntangledStrictlyBetterAtHalf) {
  const LowerBounds lb = c1_lower_bounds(Transmissivity(0.5));
  EXPECT_GT(lb.chi_lb2(), lb.chi_lb1() + 1e-3);
}

TEST(C1LowerBounds, ReferenceValues) {
  for (const auto& r : kReference) {
    const LowerBounds lb = c1_lower_bounds(Transmissivity(r.eta));
    EXPECT_NEAR(lb.chi_lb1(), r.lb1, 1e-8) << r.eta;
    EXPECT_NEAR(lb.chi_lb2(), r.lb2, 1e-8) << r.eta;
  }
}

TEST(C1LowerBounds, OracleGridNeverBeatsSearch) {
  for (double eta : {0.2, 0.55}) {
    const Transmissivity e(eta);
    const LowerBounds lb = c1_lower_bounds(e);
    EXPECT_GE(lb.chi_lb1(),
              oracle::grid_max([&](const SimplexPoint& p) { return chi_ensemble_A(p, e); }, 400) -
                  1e-12);
    EXPECT_GE(lb.chi_lb2(),
              oracle::grid_max([&](const SimplexPoint& p) { return chi_ensemble_B(p, e); }, 400) -
                  1e-12);
  }
}

// --- closed-form route --------------------------------------------------------------

TEST(CAd1, Endpoints) {
  EXPECT_NEAR(c_ad1(Transmissivity(1.0)), 1.0, 1e-12);
  EXPECT_NEAR(c_ad1(Transmissivity(0.0)), 0.0, 1e-15);
}

TEST(CAd1, ReferenceValues) {
  EXPECT_NEAR(c_ad1(Transmissivity(0.25)), kCad1At025, 1e-10);
  EXPECT_NEAR(c_ad1(Transmissivity(0.5)), kCad1At05, 1e-10);
  EXPECT_NEAR(c_ad1(Transmissivity(0.6)), kCad1At06, 1e-10);
  EXPECT_NEAR(c_ad1(Transmissivity(0.75)), kCad1At075, 1e-10);
}

TEST(CAd1, ObjectiveMatchesAmplitudeDampingHolevo) {
  // Ensemble {1/2, sqrt(1-p)|0> +- sqrt(p)|1>} through the single-qubit channel.
  for (double eta : {0.3, 0.75}) {
    for (double p1 : {0.1, 0.4, 0.9}) {
      const double a = std::sqrt(1 - p1), b = std::sqrt(p1);
      const Ensemble ens({{0.5, StateVector(std::vector<Complex>{a, b})},
                          {0.5, StateVector(std::vector<Complex>{a, -b})}});
      EXPECT_NEAR(c_ad1_objective(p1, Transmissivity(eta)),
                  holevo(ad_channel(Transmissivity(eta)), ens), 1e-10);
    }
  }
}

TEST(POpt, EndpointsAndRange) {
  EXPECT_NEAR(p_opt(Transmissivity(0.0)), 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(p_opt(Transmissivity(1.0)), 0.5, 1e-9);
  for (int k = 0; k <= 20; ++k) {
    const double p = p_opt(Transmissivity(k / 20.0));
    EXPECT_GE(p, 1.0 / 3.0 - 1e-12);
    EXPECT_LE(p, 0.5 + 1e-12);
  }
}

TEST(POpt, ReferenceValues) {
  EXPECT_NEAR(p_opt(Transmissivity(0.25)), kPoptAt025, 1e-10);
  EXPECT_NEAR(p_opt(Transmissivity(0.5)), kPoptAt05, 1e-10);
  EXPECT_NEAR(p_opt(Transmissivity(0.5)), 1.0 / (1.0 + std::exp2(1.0 - kCad1At05)), 1e-10);
  EXPECT_NEAR(p_opt(Transmissivity(0.6)), kPoptAt06, 1e-10);
  EXPECT_NEAR(p_opt(Transmissivity(0.75)), kPoptAt075, 1e-10);
}

TEST(C1, Endpoints) {
  EXPECT_NEAR(c1(Transmissivity(0.0)).value, kLog2Of3, 1e-9);
  EXPECT_NEAR(c1(Transmissivity(1.0)).value, 2.0, 1e-9);
}

TEST(C1, ReferenceValues) {
  EXPECT_NEAR(c1(Transmissivity(0.25)).value, kC1At025, 1e-10);
  EXPECT_NEAR(c1(Transmissivity(0.5)).value, kC1At05, 1e-10);
  EXPECT_NEAR(c1(Transmissivity(0.6)).value, kC1At06, 1e-10);
  EXPECT_NEAR(c1(Transmissivity(0.75)).value, kC1At075, 1e-10);
}

TEST(C1, ReportedPointAttainsValue) {
  for (double eta : {0.0, 0.25, 0.6, 1.0}) {
    const CapacityResult r = c1(Transmissivity(eta));
    EXPECT_NEAR(chi_ensemble_B(r.point, Transmissivity(eta)), r.value, 1e-9) << eta;
  }
}

TEST(C1, TwoRoutesAgree) {
  for (int k = 0; k <= 20; ++k) {
    const Transmissivity eta(k / 20.0);
    EXPECT_NEAR(c1(eta).value, c1_via_optimization(eta).value, 1e-4) << eta.value();
  }
}

TEST(C1ViaOptimization, NoiselessCoefficients) {
  const CapacityResult r = c1_via_optimization(Transmissivity(1.0));
  EXPECT_NEAR(r.value, 2.0, 1e-9);
  EXPECT_NEAR(r.point.alpha(), 0.25, 1e-3);
  EXPECT_NEAR(r.point.beta(), 0.25, 1e-3);
  EXPECT_NEAR(r.point.delta(), 0.25, 1e-3);
}

TEST(C1ViaOptimization, FullyDampedSubspaceWeight) {
  const CapacityResult r = c1_via_optimization(Transmissivity(0.0));
  EXPECT_NEAR(r.value, kLog2Of3, 1e-9);
  EXPECT_NEAR(r.point.alpha() + r.point.delta(), 1.0 / 3.0, 1e-4);
}

// --- quantum capacity -----------------------------------------------------------

TEST(QObjective, MatchesCoherentInformation) {
  for (const auto& p : random_points(100, 5)) {
    for (int k = 0; k < 10; ++k) {
      const double eta = 0.05 + 0.1 * k;
      const ComplexMatrix rho = oracle::diag4(p.alpha(), p.beta(), p.beta(), p.delta());
      EXPECT_NEAR(q_objective(p, Transmissivity(eta)), coherent_info(Transmissivity(eta), rho),
                  1e-10);
    }
  }
}

TEST(QObjective, DirectValues) {
  EXPECT_NEAR(q_objective(SimplexPoint(0.25, 0.25, 0.25), Transmissivity(1.0)), 2.0, 1e-12);
  EXPECT_NEAR(q_objective(SimplexPoint(0.2, 0.3, 0.2), Transmissivity(0.5)), 1.426466250649,
              1e-12);
  EXPECT_NEAR(q_objective(SimplexPoint(1.0 / 3, 1.0 / 3, 0.0), Transmissivity(0.2)), kLog2Of3,
              1e-12);
}

TEST(QCapacity, PlateauBelowHalf) {
  for (int k = 0; k <= 9; ++k) {
    const CapacityResult r = q_capacity(Transmissivity(0.05 * k));
    EXPECT_NEAR(r.value, kLog2Of3, 1e-9);
    EXPECT_EQ(r.point.delta(), 0.0);
  }
}

TEST(QCapacity, OptimizationAtHalfMeetsPlateau) {
  EXPECT_NEAR(q_capacity(Transmissivity(0.5)).value, kLog2Of3, 1e-4);
}

TEST(QCapacity, Noiseless) {
  const CapacityResult r = q_capacity(Transmissivity(1.0));
  EXPECT_NEAR(r.value, 2.0, 1e-9);
  EXPECT_NEAR(r.point.alpha(), 0.25, 1e-3);
  EXPECT_NEAR(r.point.delta(), 0.25, 1e-3);
}

TEST(QCapacity, ReferenceValues) {
  for (const auto& r : kReference) {
    EXPECT_NEAR(q_capacity(Transmissivity(r.eta)).value, r.q, 1e-8) << r.eta;
  }
}

// --- entanglement-assisted ---------------------------------------------------------

TEST(CeObjective, MatchesMutualInformation) {
  for (const auto& p : random_points(100, 6)) {
    for (int k = 0; k < 10; ++k) {
      const double eta = 0.05 + 0.1 * k;
      const ComplexMatrix rho = oracle::diag4(p.alpha(), p.beta(), p.beta(), p.delta());
      EXPECT_NEAR(ce_objective(p, Transmissivity(eta)), mutual_info(Transmissivity(eta), rho),
                  1e-10);
    }
  }
}

TEST(CeObjective, DirectValues) {
  EXPECT_NEAR(ce_objective(SimplexPoint(0.25, 0.25, 0.25), Transmissivity(1.0)), 4.0, 1e-12);
  EXPECT_NEAR(ce_objective(SimplexPoint(1.0 / 3, 1.0 / 3, 0.0), Transmissivity(0.0)),
              2 * kLog2Of3, 1e-12);
  EXPECT_NEAR(ce_objective(SimplexPoint(0.2, 0.3, 0.2), Transmissivity(0.5)), 3.397416845104,
              1e-12);
}

TEST(CeCapacity, Endpoints) {
  EXPECT_NEAR(ce_capacity(Transmissivity(0.0)).value, 2 * kLog2Of3, 1e-4);
  const CapacityResult r = ce_capacity(Transmissivity(1.0));
  EXPECT_NEAR(r.value, 4.0, 1e-4);
  EXPECT_NEAR(r.point.alpha(), 0.25, 1e-3);
  EXPECT_NEAR(r.point.beta(), 0.25, 1e-3);
  EXPECT_NEAR(r.point.delta(), 0.25, 1e-3);
}

TEST(CeCapacity, SandwichAtHalf) {
  const double ce = ce_capacity(Transmissivity(0.5)).value;
  EXPECT_GT(ce, q_capacity(Transmissivity(0.5)).value);
  EXPECT_LT(ce, 4.0);
}

TEST(CeCapacity, ReferenceValues) {
  for (const auto& r : kReference) {
    EXPECT_NEAR(ce_capacity(Transmissivity(r.eta)).value, r.ce, 1e-8) << r.eta;
  }
}

// --- entanglement of the pair states ---------------------------------------------

TEST(EntanglementB, Cases) {
  EXPECT_NEAR(entanglement_B(SimplexPoint(0.3, 0.2, 0.3)).e_phi, 1.0, 1e-12);
  EXPECT_NEAR(entanglement_B(SimplexPoint(0.4, 0.3, 0.0)).e_phi, 0.0, 1e-12);
  const EntanglementB e = entanglement_B(SimplexPoint(0.2, 0.35, 0.1));
  EXPECT_NEAR(e.e_phi, 0.918295834054, 1e-11);
  EXPECT_NEAR(e.e_avg, 0.275488750216, 1e-11);
}

TEST(EntanglementB, MatchesReducedStateEntropy) {
  for (const auto& p : random_points(20, 7)) {
    const Items items = ensemble_B_items(p);
    const ComplexMatrix reduced = partial_trace(ComplexMatrix::projector(items[0].second), {2, 2}, {0});
    EXPECT_NEAR(entanglement_B(p).e_phi, oracle::entropy_bits(reduced), 1e-10);
  }
}

TEST(EntanglementB, RejectsEmptySubspace) {
  EXPECT_THROW(entanglement_B(SimplexPoint(0.0, 0.5, 0.0)), ZeroSubspaceWeight);
}

// --- capacity point -----------------------------------------------------------------

TEST(CapacityPointRow, InvariantsOnGrid) {
  for (int k = 0; k <= 10; ++k) {
    const CapacityPoint cp = capacity_point(Transmissivity(k / 10.0));
    EXPECT_LE(cp.q, cp.ce + 1e-9);
    EXPECT_LE(cp.c1, cp.ce + 1e-9);
    EXPECT_LE(cp.q, cp.c1 + 1e-6);
    EXPECT_GE(cp.chi_lb1, kLog2Of3 - 1e-9);
    EXPECT_LE(cp.chi_lb1, cp.chi_lb2 + 1e-12);
    EXPECT_LE(cp.chi_lb2, cp.c1 + 1e-6);
    for (double v : {cp.c1, cp.c1_optimized, cp.q, cp.ce, cp.chi_lb1, cp.chi_lb2}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 4.0);
    }
    EXPECT_NEAR(cp.p_opt, p_opt(Transmissivity(k / 10.0)), 1e-15);
    EXPECT_NEAR(cp.c_ad1, c_ad1(Transmissivity(k / 10.0)), 1e-15);
  }
}

TEST(CapacityPointRow, MonotoneInTransmissivity) {
  CapacityPoint prev = capacity_point(Transmissivity(0.0));
  for (int k = 1; k <= 50; ++k) {
    const CapacityPoint cur = capacity_point(Transmissivity(0.02 * k));
    EXPECT_GE(cur.c1, prev.c1 - 1e-6) << cur.eta;
    EXPECT_GE(cur.q, prev.q - 1e-6) << cur.eta;
    EXPECT_GE(cur.ce, prev.ce - 1e-6) << cur.eta;
    prev = cur;
  }
}

// --- step inequality ---------------------------------------------------------------

TEST(StepInequality, MarginIsOutputEntropyDifference) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    double x = std::abs(n(rng)), y = std::abs(n(rng)), z = std::abs(n(rng));
    const double norm = std::sqrt(x * x + y * y + z * z);
    const double a = x / norm, b = y / norm / std::sqrt(2.0), d = z / norm, eta = u(rng);
    const double w = a * a + d * d;
    const double lhs = oracle::entropy_bits(
        oracle::fc_system(eta, ComplexMatrix::projector(ket(a, b, b, d))));
    const double rhs = w * oracle::entropy_bits(oracle::fc_system(
                               eta, ComplexMatrix::projector(ket(a / std::sqrt(w), 0, 0,
                                                                 d / std::sqrt(w)))));
    EXPECT_NEAR(step_inequality_margin(a, b, d, eta), lhs - rhs, 1e-10);
  }
}

TEST(StepInequality, EqualityCases) {
  EXPECT_NEAR(step_inequality_margin(0.6, 0.4, std::sqrt(1 - 0.36 - 0.32), 1.0), 0.0, 1e-12);
  EXPECT_NEAR(step_inequality_margin(0.6, 0.0, 0.8, 0.37), 0.0, 1e-12);
  EXPECT_NEAR(step_inequality_margin(0.6, 0.8 / std::sqrt(2.0), 0.0, 0.37), 0.0, 1e-12);
}

TEST(StepInequality, SampledMargin) {
  const StepInequalityReport r = verify_step_inequality(100000, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.samples, 100000u);
  EXPECT_GE(r.min_margin, -1e-10);
  EXPECT_LE(r.max_equality_gap, 1e-12);
  EXPECT_EQ(r.equality_samples, 300000u);
  EXPECT_GT(r.strict_samples, 99000u);
}

TEST(StepInequality, Deterministic) {
  const StepInequalityReport a = verify_step_inequality(1000, 9), b = verify_step_inequality(1000, 9);
  EXPECT_EQ(a.min_margin, b.min_margin);
  EXPECT_EQ(a.strict_samples, b.strict_samples);
}

// --- entropy-ratio inequality ----------------------------------------------------------

TEST(EntropyRatioInequality, EqualityAtOne) {
  for (double eta : {0.01, 0.3, 0.5, 0.77, 0.99}) {
    EXPECT_NEAR(entropy_ratio_margin(1.0, eta), 0.0, 1e-12);
  }
}

TEST(EntropyRatioInequality, DirectValue) {
  // x = 10, eta = 1/2: 1 - 10 H2((1 + sqrt(0.99)) / 2).
  const double y = 0.5 * (1.0 + std::sqrt(0.99));
  const double expected = 1.0 - 10.0 * (-y * std::log2(y) - (1 - y) * std::log2(1 - y));
  EXPECT_NEAR(entropy_ratio_margin(10.0, 0.5), expected, 1e-12);
  EXPECT_GT(entropy_ratio_margin(10.0, 0.5), 0.0);
}

TEST(EntropyRatioInequality, Grid) {
  const EntropyRatioReport r = verify_entropy_ratio_inequality(100.0, 50);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.points, 99u * 50u);
  EXPECT_GE(r.min_margin, -1e-10);
  EXPECT_LE(r.max_equality_gap, 1e-10);
  EXPECT_GT(r.min_margin_x_gt_1, 0.0);
}

TEST(EntropyRatioInequality, RejectsBadGrid) {
  EXPECT_THROW(verify_entropy_ratio_inequality(1.0, 50), DomainError);
  EXPECT_THROW(verify_entropy_ratio_inequality(10.0, 1), DomainError);
}

// --- symmetrization chain -----------------------------------------------------------

TEST(SymmetrizationChain, FixedPointEnsemble) {
  // Phase-flip orbit of a|00> + b|01> + b|10> + d|11>: closed under R_i and SWAP, |b| = |c|.
  const double a = 0.5, b = 0.4, d = std::sqrt(1 - a * a - 2 * b * b);
  const Ensemble fixed =
      phase_flip_orbit(Ensemble(std::vector<Ensemble::Item>{{1.0, ket(a, b, b, d)}}));
  ASSERT_EQ(fixed.items().size(), 4u);
  const QuantumChannel ch = fc_channel(Transmissivity(0.6));
  const double chi = holevo(ch, fixed);
  EXPECT_NEAR(holevo(ch, phase_flip_orbit(fixed)), chi, 1e-12);
  EXPECT_NEAR(holevo(ch, swap_orbit(fixed)), chi, 1e-12);
  EXPECT_NEAR(holevo(ch, merge_bc(fixed)), chi, 1e-12);
  EXPECT_LT(max_abs_diff(merge_bc(fixed).average_state(), fixed.average_state()), 1e-12);
}

TEST(SymmetrizationChain, OrbitsPreserveAverageStateTrace) {
  const Ensemble b = ensemble_B(SimplexPoint(0.1, 0.3, 0.3));
  for (const Ensemble& e : {phase_flip_orbit(b), swap_orbit(b), merge_bc(b), pair_replacement(b)}) {
    EXPECT_NEAR(e.average_state().trace().real(), 1.0, 1e-12);
  }
}

TEST(SymmetrizationChain, PhaseFlipOrbitDiagonalizesAverage) {
  const StateVector psi = random_pure(4, 11);
  const Ensemble ens(std::vector<Ensemble::Item>{{1.0, psi}});
  const ComplexMatrix avg = phase_flip_orbit(ens).average_state();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) {
        EXPECT_LT(std::abs(avg(i, j)), 1e-12);
      }
    }
  }
}

TEST(SymmetrizationChain, RandomEnsembles) {
  const SymmetrizationReport r = verify_symmetrization_chain(100, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.ensembles, 100u);
  EXPECT_GE(r.min_gain_phase_flip, -1e-10);
  EXPECT_GE(r.min_gain_swap, -1e-10);
  EXPECT_LE(r.max_merge_change, 1e-10);
  EXPECT_GE(r.min_gain_pairing, -1e-10);
  EXPECT_GE(r.min_gain_convexity, -1e-10);
  EXPECT_GT(r.min_gain_entangling, 0.0);
  EXPECT_EQ(r.strict_entangling, 100u);
}
