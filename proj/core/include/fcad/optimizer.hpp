#pragma once

// Deterministic maximizers over the population simplex
// {alpha, beta, delta >= 0 : alpha + 2 beta + delta = 1} and over an interval.

#include <cstddef>
#include <functional>
#include <vector>

namespace fcad {

/// Diagonal populations (alpha, beta, beta, delta) of a two-qubit state.
class SimplexPoint {
 public:
  /// Throws DomainError if a coordinate is negative or the constraint is
  /// violated by more than 1e-12.
  SimplexPoint(double alpha, double beta, double delta);
  /// beta = (1 - alpha - delta) / 2.
  static SimplexPoint from_alpha_delta(double alpha, double delta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double delta() const noexcept { return delta_; }

 private:
  double alpha_;
  double beta_;
  double delta_;
};

using SimplexObjective = std::function<double(const SimplexPoint&)>;
using ScalarObjective = std::function<double(double)>;

struct SimplexSearchOptions {
  double coarse_step = 1e-2;  // 1 / coarse_step must be an integer
  double refine_tol = 1e-7;
};

struct OptimResult {
  double value;
  SimplexPoint point;
  std::size_t evaluations;
  double grid_step_final;
  std::vector<double> level_best;  // best value after the coarse scan and each refinement
};

struct ScalarOptimResult {
  double value;
  double argmax;
  std::size_t evaluations;
  double grid_step_final;
};

/// Coarse scan of the (alpha, delta) triangle followed by a lattice pattern
/// search whose step halves until it drops below refine_tol. Ties keep the
/// first point in lexicographic (alpha, delta) order.
OptimResult maximize_simplex(const SimplexObjective& objective,
                             const SimplexSearchOptions& options = {});

/// Exhaustive scan of the (alpha, delta) lattice with the given step.
OptimResult maximize_simplex_flat(const SimplexObjective& objective, double step = 1e-4);

/// Golden-section search (assumes unimodality) on [lo, hi], cross-checked by
/// a 1e-3 grid scan; the better of the two is returned. Throws DomainError
/// unless lo < hi.
ScalarOptimResult maximize_1d(const ScalarObjective& objective, double lo, double hi,
                              double tol = 1e-10);

}  // namespace fcad
