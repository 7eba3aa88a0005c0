#include "fcad/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "fcad/errors.hpp"

namespace fcad {

namespace {

constexpr double kSimplexTol = 1e-12;
constexpr int kMaxMovesPerLevel = 1 << 20;

// Lattice with M cells per unit: alpha = i / M, delta = j / M, i + j <= M.
struct Lattice {
  std::int64_t cells;

  bool contains(std::int64_t i, std::int64_t j) const {
    return i >= 0 && j >= 0 && i + j <= cells;
  }
  SimplexPoint point(std::int64_t i, std::int64_t j) const {
    const double m = static_cast<double>(cells);
    return SimplexPoint(static_cast<double>(i) / m,
                        static_cast<double>(cells - i - j) / (2.0 * m),
                        static_cast<double>(j) / m);
  }
};

std::int64_t cells_for_step(double step, const char* what) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw DomainError(std::string(what) + ": step must lie in (0, 1]");
  }
  const double cells = std::round(1.0 / step);
  if (std::abs(cells * step - 1.0) > 1e-9) {
    throw DomainError(std::string(what) + ": 1 / step must be an integer");
  }
  return static_cast<std::int64_t>(cells);
}

struct ScanResult {
  std::int64_t i = 0;
  std::int64_t j = 0;
  double value = 0.0;
  std::size_t evaluations = 0;
};

ScanResult scan(const SimplexObjective& objective, const Lattice& lattice) {
  ScanResult best;
  bool first = true;
  for (std::int64_t i = 0; i <= lattice.cells; ++i) {
    for (std::int64_t j = 0; i + j <= lattice.cells; ++j) {
      const double v = objective(lattice.point(i, j));
      ++best.evaluations;
      if (first || v > best.value) {
        best.i = i;
        best.j = j;
        best.value = v;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

SimplexPoint::SimplexPoint(double alpha, double beta, double delta)
    : alpha_(alpha), beta_(beta), delta_(delta) {
  if (alpha < -kSimplexTol || beta < -kSimplexTol || delta < -kSimplexTol) {
    throw DomainError("SimplexPoint: negative population");
  }
  if (std::abs(alpha + 2.0 * beta + delta - 1.0) > kSimplexTol) {
    throw DomainError("SimplexPoint: alpha + 2 beta + delta != 1");
  }
  alpha_ = std::max(alpha_, 0.0);
  beta_ = std::max(beta_, 0.0);
  delta_ = std::max(delta_, 0.0);
}

SimplexPoint SimplexPoint::from_alpha_delta(double alpha, double delta) {
  return SimplexPoint(alpha, 0.5 * (1.0 - alpha - delta), delta);
}

OptimResult maximize_simplex(const SimplexObjective& objective,
                             const SimplexSearchOptions& options) {
  if (!(options.refine_tol > 0.0)) throw DomainError("maximize_simplex: refine_tol <= 0");
  Lattice lattice{cells_for_step(options.coarse_step, "maximize_simplex")};
  ScanResult coarse = scan(objective, lattice);

  std::int64_t ci = coarse.i;
  std::int64_t cj = coarse.j;
  double best = coarse.value;
  std::size_t evaluations = coarse.evaluations;
  std::vector<double> level_best{best};
  double step = 1.0 / static_cast<double>(lattice.cells);

  while (step >= options.refine_tol) {
    lattice.cells *= 2;
    ci *= 2;
    cj *= 2;
    step = 1.0 / static_cast<double>(lattice.cells);

    for (int move = 0; move < kMaxMovesPerLevel; ++move) {
      std::int64_t bi = ci, bj = cj;
      double bv = best;
      for (std::int64_t di = -1; di <= 1; ++di) {
        for (std::int64_t dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const std::int64_t i = ci + di, j = cj + dj;
          if (!lattice.contains(i, j)) continue;
          const double v = objective(lattice.point(i, j));
          ++evaluations;
          if (v > bv) {
            bi = i;
            bj = j;
            bv = v;
          }
        }
      }
      if (bi == ci && bj == cj) break;
      ci = bi;
      cj = bj;
      best = bv;
    }
    level_best.push_back(best);
  }

  return OptimResult{best, lattice.point(ci, cj), evaluations, step,
                     std::move(level_best)};
}

OptimResult maximize_simplex_flat(const SimplexObjective& objective, double step) {
  const Lattice lattice{cells_for_step(step, "maximize_simplex_flat")};
  const ScanResult r = scan(objective, lattice);
  return OptimResult{r.value, lattice.point(r.i, r.j), r.evaluations,
                     1.0 / static_cast<double>(lattice.cells), {r.value}};
}

ScalarOptimResult maximize_1d(const ScalarObjective& objective, double lo, double hi,
                              double tol) {
  if (!(lo < hi)) throw DomainError("maximize_1d: need lo < hi");
  if (!(tol > 0.0)) throw DomainError("maximize_1d: tol <= 0");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  std::size_t evaluations = 0;
  auto eval = [&](double x) {
    ++evaluations;
    return objective(x);
  };

  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval(x1);
    }
  }
  double golden_x = f1 >= f2 ? x1 : x2;
  double golden_v = std::max(f1, f2);
  const double golden_step = b - a;

  // Grid cross-check, endpoints included.
  constexpr double kGridStep = 1e-3;
  const auto n = static_cast<std::int64_t>(std::ceil((hi - lo) / kGridStep));
  double grid_x = lo, grid_v = eval(lo);
  for (std::int64_t k = 1; k <= n; ++k) {
    const double x = (k == n) ? hi : lo + static_cast<double>(k) * (hi - lo) / n;
    const double v = eval(x);
    if (v > grid_v) {
      grid_v = v;
      grid_x = x;
    }
  }

  if (grid_v > golden_v) {
    return {grid_v, grid_x, evaluations, (hi - lo) / static_cast<double>(n)};
  }
  return {golden_v, golden_x, evaluations, golden_step};
}

}  // namespace fcad
