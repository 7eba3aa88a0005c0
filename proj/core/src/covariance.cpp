#include "fcad/covariance.hpp"

#include <algorithm>

namespace fcad {

namespace {

constexpr double kCommutationTol = 1e-14;

ComplexMatrix sigma_z() { return ComplexMatrix::diagonal({1.0, -1.0}); }

ComplexMatrix swap_matrix() {
  ComplexMatrix s(4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

}  // namespace

std::string_view to_string(SymmetryName name) noexcept {
  switch (name) {
    case SymmetryName::R1: return "R1";
    case SymmetryName::R2: return "R2";
    case SymmetryName::R3: return "R3";
    case SymmetryName::Swap: return "SWAP";
  }
  return "?";
}

SymmetryOp symmetry_op(SymmetryName name) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  switch (name) {
    case SymmetryName::R1: return {name, kron(sigma_z(), id)};
    case SymmetryName::R2: return {name, kron(id, sigma_z())};
    case SymmetryName::R3: return {name, kron(sigma_z(), sigma_z())};
    case SymmetryName::Swap: return {name, swap_matrix()};
  }
  return {name, ComplexMatrix::identity(4)};
}

std::vector<SymmetryOp> symmetry_ops() {
  return {symmetry_op(SymmetryName::R1), symmetry_op(SymmetryName::R2),
          symmetry_op(SymmetryName::R3), symmetry_op(SymmetryName::Swap)};
}

Deviation check_covariance(Transmissivity eta, const ComplexMatrix& op,
                           std::size_t n_samples, std::uint64_t seed, double tol) {
  const QuantumChannel channel = fc_channel(eta);
  Deviation d;
  d.samples = n_samples;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const ComplexMatrix rho = random_density(4, derive_seed(seed, i));
    const ComplexMatrix lhs = apply(channel, conjugate(op, rho));
    const ComplexMatrix rhs = conjugate(op, apply(channel, rho));
    d.max_deviation = std::max(d.max_deviation, max_abs_diff(lhs, rhs));
  }
  d.passed = d.max_deviation < tol;
  return d;
}

Deviation check_covariance(Transmissivity eta, const SymmetryOp& op,
                           std::size_t n_samples, std::uint64_t seed, double tol) {
  return check_covariance(eta, op.matrix, n_samples, seed, tol);
}

Deviation check_degradability(Transmissivity eta, std::size_t n_samples,
                              std::uint64_t seed, double tol) {
  const QuantumChannel channel = fc_channel(eta);
  const QuantumChannel degrade = degrading_map(eta);
  Deviation d;
  d.samples = n_samples;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const ComplexMatrix rho = random_density(4, derive_seed(seed, i));
    const ComplexMatrix degraded = apply(degrade, apply(channel, rho));
    d.max_deviation =
        std::max(d.max_deviation, max_abs_diff(degraded, complementary_output(eta, rho)));
  }
  d.passed = d.max_deviation < tol;
  return d;
}

CommutationReport check_kraus_commutation(const std::vector<double>& etas) {
  CommutationReport report;
  const ComplexMatrix swap = symmetry_op(SymmetryName::Swap).matrix;
  for (double e : etas) {
    const QuantumChannel ch = fc_channel(Transmissivity(e));
    const ComplexMatrix& b0 = ch.kraus()[0];
    const ComplexMatrix& b1 = ch.kraus()[1];

    auto record = [&](std::string label, const ComplexMatrix& lhs,
                      const ComplexMatrix& rhs) {
      const double r = max_abs_diff(lhs, rhs);
      report.relations.push_back({std::move(label), e, r, r <= kCommutationTol});
      report.max_residual = std::max(report.max_residual, r);
    };

    for (const auto& op : symmetry_ops()) {
      if (op.name == SymmetryName::Swap) continue;
      const std::string name(to_string(op.name));
      record(name + " B0 = B0 " + name, op.matrix * b0, b0 * op.matrix);
    }
    const ComplexMatrix r1 = symmetry_op(SymmetryName::R1).matrix;
    const ComplexMatrix r2 = symmetry_op(SymmetryName::R2).matrix;
    const ComplexMatrix r3 = symmetry_op(SymmetryName::R3).matrix;
    record("R1 B1 = -B1 R1", r1 * b1, Complex{-1.0, 0.0} * (b1 * r1));
    record("R2 B1 = -B1 R2", r2 * b1, Complex{-1.0, 0.0} * (b1 * r2));
    record("R3 B1 = B1 R3", r3 * b1, b1 * r3);
    record("SWAP B0 = B0 SWAP", swap * b0, b0 * swap);
    record("SWAP B1 = B1 SWAP", swap * b1, b1 * swap);
  }
  report.passed = std::all_of(report.relations.begin(), report.relations.end(),
                              [](const CommutationRelation& r) { return r.holds; });
  return report;
}

}  // namespace fcad
