#pragma once

// Symmetry operators of the fully correlated channel and numerical
// certificates for covariance, Kraus (anti)commutation and degradability.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fcad/channels.hpp"
#include "fcad/qmat.hpp"

namespace fcad {

enum class SymmetryName { R1, R2, R3, Swap };

std::string_view to_string(SymmetryName name) noexcept;

struct SymmetryOp {
  SymmetryName name;
  ComplexMatrix matrix;  // 4x4 involutive unitary
};

/// R1 = sigma_z (x) 1, R2 = 1 (x) sigma_z, R3 = sigma_z (x) sigma_z, SWAP.
std::vector<SymmetryOp> symmetry_ops();
SymmetryOp symmetry_op(SymmetryName name);

/// Outcome of a sampled numerical check.
struct Deviation {
  double max_deviation = 0.0;
  std::size_t samples = 0;
  bool passed = false;
};

/// max over random mixed states of |fc(U rho U) - U fc(rho) U|.
Deviation check_covariance(Transmissivity eta, const ComplexMatrix& op,
                           std::size_t n_samples, std::uint64_t seed, double tol);
Deviation check_covariance(Transmissivity eta, const SymmetryOp& op,
                           std::size_t n_samples, std::uint64_t seed, double tol);

/// max over random mixed states of |D(fc(rho)) - complementary_output(rho)|.
/// Throws EtaOutOfRange for eta < 1/2.
Deviation check_degradability(Transmissivity eta, std::size_t n_samples,
                              std::uint64_t seed, double tol);

struct CommutationRelation {
  std::string label;  // e.g. "R1 B1 = -B1 R1"
  double eta;
  double residual;
  bool holds;
};

struct CommutationReport {
  std::vector<CommutationRelation> relations;
  double max_residual = 0.0;
  bool passed = false;
};

/// B0 commutes with every R_i; B1 anticommutes with R1, R2 and commutes with
/// R3; SWAP commutes with B0 and B1. Checked to 1e-14 at each eta sampled.
CommutationReport check_kraus_commutation(
    const std::vector<double>& etas = {0.0, 0.25, 0.5, 0.75, 1.0});

}  // namespace fcad
