#pragma once

// Kraus-operator channels on one and two qubits: memoryless amplitude
// damping, the fully correlated two-qubit channel, the mixed memory channel,
// the complementary (environment) channel and the degrading map.
//
// Two-qubit basis order is {|00>, |01>, |10>, |11>}, first qubit most
// significant.

#include <cstddef>
#include <vector>

#include "fcad/qmat.hpp"

namespace fcad {

/// Channel transmissivity, 0 <= eta <= 1. Throws EtaOutOfRange otherwise.
class Transmissivity {
 public:
  explicit Transmissivity(double eta);
  double value() const noexcept { return eta_; }

 private:
  double eta_;
};

/// Trace-preserving map rho -> sum_i K_i rho K_i^dagger.
class QuantumChannel {
 public:
  /// Throws DimensionMismatch for ragged Kraus sets and NotTracePreserving
  /// when sum_i K_i^dagger K_i differs from I by more than 1e-12.
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

  std::size_t dim_in() const noexcept { return dim_; }
  std::size_t dim_out() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  ComplexMatrix operator()(const ComplexMatrix& rho) const;

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> kraus_;
};

QuantumChannel identity_channel(std::size_t dim);

/// Single-qubit amplitude damping: E0 = diag(1, sqrt(eta)),
/// E1 = sqrt(1 - eta) |0><1|.
QuantumChannel ad_channel(Transmissivity eta);

/// Fully correlated two-qubit damping: only |11> decays, to |00>.
/// B0 = diag(1, 1, 1, sqrt(eta)), B1 = sqrt(1 - eta) |00><11|.
QuantumChannel fc_channel(Transmissivity eta);

/// (1 - mu) ad(eta)^{(x)2} + mu fc(eta), realised by the Kraus union
/// {sqrt(1 - mu) E_i (x) E_j} u {sqrt(mu) B_i}. Throws DomainError for mu
/// outside [0, 1].
QuantumChannel memory_channel(Transmissivity eta, double mu);

/// Kraus set {A_i (x) B_j}.
QuantumChannel tensor_product(const QuantumChannel& a, const QuantumChannel& b);

/// a after b: Kraus set {A_i B_j}. Throws DimensionMismatch.
QuantumChannel compose(const QuantumChannel& a, const QuantumChannel& b);

/// Throws DimensionMismatch when rho does not match the channel input.
ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho);

/// Environment state of the Stinespring dilation indexed by Kraus label:
/// [E^c(rho)]_{jk} = Tr(K_j rho K_k^dagger).
ComplexMatrix environment_state(const QuantumChannel& ch, const ComplexMatrix& rho);

/// Environment output of fc(eta) in the two-qubit environment basis, with
/// Kraus label 0 -> |00> and 1 -> |11>. Supported on span{|00>, |11>}.
ComplexMatrix complementary_output(Transmissivity eta, const ComplexMatrix& rho);

/// Map D with D(fc(eta)(rho)) = complementary_output(eta, rho).
///
/// Adjoins ancillas A1 = |0> and A23 = |00>, applies CNOT(S1 -> A1) and
/// CNOT(S2 -> A1), swaps S with A23 controlled on A1, traces out the ancillas
/// and finishes with fc((1 - eta) / eta). Only defined for eta >= 1/2;
/// throws EtaOutOfRange below.
QuantumChannel degrading_map(Transmissivity eta);

/// Ancilla part of degrading_map without the final fc step: the 4 -> 4 map
/// rho -> Tr_A[U (rho (x) |000><000|) U^dagger].
QuantumChannel degrading_ancilla_stage();

/// Five-qubit permutation unitary used by degrading_map, qubit order
/// (S1, S2, A1, A2, A3) with S1 most significant.
ComplexMatrix degrading_unitary();

/// Choi matrix (ch (x) I)(|Omega><Omega|) with |Omega> = sum_i |ii> / sqrt(d).
ComplexMatrix choi_matrix(const QuantumChannel& ch);

}  // namespace fcad
