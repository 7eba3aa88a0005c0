#pragma once

// Entropic functionals in bits (log base 2, 0 log 0 := 0).

#include <span>
#include <utility>
#include <vector>

#include "fcad/channels.hpp"
#include "fcad/qmat.hpp"

namespace fcad {

/// x log2 x with the 0 log 0 = 0 convention; non-positive x gives 0.
double xlog2x(double x) noexcept;

/// Shannon binary entropy. Throws DomainError outside [0, 1] (1e-12 slack).
double h2(double x);

/// -sum p log2 p over a probability vector.
double shannon_entropy(std::span<const double> probabilities);

/// Throws NotDensityMatrix.
double vn_entropy(const ComplexMatrix& rho);

/// Finite ensemble of pure states {p_k, |psi_k>}.
class Ensemble {
 public:
  struct Item {
    double probability;
    StateVector state;
  };

  /// Probabilities must be >= 0 and sum to 1 within 1e-12; all states share
  /// one dimension. Throws DomainError / DimensionMismatch.
  explicit Ensemble(std::vector<Item> items);

  const std::vector<Item>& items() const noexcept { return items_; }
  std::size_t dim() const noexcept { return items_.front().state.dim(); }
  ComplexMatrix average_state() const;

 private:
  std::vector<Item> items_;
};

/// S(E(sum p_k psi_k)) - sum_k p_k S(E(psi_k)).
double holevo(const QuantumChannel& ch, const Ensemble& ens);

/// S of the environment output, computed from the complementary channel.
double entropy_exchange(const QuantumChannel& ch, const ComplexMatrix& rho);
double entropy_exchange(Transmissivity eta, const ComplexMatrix& rho);

/// S((E (x) I)(|Psi><Psi|)) for a purification |Psi> of rho. Slower route
/// kept as a verification oracle for entropy_exchange.
double entropy_exchange_purified(const QuantumChannel& ch, const ComplexMatrix& rho);

/// S(E(rho)) - S_e(E, rho).
double coherent_info(const QuantumChannel& ch, const ComplexMatrix& rho);
double coherent_info(Transmissivity eta, const ComplexMatrix& rho);

/// S(rho) + I_c(E, rho).
double mutual_info(const QuantumChannel& ch, const ComplexMatrix& rho);
double mutual_info(Transmissivity eta, const ComplexMatrix& rho);

}  // namespace fcad
