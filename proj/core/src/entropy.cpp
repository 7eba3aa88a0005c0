#include "fcad/entropy.hpp"

#include <cmath>
#include <string>

#include "fcad/errors.hpp"

namespace fcad {

namespace {
constexpr double kProbabilityTol = 1e-12;
}

double xlog2x(double x) noexcept { return x > 0.0 ? x * std::log2(x) : 0.0; }

double h2(double x) {
  if (!(x >= -kProbabilityTol && x <= 1.0 + kProbabilityTol)) {
    throw DomainError("h2: argument " + std::to_string(x) + " outside [0, 1]");
  }
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) s -= xlog2x(p);
  return s;
}

double vn_entropy(const ComplexMatrix& rho) {
  const std::vector<double> spectrum = density_spectrum(rho);
  return shannon_entropy(spectrum);
}

Ensemble::Ensemble(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) throw DomainError("Ensemble: no states");
  double total = 0.0;
  for (const auto& item : items_) {
    if (item.probability < 0.0) throw DomainError("Ensemble: negative probability");
    if (item.state.dim() != items_.front().state.dim()) {
      throw DimensionMismatch("Ensemble: states of different dimension");
    }
    total += item.probability;
  }
  if (std::abs(total - 1.0) > kProbabilityTol) {
    throw DomainError("Ensemble: probabilities sum to " + std::to_string(total));
  }
}

ComplexMatrix Ensemble::average_state() const {
  ComplexMatrix rho(dim());
  for (const auto& item : items_) {
    rho += Complex{item.probability, 0.0} * ComplexMatrix::projector(item.state);
  }
  return rho;
}

double holevo(const QuantumChannel& ch, const Ensemble& ens) {
  double average_output = 0.0;
  for (const auto& item : ens.items()) {
    if (item.probability == 0.0) continue;
    average_output +=
        item.probability * vn_entropy(apply(ch, ComplexMatrix::projector(item.state)));
  }
  return vn_entropy(apply(ch, ens.average_state())) - average_output;
}

double entropy_exchange(const QuantumChannel& ch, const ComplexMatrix& rho) {
  return vn_entropy(environment_state(ch, rho));
}

double entropy_exchange(Transmissivity eta, const ComplexMatrix& rho) {
  return vn_entropy(complementary_output(eta, rho));
}

double entropy_exchange_purified(const QuantumChannel& ch, const ComplexMatrix& rho) {
  const std::size_t d = rho.dim();
  const ComplexMatrix joint = ComplexMatrix::projector(purify(rho));
  const QuantumChannel extended = tensor_product(ch, identity_channel(d));
  return vn_entropy(apply(extended, joint));
}

double coherent_info(const QuantumChannel& ch, const ComplexMatrix& rho) {
  return vn_entropy(apply(ch, rho)) - entropy_exchange(ch, rho);
}

double coherent_info(Transmissivity eta, const ComplexMatrix& rho) {
  return vn_entropy(apply(fc_channel(eta), rho)) - entropy_exchange(eta, rho);
}

double mutual_info(const QuantumChannel& ch, const ComplexMatrix& rho) {
  return vn_entropy(rho) + coherent_info(ch, rho);
}

double mutual_info(Transmissivity eta, const ComplexMatrix& rho) {
  return vn_entropy(rho) + coherent_info(eta, rho);
}

}  // namespace fcad
