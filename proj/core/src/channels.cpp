#include "fcad/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fcad/errors.hpp"

namespace fcad {

namespace {

constexpr double kCompletenessTol = 1e-12;

bool is_zero(const ComplexMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [](Complex z) { return z == Complex{0.0, 0.0}; });
}

}  // namespace

Transmissivity::Transmissivity(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw EtaOutOfRange("transmissivity must lie in [0, 1], got " +
                        std::to_string(eta));
  }
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus)
    : dim_(kraus.empty() ? 0 : kraus.front().dim()), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw DimensionMismatch("QuantumChannel: empty Kraus set");
  ComplexMatrix completeness(dim_);
  for (const auto& k : kraus_) {
    if (k.dim() != dim_) throw DimensionMismatch("QuantumChannel: ragged Kraus set");
    completeness += k.adjoint() * k;
  }
  const double err = max_abs_diff(completeness, ComplexMatrix::identity(dim_));
  if (err > kCompletenessTol) {
    throw NotTracePreserving("QuantumChannel: |sum K^dagger K - I| = " +
                             std::to_string(err));
  }
}

ComplexMatrix QuantumChannel::operator()(const ComplexMatrix& rho) const {
  return apply(*this, rho);
}

QuantumChannel identity_channel(std::size_t dim) {
  return QuantumChannel({ComplexMatrix::identity(dim)});
}

QuantumChannel ad_channel(Transmissivity eta) {
  const double e = eta.value();
  ComplexMatrix e0 = ComplexMatrix::diagonal({1.0, std::sqrt(e)});
  ComplexMatrix e1(2);
  e1(0, 1) = std::sqrt(1.0 - e);
  return QuantumChannel({std::move(e0), std::move(e1)});
}

QuantumChannel fc_channel(Transmissivity eta) {
  const double e = eta.value();
  ComplexMatrix b0 = ComplexMatrix::diagonal({1.0, 1.0, 1.0, std::sqrt(e)});
  ComplexMatrix b1(4);
  b1(0, 3) = std::sqrt(1.0 - e);
  return QuantumChannel({std::move(b0), std::move(b1)});
}

QuantumChannel memory_channel(Transmissivity eta, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("memory parameter must lie in [0, 1], got " +
                      std::to_string(mu));
  }
  std::vector<ComplexMatrix> kraus;
  const double w_free = std::sqrt(1.0 - mu);
  const double w_corr = std::sqrt(mu);
  if (w_free > 0.0) {
    const QuantumChannel free = tensor_product(ad_channel(eta), ad_channel(eta));
    for (const auto& k : free.kraus()) {
      kraus.push_back(Complex{w_free, 0.0} * k);
    }
  }
  if (w_corr > 0.0) {
    const QuantumChannel corr = fc_channel(eta);
    for (const auto& k : corr.kraus()) {
      kraus.push_back(Complex{w_corr, 0.0} * k);
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel tensor_product(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) kraus.push_back(kron(ka, kb));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel compose(const QuantumChannel& a, const QuantumChannel& b) {
  if (b.dim_out() != a.dim_in()) {
    throw DimensionMismatch("compose: output dim " + std::to_string(b.dim_out()) +
                            " != input dim " + std::to_string(a.dim_in()));
  }
  std::vector<ComplexMatrix> kraus;
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) {
      ComplexMatrix k = ka * kb;
      if (!is_zero(k)) kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus));
}

ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho) {
  if (rho.dim() != ch.dim_in()) {
    throw DimensionMismatch("apply: state dim " + std::to_string(rho.dim()) +
                            " != channel input dim " + std::to_string(ch.dim_in()));
  }
  ComplexMatrix out(ch.dim_out());
  for (const auto& k : ch.kraus()) out += conjugate(k, rho);
  return out;
}

ComplexMatrix environment_state(const QuantumChannel& ch, const ComplexMatrix& rho) {
  if (rho.dim() != ch.dim_in()) throw DimensionMismatch("environment_state: dim mismatch");
  const auto& ks = ch.kraus();
  const std::size_t n = ks.size();
  std::vector<ComplexMatrix> k_rho;
  k_rho.reserve(n);
  for (const auto& k : ks) k_rho.push_back(k * rho);
  ComplexMatrix env(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      // Tr(K_j rho K_k^dagger) = sum_{ab} (K_j rho)_{ab} conj(K_k)_{ab}
      Complex t{0.0, 0.0};
      const auto lhs = k_rho[j].entries();
      const auto rhs = ks[k].entries();
      for (std::size_t e = 0; e < lhs.size(); ++e) t += lhs[e] * std::conj(rhs[e]);
      env(j, k) = t;
      env(k, j) = std::conj(t);
    }
  }
  return env;
}

ComplexMatrix complementary_output(Transmissivity eta, const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionMismatch("complementary_output: need a 4x4 state");
  const ComplexMatrix env2 = environment_state(fc_channel(eta), rho);
  constexpr std::size_t embed[2] = {0, 3};
  ComplexMatrix env(4);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t k = 0; k < 2; ++k) env(embed[j], embed[k]) = env2(j, k);
  }
  return env;
}

ComplexMatrix degrading_unitary() {
  // Qubit bit positions inside a 5-bit index, S1 most significant.
  constexpr unsigned s1 = 4, s2 = 3, a1 = 2, a2 = 1, a3 = 0;
  auto bit = [](unsigned x, unsigned pos) { return (x >> pos) & 1u; };
  auto with_bit = [](unsigned x, unsigned pos, unsigned v) {
    return (x & ~(1u << pos)) | (v << pos);
  };

  ComplexMatrix u(32);
  for (unsigned in = 0; in < 32; ++in) {
    unsigned x = in;
    x = with_bit(x, a1, bit(x, a1) ^ bit(x, s1));
    x = with_bit(x, a1, bit(x, a1) ^ bit(x, s2));
    if (bit(x, a1) == 1u) {
      const unsigned b_s1 = bit(x, s1), b_s2 = bit(x, s2);
      const unsigned b_a2 = bit(x, a2), b_a3 = bit(x, a3);
      x = with_bit(x, s1, b_a2);
      x = with_bit(x, s2, b_a3);
      x = with_bit(x, a2, b_s1);
      x = with_bit(x, a3, b_s2);
    }
    u(x, in) = 1.0;
  }
  return u;
}

QuantumChannel degrading_ancilla_stage() {
  const ComplexMatrix u = degrading_unitary();

  // K_m = (I_S (x) <m|_A) U (I_S (x) |000>_A)
  std::vector<ComplexMatrix> kraus;
  for (std::size_t m = 0; m < 8; ++m) {
    ComplexMatrix k(4);
    for (std::size_t out = 0; out < 4; ++out) {
      for (std::size_t in = 0; in < 4; ++in) k(out, in) = u(out * 8 + m, in * 8);
    }
    if (!is_zero(k)) kraus.push_back(std::move(k));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel degrading_map(Transmissivity eta) {
  const double e = eta.value();
  if (e < 0.5) {
    throw EtaOutOfRange("degrading_map requires eta >= 1/2, got " + std::to_string(e));
  }
  const double inner = std::clamp((1.0 - e) / e, 0.0, 1.0);
  return compose(fc_channel(Transmissivity(inner)), degrading_ancilla_stage());
}

ComplexMatrix choi_matrix(const QuantumChannel& ch) {
  const std::size_t d = ch.dim_in();
  ComplexMatrix choi(d * d);
  // sum_{ij} E(|i><j|) (x) |i><j| / d
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix eij(d);
      eij(i, j) = 1.0;
      const ComplexMatrix out = apply(ch, eij);
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          choi(a * d + i, b * d + j) = out(a, b) / static_cast<double>(d);
        }
      }
    }
  }
  return choi;
}

}  // namespace fcad
