#include "fcad/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "fcad/errors.hpp"

namespace fcad {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kJacobiOffDiagTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kNormTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kNegativeEigenTol = 1e-9;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionMismatch("ComplexMatrix: expected " +
                            std::to_string(dim_ * dim_) + " entries, got " +
                            std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::outer(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("outer: dims differ");
  ComplexMatrix m(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::projector(const StateVector& u) {
  return outer(u, u);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return err;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
  m *= scale;
  return m;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (amplitudes_.empty() || std::abs(norm2 - 1.0) > kNormTol) {
    throw DomainError("StateVector: squared norm " + std::to_string(norm2) +
                      " is not 1");
  }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (!(norm2 > 0.0)) throw DomainError("StateVector: zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= inv;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps.at(index) = 1.0;
  return StateVector(std::move(amps));
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
  if (m.dim() != v.dim()) throw DimensionMismatch("matrix-vector: dims differ");
  std::vector<Complex> out(v.dim(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  }
  return StateVector::normalized(std::move(out));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < b.dim(); ++k) out.push_back(a[i] * b[k]);
  }
  return StateVector::normalized(std::move(out));
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * u.adjoint();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  const double herr = h.hermiticity_error();
  if (herr > kHermitianTol) {
    throw NonHermitian("hermitian_eigen: max |h - h^dagger| = " +
                       std::to_string(herr));
  }

  // Work on the exactly Hermitian part.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiOffDiagTol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const Complex w = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // G = diag(1, conj(w)) * [[c, s], [-s, c]] zeroes a(p, q) in G^dagger A G.
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex wc = std::conj(w);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * wc * akq;
          a(k, q) = s * akp + c * wc * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * wc * vkq;
          v(k, q) = s * vkp + c * wc * vkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * w * aqk;
          a(q, k) = s * apk + c * w * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigen(h).values;
}

namespace {

void check_density_shape(const ComplexMatrix& rho, const char* what) {
  if (rho.dim() == 0) throw NotDensityMatrix(std::string(what) + ": empty matrix");
  const double herr = rho.hermiticity_error();
  if (herr > kHermitianTol) {
    throw NotDensityMatrix(std::string(what) + ": not Hermitian (" +
                           std::to_string(herr) + ")");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    throw NotDensityMatrix(std::string(what) + ": trace " +
                           std::to_string(tr.real()) + " is not 1");
  }
}

std::vector<double> clamp_spectrum(std::vector<double> values, const char* what) {
  for (double& x : values) {
    if (x < -kNegativeEigenTol) {
      throw NotDensityMatrix(std::string(what) + ": negative eigenvalue " +
                             std::to_string(x));
    }
    x = std::clamp(x, 0.0, 1.0);
  }
  return values;
}

}  // namespace

std::vector<double> density_spectrum(const ComplexMatrix& rho) {
  check_density_shape(rho, "density_spectrum");
  return clamp_spectrum(hermitian_eigenvalues(rho), "density_spectrum");
}

bool is_density_matrix(const ComplexMatrix& rho) {
  try {
    density_spectrum(rho);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionMismatch("partial_trace: zero subsystem dimension");
    total *= d;
  }
  if (total != rho.dim()) {
    throw DimensionMismatch("partial_trace: product of dims " +
                            std::to_string(total) + " != " +
                            std::to_string(rho.dim()));
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) throw DimensionMismatch("partial_trace: keep index out of range");
    kept[k] = true;
  }

  const std::size_t nsub = dims.size();
  std::size_t out_dim = 1;
  for (std::size_t s = 0; s < nsub; ++s) {
    if (kept[s]) out_dim *= dims[s];
  }

  // Split a full index into (kept index, traced index).
  std::vector<std::size_t> kept_index(total);
  std::vector<std::size_t> traced_index(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::size_t k_idx = 0, k_stride = 1, t_idx = 0, t_stride = 1;
    for (std::size_t s = nsub; s-- > 0;) {
      const std::size_t digit = rem % dims[s];
      rem /= dims[s];
      if (kept[s]) {
        k_idx += digit * k_stride;
        k_stride *= dims[s];
      } else {
        t_idx += digit * t_stride;
        t_stride *= dims[s];
      }
    }
    kept_index[idx] = k_idx;
    traced_index[idx] = t_idx;
  }

  ComplexMatrix out(out_dim);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (traced_index[i] != traced_index[j]) continue;
      out(kept_index[i], kept_index[j]) += rho(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

StateVector purify(const ComplexMatrix& rho) {
  check_density_shape(rho, "purify");
  HermitianEigen eig = hermitian_eigen(rho);
  eig.values = clamp_spectrum(std::move(eig.values), "purify");

  const std::size_t n = rho.dim();
  std::vector<Complex> psi(n * n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    const double amp = std::sqrt(eig.values[k]);
    if (amp == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) psi[i * n + k] = amp * eig.vectors(i, k);
  }
  return StateVector::normalized(std::move(psi));
}

ComplexMatrix random_density(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex{re, im};
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  // Remove rounding asymmetry so downstream checks see an exact Hermitian.
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

StateVector random_pure(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(dim);
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Complex{re, im};
  }
  return StateVector::normalized(std::move(amps));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return best;
}

}  // namespace fcad
