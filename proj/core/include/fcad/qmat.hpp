#pragma once

// Small dense complex linear algebra for two-qubit (and a few five-qubit)
// problems: products, tensor products, Hermitian eigendecomposition,
// partial traces, purification and seeded random states.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fcad {

using Complex = std::complex<double>;

class StateVector;

/// Square dim x dim complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of dim*dim row-major entries.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix diagonal(std::initializer_list<double> diag);
  /// |u><v|
  static ComplexMatrix outer(const StateVector& u, const StateVector& v);
  /// |u><u|
  static ComplexMatrix projector(const StateVector& u);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// max |h_ij - conj(h_ji)|
  double hermiticity_error() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Unit-norm vector of complex amplitudes.
class StateVector {
 public:
  StateVector() = default;
  /// Throws DomainError unless the squared norm is 1 within 1e-12.
  explicit StateVector(std::vector<Complex> amplitudes);
  /// Rescales to unit norm; throws DomainError for the zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes);
  /// Computational basis vector |index>.
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<Complex> amplitudes_;
};

/// Matrix-vector product; the result must again be a unit vector (unitary m).
StateVector operator*(const ComplexMatrix& m, const StateVector& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector kron(const StateVector& a, const StateVector& b);

/// U rho U^dagger
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi eigendecomposition. Throws NonHermitian when
/// max |h - h^dagger| exceeds 1e-10.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Validates a density matrix (Hermitian within 1e-10, unit trace within
/// 1e-10, min eigenvalue >= -1e-9) and returns its spectrum clamped to [0, 1].
std::vector<double> density_spectrum(const ComplexMatrix& rho);
bool is_density_matrix(const ComplexMatrix& rho);

/// Trace over every subsystem not listed in `keep`; the kept subsystems stay
/// in their original order. Throws DimensionMismatch.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::initializer_list<std::size_t> dims,
                            std::initializer_list<std::size_t> keep);

/// |Psi> on system (x) reference, system first, with Tr_R |Psi><Psi| = rho.
StateVector purify(const ComplexMatrix& rho);

/// Hilbert-Schmidt random density matrix G G^dagger / Tr(G G^dagger).
ComplexMatrix random_density(std::size_t dim, std::uint64_t seed);
/// Normalized complex Gaussian vector.
StateVector random_pure(std::size_t dim, std::uint64_t seed);

/// Independent seed for sample `index` of a stream seeded by `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace fcad
