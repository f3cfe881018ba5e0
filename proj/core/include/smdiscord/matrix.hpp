#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace smdiscord {

using cplx = std::complex<double>;

/// Dense complex square matrix, row-major, basis order {|00>,|01>,|10>,|11>}
/// for two-qubit operators. Small dimensions only (<= 64).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  /// Pauli matrix sigma_i, i in {1,2,3}.
  static ComplexMatrix pauli(int i);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cplx s) const;

  ComplexMatrix adjoint() const;
  cplx trace() const;

  /// max_{ij} |a_ij - b_ij|
  double max_abs_diff(const ComplexMatrix& o) const;
  /// max_{ij} |a_ij - (a^dagger)_ij|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }
  bool all_finite() const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Real eigenvalues of a Hermitian matrix, sorted descending.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
};

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on subsystem A (trace out B). dims = (dim_a, dim_b).
ComplexMatrix partial_trace_b(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims);
/// Reduced matrix on subsystem B (trace out A).
ComplexMatrix partial_trace_a(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims);

/// Transpose of the second tensor factor.
ComplexMatrix partial_transpose_b(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims);

/// Eigenvalues by cyclic Jacobi rotations. Requires hermiticity defect <= 1e-10.
HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m);

/// Symmetric and antisymmetric projectors on H^d (x) H^d, ranks d(d+1)/2 and d(d-1)/2.
std::pair<ComplexMatrix, ComplexMatrix> projectors_sym_antisym(std::size_t d);

/// Clip eigenvalues in [-1e-10, 0) to 0 so a spectrum can be used as probabilities.
std::vector<double> clip_spectrum(const std::vector<double>& eigenvalues);

}  // namespace smdiscord
