#include "smdiscord/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smdiscord/errors.hpp"

namespace smdiscord {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries)
    : dim_(dim), data_(entries) {
  if (data_.size() != dim * dim) {
    throw validation_error("entry count does not match dimension " + std::to_string(dim));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::pauli(int i) {
  switch (i) {
    case 1: return ComplexMatrix(2, {0, 1, 1, 0});
    case 2: return ComplexMatrix(2, {0, cplx(0, 1), cplx(0, -1), 0});
    case 3: return ComplexMatrix(2, {1, 0, 0, -1});
    default: throw validation_error("pauli index must be 1, 2, or 3");
  }
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw validation_error("dimension mismatch in +");
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw validation_error("dimension mismatch in -");
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw validation_error("dimension mismatch in *");
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
    }
  }
  return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw validation_error("dimension mismatch in max_abs_diff");
  double m = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix r(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0)) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) r(i * db + k, j * db + l) = aij * b(k, l);
    }
  return r;
}

namespace {

void check_bipartite_dims(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims) {
  if (rho.dim() != dims.first * dims.second) {
    throw validation_error("matrix dimension " + std::to_string(rho.dim()) +
                           " does not factor as " + std::to_string(dims.first) + "x" +
                           std::to_string(dims.second));
  }
}

}  // namespace

ComplexMatrix partial_trace_b(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims) {
  check_bipartite_dims(rho, dims);
  const auto [da, db] = dims;
  ComplexMatrix r(da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k) r(i, j) += rho(i * db + k, j * db + k);
  return r;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims) {
  check_bipartite_dims(rho, dims);
  const auto [da, db] = dims;
  ComplexMatrix r(db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < da; ++i) r(k, l) += rho(i * db + k, i * db + l);
  return r;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims) {
  check_bipartite_dims(rho, dims);
  const auto [da, db] = dims;
  ComplexMatrix r(rho.dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) r(i * db + l, j * db + k) = rho(i * db + k, j * db + l);
  return r;
}

HermitianSpectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.all_finite()) throw validation_error("matrix has non-finite entries");
  if (!m.is_hermitian(1e-10)) {
    throw validation_error("matrix is not Hermitian within 1e-10 (defect " +
                           std::to_string(m.hermiticity_defect()) + ")");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // Symmetrize exactly so rounding in the input cannot bias the sweeps.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = 0; j < i; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  // Cyclic Jacobi with complex rotations. Each rotation annihilates a(p,q)
  // by diagonalizing the 2x2 Hermitian block [[a_pp, g],[conj(g), a_qq]].
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off < 1e-30) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        const double mag = std::abs(g);
        if (mag < 1e-300) continue;
        const cplx phase = g / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;  // rotation: [[c, sp], [-conj(sp), c]]

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - std::conj(sp) * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = std::conj(sp) * apk + c * aqk;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  HermitianSpectrum spec;
  spec.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.eigenvalues[i] = a(i, i).real();
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), std::greater<double>());
  return spec;
}

std::pair<ComplexMatrix, ComplexMatrix> projectors_sym_antisym(std::size_t d) {
  if (d < 2) throw validation_error("dimension must be >= 2");
  // Swap operator P = sum_{ij} |i><j| (x) |j><i|.
  ComplexMatrix swap(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) swap(i * d + j, j * d + i) = 1.0;
  const ComplexMatrix id = ComplexMatrix::identity(d * d);
  return {(id + swap) * cplx(0.5), (id - swap) * cplx(0.5)};
}

std::vector<double> clip_spectrum(const std::vector<double>& eigenvalues) {
  std::vector<double> p;
  p.reserve(eigenvalues.size());
  for (double v : eigenvalues) {
    if (v < -1e-10) {
      throw validation_error("spectrum entry " + std::to_string(v) +
                             " is too negative to be a probability");
    }
    p.push_back(v < 0 ? 0.0 : v);
  }
  return p;
}

}  // namespace smdiscord
