#include "smdiscord/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smdiscord/errors.hpp"

namespace smdiscord {

double BellDiagonalParams::c_max() const {
  return std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
}

std::string BellValidity::message() const {
  if (valid) return "valid Bell-diagonal parameters";
  return "invalid Bell-diagonal parameters: eigenvalue lambda_" +
         std::to_string(offending_eigenvalue) + " = " +
         std::to_string(eigenvalues[static_cast<std::size_t>(offending_eigenvalue)]) +
         " is negative";
}

BellValidity validate_bell_params(double c1, double c2, double c3) {
  BellValidity v;
  v.eigenvalues = {0.25 * (1 - c1 - c2 - c3), 0.25 * (1 - c1 + c2 + c3),
                   0.25 * (1 + c1 - c2 + c3), 0.25 * (1 + c1 + c2 - c3)};
  v.valid = true;
  for (int i = 0; i < 4; ++i) {
    if (v.eigenvalues[static_cast<std::size_t>(i)] < -1e-10) {
      v.valid = false;
      v.offending_eigenvalue = i;
      break;
    }
  }
  const auto in_range = [](double c) { return c >= -1.0 - 1e-12 && c <= 1.0 + 1e-12; };
  v.coeffs_in_range = in_range(c1) && in_range(c2) && in_range(c3);
  v.sum_condition = c1 + c2 + c3 <= 1.0 + 1e-12;
  return v;
}

std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& params) {
  const BellValidity v = validate_bell_params(params.c1, params.c2, params.c3);
  if (!v.valid) throw validation_error(v.message());
  std::array<double, 4> lam = v.eigenvalues;
  for (double& x : lam) {
    // (1 +- c1 +- c2 +- c3)/4 carries ~1 ulp of absolute cancellation error;
    // snap sub-ulp values to an exact 0 so q < 1 powers don't amplify it.
    if (x < 1e-15) x = 0;
  }
  return lam;
}

ComplexMatrix bell_diagonal_matrix(const BellDiagonalParams& params) {
  const BellValidity v = validate_bell_params(params.c1, params.c2, params.c3);
  if (!v.valid) throw validation_error(v.message());
  ComplexMatrix rho = ComplexMatrix::identity(4);
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix s = ComplexMatrix::pauli(i);
    const double ci = i == 1 ? params.c1 : i == 2 ? params.c2 : params.c3;
    rho = rho + tensor_product(s, s) * cplx(ci);
  }
  return rho * cplx(0.25);
}

BellDiagonalParams werner_to_bell(const WernerParams& params) {
  if (params.p < 0 || params.p > 1) {
    throw validation_error("Werner parameter p must lie in [0, 1]");
  }
  const double c = 4.0 * params.p / 3.0 - 1.0;
  return {c, c, c};
}

ComplexMatrix werner_matrix(const WernerParams& params) {
  return werner_matrix_general(2, params.p);
}

ComplexMatrix werner_matrix_general(std::size_t d, double p) {
  if (p < 0 || p > 1) throw validation_error("Werner parameter p must lie in [0, 1]");
  const auto [psym, pass] = projectors_sym_antisym(d);
  const double dd = static_cast<double>(d);
  return psym * cplx(2.0 * p / (dd * dd + dd)) + pass * cplx(2.0 * (1.0 - p) / (dd * dd - dd));
}

BellDiagonalParams isotropic_to_bell(const IsotropicParams& params) {
  if (params.F < 0 || params.F > 1) {
    throw validation_error("isotropic parameter F must lie in [0, 1]");
  }
  const double c = 4.0 * params.F / 3.0 - 1.0 / 3.0;
  return {c, -c, c};
}

ComplexMatrix isotropic_matrix(const IsotropicParams& params) {
  return bell_diagonal_matrix(isotropic_to_bell(params));
}

BellDiagonalParams pointer_to_bell(const PointerParams& params) {
  if (params.C < -1 || params.C > 1) {
    throw validation_error("pointer parameter C must lie in [-1, 1]");
  }
  switch (params.axis) {
    case 1: return {params.C, 0, 0};
    case 2: return {0, params.C, 0};
    case 3: return {0, 0, params.C};
    default: throw validation_error("pointer axis must be 1, 2, or 3");
  }
}

ComplexMatrix pointer_matrix(const PointerParams& params) {
  return bell_diagonal_matrix(pointer_to_bell(params));
}

namespace {

double commutator_defect(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b).max_abs_diff(b * a);
}

}  // namespace

ClassicalQuantumReport classical_quantum_check(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw validation_error("classical_quantum_check expects a 4x4 matrix");
  constexpr double kTol = 1e-9;
  ComplexMatrix block[2][2] = {{ComplexMatrix(2), ComplexMatrix(2)},
                               {ComplexMatrix(2), ComplexMatrix(2)}};
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          block[bi][bj](i, j) = rho(2 * bi + i, 2 * bj + j);

  ClassicalQuantumReport rep;
  const char* names[4] = {"B11", "B12", "B21", "B22"};
  // Four normality equations.
  for (int k = 0; k < 4; ++k) {
    const ComplexMatrix& b = block[k / 2][k % 2];
    if (commutator_defect(b, b.adjoint()) > kTol) {
      rep.witness = std::string(names[k]) + " is not normal";
      return rep;
    }
  }
  // Six pairwise commutativity equations.
  for (int k = 0; k < 4; ++k) {
    for (int l = k + 1; l < 4; ++l) {
      if (commutator_defect(block[k / 2][k % 2], block[l / 2][l % 2]) > kTol) {
        rep.witness = std::string(names[k]) + " and " + names[l] + " do not commute";
        return rep;
      }
    }
  }
  rep.classical_quantum = true;
  return rep;
}

ComplexMatrix pure_state_density(const std::array<cplx, 4>& amplitudes) {
  double norm2 = 0;
  for (const cplx& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-8) {
    throw validation_error("amplitudes are not normalized: |psi|^2 = " + std::to_string(norm2));
  }
  ComplexMatrix rho(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return rho;
}

}  // namespace smdiscord
