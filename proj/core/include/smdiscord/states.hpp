#pragma once

#include <array>
#include <string>

#include "smdiscord/matrix.hpp"

namespace smdiscord {

/// Correlation triple of the Bell-diagonal form (1/4)(I + sum_i c_i s_i (x) s_i).
struct BellDiagonalParams {
  double c1 = 0, c2 = 0, c3 = 0;
  /// c = max{|c1|, |c2|, |c3|}
  double c_max() const;
};

struct WernerParams {
  double p = 0;  // in [0, 1]
};

struct IsotropicParams {
  double F = 0;  // in [0, 1]
};

struct PointerParams {
  double C = 0;    // in [-1, 1]
  int axis = 3;    // which c_i carries C
};

/// PSD report for a candidate (c1, c2, c3) triple. Validity is decided by the
/// four closed-form eigenvalues, not by the necessary range/sum conditions alone.
struct BellValidity {
  bool valid = false;
  std::array<double, 4> eigenvalues{};   // lambda_0 .. lambda_3
  int offending_eigenvalue = -1;         // first lambda_i < -1e-10, or -1
  bool coeffs_in_range = false;          // -1 <= c_i <= 1
  bool sum_condition = false;            // c1 + c2 + c3 <= 1
  std::string message() const;
};

BellValidity validate_bell_params(double c1, double c2, double c3);

/// Closed-form eigenvalues (1 -+ c1 -+ c2 -+ c3)/4, clipped at 0. Order:
/// lambda_0 = (1-c1-c2-c3)/4, lambda_1 = (1-c1+c2+c3)/4,
/// lambda_2 = (1+c1-c2+c3)/4, lambda_3 = (1+c1+c2-c3)/4.
std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& params);

ComplexMatrix bell_diagonal_matrix(const BellDiagonalParams& params);

ComplexMatrix werner_matrix(const WernerParams& params);
BellDiagonalParams werner_to_bell(const WernerParams& params);
/// d x d (x) d x d Werner state via the symmetric/antisymmetric projectors.
ComplexMatrix werner_matrix_general(std::size_t d, double p);

ComplexMatrix isotropic_matrix(const IsotropicParams& params);
BellDiagonalParams isotropic_to_bell(const IsotropicParams& params);

ComplexMatrix pointer_matrix(const PointerParams& params);
BellDiagonalParams pointer_to_bell(const PointerParams& params);

/// Zero von-Neumann-discord structural test: partitions a 4x4 density matrix
/// into 2x2 blocks and checks that every block is normal and every pair
/// commutes (ten matrix equations), all within 1e-9.
struct ClassicalQuantumReport {
  bool classical_quantum = false;
  std::string witness;  // first violated equation, empty when none
};

ClassicalQuantumReport classical_quantum_check(const ComplexMatrix& rho);

/// Rank-1 projector |psi><psi| from 4 amplitudes (normalized within 1e-8).
ComplexMatrix pure_state_density(const std::array<cplx, 4>& amplitudes);

}  // namespace smdiscord
