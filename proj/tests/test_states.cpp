#include <doctest.h>

#include <cmath>

#include "smdiscord/errors.hpp"
#include "smdiscord/states.hpp"

using namespace smdiscord;

TEST_CASE("bell-diagonal matrix: maximally mixed and singlet") {
  CHECK(bell_diagonal_matrix({0, 0, 0}).max_abs_diff(ComplexMatrix::identity(4) * cplx(0.25)) <
        1e-15);

  // (-1,-1,-1) is the singlet projector |psi-><psi-|
  const ComplexMatrix singlet = bell_diagonal_matrix({-1, -1, -1});
  ComplexMatrix expected(4);
  expected(1, 1) = expected(2, 2) = 0.5;
  expected(1, 2) = expected(2, 1) = -0.5;
  CHECK(singlet.max_abs_diff(expected) < 1e-15);
}

TEST_CASE("bell-diagonal matrix matches the introductory Werner example") {
  const double p = 0.6;
  const double c = 4 * p / 3 - 1;
  const ComplexMatrix rho = bell_diagonal_matrix({c, c, c});
  ComplexMatrix expected(4);
  expected(0, 0) = expected(3, 3) = 0.2;
  expected(1, 1) = expected(2, 2) = 0.3;
  expected(1, 2) = expected(2, 1) = -0.1;
  CHECK(rho.max_abs_diff(expected) < 1e-15);
}

TEST_CASE("bell-diagonal closed-form eigenvalues") {
  auto lam = bell_diagonal_eigenvalues({0, 0, 0});
  for (double x : lam) CHECK(x == doctest::Approx(0.25));

  lam = bell_diagonal_eigenvalues({-1, -1, -1});
  CHECK(lam[0] == doctest::Approx(1.0));
  CHECK(lam[1] == doctest::Approx(0.0));
  CHECK(lam[2] == doctest::Approx(0.0));
  CHECK(lam[3] == doctest::Approx(0.0));
}

TEST_CASE("validate_bell_params: full PSD check, not just the necessary conditions") {
  auto v = validate_bell_params(1, 1, 1);
  CHECK_FALSE(v.valid);
  CHECK(v.offending_eigenvalue == 0);
  CHECK(v.eigenvalues[0] == doctest::Approx(-0.5));

  v = validate_bell_params(1, 0, 0);
  CHECK(v.valid);

  // Necessary conditions (|ci| <= 1, c1+c2+c3 <= 1) hold but the state is
  // still invalid: lambda_1 = (1 - 0.9 - 0.9 - 0.9)/4 < 0.
  v = validate_bell_params(0.9, -0.9, -0.9);
  CHECK_FALSE(v.valid);
  CHECK(v.coeffs_in_range);
  CHECK(v.sum_condition);
}

TEST_CASE("werner constructors and the parameter map") {
  const double p = 0.6;
  CHECK(werner_matrix({p}).max_abs_diff(bell_diagonal_matrix(werner_to_bell({p}))) < 1e-14);
  CHECK(werner_matrix({0.75}).max_abs_diff(ComplexMatrix::identity(4) * cplx(0.25)) < 1e-14);

  auto b = werner_to_bell({0.0});
  CHECK(b.c1 == doctest::Approx(-1.0));
  CHECK(b.c3 == doctest::Approx(-1.0));
  b = werner_to_bell({0.6});
  CHECK(b.c1 == doctest::Approx(-0.2));
  CHECK(b.c_max() == doctest::Approx(0.2));

  CHECK_THROWS_AS(werner_matrix({1.2}), validation_error);
}

TEST_CASE("werner p=0 is the singlet projector") {
  CHECK(werner_matrix({0.0}).max_abs_diff(bell_diagonal_matrix({-1, -1, -1})) < 1e-14);
}

TEST_CASE("isotropic constructors and the parameter map") {
  CHECK(isotropic_matrix({0.25}).max_abs_diff(ComplexMatrix::identity(4) * cplx(0.25)) < 1e-14);

  // F=1 is the projector onto phi+ = (|00> + |11>)/sqrt(2)
  const ComplexMatrix rho = isotropic_matrix({1.0});
  ComplexMatrix expected(4);
  expected(0, 0) = expected(3, 3) = expected(0, 3) = expected(3, 0) = 0.5;
  CHECK(rho.max_abs_diff(expected) < 1e-14);

  auto b = isotropic_to_bell({1.0});
  CHECK(b.c1 == doctest::Approx(1.0));
  CHECK(b.c2 == doctest::Approx(-1.0));
  CHECK(b.c3 == doctest::Approx(1.0));
  b = isotropic_to_bell({0.0});
  CHECK(b.c1 == doctest::Approx(-1.0 / 3));
  CHECK(b.c_max() == doctest::Approx(1.0 / 3));

  const auto lam = bell_diagonal_eigenvalues(isotropic_to_bell({0.0}));
  double max_lam = 0, min_lam = 1;
  for (double x : lam) {
    max_lam = std::max(max_lam, x);
    min_lam = std::min(min_lam, x);
  }
  CHECK(max_lam == doctest::Approx(1.0 / 3));
  CHECK(min_lam == doctest::Approx(0.0));

  CHECK_THROWS_AS(isotropic_matrix({-0.1}), validation_error);
}

TEST_CASE("pointer constructors") {
  CHECK(pointer_matrix({0, 3}).max_abs_diff(ComplexMatrix::identity(4) * cplx(0.25)) < 1e-14);

  ComplexMatrix expected(4);
  expected(0, 0) = expected(3, 3) = 0.5;
  CHECK(pointer_matrix({1, 3}).max_abs_diff(expected) < 1e-14);

  const auto lam = bell_diagonal_eigenvalues(pointer_to_bell({0.5, 3}));
  CHECK(lam[1] == doctest::Approx(0.375));
  CHECK(lam[2] == doctest::Approx(0.375));
  CHECK(lam[0] == doctest::Approx(0.125));
  CHECK(lam[3] == doctest::Approx(0.125));

  CHECK_THROWS_AS(pointer_matrix({1.5, 3}), validation_error);
  CHECK_THROWS_AS(pointer_matrix({0.5, 4}), validation_error);
}

TEST_CASE("classical-quantum block check") {
  CHECK(classical_quantum_check(pointer_matrix({0.7, 3})).classical_quantum);
  CHECK(classical_quantum_check(ComplexMatrix::identity(4) * cplx(0.25)).classical_quantum);

  const auto rep = classical_quantum_check(werner_matrix({0.6}));
  CHECK_FALSE(rep.classical_quantum);
  CHECK_FALSE(rep.witness.empty());

  CHECK_THROWS_AS(classical_quantum_check(ComplexMatrix::identity(2)), validation_error);
}

TEST_CASE("classical-quantum check across pointer and Werner grids") {
  for (double C = -1.0; C <= 1.001; C += 0.1) {
    CHECK(classical_quantum_check(pointer_matrix({C, 3})).classical_quantum);
    CHECK(classical_quantum_check(pointer_matrix({C, 1})).classical_quantum);
  }
  for (double p = 0.0; p <= 1.001; p += 0.1) {
    const bool expected = std::abs(p - 0.75) < 1e-9;  // p = 3/4 is I/4
    CHECK(classical_quantum_check(werner_matrix({p})).classical_quantum == expected);
  }
}

TEST_CASE("pure state density") {
  const ComplexMatrix rho = pure_state_density({1, 0, 0, 0});
  ComplexMatrix expected(4);
  expected(0, 0) = 1.0;
  CHECK(rho.max_abs_diff(expected) < 1e-15);

  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix singlet = pure_state_density({0, s, -s, 0});
  CHECK(singlet.max_abs_diff(bell_diagonal_matrix({-1, -1, -1})) < 1e-14);
  CHECK(partial_trace_b(singlet, {2, 2}).max_abs_diff(ComplexMatrix::identity(2) * cplx(0.5)) <
        1e-14);

  CHECK_THROWS_AS(pure_state_density({1, 1, 0, 0}), validation_error);
}

TEST_CASE("marginals are I/2 across the valid parameter grid") {
  const ComplexMatrix half = ComplexMatrix::identity(2) * cplx(0.5);
  for (double c1 = -1; c1 <= 1.001; c1 += 0.1) {
    for (double c2 = -1; c2 <= 1.001; c2 += 0.1) {
      for (double c3 = -1; c3 <= 1.001; c3 += 0.1) {
        const auto v = validate_bell_params(c1, c2, c3);
        if (!v.valid) continue;
        CHECK(v.coeffs_in_range);  // Lemma necessity
        CHECK(v.sum_condition);
        const ComplexMatrix rho = bell_diagonal_matrix({c1, c2, c3});
        REQUIRE(partial_trace_b(rho, {2, 2}).max_abs_diff(half) < 1e-12);
        REQUIRE(partial_trace_a(rho, {2, 2}).max_abs_diff(half) < 1e-12);
      }
    }
  }
}
