#include "smdiscord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "smdiscord/errors.hpp"

namespace smdiscord {

namespace {

DiscordResult assemble(double marginal, double conditional, double joint) {
  DiscordResult d;
  d.marginal_entropy = marginal;
  d.conditional_term = conditional;
  d.joint_entropy = joint;
  d.signed_value = marginal + conditional - joint;
  d.absolute = std::abs(d.signed_value);
  return d;
}

// Unitary V with V|0> the +z eigenvector of z . sigma.
ComplexMatrix bloch_unitary(const std::array<double, 3>& z) {
  const double alpha = std::acos(std::clamp(z[2], -1.0, 1.0));
  const double beta = std::atan2(z[1], z[0]);
  const double ca = std::cos(alpha / 2), sa = std::sin(alpha / 2);
  const cplx eb = std::polar(1.0, beta);
  ComplexMatrix v(2);
  v(0, 0) = ca;
  v(0, 1) = -sa * std::conj(eb);
  v(1, 0) = sa * eb;
  v(1, 1) = ca;
  return v;
}

void require_unit(const std::array<double, 3>& z) {
  const double n2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  if (std::abs(n2 - 1.0) > 1e-10) {
    throw validation_error("measurement direction is not a unit vector");
  }
}

}  // namespace

MeasurementDirection unitary_to_direction(double t, double y1, double y2, double y3) {
  const double n2 = t * t + y1 * y1 + y2 * y2 + y3 * y3;
  if (std::abs(n2 - 1.0) > 1e-8) {
    throw validation_error("unitary parameters (t, y1, y2, y3) are not on the unit 3-sphere");
  }
  MeasurementDirection dir;
  dir.z = {2.0 * (-t * y2 + y1 * y3), 2.0 * (t * y1 + y2 * y3), t * t + y3 * y3 - y1 * y1 - y2 * y2};
  dir.provenance = MeasurementDirection::UnitaryProvenance{t, y1, y2, y3};
  return dir;
}

ConditionalEnsemble conditional_ensemble(const BellDiagonalParams& params,
                                         const MeasurementDirection& dir) {
  require_unit(dir.z);
  const ComplexMatrix rho = bell_diagonal_matrix(params);
  const ComplexMatrix v = bloch_unitary(dir.z);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);

  ConditionalEnsemble ens;
  for (int k = 0; k < 2; ++k) {
    ComplexMatrix ket(2);
    ket(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = 1.0;
    const ComplexMatrix proj = v * ket * v.adjoint();
    const ComplexMatrix meas = tensor_product(id2, proj);
    ComplexMatrix post = meas * rho * meas;
    const double pk = post.trace().real();
    ens.probabilities[static_cast<std::size_t>(k)] = pk;
    ens.states[static_cast<std::size_t>(k)] = post * cplx(1.0 / pk);
  }
  ens.theta = std::sqrt(params.c1 * params.c1 * dir.z[0] * dir.z[0] +
                        params.c2 * params.c2 * dir.z[1] * dir.z[1] +
                        params.c3 * params.c3 * dir.z[2] * dir.z[2]);
  return ens;
}

double conditional_term_closed(double c, const EntropyParams& ent) {
  if (c < 0 || c > 1 + 1e-12) throw validation_error("c must lie in [0, 1]");
  ent.validate();
  return entropy({(1.0 + c) / 2.0, (1.0 - c) / 2.0}, ent);
}

DiscordResult discord_bell(const BellDiagonalParams& params, const EntropyParams& ent) {
  ent.validate();
  const auto lam = bell_diagonal_eigenvalues(params);
  const std::vector<double> spectrum(lam.begin(), lam.end());
  const double marginal = entropy({0.5, 0.5}, ent);
  const double conditional = conditional_term_closed(params.c_max(), ent);
  const double joint = entropy(spectrum, ent);
  return assemble(marginal, conditional, joint);
}

DiscordResult discord_werner(const WernerParams& params, const EntropyParams& ent) {
  if (params.p < 0 || params.p > 1) throw validation_error("Werner parameter p must lie in [0, 1]");
  ent.validate();
  const double p = params.p;
  const double c = std::abs(4.0 * p / 3.0 - 1.0);
  const double marginal = entropy({0.5, 0.5}, ent);
  const double conditional = conditional_term_closed(c, ent);
  const double joint = entropy({1.0 - p, p / 3.0, p / 3.0, p / 3.0}, ent);
  return assemble(marginal, conditional, joint);
}

DiscordResult discord_isotropic(const IsotropicParams& params, const EntropyParams& ent) {
  if (params.F < 0 || params.F > 1) throw validation_error("isotropic parameter F must lie in [0, 1]");
  ent.validate();
  const double f = params.F;
  const double c = std::abs(4.0 * f / 3.0 - 1.0 / 3.0);
  const double marginal = entropy({0.5, 0.5}, ent);
  const double conditional = conditional_term_closed(c, ent);
  const double joint = entropy({f, (1.0 - f) / 3.0, (1.0 - f) / 3.0, (1.0 - f) / 3.0}, ent);
  return assemble(marginal, conditional, joint);
}

DiscordResult discord_pointer(const PointerParams& params, const EntropyParams& ent) {
  if (params.C < -1 || params.C > 1) throw validation_error("pointer parameter C must lie in [-1, 1]");
  ent.validate();
  const double c = std::abs(params.C);
  const double marginal = entropy({0.5, 0.5}, ent);
  const double conditional = conditional_term_closed(c, ent);
  const double joint = entropy({(1.0 + c) / 4.0, (1.0 + c) / 4.0, (1.0 - c) / 4.0, (1.0 - c) / 4.0}, ent);
  return assemble(marginal, conditional, joint);
}

std::vector<MeasurementDirection> fibonacci_directions(int n) {
  std::vector<MeasurementDirection> dirs;
  dirs.reserve(static_cast<std::size_t>(n));
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int i = 0; i < n; ++i) {
    // Latitude offset 0.5 keeps the layout away from the poles; the poles
    // themselves come from the axis directions appended by the oracle.
    const double zc = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const double radius = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / golden;
    MeasurementDirection d;
    d.z = {radius * std::cos(phi), radius * std::sin(phi), zc};
    dirs.push_back(d);
  }
  return dirs;
}

OracleResult discord_oracle(const ComplexMatrix& rho, const EntropyParams& ent, int grid) {
  if (grid < 100) throw validation_error("oracle grid must be >= 100");
  ent.validate();
  if (rho.dim() != 4) throw validation_error("oracle expects a 4x4 density matrix");
  const ComplexMatrix id2h = ComplexMatrix::identity(2) * cplx(0.5);
  if (partial_trace_b(rho, {2, 2}).max_abs_diff(id2h) > 1e-8 ||
      partial_trace_a(rho, {2, 2}).max_abs_diff(id2h) > 1e-8) {
    throw validation_error("oracle requires maximally mixed marginals (Bell-diagonal form)");
  }

  std::vector<MeasurementDirection> dirs = fibonacci_directions(grid);
  for (int axis = 0; axis < 3; ++axis) {
    for (double sign : {1.0, -1.0}) {
      MeasurementDirection d;
      d.z = {0, 0, 0};
      d.z[static_cast<std::size_t>(axis)] = sign;
      dirs.push_back(d);
    }
  }

  double best = 0;
  std::size_t best_index = 0;
  bool have_best = false;

  for (std::size_t idx = 0; idx < dirs.size(); ++idx) {
    const ComplexMatrix v = bloch_unitary(dirs[idx].z);
    double term = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      // The post-measurement state factorizes as rho_a^(k) (x) |v_k><v_k| with
      // a pure B factor, so its spectrum is that of the 2x2 conditional
      // A-state M(i,j) = <v_k| rho_{(i,*),(j,*)} |v_k> padded with zeros.
      const cplx vk[2] = {v(0, k), v(1, k)};
      cplx m[2][2];
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          cplx acc = 0;
          for (std::size_t b1 = 0; b1 < 2; ++b1) {
            for (std::size_t b2 = 0; b2 < 2; ++b2) {
              acc += std::conj(vk[b1]) * rho(2 * i + b1, 2 * j + b2) * vk[b2];
            }
          }
          m[i][j] = acc;
        }
      }
      const double pk = m[0][0].real() + m[1][1].real();
      const double mean = 0.5;  // normalized 2x2 state has trace 1
      const double half_diff = 0.5 * (m[0][0].real() - m[1][1].real()) / pk;
      const double radius = std::sqrt(half_diff * half_diff + std::norm(m[0][1] / pk));
      term += pk * entropy(clip_spectrum({mean + radius, mean - radius}), ent);
    }
    // The extremized conditional term is the minimum: binary generalized
    // entropy is non-increasing in theta, so theta = max|c_i| minimizes it.
    if (!have_best || term < best - 1e-15) {
      best = term;
      best_index = idx;
      have_best = true;
    }
  }

  const double marginal = entropy(clip_spectrum(hermitian_eigenvalues(partial_trace_a(rho, {2, 2})).eigenvalues), ent);
  const double joint = entropy(clip_spectrum(hermitian_eigenvalues(rho).eigenvalues), ent);
  OracleResult res;
  res.result = assemble(marginal, best, joint);
  res.direction = dirs[best_index];
  return res;
}

double mutual_information(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims,
                          const EntropyParams& ent) {
  ent.validate();
  const auto ha = entropy(clip_spectrum(hermitian_eigenvalues(partial_trace_b(rho, dims)).eigenvalues), ent);
  const auto hb = entropy(clip_spectrum(hermitian_eigenvalues(partial_trace_a(rho, dims)).eigenvalues), ent);
  const auto h = entropy(clip_spectrum(hermitian_eigenvalues(rho).eigenvalues), ent);
  return ha + hb - h;
}

double negativity(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims) {
  const auto spec = hermitian_eigenvalues(partial_transpose_b(rho, dims));
  double n = 0;
  for (double lam : spec.eigenvalues) {
    if (lam < 0) n -= lam;
  }
  return n;
}

double pure_state_discord(const std::array<cplx, 4>& amplitudes, const EntropyParams& ent) {
  ent.validate();
  const ComplexMatrix rho = pure_state_density(amplitudes);
  const ComplexMatrix rho_b = partial_trace_a(rho, {2, 2});
  return entropy(clip_spectrum(hermitian_eigenvalues(rho_b).eigenvalues), ent);
}

}  // namespace smdiscord
