#pragma once

#include <array>
#include <optional>
#include <vector>

#include "smdiscord/entropy.hpp"
#include "smdiscord/matrix.hpp"
#include "smdiscord/states.hpp"

namespace smdiscord {

/// Bloch direction of the projective measurement on party B, optionally
/// carrying the unitary parameters (t, y1, y2, y3) it derives from.
struct MeasurementDirection {
  std::array<double, 3> z{0, 0, 1};
  struct UnitaryProvenance {
    double t, y1, y2, y3;
  };
  std::optional<UnitaryProvenance> provenance;
};

/// Maps unit (t, y1, y2, y3) to the Bloch direction
/// z1 = 2(-t y2 + y1 y3), z2 = 2(t y1 + y2 y3), z3 = t^2 + y3^2 - y1^2 - y2^2.
MeasurementDirection unitary_to_direction(double t, double y1, double y2, double y3);

/// Post-measurement ensemble {p_k, rho^(k)} for a Bell-diagonal state.
/// Both outcomes have p_k = 1/2 and nonzero eigenvalues (1 +- theta)/2 with
/// theta = sqrt(c1^2 z1^2 + c2^2 z2^2 + c3^2 z3^2).
struct ConditionalEnsemble {
  std::array<double, 2> probabilities{0.5, 0.5};
  std::array<ComplexMatrix, 2> states;
  double theta = 0;
};

ConditionalEnsemble conditional_ensemble(const BellDiagonalParams& params,
                                         const MeasurementDirection& dir);

/// Extremized conditional entropy term: the binary entropy of
/// ((1+c)/2, (1-c)/2) under the selected functional, evaluated at c = max|c_i|.
double conditional_term_closed(double c, const EntropyParams& ent);

struct DiscordResult {
  double signed_value = 0;       // D before taking the absolute value
  double absolute = 0;           // |D|
  double marginal_entropy = 0;   // H of rho_b = I/2
  double conditional_term = 0;   // extremized sum_k p_k H(rho^(k))
  double joint_entropy = 0;      // H of rho
};

DiscordResult discord_bell(const BellDiagonalParams& params, const EntropyParams& ent);

/// Family-specific closed forms (independent algebraic route; agree with
/// discord_bell composed with the parameter maps).
DiscordResult discord_werner(const WernerParams& params, const EntropyParams& ent);
DiscordResult discord_isotropic(const IsotropicParams& params, const EntropyParams& ent);
DiscordResult discord_pointer(const PointerParams& params, const EntropyParams& ent);

/// Brute-force measurement-optimization oracle: scans `grid` Fibonacci-spiral
/// directions plus the six axis directions, builds each conditional ensemble
/// with full matrix machinery, and returns the extremal (minimal) conditional
/// term. Ties break on the lowest direction index.
struct OracleResult {
  DiscordResult result;
  MeasurementDirection direction;
};

OracleResult discord_oracle(const ComplexMatrix& rho, const EntropyParams& ent, int grid);

/// Deterministic near-uniform sphere layout used by the oracle.
std::vector<MeasurementDirection> fibonacci_directions(int n);

/// H(rho_a) + H(rho_b) - H(rho)
double mutual_information(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims,
                          const EntropyParams& ent);

/// Negated sum of negative eigenvalues of the partial transpose.
double negativity(const ComplexMatrix& rho, std::pair<std::size_t, std::size_t> dims);

/// Discord of a pure state reduces to the entropy of the reduced state rho_b.
double pure_state_discord(const std::array<cplx, 4>& amplitudes, const EntropyParams& ent);

}  // namespace smdiscord
