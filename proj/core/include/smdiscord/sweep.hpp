#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "smdiscord/discord.hpp"
#include "smdiscord/entropy.hpp"
#include "smdiscord/states.hpp"

namespace smdiscord {

enum class StateFamily { werner, isotropic, pointer, bell, file };

/// Parsed form of the CLI state grammar:
///   werner:p=<f> | isotropic:F=<f> | pointer:C=<f>[,axis=<1|2|3>]
///   | bell:c1=<f>,c2=<f>,c3=<f> | file:<path.json>
struct StateSpec {
  StateFamily family = StateFamily::bell;
  BellDiagonalParams bell;  // resolved correlation triple
  std::string source;       // original spec string
};

StateSpec parse_state_spec(const std::string& spec);
StateFamily parse_state_family(const std::string& name);

/// Single-point evaluation record for the eval subcommand.
struct EvalRecord {
  StateSpec state;
  DiscordResult discord;
  double negativity = 0;
  std::array<double, 4> eigenvalues{};
  BellValidity validity;
};

EvalRecord eval_point(const StateSpec& state, const EntropyParams& ent);

/// One swept parameter: a state parameter (p, F, C) or entropy parameter (q, r).
struct SweptParam {
  std::string name;
  double lo = 0, hi = 1;
  int steps = 2;
};

struct SweepSpec {
  StateFamily family = StateFamily::werner;
  std::vector<SweptParam> swept;  // 1 or 2 entries
  double fixed_state_param = 0;   // used when the state parameter is not swept
  BellDiagonalParams fixed_bell;  // used when family == bell
  int pointer_axis = 3;
  EntropyParams entropy;
};

/// Emits a CSV stream: header, then one row per grid point in row-major
/// order. Values are printed with 12 significant digits. Grid points within
/// 1e-6 of the singular lines q=1 or r=1 are skipped.
void sweep(const SweepSpec& spec, std::ostream& out);

struct RootQuery {
  StateFamily family = StateFamily::werner;
  EntropyParams entropy;
  double lo = 0, hi = 1;
  double tolerance = 1e-8;
};

struct RootResult {
  double root = 0;
  double discord_at_root = 0;
  bool sign_change = true;  // false when found via |D| minimization fallback
};

/// Bisection on the signed discord over the family's state parameter.
/// Brackets without a sign change fall back to minimizing |D|; the result is
/// accepted only if |D| <= 1e-6 at the minimizer.
RootResult find_zero_discord(const RootQuery& query);

/// Batch of sweeps reproducing the paper-figure data: 12 surface CSVs
/// (werner/isotropic/pointer x {sm_q at r=5, sm_r at q=5, renyi, tsallis}),
/// 3 comparison CSVs at q=0.5, r=0.4, and a manifest JSON.
/// Returns the list of written file names.
std::vector<std::string> reproduce_figures(const std::string& outdir);

}  // namespace smdiscord
