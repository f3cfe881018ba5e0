// Acceptance suite: end-to-end checks of the numeric anchors, zero-discord
// roots, oracle equivalence, limit behavior, family properties, and the
// figure-data batch. Prints one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smdiscord/discord.hpp"
#include "smdiscord/sweep.hpp"

using namespace smdiscord;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<BellDiagonalParams> valid_grid(double step) {
  std::vector<BellDiagonalParams> out;
  for (double c1 = -1; c1 <= 1.0 + 1e-9; c1 += step)
    for (double c2 = -1; c2 <= 1.0 + 1e-9; c2 += step)
      for (double c3 = -1; c3 <= 1.0 + 1e-9; c3 += step)
        if (validate_bell_params(c1, c2, c3).valid) out.push_back({c1, c2, c3});
  return out;
}

std::vector<EntropyParams> entropy_settings() {
  return {EntropyParams::sharma_mittal(0.5, 0.4),
          EntropyParams::sharma_mittal(2, 3),
          EntropyParams::renyi(0.5),
          EntropyParams::renyi(2),
          EntropyParams::tsallis(0.5),
          EntropyParams::tsallis(2),
          EntropyParams::von_neumann()};
}

char fmtbuf[256];

void criterion_1_anchor_values() {
  const auto t0 = std::chrono::steady_clock::now();
  const BellDiagonalParams werner06 = werner_to_bell({0.6});
  const double sm = discord_bell(werner06, EntropyParams::sharma_mittal(0.5, 0.4)).signed_value;
  const double ts = discord_bell(werner06, EntropyParams::tsallis(0.5)).signed_value;
  const double elapsed = seconds_since(t0);
  const bool pass =
      std::abs(sm - (-0.3992)) <= 1e-3 && std::abs(ts - (-0.3057)) <= 1e-3 && elapsed < 1.0;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "anchor values: SM(.5,.4) = %.6f (ref -0.3992), Tsallis(.5) = %.6f (ref -0.3057), "
                "%.3fs",
                sm, ts, elapsed);
  report(1, pass, fmtbuf);
}

void criterion_2_zero_discord_roots() {
  RootQuery query;
  query.family = StateFamily::werner;
  query.lo = 0.2;
  query.hi = 0.3;

  auto t0 = std::chrono::steady_clock::now();
  query.entropy = EntropyParams::tsallis(0.5);
  const double root_ts = find_zero_discord(query).root;
  const double t_ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  query.entropy = EntropyParams::sharma_mittal(0.5, 0.4);
  const double root_sm = find_zero_discord(query).root;
  const double t_sm = seconds_since(t0);

  const bool pass = root_ts > 0.2546 && root_ts < 0.2547 && root_sm > 0.2293 && root_sm < 0.2294 &&
                    t_ts < 1.0 && t_sm < 1.0;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "zero-discord roots: Tsallis %.7f in (.2546,.2547), SM %.7f in (.2293,.2294), "
                "%.3fs/%.3fs",
                root_ts, root_sm, t_ts, t_sm);
  report(2, pass, fmtbuf);
}

void criterion_3_oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto states = valid_grid(0.25);
  const auto ents = entropy_settings();
  double max_delta = 0;
  for (const auto& b : states) {
    const ComplexMatrix rho = bell_diagonal_matrix(b);
    for (const auto& ent : ents) {
      const double oracle = discord_oracle(rho, ent, 2000).result.signed_value;
      const double closed = discord_bell(b, ent).signed_value;
      max_delta = std::max(max_delta, std::abs(oracle - closed));
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = max_delta <= 1e-6 && elapsed < 60.0;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "oracle equivalence: %zu states x %zu entropies, max |oracle - closed| = %.3g "
                "(tol 1e-6), %.1fs",
                states.size(), ents.size(), max_delta, elapsed);
  report(3, pass, fmtbuf);
}

void criterion_4_limit_ladder() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-1, 1);
  const double eps = 1e-4;
  double max_gap = 0;
  int found = 0;
  while (found < 20) {
    const BellDiagonalParams b{u(rng), u(rng), u(rng)};
    if (!validate_bell_params(b.c1, b.c2, b.c3).valid) continue;
    ++found;
    const double q = 0.5;
    // The r -> 1 and (q, r) -> (1, 1) limits of the power-form family land on
    // the natural-log entropies: ln2 times the base-2 Renyi / vN discords.
    const double ln2 = std::log(2.0);
    max_gap = std::max(
        max_gap, std::abs(discord_bell(b, EntropyParams::sharma_mittal(q, 1 + eps)).signed_value -
                          ln2 * discord_bell(b, EntropyParams::renyi(q)).signed_value));
    max_gap = std::max(
        max_gap, std::abs(discord_bell(b, EntropyParams::sharma_mittal(q, q + eps)).signed_value -
                          discord_bell(b, EntropyParams::tsallis(q)).signed_value));
    max_gap = std::max(
        max_gap,
        std::abs(discord_bell(b, EntropyParams::sharma_mittal(1 + eps, 1 + eps)).signed_value -
                 ln2 * discord_bell(b, EntropyParams::von_neumann()).signed_value));
  }
  const double elapsed = seconds_since(t0);
  const bool pass = max_gap <= 1e-3 && elapsed < 5.0;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "limit ladder (base-2 targets scaled by ln2 for the Renyi/vN limits): 20 states, "
                "max gap at eps=1e-4 is %.3g (tol 1e-3), %.2fs",
                max_gap,
                elapsed);
  report(4, pass, fmtbuf);
}

void criterion_5_pointer_family() {
  double max_vn = 0, max_mismatch = 0;
  bool all_cq = true;
  const auto ents = {EntropyParams::sharma_mittal(0.5, 0.4), EntropyParams::sharma_mittal(2, 3),
                     EntropyParams::renyi(0.5), EntropyParams::renyi(2),
                     EntropyParams::tsallis(0.5), EntropyParams::tsallis(2)};
  for (int i = 0; i < 201; ++i) {
    const double C = -1.0 + 2.0 * i / 200.0;
    max_vn = std::max(
        max_vn, std::abs(discord_pointer({C, 3}, EntropyParams::von_neumann()).signed_value));
    if (!classical_quantum_check(pointer_matrix({C, 3})).classical_quantum) all_cq = false;
    for (const auto& ent : ents) {
      max_mismatch = std::max(
          max_mismatch, std::abs(discord_pointer({C, 3}, ent).signed_value -
                                 discord_bell(pointer_to_bell({C, 3}), ent).signed_value));
    }
  }
  const bool pass = max_vn <= 1e-9 && all_cq && max_mismatch <= 1e-12;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "pointer family: max |vN discord| = %.3g (tol 1e-9), classical-quantum %s, "
                "closed-form mismatch %.3g (tol 1e-12)",
                max_vn, all_cq ? "all true" : "VIOLATED", max_mismatch);
  report(5, pass, fmtbuf);
}

void criterion_6_negativity() {
  double max_err = 0;
  bool sep_entangled_split = true;
  for (int i = 0; i < 201; ++i) {
    const double x = i / 200.0;
    max_err = std::max(max_err, std::abs(negativity(werner_matrix({x}), {2, 2}) -
                                         0.5 * (std::abs(x - 0.5) - (x - 0.5))));
    max_err = std::max(max_err, std::abs(negativity(isotropic_matrix({x}), {2, 2}) -
                                         0.5 * (std::abs(0.5 - x) - (0.5 - x))));
    if (x >= 0.5 && negativity(werner_matrix({x}), {2, 2}) > 1e-12) sep_entangled_split = false;
    if (x >= 0.5 && x < 0.75 &&
        discord_werner({x}, EntropyParams::von_neumann()).signed_value <= 0) {
      sep_entangled_split = false;
    }
  }
  const bool pass = max_err <= 1e-12 && sep_entangled_split;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "negativity closed forms: max error %.3g (tol 1e-12), zero entanglement with "
                "positive vN discord on p in [0.5, 0.75): %s",
                max_err, sep_entangled_split ? "holds" : "VIOLATED");
  report(6, pass, fmtbuf);
}

void criterion_7_spectra_validity() {
  double max_err = 0;
  bool region_exact = true, lemma_ok = true;
  for (double c1 = -1; c1 <= 1.0 + 1e-9; c1 += 0.25) {
    for (double c2 = -1; c2 <= 1.0 + 1e-9; c2 += 0.25) {
      for (double c3 = -1; c3 <= 1.0 + 1e-9; c3 += 0.25) {
        const auto v = validate_bell_params(c1, c2, c3);
        // Build the matrix without the PSD gate so rejected triples can be
        // cross-checked against the numeric eigensolver too.
        ComplexMatrix rho = ComplexMatrix::identity(4);
        for (int i = 1; i <= 3; ++i) {
          const ComplexMatrix s = ComplexMatrix::pauli(i);
          rho = rho + tensor_product(s, s) * cplx(i == 1 ? c1 : i == 2 ? c2 : c3);
        }
        rho = rho * cplx(0.25);
        const auto spec = hermitian_eigenvalues(rho);
        const bool numeric_psd = spec.eigenvalues.back() >= -1e-10;
        if (numeric_psd != v.valid) region_exact = false;
        if (!v.valid) continue;
        if (!v.coeffs_in_range || !v.sum_condition) lemma_ok = false;
        auto expected = v.eigenvalues;
        std::sort(expected.begin(), expected.end(), std::greater<double>());
        for (int i = 0; i < 4; ++i) {
          max_err = std::max(max_err, std::abs(spec.eigenvalues[static_cast<std::size_t>(i)] -
                                               expected[static_cast<std::size_t>(i)]));
        }
      }
    }
  }
  const bool pass = max_err <= 1e-10 && region_exact && lemma_ok;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "spectra and validity: closed vs numeric eigenvalues max error %.3g (tol 1e-10), "
                "PSD region %s, necessary conditions %s",
                max_err, region_exact ? "exact" : "MISMATCH", lemma_ok ? "hold" : "VIOLATED");
  report(7, pass, fmtbuf);
}

void criterion_8_figures() {
  const fs::path dir = fs::temp_directory_path() / "smdiscord_acceptance_figures";
  fs::remove_all(dir);
  const auto files = reproduce_figures(dir.string());

  const char* families[] = {"werner", "isotropic", "pointer"};
  const char* suffixes[] = {"sm_q", "sm_r", "renyi_q", "tsallis_q"};
  int surfaces = 0;
  for (const char* fam : families) {
    for (const char* suf : suffixes) {
      if (fs::exists(dir / ("fig_" + std::string(fam) + "_" + suf + ".csv"))) ++surfaces;
    }
  }
  bool comparisons = true;
  for (const char* fam : families) {
    if (!fs::exists(dir / ("fig_compare_" + std::string(fam) + ".csv"))) comparisons = false;
  }
  const bool manifest = fs::exists(dir / "manifest.json");

  // Data-level check on the Werner comparison: the Renyi curve dominates the
  // Sharma-Mittal and Tsallis curves wherever all discords are positive. The
  // von-Neumann curve is excluded: near p = 0 both it and the Renyi curve tend
  // to 1 and the von-Neumann discord is strictly larger there.
  bool renyi_dominates = true;
  {
    std::ifstream in(dir / "fig_compare_werner.csv");
    std::string line;
    std::getline(in, line);  // header: p,sm,renyi,tsallis,vn,negativity
    while (std::getline(in, line)) {
      std::stringstream ls(line);
      std::string cell;
      std::vector<double> row;
      while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
      const double sm = row[1], renyi = row[2], tsallis = row[3], vn = row[4];
      if (sm > 0 && renyi > 0 && tsallis > 0 && vn > 0) {
        if (renyi < sm - 1e-12 || renyi < tsallis - 1e-12) renyi_dominates = false;
      }
    }
  }

  const bool pass =
      surfaces == 12 && comparisons && manifest && files.size() == 15 && renyi_dominates;
  std::snprintf(fmtbuf, sizeof(fmtbuf),
                "figure reproduction: %d/12 surface CSVs, comparisons %s, manifest %s, Renyi >= "
                "SM/Tsallis on the Werner grid %s",
                surfaces, comparisons ? "present" : "MISSING", manifest ? "present" : "MISSING",
                renyi_dominates ? "holds" : "VIOLATED");
  report(8, pass, fmtbuf);
}

}  // namespace

int main() {
  criterion_1_anchor_values();
  criterion_2_zero_discord_roots();
  criterion_3_oracle_equivalence();
  criterion_4_limit_ladder();
  criterion_5_pointer_family();
  criterion_6_negativity();
  criterion_7_spectra_validity();
  criterion_8_figures();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
