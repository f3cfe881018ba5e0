// Command-line front end: single-point evaluation, 1-D/2-D parameter sweeps,
// figure-data batch export, zero-discord root finding, and the closed-form vs
// measurement-scan oracle comparison.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smdiscord/discord.hpp"
#include "smdiscord/errors.hpp"
#include "smdiscord/sweep.hpp"

namespace {

using namespace smdiscord;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

EntropyParams make_entropy(const std::string& kind, std::optional<double> q,
                           std::optional<double> r) {
  if (kind == "sm") {
    if (!q || !r) throw validation_error("sharma-mittal entropy needs --q and --r");
    return EntropyParams::sharma_mittal(*q, *r);
  }
  if (kind == "renyi") {
    if (!q) throw validation_error("renyi entropy needs --q");
    return EntropyParams::renyi(*q);
  }
  if (kind == "tsallis") {
    if (!q) throw validation_error("tsallis entropy needs --q");
    return EntropyParams::tsallis(*q);
  }
  if (kind == "vn") return EntropyParams::von_neumann();
  throw validation_error("unknown entropy kind '" + kind + "' (expected sm|renyi|tsallis|vn)");
}

SweptParam parse_swept(const std::string& s) {
  // param:lo:hi:steps
  std::stringstream ss(s);
  std::string name, lo, hi, steps;
  if (!std::getline(ss, name, ':') || !std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') ||
      !std::getline(ss, steps)) {
    throw validation_error("sweep spec must be param:lo:hi:steps, got '" + s + "'");
  }
  try {
    return {name, std::stod(lo), std::stod(hi), std::stoi(steps)};
  } catch (...) {
    throw validation_error("cannot parse sweep spec '" + s + "'");
  }
}

nlohmann::json discord_json(const DiscordResult& d) {
  return {{"signed", d.signed_value},
          {"absolute", d.absolute},
          {"marginal_entropy", d.marginal_entropy},
          {"conditional_term", d.conditional_term},
          {"joint_entropy", d.joint_entropy}};
}

int run_eval(const std::string& state, const EntropyParams& ent, bool as_json) {
  const EvalRecord rec = eval_point(parse_state_spec(state), ent);
  if (as_json) {
    nlohmann::json j;
    j["state"] = rec.state.source;
    j["bell_params"] = {rec.state.bell.c1, rec.state.bell.c2, rec.state.bell.c3};
    j["discord"] = discord_json(rec.discord);
    j["negativity"] = rec.negativity;
    j["eigenvalues"] = rec.eigenvalues;
    j["validity"] = {{"valid", rec.validity.valid},
                     {"eigenvalues", rec.validity.eigenvalues},
                     {"coeffs_in_range", rec.validity.coeffs_in_range},
                     {"sum_condition", rec.validity.sum_condition}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("state          %s\n", rec.state.source.c_str());
    std::printf("signed discord %.12g\n", rec.discord.signed_value);
    std::printf("|discord|      %.12g\n", rec.discord.absolute);
    std::printf("marginal       %.12g\n", rec.discord.marginal_entropy);
    std::printf("conditional    %.12g\n", rec.discord.conditional_term);
    std::printf("joint          %.12g\n", rec.discord.joint_entropy);
    std::printf("negativity     %.12g\n", rec.negativity);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized quantum discord and negativity for two-qubit states"};
  app.require_subcommand(1);

  std::string state, family, entropy_kind = "vn", out_path, bracket, sweep1, sweep2;
  std::optional<double> q, r;
  double tol = 1e-8;
  int grid = 2000;
  bool as_json = false;

  auto add_entropy_opts = [&](CLI::App* cmd) {
    cmd->add_option("--entropy", entropy_kind, "sm|renyi|tsallis|vn")->required();
    cmd->add_option("--q", q, "entropy parameter q");
    cmd->add_option("--r", r, "entropy parameter r (sharma-mittal only)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one state");
  eval->add_option("--state", state, "state spec, e.g. werner:p=0.6")->required();
  add_entropy_opts(eval);
  eval->add_flag("--json", as_json, "emit a JSON record");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "1-D or 2-D parameter sweep to CSV");
  sweep_cmd->add_option("--state-family", family, "werner|isotropic|pointer|bell")->required();
  sweep_cmd->add_option("--sweep", sweep1, "param:lo:hi:steps")->required();
  sweep_cmd->add_option("--sweep2", sweep2, "second swept parameter");
  add_entropy_opts(sweep_cmd);
  sweep_cmd->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* root_cmd = app.add_subcommand("root", "bisection for a zero-discord parameter");
  root_cmd->add_option("--state-family", family, "werner|isotropic|pointer")->required();
  add_entropy_opts(root_cmd);
  root_cmd->add_option("--bracket", bracket, "lo:hi")->required();
  root_cmd->add_option("--tol", tol, "bracket width tolerance");

  CLI::App* figures = app.add_subcommand("figures", "emit all figure CSVs and a manifest");
  figures->add_option("--out", out_path, "output directory")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "closed form vs measurement-scan oracle");
  oracle->add_option("--state", state, "state spec")->required();
  add_entropy_opts(oracle);
  oracle->add_option("--grid", grid, "number of scanned sphere directions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      return run_eval(state, make_entropy(entropy_kind, q, r), as_json);
    }
    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.family = parse_state_family(family);
      spec.swept.push_back(parse_swept(sweep1));
      if (!sweep2.empty()) spec.swept.push_back(parse_swept(sweep2));
      spec.entropy = make_entropy(entropy_kind, q.value_or(2.0), r.value_or(2.0));
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw validation_error("cannot open output file " + out_path);
        sweep(spec, out);
      } else {
        sweep(spec, std::cout);
      }
      return 0;
    }
    if (root_cmd->parsed()) {
      RootQuery query;
      query.family = parse_state_family(family);
      query.entropy = make_entropy(entropy_kind, q, r);
      const auto colon = bracket.find(':');
      if (colon == std::string::npos) throw validation_error("bracket must be lo:hi");
      query.lo = std::stod(bracket.substr(0, colon));
      query.hi = std::stod(bracket.substr(colon + 1));
      query.tolerance = tol;
      const RootResult res = find_zero_discord(query);
      std::printf("root            %.12g\n", res.root);
      std::printf("discord at root %.12g\n", res.discord_at_root);
      std::printf("sign change     %s\n", res.sign_change ? "yes" : "no");
      return 0;
    }
    if (figures->parsed()) {
      const auto files = reproduce_figures(out_path);
      for (const auto& f : files) std::printf("%s\n", f.c_str());
      std::printf("manifest.json\n");
      return 0;
    }
    if (oracle->parsed()) {
      const EntropyParams ent = make_entropy(entropy_kind, q, r);
      const StateSpec st = parse_state_spec(state);
      const DiscordResult closed = discord_bell(st.bell, ent);
      const OracleResult scanned = discord_oracle(bell_diagonal_matrix(st.bell), ent, grid);
      std::printf("closed form     %.12g\n", closed.signed_value);
      std::printf("oracle          %.12g\n", scanned.result.signed_value);
      std::printf("delta           %.3g\n",
                  std::abs(closed.signed_value - scanned.result.signed_value));
      std::printf("direction       (%.6f, %.6f, %.6f)\n", scanned.direction.z[0],
                  scanned.direction.z[1], scanned.direction.z[2]);
      return 0;
    }
  } catch (const numeric_domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
