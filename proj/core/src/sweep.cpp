#include "smdiscord/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "smdiscord/errors.hpp"
#include "smdiscord/io.hpp"

namespace smdiscord {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string family_name(StateFamily f) {
  switch (f) {
    case StateFamily::werner: return "werner";
    case StateFamily::isotropic: return "isotropic";
    case StateFamily::pointer: return "pointer";
    case StateFamily::bell: return "bell";
    case StateFamily::file: return "file";
  }
  return "?";
}

std::string state_param_name(StateFamily f) {
  switch (f) {
    case StateFamily::werner: return "p";
    case StateFamily::isotropic: return "F";
    case StateFamily::pointer: return "C";
    default: return "";
  }
}

std::pair<double, double> state_param_domain(StateFamily f) {
  return f == StateFamily::pointer ? std::pair{-1.0, 1.0} : std::pair{0.0, 1.0};
}

BellDiagonalParams family_bell(StateFamily f, double x, int axis) {
  switch (f) {
    case StateFamily::werner: return werner_to_bell({x});
    case StateFamily::isotropic: return isotropic_to_bell({x});
    case StateFamily::pointer: return pointer_to_bell({x, axis});
    default: throw validation_error("family has no single state parameter");
  }
}

DiscordResult family_discord(StateFamily f, double x, int axis, const EntropyParams& ent) {
  switch (f) {
    case StateFamily::werner: return discord_werner({x}, ent);
    case StateFamily::isotropic: return discord_isotropic({x}, ent);
    case StateFamily::pointer: return discord_pointer({x, axis}, ent);
    default: throw validation_error("family has no single state parameter");
  }
}

double family_negativity(StateFamily f, double x, int axis) {
  return negativity(bell_diagonal_matrix(family_bell(f, x, axis)), {2, 2});
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw validation_error("");
    return v;
  } catch (...) {
    throw validation_error("cannot parse " + what + " value: '" + s + "'");
  }
}

std::vector<std::pair<std::string, std::string>> parse_kv_list(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw validation_error("expected key=value, got '" + item + "'");
    kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return kv;
}

// c_i read off the Eq-form entries: rho_00 = (1+c3)/4, rho_12 = (c1+c2)/4,
// rho_03 = (c1-c2)/4.
BellDiagonalParams bell_params_from_matrix(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw validation_error("expected a 4x4 density matrix");
  BellDiagonalParams b;
  b.c3 = 4.0 * rho(0, 0).real() - 1.0;
  b.c1 = 2.0 * (rho(1, 2).real() + rho(0, 3).real());
  b.c2 = 2.0 * (rho(1, 2).real() - rho(0, 3).real());
  const ComplexMatrix rebuilt = bell_diagonal_matrix(b);
  if (rebuilt.max_abs_diff(rho) > 1e-8) {
    throw validation_error("density matrix is not in Bell-diagonal form");
  }
  return b;
}

}  // namespace

StateFamily parse_state_family(const std::string& name) {
  if (name == "werner") return StateFamily::werner;
  if (name == "isotropic") return StateFamily::isotropic;
  if (name == "pointer") return StateFamily::pointer;
  if (name == "bell") return StateFamily::bell;
  throw validation_error("unknown state family: '" + name + "'");
}

StateSpec parse_state_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw validation_error("state spec must look like family:params, got '" + spec + "'");
  }
  const std::string head = spec.substr(0, colon);
  const std::string tail = spec.substr(colon + 1);
  StateSpec st;
  st.source = spec;

  if (head == "file") {
    st.family = StateFamily::file;
    st.bell = bell_params_from_matrix(read_density_matrix_file(tail));
    return st;
  }

  const auto kv = parse_kv_list(tail);
  const auto get = [&](const std::string& key) -> const std::string& {
    for (const auto& [k, v] : kv) {
      if (k == key) return v;
    }
    throw validation_error("state spec '" + spec + "' is missing parameter " + key);
  };

  if (head == "werner") {
    st.family = StateFamily::werner;
    st.bell = werner_to_bell({parse_double(get("p"), "p")});
  } else if (head == "isotropic") {
    st.family = StateFamily::isotropic;
    st.bell = isotropic_to_bell({parse_double(get("F"), "F")});
  } else if (head == "pointer") {
    st.family = StateFamily::pointer;
    int axis = 3;
    for (const auto& [k, v] : kv) {
      if (k == "axis") axis = static_cast<int>(parse_double(v, "axis"));
    }
    st.bell = pointer_to_bell({parse_double(get("C"), "C"), axis});
  } else if (head == "bell") {
    st.family = StateFamily::bell;
    st.bell = {parse_double(get("c1"), "c1"), parse_double(get("c2"), "c2"),
               parse_double(get("c3"), "c3")};
  } else {
    throw validation_error("unknown state family: '" + head + "'");
  }
  return st;
}

EvalRecord eval_point(const StateSpec& state, const EntropyParams& ent) {
  EvalRecord rec;
  rec.state = state;
  rec.validity = validate_bell_params(state.bell.c1, state.bell.c2, state.bell.c3);
  if (!rec.validity.valid) throw validation_error(rec.validity.message());
  rec.eigenvalues = bell_diagonal_eigenvalues(state.bell);
  rec.discord = discord_bell(state.bell, ent);
  rec.negativity = negativity(bell_diagonal_matrix(state.bell), {2, 2});
  return rec;
}

namespace {

constexpr double kSingularSkip = 1e-6;

std::vector<double> grid_points(const SweptParam& sp) {
  if (sp.steps < 2) throw validation_error("sweep steps must be >= 2");
  if (!(sp.hi > sp.lo)) throw validation_error("sweep range must have hi > lo");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(sp.steps));
  for (int i = 0; i < sp.steps; ++i) {
    const double x = sp.lo + (sp.hi - sp.lo) * static_cast<double>(i) / (sp.steps - 1);
    if ((sp.name == "q" || sp.name == "r") && std::abs(x - 1.0) < kSingularSkip) continue;
    xs.push_back(x);
  }
  return xs;
}

void validate_swept_domain(const SweepSpec& spec, const SweptParam& sp) {
  if (sp.name == "q") {
    if (sp.lo <= 0) throw validation_error("swept q must stay positive");
    return;
  }
  if (sp.name == "r") return;
  if (sp.name != state_param_name(spec.family)) {
    throw validation_error("parameter '" + sp.name + "' is not sweepable for family " +
                           family_name(spec.family));
  }
  const auto [lo, hi] = state_param_domain(spec.family);
  if (sp.lo < lo || sp.hi > hi) {
    throw validation_error("sweep range for " + sp.name + " must lie in [" + fmt(lo) + ", " +
                           fmt(hi) + "]");
  }
}

}  // namespace

void sweep(const SweepSpec& spec, std::ostream& out) {
  if (spec.swept.empty() || spec.swept.size() > 2) {
    throw validation_error("sweep needs 1 or 2 swept parameters");
  }
  for (const auto& sp : spec.swept) validate_swept_domain(spec, sp);

  std::vector<std::vector<double>> grids;
  for (const auto& sp : spec.swept) grids.push_back(grid_points(sp));
  if (grids.size() == 1) grids.push_back({0.0});  // dummy inner axis

  out << spec.swept[0].name;
  if (spec.swept.size() == 2) out << "," << spec.swept[1].name;
  out << ",signed,absolute,marginal,conditional,joint,negativity\n";

  for (double x0 : grids[0]) {
    for (double x1 : grids[1]) {
      double state_param = spec.fixed_state_param;
      EntropyParams ent = spec.entropy;
      const double vals[2] = {x0, x1};
      for (std::size_t i = 0; i < spec.swept.size(); ++i) {
        const std::string& name = spec.swept[i].name;
        if (name == "q") ent.q = vals[i];
        else if (name == "r") ent.r = vals[i];
        else state_param = vals[i];
      }
      ent.validate();

      DiscordResult d;
      double neg = 0;
      if (spec.family == StateFamily::bell) {
        d = discord_bell(spec.fixed_bell, ent);
        neg = negativity(bell_diagonal_matrix(spec.fixed_bell), {2, 2});
      } else {
        d = family_discord(spec.family, state_param, spec.pointer_axis, ent);
        neg = family_negativity(spec.family, state_param, spec.pointer_axis);
      }
      // Emission-time consistency re-check of the component identity.
      if (std::abs(d.signed_value - (d.marginal_entropy + d.conditional_term - d.joint_entropy)) >
          1e-9) {
        throw numeric_domain_error("discord components do not add up at emission");
      }
      out << fmt(x0);
      if (spec.swept.size() == 2) out << "," << fmt(x1);
      out << "," << fmt(d.signed_value) << "," << fmt(d.absolute) << "," << fmt(d.marginal_entropy)
          << "," << fmt(d.conditional_term) << "," << fmt(d.joint_entropy) << "," << fmt(neg)
          << "\n";
    }
  }
}

RootResult find_zero_discord(const RootQuery& query) {
  if (!(query.hi > query.lo)) throw validation_error("root bracket must have hi > lo");
  const auto [dlo, dhi] = state_param_domain(query.family);
  if (query.lo < dlo || query.hi > dhi) {
    throw validation_error("root bracket must lie inside the state parameter domain");
  }
  const auto f = [&](double x) {
    return family_discord(query.family, x, 3, query.entropy).signed_value;
  };

  double lo = query.lo, hi = query.hi;
  double flo = f(lo), fhi = f(hi);
  RootResult res;

  if (flo == 0) {
    res.root = lo;
  } else if (fhi == 0) {
    res.root = hi;
  } else if ((flo < 0) != (fhi < 0)) {
    while (hi - lo > query.tolerance) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    res.root = 0.5 * (lo + hi);
  } else {
    // Tangential zeros (e.g. the von-Neumann discord touching 0 from above)
    // never change sign; fall back to golden-section minimization of |D|.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = std::abs(f(c1)), f2 = std::abs(f(c2));
    while (b - a > query.tolerance) {
      if (f1 < f2) {
        b = c2;
        c2 = c1;
        f2 = f1;
        c1 = b - gr * (b - a);
        f1 = std::abs(f(c1));
      } else {
        a = c1;
        c1 = c2;
        f1 = f2;
        c2 = a + gr * (b - a);
        f2 = std::abs(f(c2));
      }
    }
    res.root = 0.5 * (a + b);
    res.sign_change = false;
    if (std::abs(f(res.root)) > 1e-6) {
      throw validation_error("signed discord does not change sign in the bracket and has no zero");
    }
  }
  res.discord_at_root = f(res.root);
  return res;
}

namespace {

void write_comparison_csv(StateFamily fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path);
  const auto [lo, hi] = state_param_domain(fam);
  const EntropyParams sm = EntropyParams::sharma_mittal(0.5, 0.4);
  const EntropyParams re = EntropyParams::renyi(0.5);
  const EntropyParams ts = EntropyParams::tsallis(0.5);
  const EntropyParams vn = EntropyParams::von_neumann();
  out << state_param_name(fam) << ",sm,renyi,tsallis,vn,negativity\n";
  constexpr int kSteps = 201;
  for (int i = 0; i < kSteps; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (kSteps - 1);
    out << fmt(x) << "," << fmt(family_discord(fam, x, 3, sm).signed_value) << ","
        << fmt(family_discord(fam, x, 3, re).signed_value) << ","
        << fmt(family_discord(fam, x, 3, ts).signed_value) << ","
        << fmt(family_discord(fam, x, 3, vn).signed_value) << ","
        << fmt(family_negativity(fam, x, 3)) << "\n";
  }
}

}  // namespace

std::vector<std::string> reproduce_figures(const std::string& outdir) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);

  constexpr double kEntLo = 0.05, kEntHi = 5.0;
  constexpr int kStateSteps = 51, kEntSteps = 50;

  struct Surface {
    const char* suffix;
    EntropyKind kind;
    const char* swept_ent;  // "q" or "r"
    double fixed_q, fixed_r;
  };
  const Surface surfaces[] = {
      {"sm_q", EntropyKind::sharma_mittal, "q", 0.0, 5.0},
      {"sm_r", EntropyKind::sharma_mittal, "r", 5.0, 0.0},
      {"renyi_q", EntropyKind::renyi, "q", 0.0, 1.0},
      {"tsallis_q", EntropyKind::tsallis, "q", 0.0, 0.0},
  };

  std::vector<std::string> files;
  nlohmann::json manifest;
  manifest["note"] =
      "entropy-parameter axis ranges default to [0.05, 5]; the source plots do not pin them";
  auto entries = nlohmann::json::array();

  for (StateFamily fam : {StateFamily::werner, StateFamily::isotropic, StateFamily::pointer}) {
    const auto [lo, hi] = state_param_domain(fam);
    for (const Surface& s : surfaces) {
      SweepSpec spec;
      spec.family = fam;
      spec.swept = {{state_param_name(fam), lo, hi, kStateSteps},
                    {s.swept_ent, kEntLo, kEntHi, kEntSteps}};
      spec.entropy.kind = s.kind;
      spec.entropy.q = s.fixed_q > 0 ? s.fixed_q : 1.0;
      spec.entropy.r = s.fixed_r > 0 ? s.fixed_r : 1.0;

      const std::string name = "fig_" + family_name(fam) + "_" + s.suffix + ".csv";
      std::ofstream out(fs::path(outdir) / name);
      if (!out) throw validation_error("cannot write " + name);
      sweep(spec, out);
      files.push_back(name);

      nlohmann::json e;
      e["file"] = name;
      e["family"] = family_name(fam);
      e["entropy"] = s.suffix;
      e["state_param"] = {{"name", state_param_name(fam)}, {"lo", lo}, {"hi", hi}, {"steps", kStateSteps}};
      e["entropy_param"] = {{"name", s.swept_ent}, {"lo", kEntLo}, {"hi", kEntHi}, {"steps", kEntSteps}};
      if (s.fixed_q > 0) e["fixed_q"] = s.fixed_q;
      if (s.fixed_r > 0) e["fixed_r"] = s.fixed_r;
      entries.push_back(e);
    }
  }
  for (StateFamily fam : {StateFamily::werner, StateFamily::isotropic, StateFamily::pointer}) {
    const std::string name = "fig_compare_" + family_name(fam) + ".csv";
    write_comparison_csv(fam, (fs::path(outdir) / name).string());
    files.push_back(name);
    nlohmann::json e;
    e["file"] = name;
    e["family"] = family_name(fam);
    e["entropy"] = "comparison (sm q=0.5 r=0.4, renyi q=0.5, tsallis q=0.5, vn) + negativity";
    e["steps"] = 201;
    entries.push_back(e);
  }

  manifest["figures"] = entries;
  std::ofstream mo(fs::path(outdir) / "manifest.json");
  if (!mo) throw validation_error("cannot write manifest.json");
  mo << manifest.dump(2) << "\n";
  return files;
}

}  // namespace smdiscord
