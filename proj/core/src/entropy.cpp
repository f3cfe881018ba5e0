#include "smdiscord/entropy.hpp"

#include <cmath>
#include <string>

#include "smdiscord/errors.hpp"

namespace smdiscord {

namespace {

constexpr double kSingularTol = 1e-8;

void require_valid_q(double q) {
  if (!(q > 0)) throw numeric_domain_error("entropy parameter q must be > 0, got " + std::to_string(q));
  if (std::abs(q - 1.0) < kSingularTol) {
    throw numeric_domain_error("q is within 1e-8 of 1; use the matching limit kind");
  }
}

// sum_i p_i^q with the 0^q = 0 convention.
double power_sum(const std::vector<double>& p, double q) {
  double s = 0;
  for (double x : p) {
    if (x > 0) s += std::pow(x, q);
  }
  return s;
}

}  // namespace

EntropyParams EntropyParams::sharma_mittal(double q, double r) {
  EntropyParams e{EntropyKind::sharma_mittal, q, r};
  e.validate();
  return e;
}

EntropyParams EntropyParams::renyi(double q) {
  EntropyParams e{EntropyKind::renyi, q, 1.0};
  e.validate();
  return e;
}

EntropyParams EntropyParams::tsallis(double q) {
  EntropyParams e{EntropyKind::tsallis, q, q};
  e.validate();
  return e;
}

EntropyParams EntropyParams::von_neumann() { return EntropyParams{EntropyKind::von_neumann, 1.0, 1.0}; }

void EntropyParams::validate() const {
  switch (kind) {
    case EntropyKind::sharma_mittal:
      require_valid_q(q);
      if (std::abs(r - 1.0) < kSingularTol) {
        throw numeric_domain_error("r is within 1e-8 of 1; use kind=renyi instead");
      }
      break;
    case EntropyKind::renyi:
    case EntropyKind::tsallis:
      require_valid_q(q);
      break;
    case EntropyKind::von_neumann:
      break;
  }
}

std::vector<double> make_probability_vector(const std::vector<double>& probs) {
  std::vector<double> p;
  p.reserve(probs.size());
  double sum = 0;
  for (double x : probs) {
    if (x < -1e-10) {
      throw validation_error("probability " + std::to_string(x) + " below clipping tolerance");
    }
    if (x > 1.0 + 1e-10) {
      throw validation_error("probability " + std::to_string(x) + " exceeds 1");
    }
    const double clipped = x < 0 ? 0.0 : x;
    p.push_back(clipped);
    sum += clipped;
  }
  if (std::abs(sum - 1.0) > 1e-8) {
    throw validation_error("probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  return p;
}

double sharma_mittal_entropy(const std::vector<double>& p, double q, double r) {
  EntropyParams::sharma_mittal(q, r);  // domain check
  const double s = power_sum(p, q);
  return (std::pow(s, (1.0 - r) / (1.0 - q)) - 1.0) / (1.0 - r);
}

double renyi_entropy(const std::vector<double>& p, double q) {
  require_valid_q(q);
  return std::log2(power_sum(p, q)) / (1.0 - q);
}

double tsallis_entropy(const std::vector<double>& p, double q) {
  require_valid_q(q);
  return (power_sum(p, q) - 1.0) / (1.0 - q);
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0;
  for (double x : p) {
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

double entropy(const std::vector<double>& p, const EntropyParams& params) {
  switch (params.kind) {
    case EntropyKind::sharma_mittal: return sharma_mittal_entropy(p, params.q, params.r);
    case EntropyKind::renyi: return renyi_entropy(p, params.q);
    case EntropyKind::tsallis: return tsallis_entropy(p, params.q);
    case EntropyKind::von_neumann: return shannon_entropy(p);
  }
  throw numeric_domain_error("unknown entropy kind");
}

}  // namespace smdiscord
