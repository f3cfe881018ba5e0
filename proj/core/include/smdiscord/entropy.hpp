#pragma once

#include <vector>

namespace smdiscord {

enum class EntropyKind { sharma_mittal, renyi, tsallis, von_neumann };

/// Entropy-family selector. q is required unless kind is von_neumann,
/// r only for sharma_mittal. The Sharma-Mittal kernel rejects parameters
/// within 1e-8 of the singular lines q=1, r=1; callers pick a limit kind
/// (renyi, tsallis, von_neumann) instead.
struct EntropyParams {
  EntropyKind kind = EntropyKind::von_neumann;
  double q = 1.0;
  double r = 1.0;

  static EntropyParams sharma_mittal(double q, double r);
  static EntropyParams renyi(double q);
  static EntropyParams tsallis(double q);
  static EntropyParams von_neumann();

  /// Throws numeric_domain_error if parameters are outside the valid domain.
  void validate() const;
};

/// Checks entries (clipping [-1e-10, 0) to 0) and the unit-sum constraint.
std::vector<double> make_probability_vector(const std::vector<double>& probs);

/// All entropies use base-2 logarithms. Inputs are assumed to already satisfy
/// the ProbabilityVector invariants (use make_probability_vector on raw spectra).
double sharma_mittal_entropy(const std::vector<double>& p, double q, double r);
double renyi_entropy(const std::vector<double>& p, double q);
double tsallis_entropy(const std::vector<double>& p, double q);
double shannon_entropy(const std::vector<double>& p);

/// Dispatch over the four kinds.
double entropy(const std::vector<double>& p, const EntropyParams& params);

}  // namespace smdiscord
