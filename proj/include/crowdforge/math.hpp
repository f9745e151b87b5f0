#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "crowdforge/errors.hpp"

namespace crowdforge {

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Binary entropy in bits; H(0) = H(1) = 0, maximum 1 at p = 0.5.
inline double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binary_entropy: p=" + std::to_string(p) + " outside [0,1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

// Sign with the fixed tie rule sign(0) = +1 used by every aggregation formula.
inline int sign_pm(double x) { return x >= 0.0 ? 1 : -1; }

// Fraction of positions where two +/-1 vectors agree.
inline double accuracy(const std::vector<int>& estimated, const std::vector<int>& truth) {
  if (estimated.size() != truth.size() || estimated.empty()) {
    throw DomainError("accuracy: vectors must have equal nonzero length (" +
                      std::to_string(estimated.size()) + " vs " + std::to_string(truth.size()) + ")");
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < estimated.size(); ++i) {
    if (estimated[i] == truth[i]) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(estimated.size());
}

}  // namespace crowdforge
