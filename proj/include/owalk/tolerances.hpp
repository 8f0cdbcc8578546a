#pragma once

#include "owalk/arithmetic.hpp"
#include "owalk/spectral.hpp"
#include "owalk/support.hpp"

namespace owalk {

// Defaults used across the analyses. support_threshold <= 0 means
// 1e-8 * n for the graph at hand.
struct Tolerances {
  double grouping = kDefaultGroupingTolerance;
  double support_threshold = 0.0;
  double cospectral = kDefaultCospectralTolerance;
  double integer = kDefaultIntegerTolerance;
  double pst = 1e-7;
  double parity = 1e-6;
  double rational = 1e-13;

  double support_for(int n) const {
    return support_threshold > 0.0 ? support_threshold : default_support_threshold(n);
  }
};

}  // namespace owalk
