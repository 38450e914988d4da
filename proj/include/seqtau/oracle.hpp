// Brute-force ground truth: enumerate every sequence and score it with the
// O(n^2) pair scan. Shares no construction code with the exact engines.
#pragma once

#include <gmpxx.h>

#include "seqtau/distribution.hpp"

namespace seqtau::oracle {

struct OracleConfig {
  /// Maximum number of sequences enumerated.
  double sequence_cap = 1e7;
};

CountDistribution brute_dist(int n, int alphabet, const OracleConfig& config = {});

CountIndexedDistribution brute_dist_by_counts(int n, int alphabet, const OracleConfig& config = {});

/// Each binary sequence weighted p^(#zeros) q^(#ones), exact rationals.
RationalDistribution brute_dist_pq(int n, const mpq_class& p, const OracleConfig& config = {});

}  // namespace seqtau::oracle
