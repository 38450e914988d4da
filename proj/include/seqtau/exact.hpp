// Exact distribution of S: generating-function products for binary sequences
// (equiprobable or biased) and the count-vector recursion for any alphabet.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "seqtau/distribution.hpp"
#include "seqtau/laurent.hpp"

namespace seqtau {

struct ExactConfig {
  /// Refuse exact construction when estimated_states() exceeds this.
  double state_cap = 1e8;
};

/// C(n+l-1, l-1) * n^2: number of count vectors of length n times the width
/// of a score range.
double estimated_states(int n, int alphabet);

/// Throws ResourceLimitExceeded when the estimate exceeds config.state_cap.
void check_state_cap(int n, int alphabet, const ExactConfig& config);

/// Paired factors of the binary count polynomial prod_k (1 + x^(n-2k+1)):
/// x^(1-2k) + 2 + x^(2k-1) for even n; a leading constant 2 and
/// (x^k + x^-k)^2 for odd n.
std::vector<Laurent<mpz_class>> binary_pgf_factors(int n);

/// Number of binary sequences with S = t, for every t. Total 2^n.
CountDistribution dist_binary(int n, const ExactConfig& config = {});

/// Biased binary model, P(0) = p, P(1) = 1-p. Scalar is mpq_class (exact) or
/// double. Throws std::invalid_argument unless 0 < p < 1.
template <class Scalar>
ScoreDistribution<Scalar> dist_binary_pq(int n, const Scalar& p, const ExactConfig& config = {});

extern template ScoreDistribution<mpq_class> dist_binary_pq(int, const mpq_class&, const ExactConfig&);
extern template ScoreDistribution<double> dist_binary_pq(int, const double&, const ExactConfig&);

/// Number of sequences over {0..l-1} with S = t, built layer by layer from the
/// count-vector recursion and marginalized. Total l^n.
CountDistribution dist_general(int n, int alphabet, const ExactConfig& config = {});

/// P_n(t; cv) for every tie profile cv with sum n.
CountIndexedDistribution dist_by_counts(int n, int alphabet, const ExactConfig& config = {});

/// Checks the binary two-step rule
///   P_{n+1}(t; i0, i1) = P_{n-1}(t - 2 i1; i0-2, i1)
///                      + P_{n-1}(t + i0 - i1 - 1; i0-1, i1-1)
///                      + P_{n-1}(t + i0 - i1 + 1; i0-1, i1-1)
///                      + P_{n-1}(t + 2 i0; i0, i1-2)
/// for all t and all i0 + i1 = n+1, reading negative-count terms as zero.
bool verify_two_step_identity(int n);

/// Same check with the second term shifted by t + i0 - 1, as it is usually
/// printed. Kept to document that this form does not hold.
bool verify_two_step_identity_as_printed(int n);

}  // namespace seqtau
