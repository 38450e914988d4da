// Closed-form central moments of S and moment extraction from distributions.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>

#include "seqtau/distribution.hpp"

namespace seqtau {

/// Even central moments; the mean and all odd moments vanish by symmetry.
struct MomentSet {
  mpq_class mu2;
  mpq_class mu4;
  std::optional<mpq_class> mu6;

  [[nodiscard]] double sigma() const { return std::sqrt(mu2.get_d()); }
  /// mu4 / mu2^2. Undefined (NaN) when mu2 == 0.
  [[nodiscard]] double kurtosis() const;
  [[nodiscard]] mpq_class kurtosis_exact() const;
};

/// Equiprobable sequences over l letters:
/// (l-1)/l * n(n-1)/2 + (l^2-1)/l^2 * n(n-1)(n-2)/9.
mpq_class var_closed(int n, int alphabet);

/// Equiprobable fourth central moment, exact.
mpq_class mu4_closed(int n, int alphabet);

/// Binary equiprobable: n(n^2-1)/12, n(n^2-1)(5n^3-6n^2-5n+14)/240 and the
/// degree-9 polynomial for mu6.
MomentSet binary_moments(int n);

/// Biased binary with P(0) = p. Throws std::invalid_argument unless 0 < p < 1.
MomentSet pq_moments(int n, const mpq_class& p);

/// Equiprobable general alphabet (no mu6).
MomentSet general_moments(int n, int alphabet);

/// Closed-form 3(5n^3-6n^2-5n+14) / (5n(n^2-1)) for the binary kurtosis ratio.
mpq_class binary_kurtosis_closed(int n);

/// sum_t w(t) t^k / total. Exact for count and rational weights.
template <class W>
auto moment_from_dist(const ScoreDistribution<W>& d, int k) {
  using Out = std::conditional_t<std::is_floating_point_v<W>, double, mpq_class>;
  Out acc(0);
  Score t = d.lowest();
  for (const auto& w : d.weights()) {
    if (w != 0) {
      if constexpr (std::is_floating_point_v<W>) {
        acc += w * std::pow(static_cast<double>(t), k);
      } else {
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), mpz_class(static_cast<long>(t)).get_mpz_t(), static_cast<unsigned long>(k));
        acc += Out(w * power);
      }
    }
    ++t;
  }
  if constexpr (std::is_floating_point_v<W>) {
    return acc / d.total();
  } else {
    Out r = acc / Out(d.total());
    r.canonicalize();
    return r;
  }
}

/// mu2(n+1) - mu2(n) == n(l-1)/l + n(n-1)/3 * (l^2-1)/l^2.
bool variance_recurrence_check(int n, int alphabet);

/// Same with the increment n(n-3)/3 * (l^2-1)/l^2, which does not match the
/// closed-form variance.
bool variance_recurrence_check_as_printed(int n, int alphabet);

}  // namespace seqtau
