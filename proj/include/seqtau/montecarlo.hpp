// Seeded Monte-Carlo sampling of S for checking the approach to normality.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "seqtau/approx.hpp"
#include "seqtau/distribution.hpp"

namespace seqtau {

/// Counter-based SplitMix64: value(i) = mix(seed + (i + 1) * 0x9E3779B97F4A7C15).
/// Any sample can be regenerated from (seed, counter) alone.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  [[nodiscard]] std::uint64_t operator()(std::uint64_t counter) const noexcept;
  /// Uniform digit in [0, alphabet) by 128-bit multiply-high.
  [[nodiscard]] Digit digit(std::uint64_t counter, int alphabet) const noexcept;
  /// Uniform double in [0, 1) from the top 53 bits.
  [[nodiscard]] double unit(std::uint64_t counter) const noexcept;

 private:
  std::uint64_t seed_;
};

struct MonteCarloResult {
  NullModel model;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  CountDistribution histogram{1, 2, Laurent<mpz_class>()};

  double mean = 0;
  /// Empirical moments about zero (the null mean).
  double mu2 = 0;
  double mu4 = 0;
  double kurtosis = 0;

  MomentSet closed;
  double closed_kurtosis = 0;

  /// max_t |F_empirical(t) - F_reference(t)|; reference is the exact
  /// distribution when within the cap, otherwise Edgeworth.
  double max_cdf_gap = 0;
  std::string reference;
};

MonteCarloResult run_montecarlo(const NullModel& model, std::uint64_t samples, std::uint64_t seed,
                                const ExactConfig& config = {});

}  // namespace seqtau
