#include "seqtau/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "seqtau/core.hpp"
#include "seqtau/moments.hpp"

namespace seqtau {

std::uint64_t CounterRng::operator()(std::uint64_t counter) const noexcept {
  std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Digit CounterRng::digit(std::uint64_t counter, int alphabet) const noexcept {
  const unsigned __int128 wide = static_cast<unsigned __int128>((*this)(counter)) * static_cast<unsigned>(alphabet);
  return static_cast<Digit>(wide >> 64);
}

double CounterRng::unit(std::uint64_t counter) const noexcept {
  return static_cast<double>((*this)(counter) >> 11) * 0x1.0p-53;
}

namespace {

double cdf_gap_exact(const CountDistribution& emp, const RationalDistribution& ref) {
  const Score lo = std::min(emp.lowest(), ref.lowest());
  const Score hi = std::max(emp.highest(), ref.highest());
  const mpz_class total = emp.total();
  mpz_class emp_cum = 0;
  mpq_class ref_cum = 0;
  double gap = 0;
  for (Score t = lo; t <= hi; ++t) {
    emp_cum += emp.weight(t);
    ref_cum += ref.weight(t);
    const mpq_class diff = mpq_class(emp_cum, total) - ref_cum;
    gap = std::max(gap, std::abs(diff.get_d()));
  }
  return gap;
}

double cdf_gap_edgeworth(const CountDistribution& emp, const NullModel& model, const MomentSet& closed) {
  const double sigma = closed.sigma();
  if (sigma == 0) return 0.0;
  const double kurt = closed.kurtosis();
  const double c = 0.5 * model.support_step();
  const double total = emp.total().get_d();
  double cum = 0;
  double gap = 0;
  for (Score t = emp.lowest() - 1; t <= emp.highest(); ++t) {
    cum += emp.weight(t).get_d();
    const double ref = std::clamp(edgeworth_cdf((static_cast<double>(t) + c) / sigma, kurt), 0.0, 1.0);
    gap = std::max(gap, std::abs(cum / total - ref));
  }
  return gap;
}

}  // namespace

MonteCarloResult run_montecarlo(const NullModel& model, std::uint64_t samples, std::uint64_t seed,
                                const ExactConfig& config) {
  model.validate();
  if (samples < 1) throw std::invalid_argument("at least one sample is required");
  const CounterRng rng(seed);
  const auto n = static_cast<std::uint64_t>(model.n);
  const double p = model.p ? model.p->get_d() : 0.5;

  std::map<Score, std::uint64_t> hist;
  std::vector<Digit> digits(n);
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (std::uint64_t k = 0; k < n; ++k) {
      const std::uint64_t counter = i * n + k;
      digits[k] = model.p ? (rng.unit(counter) < p ? 0 : 1) : rng.digit(counter, model.alphabet);
    }
    const DigitSequence seq(digits, model.alphabet);
    ++hist[model.is_binary() ? score_binary_fast(seq) : score_fast(seq).s];
  }

  MonteCarloResult r;
  r.model = model;
  r.samples = samples;
  r.seed = seed;
  const Score lo = hist.begin()->first;
  std::vector<mpz_class> w(static_cast<std::size_t>(hist.rbegin()->first - lo + 1), 0);
  for (const auto& [t, c] : hist) w[static_cast<std::size_t>(t - lo)] = mpz_class(std::to_string(c));
  r.histogram = CountDistribution(model.n, model.alphabet, Laurent<mpz_class>(lo, std::move(w)));

  r.mean = moment_from_dist(r.histogram, 1).get_d();
  r.mu2 = moment_from_dist(r.histogram, 2).get_d();
  r.mu4 = moment_from_dist(r.histogram, 4).get_d();
  r.kurtosis = r.mu2 > 0 ? r.mu4 / (r.mu2 * r.mu2) : std::nan("");

  r.closed = model_moments(model);
  r.closed_kurtosis = r.closed.kurtosis();

  try {
    const auto [exact, engine] = exact_null_distribution(model, config);
    r.max_cdf_gap = cdf_gap_exact(r.histogram, exact);
    r.reference = "exact";
  } catch (const ResourceLimitExceeded&) {
    r.max_cdf_gap = cdf_gap_edgeworth(r.histogram, model, r.closed);
    r.reference = "edgeworth";
  }
  return r;
}

}  // namespace seqtau
