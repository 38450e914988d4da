#include "seqtau/oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace seqtau::oracle {

namespace {

void check_cap(int n, int alphabet, const OracleConfig& config) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (std::pow(static_cast<double>(alphabet), n) > config.sequence_cap) {
    throw ResourceLimitExceeded("enumerating " + std::to_string(alphabet) + "^" + std::to_string(n) +
                                " sequences exceeds the oracle cap");
  }
}

// Calls visit(digits) for every sequence in odometer order.
template <class Visit>
void for_each_sequence(int n, int alphabet, Visit&& visit) {
  std::vector<Digit> digits(static_cast<std::size_t>(n), 0);
  const auto top = static_cast<Digit>(alphabet);
  while (true) {
    visit(std::span<const Digit>(digits));
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < top) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
  }
}

template <class W>
ScoreDistribution<W> from_histogram(int n, int alphabet, const std::map<Score, W>& hist) {
  const Score reach = max_abs_score(n);
  std::vector<W> w(static_cast<std::size_t>(2 * reach + 1), W(0));
  for (const auto& [t, v] : hist) w[static_cast<std::size_t>(t + reach)] = v;
  return ScoreDistribution<W>(n, alphabet, Laurent<W>(-reach, std::move(w)));
}

}  // namespace

CountDistribution brute_dist(int n, int alphabet, const OracleConfig& config) {
  check_cap(n, alphabet, config);
  std::map<Score, mpz_class> hist;
  for_each_sequence(n, alphabet, [&](std::span<const Digit> d) { hist[score(d).s] += 1; });
  return from_histogram(n, alphabet, hist);
}

CountIndexedDistribution brute_dist_by_counts(int n, int alphabet, const OracleConfig& config) {
  check_cap(n, alphabet, config);
  std::map<std::vector<std::int64_t>, std::map<Score, mpz_class>> tables;
  for_each_sequence(n, alphabet, [&](std::span<const Digit> d) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(alphabet), 0);
    for (Digit x : d) ++counts[x];
    tables[counts][score(d).s] += 1;
  });
  CountIndexedDistribution out;
  for (const auto& [counts, hist] : tables) out.emplace(CountVector(counts), from_histogram(n, alphabet, hist));
  return out;
}

RationalDistribution brute_dist_pq(int n, const mpq_class& p, const OracleConfig& config) {
  check_cap(n, 2, config);
  if (!(p > 0 && p < 1)) throw std::invalid_argument("probability p must lie strictly between 0 and 1");
  const mpq_class q = 1 - p;
  // weight[z] = p^z q^(n-z)
  std::vector<mpq_class> weight(static_cast<std::size_t>(n) + 1);
  for (int z = 0; z <= n; ++z) {
    mpq_class w = 1;
    for (int i = 0; i < z; ++i) w *= p;
    for (int i = z; i < n; ++i) w *= q;
    weight[static_cast<std::size_t>(z)] = w;
  }
  std::map<Score, mpq_class> hist;
  for_each_sequence(n, 2, [&](std::span<const Digit> d) {
    std::size_t zeros = 0;
    for (Digit x : d) zeros += (x == 0);
    hist[score(d).s] += weight[zeros];
  });
  return from_histogram(n, 2, hist);
}

}  // namespace seqtau::oracle
