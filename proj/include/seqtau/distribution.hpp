// Score distributions: weights indexed by integer score t.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "seqtau/core.hpp"
#include "seqtau/laurent.hpp"

namespace seqtau {

/// An exact construction or enumeration would exceed its configured cap.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WeightKind { exact_count, exact_rational, floating };

template <class W>
constexpr WeightKind weight_kind_of() {
  if constexpr (std::is_same_v<W, mpz_class>) {
    return WeightKind::exact_count;
  } else if constexpr (std::is_same_v<W, mpq_class>) {
    return WeightKind::exact_rational;
  } else {
    static_assert(std::is_floating_point_v<W>, "unsupported weight type");
    return WeightKind::floating;
  }
}

/// Largest possible |S| for length n: n(n-1)/2.
constexpr Score max_abs_score(std::int64_t n) { return n * (n - 1) / 2; }

/// Dense map t -> weight over [lowest, highest]. Entries outside the stored
/// range are zero. `alphabet` is 2 for the biased binary model.
template <class W>
class ScoreDistribution {
 public:
  ScoreDistribution(int n, int alphabet, Laurent<W> weights) : n_(n), alphabet_(alphabet) {
    weights.trim();
    lowest_ = weights.lowest();
    weights_ = std::move(weights).release();
    if (lowest_ < -max_abs_score(n) || highest() > max_abs_score(n)) {
      throw std::logic_error("score distribution support exceeds [-n(n-1)/2, n(n-1)/2]");
    }
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] static constexpr WeightKind kind() noexcept { return weight_kind_of<W>(); }

  /// Smallest and largest t with nonzero weight.
  [[nodiscard]] Score lowest() const noexcept { return lowest_; }
  [[nodiscard]] Score highest() const noexcept { return lowest_ + static_cast<Score>(weights_.size()) - 1; }
  [[nodiscard]] std::span<const W> weights() const noexcept { return weights_; }

  [[nodiscard]] W weight(Score t) const {
    if (t < lowest_ || t > highest()) return W(0);
    return weights_[static_cast<std::size_t>(t - lowest_)];
  }

  [[nodiscard]] W total() const {
    W sum(0);
    for (const auto& w : weights_) sum += w;
    return sum;
  }

  /// Weight over total as a double.
  [[nodiscard]] double probability(Score t) const {
    if constexpr (std::is_floating_point_v<W>) {
      return weight(t) / total();
    } else if constexpr (std::is_same_v<W, mpq_class>) {
      return mpq_class(weight(t) / total()).get_d();
    } else {
      return mpq_class(weight(t), total()).get_d();
    }
  }

  friend bool operator==(const ScoreDistribution& a, const ScoreDistribution& b) {
    return a.n_ == b.n_ && a.alphabet_ == b.alphabet_ && a.lowest_ == b.lowest_ && a.weights_ == b.weights_;
  }

 private:
  int n_;
  int alphabet_;
  Score lowest_ = 0;
  std::vector<W> weights_;
};

using CountDistribution = ScoreDistribution<mpz_class>;
using RationalDistribution = ScoreDistribution<mpq_class>;
using FloatDistribution = ScoreDistribution<double>;

/// P_n(t; cv) for every count vector cv of one length n.
using CountIndexedDistribution = std::map<CountVector, CountDistribution>;

/// Counts divided by their total, exactly.
inline RationalDistribution to_probabilities(const CountDistribution& d) {
  const mpz_class total = d.total();
  std::vector<mpq_class> w;
  w.reserve(d.weights().size());
  for (const auto& c : d.weights()) {
    mpq_class q(c, total);
    q.canonicalize();
    w.push_back(q);
  }
  return RationalDistribution(d.n(), d.alphabet(), Laurent<mpq_class>(d.lowest(), std::move(w)));
}

template <class W>
FloatDistribution to_floating(const ScoreDistribution<W>& d) {
  std::vector<double> w;
  w.reserve(d.weights().size());
  for (Score t = d.lowest(); t <= d.highest(); ++t) w.push_back(d.probability(t));
  return FloatDistribution(d.n(), d.alphabet(), Laurent<double>(d.lowest(), std::move(w)));
}

/// Sum over count vectors.
CountDistribution marginalize(const CountIndexedDistribution& by_counts);

}  // namespace seqtau
