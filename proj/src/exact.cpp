#include "seqtau/exact.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace seqtau {

double estimated_states(int n, int alphabet) {
  double vectors = 1.0;
  for (int j = 1; j < alphabet; ++j) vectors = vectors * (n + j) / j;
  return vectors * static_cast<double>(n) * static_cast<double>(n);
}

void check_state_cap(int n, int alphabet, const ExactConfig& config) {
  const double states = estimated_states(n, alphabet);
  if (states > config.state_cap) {
    std::ostringstream msg;
    msg << "exact distribution for n=" << n << ", alphabet=" << alphabet << " needs about " << states
        << " states, above the cap of " << config.state_cap;
    throw ResourceLimitExceeded(msg.str());
  }
}

namespace {

void require_length(int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
}

void require_alphabet(int alphabet) {
  if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
}

// x^-a + c + x^a, or the constant c when a == 0.
template <class Scalar>
Laurent<Scalar> symmetric_factor(std::int64_t a, const Scalar& side, const Scalar& centre) {
  if (a == 0) return Laurent<Scalar>::constant(side + side + centre);
  std::vector<Scalar> c(static_cast<std::size_t>(2 * a + 1), Scalar(0));
  c.front() = side;
  c[static_cast<std::size_t>(a)] = centre;
  c.back() = side;
  return Laurent<Scalar>(-a, std::move(c));
}

}  // namespace

std::vector<Laurent<mpz_class>> binary_pgf_factors(int n) {
  require_length(n);
  std::vector<Laurent<mpz_class>> factors;
  const int pairs = n / 2;
  if (n % 2 == 1) factors.push_back(Laurent<mpz_class>::constant(2));
  for (int k = 1; k <= pairs; ++k) {
    // (1 + x^w)(1 + x^-w) with w = 2k for odd n, 2k-1 for even n.
    const std::int64_t w = (n % 2 == 1) ? 2 * k : 2 * k - 1;
    factors.push_back(symmetric_factor<mpz_class>(w, 1, 2));
  }
  return factors;
}

CountDistribution dist_binary(int n, const ExactConfig& config) {
  require_length(n);
  check_state_cap(n, 2, config);
  const auto factors = binary_pgf_factors(n);
  return CountDistribution(n, 2, product<mpz_class>(factors));
}

template <class Scalar>
ScoreDistribution<Scalar> dist_binary_pq(int n, const Scalar& p, const ExactConfig& config) {
  require_length(n);
  if (!(p > 0 && p < 1)) throw std::invalid_argument("probability p must lie strictly between 0 and 1");
  check_state_cap(n, 2, config);
  const Scalar q = Scalar(1) - p;
  const Scalar pq = p * q;
  const Scalar same = p * p + q * q;
  Laurent<Scalar> acc = Laurent<Scalar>::constant(n % 2 == 1 ? Scalar(p + q) : Scalar(1));
  for (int k = 1; k <= n / 2; ++k) {
    const std::int64_t w = (n % 2 == 1) ? 2 * k : 2 * k - 1;
    acc *= symmetric_factor<Scalar>(w, pq, same);
  }
  return ScoreDistribution<Scalar>(n, 2, std::move(acc));
}

template ScoreDistribution<mpq_class> dist_binary_pq(int, const mpq_class&, const ExactConfig&);
template ScoreDistribution<double> dist_binary_pq(int, const double&, const ExactConfig&);

namespace {

using Profile = std::vector<std::int64_t>;

// All profiles of `total` into `parts` parts, colexicographic order.
std::vector<Profile> compositions(std::int64_t total, int parts) {
  std::vector<Profile> out;
  Profile cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, std::int64_t)> fill = [&](int pos, std::int64_t left) {
    if (pos == 0) {
      cur[0] = left;
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      fill(pos - 1, left - v);
    }
  };
  fill(parts - 1, total);
  return out;
}

std::int64_t mixed_pairs(const Profile& c) {
  std::int64_t n = 0, sq = 0;
  for (auto v : c) {
    n += v;
    sq += v * v;
  }
  return (n * n - sq) / 2;
}

// One layer of the recursion: P_m(t; cv) for every cv with sum m, each stored
// densely over [-mixed(cv), mixed(cv)].
template <class Count>
struct Layer {
  std::vector<Profile> profiles;
  std::map<Profile, std::size_t> index;
  std::vector<std::vector<Count>> weights;

  [[nodiscard]] const std::vector<Count>* find(const Profile& c) const {
    auto it = index.find(c);
    return it == index.end() ? nullptr : &weights[it->second];
  }
};

template <class Count>
Layer<Count> initial_layer(int alphabet) {
  Layer<Count> layer;
  layer.profiles.emplace_back(static_cast<std::size_t>(alphabet), 0);
  layer.index.emplace(layer.profiles.front(), 0);
  layer.weights.push_back({Count(1)});
  return layer;
}

// P_{m+1}(t; i) = sum_k P_m(t - shift_k; i - e_k),
// shift_k = sum_{d>k} i_d - sum_{d<k} i_d.
template <class Count>
Layer<Count> next_layer(const Layer<Count>& prev, std::int64_t size, int alphabet) {
  Layer<Count> layer;
  layer.profiles = compositions(size, alphabet);
  layer.weights.reserve(layer.profiles.size());
  for (std::size_t r = 0; r < layer.profiles.size(); ++r) {
    const Profile& target = layer.profiles[r];
    layer.index.emplace(target, r);
    const std::int64_t reach = mixed_pairs(target);
    std::vector<Count> w(static_cast<std::size_t>(2 * reach + 1), Count(0));

    std::int64_t below = 0;
    std::int64_t above = size;
    Profile pred = target;
    for (int k = 0; k < alphabet; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      above -= target[ku];
      if (target[ku] > 0) {
        const std::int64_t shift = above - below;
        --pred[ku];
        const auto* src = prev.find(pred);
        const std::int64_t src_reach = mixed_pairs(pred);
        for (std::size_t j = 0; j < src->size(); ++j) {
          if ((*src)[j] == 0) continue;
          const std::int64_t t = static_cast<std::int64_t>(j) - src_reach + shift;
          w[static_cast<std::size_t>(t + reach)] += (*src)[j];
        }
        ++pred[ku];
      }
      below += target[ku];
    }
    layer.weights.push_back(std::move(w));
  }
  return layer;
}

template <class Count>
Layer<Count> build_layers(int n, int alphabet) {
  Layer<Count> layer = initial_layer<Count>(alphabet);
  for (int m = 1; m <= n; ++m) layer = next_layer(layer, m, alphabet);
  return layer;
}

mpz_class to_mpz(const mpz_class& v) { return v; }
mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

// l^n fits comfortably in 63 bits.
bool fits_machine_word(int n, int alphabet) {
  return static_cast<double>(n) * std::log2(static_cast<double>(alphabet)) < 62.0;
}

template <class Count>
CountIndexedDistribution export_layer(const Layer<Count>& layer, int n, int alphabet) {
  CountIndexedDistribution out;
  for (std::size_t r = 0; r < layer.profiles.size(); ++r) {
    const Profile& c = layer.profiles[r];
    std::vector<mpz_class> w;
    w.reserve(layer.weights[r].size());
    for (const auto& v : layer.weights[r]) w.push_back(to_mpz(v));
    out.emplace(CountVector(c), CountDistribution(n, alphabet, Laurent<mpz_class>(-mixed_pairs(c), std::move(w))));
  }
  return out;
}

template <class Count>
CountDistribution marginal_of(const Layer<Count>& layer, int n, int alphabet) {
  const std::int64_t reach = max_abs_score(n);
  std::vector<Count> sum(static_cast<std::size_t>(2 * reach + 1), Count(0));
  for (std::size_t r = 0; r < layer.profiles.size(); ++r) {
    const std::int64_t local = mixed_pairs(layer.profiles[r]);
    const auto& w = layer.weights[r];
    for (std::size_t j = 0; j < w.size(); ++j) sum[j + static_cast<std::size_t>(reach - local)] += w[j];
  }
  std::vector<mpz_class> out;
  out.reserve(sum.size());
  for (const auto& v : sum) out.push_back(to_mpz(v));
  return CountDistribution(n, alphabet, Laurent<mpz_class>(-reach, std::move(out)));
}

}  // namespace

CountDistribution dist_general(int n, int alphabet, const ExactConfig& config) {
  require_length(n);
  require_alphabet(alphabet);
  check_state_cap(n, alphabet, config);
  if (fits_machine_word(n, alphabet)) {
    return marginal_of(build_layers<std::uint64_t>(n, alphabet), n, alphabet);
  }
  return marginal_of(build_layers<mpz_class>(n, alphabet), n, alphabet);
}

CountIndexedDistribution dist_by_counts(int n, int alphabet, const ExactConfig& config) {
  require_length(n);
  require_alphabet(alphabet);
  check_state_cap(n, alphabet, config);
  if (fits_machine_word(n, alphabet)) {
    return export_layer(build_layers<std::uint64_t>(n, alphabet), n, alphabet);
  }
  return export_layer(build_layers<mpz_class>(n, alphabet), n, alphabet);
}

CountDistribution marginalize(const CountIndexedDistribution& by_counts) {
  if (by_counts.empty()) throw std::invalid_argument("cannot marginalize an empty table");
  const auto& first = by_counts.begin()->second;
  Laurent<mpz_class> sum;
  for (const auto& [cv, d] : by_counts) {
    sum += Laurent<mpz_class>(d.lowest(), {d.weights().begin(), d.weights().end()});
  }
  return CountDistribution(first.n(), first.alphabet(), std::move(sum));
}

namespace {

bool check_two_step(int n, bool as_printed) {
  if (n < 2) throw std::invalid_argument("two-step identity needs n >= 2");
  const auto upper = build_layers<mpz_class>(n + 1, 2);
  const auto lower = build_layers<mpz_class>(n - 1, 2);

  auto lookup = [](const auto& layer, std::int64_t t, std::int64_t i0, std::int64_t i1) -> mpz_class {
    if (i0 < 0 || i1 < 0) return 0;
    const Profile c{i0, i1};
    const auto* w = layer.find(c);
    const std::int64_t reach = mixed_pairs(c);
    if (w == nullptr || t < -reach || t > reach) return 0;
    return (*w)[static_cast<std::size_t>(t + reach)];
  };

  const std::int64_t span = max_abs_score(n + 1) + 2 * (n + 1);
  for (std::int64_t i0 = 0; i0 <= n + 1; ++i0) {
    const std::int64_t i1 = n + 1 - i0;
    for (std::int64_t t = -span; t <= span; ++t) {
      const std::int64_t mixed_shift = as_printed ? t + i0 - 1 : t + i0 - i1 - 1;
      const mpz_class rhs = lookup(lower, t - 2 * i1, i0 - 2, i1) + lookup(lower, mixed_shift, i0 - 1, i1 - 1) +
                            lookup(lower, t + i0 - i1 + 1, i0 - 1, i1 - 1) + lookup(lower, t + 2 * i0, i0, i1 - 2);
      if (lookup(upper, t, i0, i1) != rhs) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_two_step_identity(int n) { return check_two_step(n, false); }

bool verify_two_step_identity_as_printed(int n) { return check_two_step(n, true); }

}  // namespace seqtau
