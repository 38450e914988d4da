#include <doctest.h>

#include <map>

#include "seqtau/exact.hpp"
#include "seqtau/moments.hpp"
#include "test_support.hpp"

using namespace seqtau;

namespace {

std::vector<mpz_class> row(const CountDistribution& d) {
  return {d.weights().begin(), d.weights().end()};
}

std::vector<mpz_class> z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

mpz_class power(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

// Histogram of the pair-scan score over every sequence.
std::map<Score, mpz_class> enumerate(int n, int l) {
  std::map<Score, mpz_class> h;
  testing::for_each_sequence(n, l, [&](std::span<const Digit> d) { h[score(d).s] += 1; });
  return h;
}

template <class W>
bool equals_histogram(const ScoreDistribution<W>& d, const std::map<Score, W>& h) {
  for (Score t = -max_abs_score(d.n()) - 1; t <= max_abs_score(d.n()) + 1; ++t) {
    auto it = h.find(t);
    const W expect = it == h.end() ? W(0) : it->second;
    if (d.weight(t) != expect) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("binary table rows n = 1..6") {
  CHECK(row(dist_binary(1)) == z({2}));
  CHECK(row(dist_binary(2)) == z({1, 2, 1}));
  CHECK(row(dist_binary(3)) == z({2, 0, 4, 0, 2}));
  CHECK(row(dist_binary(4)) == z({1, 2, 1, 2, 4, 2, 1, 2, 1}));
  CHECK(row(dist_binary(5)) == z({2, 0, 4, 0, 6, 0, 8, 0, 6, 0, 4, 0, 2}));
  CHECK(row(dist_binary(6)) == z({1, 2, 1, 2, 4, 4, 5, 4, 5, 8, 5, 4, 5, 4, 4, 2, 1, 2, 1}));
  CHECK(dist_binary(6).lowest() == -9);
  CHECK(dist_binary(2).lowest() == -1);
}

TEST_CASE("paired factors agree with the direct product of (1 + x^(n-2k+1))") {
  for (int n = 1; n <= 30; ++n) {
    std::map<Score, mpz_class> direct{{0, 1}};
    for (int k = 1; k <= n; ++k) {
      std::map<Score, mpz_class> next;
      for (const auto& [t, c] : direct) {
        next[t] += c;
        next[t + n - 2 * k + 1] += c;
      }
      direct = std::move(next);
    }
    CHECK_MESSAGE(equals_histogram(dist_binary(n), direct), "n = " << n);
  }
}

TEST_CASE("binary distribution totals, symmetry, parity and extreme score for n <= 40") {
  for (int n = 1; n <= 40; ++n) {
    const auto d = dist_binary(n);
    CHECK(d.total() == power(2, static_cast<unsigned long>(n)));
    CHECK(d.highest() == n * n / 4);
    CHECK(d.lowest() == -(n * n / 4));
    bool symmetric = true, parity = true;
    for (Score t = d.lowest(); t <= d.highest(); ++t) {
      symmetric = symmetric && d.weight(t) == d.weight(-t);
      if (n % 2 == 1 && t % 2 != 0) parity = parity && d.weight(t) == 0;
    }
    CHECK(symmetric);
    CHECK(parity);
    // 1...1 0...0 attains the maximum; for odd n the middle digit is free.
    CHECK(d.weight(n * n / 4) == (n % 2 == 1 ? 2 : 1));
  }
}

TEST_CASE("biased binary distribution") {
  SUBCASE("n = 2 is a single factor") {
    const mpq_class p(3, 7), q = 1 - p;
    const auto d = dist_binary_pq<mpq_class>(2, p);
    CHECK(d.weight(-1) == p * q);
    CHECK(d.weight(1) == p * q);
    CHECK(d.weight(0) == p * p + q * q);
  }
  SUBCASE("n = 3 at p = 1/2") {
    const auto d = dist_binary_pq<mpq_class>(3, mpq_class(1, 2));
    CHECK(d.weight(-2) == mpq_class(1, 4));
    CHECK(d.weight(0) == mpq_class(1, 2));
    CHECK(d.weight(2) == mpq_class(1, 4));
  }
  SUBCASE("n = 5 at p = 3/10, frozen from weighted enumeration") {
    const auto d = dist_binary_pq<mpq_class>(5, mpq_class(3, 10));
    CHECK(d.weight(-6) == mpq_class(441, 10000));
    CHECK(d.weight(-4) == mpq_class(609, 5000));
    CHECK(d.weight(-2) == mpq_class(1659, 10000));
    CHECK(d.weight(0) == mpq_class(841, 2500));
    CHECK(d.weight(2) == mpq_class(1659, 10000));
    CHECK(d.weight(4) == mpq_class(609, 5000));
    CHECK(d.weight(6) == mpq_class(441, 10000));
    CHECK(d.weight(1) == 0);
  }
  SUBCASE("exact total and the p = 1/2 reduction") {
    for (int n = 1; n <= 25; ++n) {
      CHECK(dist_binary_pq<mpq_class>(n, mpq_class(2, 9)).total() == 1);
      CHECK(dist_binary_pq<mpq_class>(n, mpq_class(1, 2)) == to_probabilities(dist_binary(n)));
    }
  }
  SUBCASE("floating mode tracks the rational mode") {
    const auto exact = dist_binary_pq<mpq_class>(17, mpq_class(3, 10));
    const auto approx = dist_binary_pq<double>(17, 0.3);
    CHECK(approx.total() == doctest::Approx(1.0).epsilon(1e-12));
    for (Score t = exact.lowest(); t <= exact.highest(); ++t) {
      CHECK(approx.weight(t) == doctest::Approx(exact.weight(t).get_d()).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(dist_binary_pq<mpq_class>(4, mpq_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(dist_binary_pq<mpq_class>(4, mpq_class(1)), std::invalid_argument);
  CHECK_THROWS_AS(dist_binary_pq<double>(4, 1.5), std::invalid_argument);
}

TEST_CASE("general alphabet distribution") {
  const auto d23 = dist_general(2, 3);
  CHECK(row(d23) == z({3, 3, 3}));
  CHECK(d23.lowest() == -1);
  CHECK(row(dist_general(3, 2)) == z({2, 0, 4, 0, 2}));
  // Frozen from enumerating all 27 and 81 sequences.
  CHECK(row(dist_general(3, 3)) == z({1, 6, 2, 9, 2, 6, 1}));
  CHECK(row(dist_general(4, 3)) == z({3, 3, 12, 3, 15, 9, 15, 3, 12, 3, 3}));
  CHECK(dist_general(4, 3).lowest() == -5);

  for (int n = 1; n <= 20; ++n) CHECK(dist_general(n, 2) == dist_binary(n));
  for (int l = 3; l <= 5; ++l) {
    for (int n = 1; n <= 6; ++n) {
      CHECK(equals_histogram(dist_general(n, l), enumerate(n, l)));
    }
  }
}

TEST_CASE("general engine past 64-bit counts") {
  // 3^45 does not fit in a machine word.
  const auto d = dist_general(45, 3);
  CHECK(d.total() == power(3, 45));
  for (Score t = 0; t <= d.highest(); ++t) REQUIRE(d.weight(t) == d.weight(-t));
  CHECK(moment_from_dist(d, 2) == var_closed(45, 3));
  CHECK(moment_from_dist(d, 4) == mu4_closed(45, 3));
}

TEST_CASE("resource cap") {
  CHECK(estimated_states(10, 2) == doctest::Approx(1100.0));
  CHECK(estimated_states(4, 3) == doctest::Approx(15.0 * 16));
  CHECK_THROWS_AS(dist_general(200, 10), ResourceLimitExceeded);
  CHECK_THROWS_AS(dist_binary(60, ExactConfig{1000}), ResourceLimitExceeded);
  CHECK_NOTHROW(dist_general(30, 2, ExactConfig{1e9}));
  CHECK_THROWS_AS(dist_general(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(dist_general(3, 1), std::invalid_argument);
}

TEST_CASE("per-profile counts") {
  const auto six = dist_by_counts(6, 2);
  CHECK(six.at(CountVector({3, 3})).weight(1) == 3);
  CHECK(six.at(CountVector({2, 4})).weight(4) == 2);
  const auto nine = dist_by_counts(9, 3);
  const auto& d = nine.at(CountVector({3, 3, 3}));
  CHECK(d.weight(27) == 1);
  for (Score t = 28; t <= 40; ++t) CHECK(d.weight(t) == 0);
  CHECK(d.total() == 1680);
}

TEST_CASE("per-profile totals are multinomials and marginalize to the general distribution") {
  for (int l = 2; l <= 4; ++l) {
    for (int n = 1; n <= 7; ++n) {
      const auto tables = dist_by_counts(n, l);
      mpz_class sum = 0;
      for (const auto& [cv, d] : tables) {
        mpz_class multinomial;
        mpz_fac_ui(multinomial.get_mpz_t(), static_cast<unsigned long>(n));
        for (auto c : cv.counts()) {
          mpz_class f;
          mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c));
          multinomial /= f;
        }
        CHECK(d.total() == multinomial);
        sum += d.total();
      }
      CHECK(sum == power(l, static_cast<unsigned long>(n)));
      CHECK(marginalize(tables) == dist_general(n, l));
    }
  }
}

TEST_CASE("two-step binary identity") {
  for (int n = 2; n <= 10; ++n) CHECK_MESSAGE(verify_two_step_identity(n), "n = " << n);
  CHECK_FALSE(verify_two_step_identity_as_printed(2));
  CHECK_FALSE(verify_two_step_identity_as_printed(5));
  CHECK_THROWS_AS(verify_two_step_identity(1), std::invalid_argument);
}
