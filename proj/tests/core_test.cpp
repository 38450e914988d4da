#include <doctest.h>

#include <algorithm>

#include "seqtau/core.hpp"
#include "test_support.hpp"

using namespace seqtau;

TEST_CASE("score reproduces the worked ternary example") {
  const DigitSequence seq({0, 1, 1, 2, 0, 2, 1}, 3);
  CHECK(score(seq) == ScoreTriple{5, 11, -6});
  CHECK(score_fast(seq) == ScoreTriple{5, 11, -6});
}

TEST_CASE("score of small binary sequences") {
  CHECK(score(DigitSequence({1, 0, 0}, 2)) == ScoreTriple{2, 0, 2});
  CHECK(score(DigitSequence({0, 0, 1}, 2)) == ScoreTriple{0, 2, -2});
  CHECK(score(DigitSequence({1}, 2)) == ScoreTriple{0, 0, 0});
}

TEST_CASE("constant sequences score zero") {
  for (int n : {1, 2, 7, 40}) {
    for (int l : {2, 3, 9}) {
      const DigitSequence seq(std::vector<Digit>(static_cast<std::size_t>(n), static_cast<Digit>(l - 1)), l);
      CHECK(score(seq) == ScoreTriple{});
      CHECK(score_fast(seq) == ScoreTriple{});
    }
  }
}

TEST_CASE("DigitSequence rejects invalid input") {
  CHECK_THROWS_AS(DigitSequence({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(DigitSequence({0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(DigitSequence({0}, 1), std::invalid_argument);
}

TEST_CASE("score_binary_fast examples and alphabet check") {
  CHECK(score_binary_fast(DigitSequence({1, 0, 0}, 2)) == 2);
  CHECK(score_binary_fast(DigitSequence({0, 0, 1}, 2)) == -2);
  CHECK(score_binary_fast(DigitSequence(std::vector<Digit>(11, 0), 2)) == 0);
  CHECK_THROWS_AS(score_binary_fast(DigitSequence({0, 1, 2}, 3)), std::invalid_argument);
}

TEST_CASE("score_binary_fast agrees with the pair scan on every binary sequence up to n = 12") {
  for (int n = 1; n <= 12; ++n) {
    bool all = true;
    testing::for_each_sequence(n, 2, [&](std::span<const Digit> d) {
      const DigitSequence seq({d.begin(), d.end()}, 2);
      all = all && score_binary_fast(seq) == score(d).s;
    });
    CHECK_MESSAGE(all, "n = " << n);
  }
}

TEST_CASE("score_from_splus") {
  CHECK(score_from_splus(2, CountVector({2, 1})) == 2);
  CHECK(score_from_splus(0, CountVector({6, 0, 0})) == 0);
  CHECK_THROWS_AS(score_from_splus(3, CountVector({2, 1})), std::out_of_range);
  CHECK_THROWS_AS(score_from_splus(-1, CountVector({2, 1})), std::out_of_range);

  SUBCASE("every arrangement of the profile (3,3,3)") {
    const CountVector cv({3, 3, 3});
    std::vector<Digit> d{0, 0, 0, 1, 1, 1, 2, 2, 2};
    int seen = 0;
    bool all = true;
    do {
      const ScoreTriple st = score(d);
      all = all && score_from_splus(st.s_plus, cv) == st.s;
      ++seen;
    } while (std::next_permutation(d.begin(), d.end()));
    CHECK(seen == 1680);
    CHECK(all);
    // 2 2 2 1 1 1 0 0 0 has all 27 mixed pairs descending.
    CHECK(score_from_splus(27, cv) == 27);
  }
}

TEST_CASE("score_from_splus matches score exhaustively for n <= 8, l <= 4") {
  for (int l = 2; l <= 4; ++l) {
    for (int n = 1; n <= 8; ++n) {
      bool all = true;
      testing::for_each_sequence(n, l, [&](std::span<const Digit> d) {
        const DigitSequence seq({d.begin(), d.end()}, l);
        const ScoreTriple st = score(seq);
        all = all && score_from_splus(st.s_plus, counts_of(seq)) == st.s;
      });
      CHECK_MESSAGE(all, "n = " << n << ", l = " << l);
    }
  }
}

TEST_CASE("counts_of") {
  CHECK(counts_of(DigitSequence({0, 1, 1, 2, 0, 2, 1}, 3)) == CountVector({2, 3, 2}));
  CHECK(counts_of(DigitSequence({0, 0, 0, 0, 0}, 2)) == CountVector({5, 0}));
  CHECK(counts_of(DigitSequence({0, 0, 0}, 2)) == CountVector({3, 0}));
  CHECK(CountVector({2, 3, 2}).n() == 7);
  CHECK(CountVector({2, 3, 2}).mixed_pairs() == 16);
}

TEST_CASE("reversal, complement and parity properties on random sequences") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> len(1, 60), alpha(2, 8);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = len(rng);
    const int l = alpha(rng);
    const DigitSequence seq = testing::random_sequence(rng, n, l);
    const ScoreTriple st = score(seq);
    REQUIRE(st.s == st.s_plus - st.s_minus);
    CHECK(score(seq.reversed()).s == -st.s);
    CHECK(score(seq.complemented()).s == -st.s);
    const std::int64_t mixed = counts_of(seq).mixed_pairs();
    CHECK(st.s_plus + st.s_minus == mixed);
    CHECK(std::abs(st.s) <= static_cast<std::int64_t>(n) * (n - 1) / 2);
    CHECK(((st.s - mixed) % 2 + 2) % 2 == 0);
  }
}

TEST_CASE("merge-count scorer agrees with the pair scan") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 700), alpha(2, 300);
  for (int trial = 0; trial < 300; ++trial) {
    const DigitSequence seq = testing::random_sequence(rng, len(rng), alpha(rng));
    CHECK(score_fast(seq) == score(seq));
  }
}
