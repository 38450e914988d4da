// Sequence and score domain types, direct scoring of observed sequences.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace seqtau {

using Digit = std::uint32_t;
using Score = std::int64_t;

/// An observed sequence x_1..x_n over the ordered alphabet {0, ..., alphabet-1}.
class DigitSequence {
 public:
  /// Throws std::invalid_argument for alphabet < 2, an empty sequence, or a
  /// digit outside the alphabet.
  DigitSequence(std::vector<Digit> digits, int alphabet);

  [[nodiscard]] std::span<const Digit> digits() const noexcept { return digits_; }
  [[nodiscard]] int alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }

  [[nodiscard]] DigitSequence reversed() const;
  /// Value reflection d -> alphabet-1-d.
  [[nodiscard]] DigitSequence complemented() const;

 private:
  std::vector<Digit> digits_;
  int alphabet_;
};

/// (S+, S-, S). S+ counts pairs j<k with x_j > x_k (earlier greater),
/// S- counts pairs j<k with x_j < x_k.
struct ScoreTriple {
  Score s_plus = 0;
  Score s_minus = 0;
  Score s = 0;

  friend bool operator==(const ScoreTriple&, const ScoreTriple&) = default;
};

/// Tie profile (i_0, ..., i_{l-1}).
class CountVector {
 public:
  CountVector() = default;
  explicit CountVector(std::vector<std::int64_t> counts);

  [[nodiscard]] std::span<const std::int64_t> counts() const noexcept { return counts_; }
  [[nodiscard]] std::int64_t operator[](std::size_t d) const { return counts_.at(d); }
  [[nodiscard]] std::size_t alphabet() const noexcept { return counts_.size(); }
  [[nodiscard]] std::int64_t n() const noexcept { return n_; }
  /// Number of index pairs holding different digits, (n^2 - sum i_k^2) / 2.
  [[nodiscard]] std::int64_t mixed_pairs() const noexcept;

  friend bool operator==(const CountVector& a, const CountVector& b) { return a.counts_ == b.counts_; }
  friend auto operator<=>(const CountVector& a, const CountVector& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t n_ = 0;
};

/// Reference O(n^2) pair scan. Works on raw digits so the enumeration oracle
/// can call it without constructing a DigitSequence.
ScoreTriple score(std::span<const Digit> digits);
ScoreTriple score(const DigitSequence& seq);

/// O(n log n) merge-count path; agrees with score().
ScoreTriple score_fast(const DigitSequence& seq);

/// Binary-only weighted sum S = sum_k (n-2k+1) j_k. Throws for alphabet != 2.
Score score_binary_fast(const DigitSequence& seq);

/// S = 2 S+ - (n^2 - sum i_k^2)/2. Throws std::out_of_range when s_plus is
/// negative or exceeds the mixed-pair count.
Score score_from_splus(Score s_plus, const CountVector& cv);

CountVector counts_of(const DigitSequence& seq);

}  // namespace seqtau
