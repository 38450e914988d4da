#include "seqtau/core.hpp"

#include <algorithm>
#include <string>

namespace seqtau {

DigitSequence::DigitSequence(std::vector<Digit> digits, int alphabet)
    : digits_(std::move(digits)), alphabet_(alphabet) {
  if (alphabet_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (digits_.empty()) throw std::invalid_argument("sequence must contain at least one digit");
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= static_cast<Digit>(alphabet_)) {
      throw std::invalid_argument("digit " + std::to_string(digits_[i]) + " at position " +
                                  std::to_string(i) + " is outside alphabet of size " +
                                  std::to_string(alphabet_));
    }
  }
}

DigitSequence DigitSequence::reversed() const {
  return DigitSequence({digits_.rbegin(), digits_.rend()}, alphabet_);
}

DigitSequence DigitSequence::complemented() const {
  std::vector<Digit> out(digits_.size());
  const auto top = static_cast<Digit>(alphabet_ - 1);
  std::transform(digits_.begin(), digits_.end(), out.begin(), [top](Digit d) { return top - d; });
  return DigitSequence(std::move(out), alphabet_);
}

CountVector::CountVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  for (auto c : counts_) {
    if (c < 0) throw std::invalid_argument("counts must be nonnegative");
    n_ += c;
  }
}

std::int64_t CountVector::mixed_pairs() const noexcept {
  std::int64_t squares = 0;
  for (auto c : counts_) squares += c * c;
  return (n_ * n_ - squares) / 2;
}

ScoreTriple score(std::span<const Digit> digits) {
  ScoreTriple r;
  const std::size_t n = digits.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (digits[j] > digits[k]) {
        ++r.s_plus;
      } else if (digits[j] < digits[k]) {
        ++r.s_minus;
      }
    }
  }
  r.s = r.s_plus - r.s_minus;
  return r;
}

ScoreTriple score(const DigitSequence& seq) { return score(seq.digits()); }

namespace {

// Counts strict inversions (earlier element strictly greater) while sorting.
std::int64_t merge_count(std::vector<Digit>& a, std::vector<Digit>& buf, std::size_t lo,
                         std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, o = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      inv += static_cast<std::int64_t>(mid - i);
      buf[o++] = a[j++];
    } else {
      buf[o++] = a[i++];
    }
  }
  while (i < mid) buf[o++] = a[i++];
  while (j < hi) buf[o++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace

ScoreTriple score_fast(const DigitSequence& seq) {
  std::vector<Digit> work(seq.digits().begin(), seq.digits().end());
  std::vector<Digit> buf(work.size());
  ScoreTriple r;
  r.s_plus = merge_count(work, buf, 0, work.size());
  r.s_minus = counts_of(seq).mixed_pairs() - r.s_plus;
  r.s = r.s_plus - r.s_minus;
  return r;
}

Score score_binary_fast(const DigitSequence& seq) {
  if (seq.alphabet() != 2) throw std::invalid_argument("score_binary_fast requires a binary alphabet");
  const auto n = static_cast<Score>(seq.size());
  Score s = 0;
  Score k = 1;
  for (Digit d : seq.digits()) {
    if (d != 0) s += n - 2 * k + 1;
    ++k;
  }
  return s;
}

Score score_from_splus(Score s_plus, const CountVector& cv) {
  const std::int64_t mixed = cv.mixed_pairs();
  if (s_plus < 0 || s_plus > mixed) {
    throw std::out_of_range("S+ = " + std::to_string(s_plus) + " outside [0, " + std::to_string(mixed) +
                            "] for this tie profile");
  }
  return 2 * s_plus - mixed;
}

CountVector counts_of(const DigitSequence& seq) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(seq.alphabet()), 0);
  for (Digit d : seq.digits()) ++counts[d];
  return CountVector(std::move(counts));
}

}  // namespace seqtau
