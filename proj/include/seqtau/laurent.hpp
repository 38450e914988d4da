// Dense Laurent polynomials with offset-indexed integer exponents.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqtau {

/// sum_k coeffs[k] x^(lowest + k). Scalar is any ring type (mpz_class,
/// mpq_class, double, std::uint64_t).
template <class Scalar>
class Laurent {
 public:
  Laurent() : lowest_(0), coeffs_{Scalar(0)} {}
  Laurent(std::int64_t lowest, std::vector<Scalar> coeffs) : lowest_(lowest), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
  }

  static Laurent constant(Scalar c) { return Laurent(0, {std::move(c)}); }
  static Laurent monomial(Scalar c, std::int64_t exponent) { return Laurent(exponent, {std::move(c)}); }

  [[nodiscard]] std::int64_t lowest() const noexcept { return lowest_; }
  [[nodiscard]] std::int64_t highest() const noexcept {
    return lowest_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  [[nodiscard]] std::span<const Scalar> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::vector<Scalar> release() && { return std::move(coeffs_); }

  [[nodiscard]] Scalar operator[](std::int64_t exponent) const {
    if (exponent < lowest_ || exponent > highest()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
  }

  Laurent& operator+=(const Laurent& other) {
    const std::int64_t lo = std::min(lowest_, other.lowest_);
    const std::int64_t hi = std::max(highest(), other.highest());
    if (lo != lowest_ || hi != highest()) {
      std::vector<Scalar> grown(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
      for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        grown[static_cast<std::size_t>(lowest_ - lo) + k] = std::move(coeffs_[k]);
      }
      coeffs_ = std::move(grown);
      lowest_ = lo;
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
      coeffs_[static_cast<std::size_t>(other.lowest_ - lowest_) + k] += other.coeffs_[k];
    }
    return *this;
  }

  /// Schoolbook convolution over the nonzero entries of both operands, so
  /// multiplying by a sparse factor such as x^-a + 2 + x^a is linear in the
  /// dense operand.
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    const auto nz_b = b.nonzero_positions();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j : nz_b) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Laurent(a.lowest_ + b.lowest_, std::move(out));
  }

  Laurent& operator*=(const Laurent& other) { return *this = *this * other; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    const std::int64_t lo = std::min(a.lowest_, b.lowest_);
    const std::int64_t hi = std::max(a.highest(), b.highest());
    for (std::int64_t e = lo; e <= hi; ++e) {
      if (a[e] != b[e]) return false;
    }
    return true;
  }

  /// Drops zero coefficients at both ends (keeps at least one entry).
  Laurent& trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c != 0; });
    if (first == coeffs_.end()) {
      *this = Laurent();
      return *this;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Scalar& c) { return c != 0; }).base();
    lowest_ += first - coeffs_.begin();
    coeffs_ = std::vector<Scalar>(std::make_move_iterator(first), std::make_move_iterator(last));
    return *this;
  }

 private:
  [[nodiscard]] std::vector<std::size_t> nonzero_positions() const {
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] != 0) nz.push_back(j);
    }
    return nz;
  }

  std::int64_t lowest_;
  std::vector<Scalar> coeffs_;
};

template <class Scalar>
Laurent<Scalar> product(std::span<const Laurent<Scalar>> factors) {
  Laurent<Scalar> acc = Laurent<Scalar>::constant(Scalar(1));
  for (const auto& f : factors) acc *= f;
  return acc;
}

}  // namespace seqtau
