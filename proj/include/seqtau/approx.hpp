// Characteristic functions, normal and Edgeworth approximations, p-values.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "seqtau/distribution.hpp"
#include "seqtau/exact.hpp"
#include "seqtau/moments.hpp"

namespace seqtau {

/// Binary model whose characteristic function is evaluated in closed form.
struct CharMode {
  enum class Kind { binary_uniform, binary_pq };
  Kind kind = Kind::binary_uniform;
  double p = 0.5;

  static CharMode uniform() { return {}; }
  static CharMode biased(double p) { return {Kind::binary_pq, p}; }
};

/// E[exp(i theta S)] as a product of cosine factors. Real-valued for both
/// modes since both distributions are symmetric.
std::complex<double> char_eval(int n, double theta, const CharMode& mode);

/// P(S = t) by discrete Fourier inversion over 2N+1 equispaced angles,
/// N = n(n-1)/2.
FloatDistribution char_invert(int n, const CharMode& mode);

double normal_pdf(double x);
double normal_cdf(double x);

/// d^4/dx^4 of the normal CDF: (3x - x^3) pdf(x).
double normal_cdf_fourth_derivative(double x);

/// Phi(x) + (kurtosis - 3)/24 * Phi''''(x). May leave [0, 1] in the far tails.
double edgeworth_cdf(double x, double kurtosis_ratio);

enum class ApproxKind { exact, normal, edgeworth };
enum class Tail { two_sided, left, right };

std::string to_string(ApproxKind kind);
std::string to_string(Tail tail);

/// Null model for S: equiprobable over `alphabet` letters, or biased binary
/// with P(0) = *p (then alphabet must be 2).
struct NullModel {
  int n = 1;
  int alphabet = 2;
  std::optional<mpq_class> p;

  [[nodiscard]] bool is_binary() const { return alphabet == 2; }
  /// Spacing of the support: 2 for odd-length binary models, else 1.
  [[nodiscard]] int support_step() const { return is_binary() && n % 2 == 1 ? 2 : 1; }
  /// log10 of l^n.
  [[nodiscard]] double log10_sequences() const;
  void validate() const;
};

/// Exact probabilities under the model and the engine that produced them
/// ("pgf" for binary models, "recursion" otherwise).
std::pair<RationalDistribution, std::string> exact_null_distribution(const NullModel& model,
                                                                     const ExactConfig& config = {});

MomentSet model_moments(const NullModel& model);

struct PValueOptions {
  bool continuity = true;
  ExactConfig exact;
  /// Advisory threshold for l^n below which approximations draw a warning.
  double approximation_regime = 1e6;
};

struct PValueResult {
  double p_value = 1.0;
  std::optional<mpq_class> exact_p_value;
  ApproxKind method = ApproxKind::exact;
  std::string engine;
  double z_score = 0.0;
  double kurtosis_ratio = 0.0;
  std::vector<std::string> warnings;
};

/// Throws std::out_of_range when |s_obs| > n(n-1)/2, ResourceLimitExceeded
/// when exact mode exceeds the state cap.
PValueResult p_value(Score s_obs, const NullModel& model, ApproxKind kind, Tail tail,
                     const PValueOptions& options = {});

}  // namespace seqtau
