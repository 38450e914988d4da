#include "seqtau/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace seqtau {

std::complex<double> char_eval(int n, double theta, const CharMode& mode) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  const int pairs = n / 2;
  const bool odd = n % 2 == 1;
  double phi = 1.0;
  if (mode.kind == CharMode::Kind::binary_uniform) {
    for (int k = 1; k <= pairs; ++k) {
      const double c = odd ? std::cos(k * theta) : std::cos((2 * k - 1) * theta / 2);
      phi *= c * c;
    }
  } else {
    const double p = mode.p;
    const double q = 1.0 - p;
    const double same = p * p + q * q;
    if (odd) phi = p + q;
    for (int k = 1; k <= pairs; ++k) {
      const double w = odd ? 2.0 * k : 2.0 * k - 1;
      phi *= same + 2 * p * q * std::cos(w * theta);
    }
  }
  return {phi, 0.0};
}

FloatDistribution char_invert(int n, const CharMode& mode) {
  const Score reach = max_abs_score(n);
  const auto m = static_cast<std::size_t>(2 * reach + 1);
  std::vector<std::complex<double>> phi(m);
  std::vector<std::complex<double>> roots(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    phi[j] = char_eval(n, theta, mode);
    roots[j] = std::polar(1.0, -theta);
  }
  std::vector<double> w(m);
  const auto mm = static_cast<Score>(m);
  for (Score t = -reach; t <= reach; ++t) {
    const Score step = ((t % mm) + mm) % mm;
    std::complex<double> acc = 0;
    Score idx = 0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += phi[j] * roots[static_cast<std::size_t>(idx)];
      idx += step;
      if (idx >= mm) idx -= mm;
    }
    w[static_cast<std::size_t>(t + reach)] = acc.real() / static_cast<double>(m);
  }
  return FloatDistribution(n, 2, Laurent<double>(-reach, std::move(w)));
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_cdf_fourth_derivative(double x) { return (3 * x - x * x * x) * normal_pdf(x); }

double edgeworth_cdf(double x, double kurtosis_ratio) {
  return normal_cdf(x) + (kurtosis_ratio - 3.0) / 24.0 * normal_cdf_fourth_derivative(x);
}

std::string to_string(ApproxKind kind) {
  switch (kind) {
    case ApproxKind::exact: return "exact";
    case ApproxKind::normal: return "normal";
    case ApproxKind::edgeworth: return "edgeworth";
  }
  return "unknown";
}

std::string to_string(Tail tail) {
  switch (tail) {
    case Tail::two_sided: return "two-sided";
    case Tail::left: return "left";
    case Tail::right: return "right";
  }
  return "unknown";
}

double NullModel::log10_sequences() const { return n * std::log10(static_cast<double>(alphabet)); }

void NullModel::validate() const {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (p) {
    if (alphabet != 2) throw std::invalid_argument("a biased p applies only to binary sequences");
    if (!(*p > 0 && *p < 1)) throw std::invalid_argument("probability p must lie strictly between 0 and 1");
  }
}

std::pair<RationalDistribution, std::string> exact_null_distribution(const NullModel& model,
                                                                     const ExactConfig& config) {
  model.validate();
  if (model.p) return {dist_binary_pq<mpq_class>(model.n, *model.p, config), "pgf"};
  if (model.is_binary()) return {to_probabilities(dist_binary(model.n, config)), "pgf"};
  return {to_probabilities(dist_general(model.n, model.alphabet, config)), "recursion"};
}

MomentSet model_moments(const NullModel& model) {
  model.validate();
  if (model.p) return pq_moments(model.n, *model.p);
  if (model.is_binary()) return binary_moments(model.n);
  return general_moments(model.n, model.alphabet);
}

namespace {

mpq_class exact_tail(const RationalDistribution& d, Score s, Tail tail) {
  mpq_class acc = 0;
  for (Score t = d.lowest(); t <= d.highest(); ++t) {
    const bool hit = tail == Tail::right  ? t >= s
                     : tail == Tail::left ? t <= s
                                          : (t >= 0 ? t : -t) >= (s >= 0 ? s : -s);
    if (hit) acc += d.weight(t);
  }
  acc.canonicalize();
  return acc;
}

}  // namespace

PValueResult p_value(Score s_obs, const NullModel& model, ApproxKind kind, Tail tail, const PValueOptions& options) {
  model.validate();
  if (std::abs(s_obs) > max_abs_score(model.n)) {
    throw std::out_of_range("observed score " + std::to_string(s_obs) + " outside [-n(n-1)/2, n(n-1)/2]");
  }
  PValueResult r;
  r.method = kind;
  const MomentSet moments = model_moments(model);
  const double sigma = moments.sigma();
  r.z_score = sigma > 0 ? static_cast<double>(s_obs) / sigma : 0.0;
  r.kurtosis_ratio = moments.kurtosis();

  if (kind == ApproxKind::exact) {
    auto [dist, engine] = exact_null_distribution(model, options.exact);
    r.engine = engine;
    r.exact_p_value = exact_tail(dist, s_obs, tail);
    r.p_value = r.exact_p_value->get_d();
    return r;
  }

  r.engine = "approximation";
  if (model.log10_sequences() <= std::log10(options.approximation_regime)) {
    std::ostringstream w;
    w << "approximation regime: l^n = " << model.alphabet << "^" << model.n << " <= " << options.approximation_regime
      << "; exact method recommended";
    r.warnings.push_back(w.str());
  }
  if (sigma == 0) {
    // n == 1: S is identically zero.
    r.p_value = (tail == Tail::left && s_obs < 0) || (tail == Tail::right && s_obs > 0) ? 0.0 : 1.0;
    return r;
  }

  const double kurt = r.kurtosis_ratio;
  bool clamped = false;
  auto cdf = [&](double x) {
    const double v = kind == ApproxKind::normal ? normal_cdf(x) : edgeworth_cdf(x, kurt);
    if (v < 0.0 || v > 1.0) clamped = true;
    return std::clamp(v, 0.0, 1.0);
  };
  const double c = options.continuity ? 0.5 * model.support_step() : 0.0;
  const auto s = static_cast<double>(s_obs);
  double pv = 0.0;
  switch (tail) {
    case Tail::left: pv = cdf((s + c) / sigma); break;
    // 1 - F(x) = F(-x) for both approximations.
    case Tail::right: pv = cdf(-(s - c) / sigma); break;
    case Tail::two_sided:
      pv = s_obs == 0 ? 1.0 : 2.0 * cdf(-(std::abs(s) - c) / sigma);
      break;
  }
  r.p_value = std::clamp(pv, 0.0, 1.0);
  if (clamped) {
    r.warnings.push_back("edgeworth correction left [0,1] in the tail; clamped");
  }
  return r;
}

}  // namespace seqtau
