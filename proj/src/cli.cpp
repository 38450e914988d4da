#include "seqtau/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "seqtau/exact.hpp"
#include "seqtau/montecarlo.hpp"
#include "seqtau/oracle.hpp"

namespace seqtau::cli {

using Json = nlohmann::ordered_json;

std::vector<Digit> parse_digits(std::string_view text, int alphabet) {
  std::vector<Digit> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    const std::string token(text.substr(start, i - start));
    const bool numeric = token.size() <= 9 && std::all_of(token.begin(), token.end(), [](char c) {
                           return std::isdigit(static_cast<unsigned char>(c)) != 0;
                         });
    if (!numeric) {
      throw ParseError("byte offset " + std::to_string(start) + ": invalid token '" + token + "'", start, token);
    }
    const auto value = static_cast<Digit>(std::stoul(token));
    if (value >= static_cast<Digit>(alphabet)) {
      throw ParseError("byte offset " + std::to_string(start) + ": digit '" + token + "' is not below alphabet size " +
                           std::to_string(alphabet),
                       start, token);
    }
    out.push_back(value);
  }
  if (out.empty()) throw ParseError("input contains no digits", text.size(), "");
  return out;
}

std::vector<Digit> digits_from_bytes(std::string_view bytes, int alphabet) {
  if (bytes.empty()) throw ParseError("input contains no bytes", 0, "");
  std::vector<Digit> out;
  out.reserve(bytes.size());
  for (char c : bytes) out.push_back(static_cast<Digit>(static_cast<unsigned char>(c)) % static_cast<Digit>(alphabet));
  return out;
}

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  auto digits_only = [](std::string_view v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den) || mpz_class(den) == 0) {
      throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    mpq_class r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
  }
  const auto dot = s.find('.');
  const std::string whole = s.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !digits_only(whole)) ||
      (!frac.empty() && !digits_only(frac)) || (dot != std::string::npos && frac.empty() && whole.empty())) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  mpz_class den = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
  mpq_class r{mpz_class(whole.empty() ? "0" : whole) * den + mpz_class(frac.empty() ? "0" : frac), den};
  r.canonicalize();
  return r;
}

namespace {

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

ApproxKind parse_method(const std::string& m) {
  if (m == "exact") return ApproxKind::exact;
  if (m == "normal") return ApproxKind::normal;
  if (m == "edgeworth") return ApproxKind::edgeworth;
  throw std::invalid_argument("unknown method '" + m + "'");
}

Tail parse_tail(const std::string& t) {
  if (t == "two-sided") return Tail::two_sided;
  if (t == "left") return Tail::left;
  if (t == "right") return Tail::right;
  throw std::invalid_argument("unknown tail '" + t + "'");
}

NullModel make_model(int n, int alphabet, const std::optional<std::string>& p) {
  NullModel model{n, alphabet, std::nullopt};
  if (p) {
    if (alphabet != 2) throw std::invalid_argument("--p applies only to binary sequences (--alphabet 2)");
    model.p = parse_rational(*p);
  }
  model.validate();
  return model;
}

}  // namespace

TestReport analyze(const DigitSequence& seq, const ScoreOptions& options) {
  const NullModel model = make_model(static_cast<int>(seq.size()), seq.alphabet(), options.p);
  const ScoreTriple triple = score_fast(seq);

  ApproxKind method;
  if (options.method == "auto") {
    method = estimated_states(model.n, model.alphabet) <= options.cap ? ApproxKind::exact : ApproxKind::edgeworth;
  } else {
    method = parse_method(options.method);
  }
  PValueOptions pv_options;
  pv_options.continuity = options.continuity;
  pv_options.exact.state_cap = options.cap;
  const PValueResult pv = p_value(triple.s, model, method, parse_tail(options.tail), pv_options);

  TestReport r;
  r.n = model.n;
  r.alphabet = model.alphabet;
  if (model.p) r.p = model.p->get_str();
  r.s = triple.s;
  r.s_plus = triple.s_plus;
  r.s_minus = triple.s_minus;
  r.method = to_string(pv.method);
  r.tail = options.tail;
  r.p_value = pv.p_value;
  if (pv.exact_p_value) r.p_value_exact = pv.exact_p_value->get_str();
  r.z_score = pv.z_score;
  r.kurtosis_ratio = pv.kurtosis_ratio;
  r.warnings = pv.warnings;
  r.engine = pv.engine;
  return r;
}

std::string to_json(const TestReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.n;
  j["alphabet"] = r.alphabet;
  j["p"] = r.p ? Json(*r.p) : Json(nullptr);
  j["s"] = r.s;
  j["s_plus"] = r.s_plus;
  j["s_minus"] = r.s_minus;
  j["method"] = r.method;
  j["tail"] = r.tail;
  j["p_value"] = r.p_value;
  j["p_value_exact"] = r.p_value_exact ? Json(*r.p_value_exact) : Json(nullptr);
  j["z_score"] = r.z_score;
  j["kurtosis_ratio"] = std::isnan(r.kurtosis_ratio) ? Json(nullptr) : Json(r.kurtosis_ratio);
  j["warnings"] = r.warnings;
  j["engine"] = r.engine;
  return j.dump(2) + "\n";
}

std::string to_text(const TestReport& r) {
  std::ostringstream s;
  s << "n: " << r.n << "\n";
  s << "alphabet: " << r.alphabet << "\n";
  if (r.p) s << "p: " << *r.p << "\n";
  s << "S: " << r.s << " (S+ = " << r.s_plus << ", S- = " << r.s_minus << ")\n";
  s << "method: " << r.method << " (engine: " << r.engine << ")\n";
  s << "tail: " << r.tail << "\n";
  s << "p-value: ";
  if (r.p_value_exact) s << *r.p_value_exact << " (" << format_double(r.p_value) << ")\n";
  else s << format_double(r.p_value) << "\n";
  s << "z-score: " << format_double(r.z_score) << "\n";
  s << "kurtosis ratio: " << format_double(r.kurtosis_ratio) << "\n";
  for (const auto& w : r.warnings) s << "warning: " << w << "\n";
  return s.str();
}

int cmd_score(std::string_view input, const ScoreOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
    auto digits = options.bytes ? digits_from_bytes(input, options.alphabet) : parse_digits(input, options.alphabet);
    const TestReport report = analyze(DigitSequence(std::move(digits), options.alphabet), options);
    out << (options.json ? to_json(report) : to_text(report));
    return kExitOk;
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

namespace {

template <class W>
Json rows_json(const ScoreDistribution<W>& d) {
  Json rows = Json::array();
  for (Score t = d.lowest(); t <= d.highest(); ++t) {
    const W w = d.weight(t);
    if (w == 0) continue;
    if constexpr (std::is_same_v<W, mpq_class>) {
      rows.push_back({{"t", t}, {"weight", w.get_str()}, {"probability", w.get_d()}});
    } else {
      rows.push_back({{"t", t}, {"weight", w.get_str()}});
    }
  }
  return rows;
}

template <class W>
void write_rows(const ScoreDistribution<W>& d, bool row, std::ostream& out) {
  if (row) {
    for (Score t = d.lowest(); t <= d.highest(); ++t) out << (t == d.lowest() ? "" : " ") << d.weight(t).get_str();
    out << "\n";
    return;
  }
  for (Score t = d.lowest(); t <= d.highest(); ++t) {
    const W w = d.weight(t);
    out << t << "\t" << w.get_str();
    if constexpr (std::is_same_v<W, mpq_class>) out << "\t" << format_double(w.get_d());
    out << "\n";
  }
}

std::string counts_label(const CountVector& cv) {
  std::string s;
  for (std::size_t d = 0; d < cv.alphabet(); ++d) s += (d ? "," : "") + std::to_string(cv[d]);
  return s;
}

int write_count_table(const CountDistribution& d, const std::string& engine, const TableOptions& o, std::ostream& out) {
  if (o.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = d.n();
    j["alphabet"] = d.alphabet();
    j["p"] = nullptr;
    j["engine"] = engine;
    j["total"] = d.total().get_str();
    j["rows"] = rows_json(d);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (!o.row) out << "# n=" << d.n() << " alphabet=" << d.alphabet() << " total=" << d.total().get_str()
                  << " engine=" << engine << "\n# t\tcount\n";
  write_rows(d, o.row, out);
  return kExitOk;
}

int write_by_counts(const CountIndexedDistribution& tables, const std::string& engine, const TableOptions& o,
                    std::ostream& out) {
  if (o.json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = o.n;
    j["alphabet"] = o.alphabet;
    j["engine"] = engine;
    Json list = Json::array();
    for (const auto& [cv, d] : tables) {
      list.push_back({{"counts", std::vector<std::int64_t>(cv.counts().begin(), cv.counts().end())},
                      {"total", d.total().get_str()},
                      {"rows", rows_json(d)}});
    }
    j["tables"] = std::move(list);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (!o.row) out << "# n=" << o.n << " alphabet=" << o.alphabet << " engine=" << engine << " by-counts\n";
  for (const auto& [cv, d] : tables) {
    out << "# counts " << counts_label(cv) << " total=" << d.total().get_str() << "\n";
    write_rows(d, o.row, out);
  }
  return kExitOk;
}

}  // namespace

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const NullModel model = make_model(o.n, o.alphabet, o.p);
    const ExactConfig config{o.cap};
    if (model.p) {
      if (o.by_counts) throw std::invalid_argument("--by-counts is not available with --p");
      const auto d = dist_binary_pq<mpq_class>(model.n, *model.p, config);
      if (o.json) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["n"] = d.n();
        j["alphabet"] = 2;
        j["p"] = model.p->get_str();
        j["engine"] = "pgf";
        j["total"] = d.total().get_str();
        j["rows"] = rows_json(d);
        out << j.dump(2) << "\n";
      } else {
        if (!o.row) out << "# n=" << d.n() << " alphabet=2 p=" << model.p->get_str() << " engine=pgf\n"
                        << "# t\tprobability\tdecimal\n";
        write_rows(d, o.row, out);
      }
      return kExitOk;
    }
    if (o.by_counts) return write_by_counts(dist_by_counts(o.n, o.alphabet, config), "recursion", o, out);
    if (o.alphabet == 2) return write_count_table(dist_binary(o.n, config), "pgf", o, out);
    return write_count_table(dist_general(o.n, o.alphabet, config), "recursion", o, out);
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_montecarlo(const MonteCarloOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const NullModel model = make_model(o.n, o.alphabet, o.p);
    const MonteCarloResult r = run_montecarlo(model, o.samples, o.seed, ExactConfig{o.cap});
    const double closed_mu2 = r.closed.mu2.get_d();
    const double closed_mu4 = r.closed.mu4.get_d();
    if (o.json) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = model.n;
      j["alphabet"] = model.alphabet;
      j["p"] = model.p ? Json(model.p->get_str()) : Json(nullptr);
      j["samples"] = r.samples;
      j["seed"] = r.seed;
      j["mean"] = r.mean;
      j["mu2"] = {{"empirical", r.mu2}, {"closed_form", closed_mu2}};
      j["mu4"] = {{"empirical", r.mu4}, {"closed_form", closed_mu4}};
      j["kurtosis"] = {{"empirical", std::isnan(r.kurtosis) ? Json(nullptr) : Json(r.kurtosis)},
                       {"closed_form", std::isnan(r.closed_kurtosis) ? Json(nullptr) : Json(r.closed_kurtosis)}};
      j["max_cdf_gap"] = r.max_cdf_gap;
      j["reference"] = r.reference;
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    out << "# montecarlo n=" << model.n << " alphabet=" << model.alphabet;
    if (model.p) out << " p=" << model.p->get_str();
    out << " samples=" << r.samples << " seed=" << r.seed << "\n";
    out << "mean: " << format_double(r.mean) << "\n";
    out << "mu2: empirical " << format_double(r.mu2) << " closed-form " << format_double(closed_mu2) << "\n";
    out << "mu4: empirical " << format_double(r.mu4) << " closed-form " << format_double(closed_mu4) << "\n";
    out << "kurtosis: empirical " << format_double(r.kurtosis) << " closed-form " << format_double(r.closed_kurtosis)
        << "\n";
    out << "max cdf gap: " << format_double(r.max_cdf_gap) << " (reference: " << r.reference << ")\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_errata(std::ostream& out) {
  out << "Known inconsistencies in the source derivation and their resolutions\n"
         "\n"
         "1. Sign convention. The verbal definition counts x_i > x_j with i > j (later element\n"
         "   greater) in S+, which gives S = +6 for 0 1 1 2 0 2 1, while the worked example\n"
         "   states S = 5 - 11 = -6 and the binary weights (n-2k+1) j_k agree with the example.\n"
         "   Resolution: earlier-greater counts positive, S+ = #{j<k : x_j > x_k}.\n"
         "\n"
         "2. Eq. (18), the variance recurrence, prints the increment\n"
         "   n(l-1)/l + n(n-3)/3 (l^2-1)/l^2, which contradicts the closed-form variance\n"
         "   (at n=2, l=2 it gives 1/2 instead of 3/2). Resolution: the increment\n"
         "   n(l-1)/l + n(n-1)/3 (l^2-1)/l^2 is used; it is an exact identity with the closed form.\n"
         "\n"
         "3. The variance derivation introduces the digits 0,1,2,...,l, i.e. l+1 letters.\n"
         "   Resolution: the alphabet is 0..l-1 throughout.\n"
         "\n"
         "4. Eq. (15), the two-step binary rule, prints its second term as\n"
         "   P_{n-1}(t+i0-1; i0-1, i1-1). Applying the one-step rule twice gives\n"
         "   P_{n-1}(t+i0-i1-1; i0-1, i1-1); the printed form already fails at n=2.\n"
         "   Resolution: the derived form is checked.\n"
         "\n"
         "5. Eq. (6) prints the limiting moment ratio as 1*2*5*...*(2k-1). The normal value is\n"
         "   the double factorial 1*3*5*...*(2k-1) (3 at k=2, matching the kurtosis limit).\n"
         "   Resolution: tests use (2k-1)!!.\n";
  return kExitOk;
}

int cmd_oracle(int n, int alphabet, bool by_counts, std::ostream& out, std::ostream& err) {
  try {
    TableOptions o;
    o.n = n;
    o.alphabet = alphabet;
    if (by_counts) return write_by_counts(oracle::brute_dist_by_counts(n, alphabet), "enumeration", o, out);
    return write_count_table(oracle::brute_dist(n, alphabet), "enumeration", o, out);
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and approximate significance tests for the ties-allowing score S over digit sequences",
               "seqtau"};
  app.require_subcommand(1);

  ScoreOptions score_opts;
  std::string input_path;
  auto* score = app.add_subcommand("score", "Score a digit stream and report its significance");
  score->add_option("input", input_path, "Input file (default: standard input)");
  score->add_option("--alphabet", score_opts.alphabet, "Alphabet size l")->check(CLI::Range(2, 1 << 20));
  score->add_option("--p", score_opts.p, "Probability of digit 0 for a biased binary null (e.g. 3/10 or 0.3)");
  score->add_option("--method", score_opts.method, "exact | normal | edgeworth | auto")
      ->check(CLI::IsMember({"exact", "normal", "edgeworth", "auto"}));
  score->add_option("--tail", score_opts.tail, "two-sided | left | right")
      ->check(CLI::IsMember({"two-sided", "left", "right"}));
  score->add_flag("--json", score_opts.json, "Structured output");
  score->add_flag("--bytes", score_opts.bytes, "Read raw bytes and reduce each modulo the alphabet size");
  score->add_flag("!--no-continuity", score_opts.continuity, "Disable the continuity correction");
  score->add_option("--cap", score_opts.cap, "State cap for exact computation");

  TableOptions table_opts;
  auto* table = app.add_subcommand("table", "Print the exact distribution of S");
  table->add_option("-n,--length", table_opts.n, "Sequence length")->required()->check(CLI::PositiveNumber);
  table->add_option("--alphabet", table_opts.alphabet, "Alphabet size l")->check(CLI::Range(2, 1 << 20));
  table->add_option("--p", table_opts.p, "Probability of digit 0 for a biased binary model");
  table->add_flag("--by-counts", table_opts.by_counts, "One table per tie profile");
  table->add_flag("--row", table_opts.row, "Weights on a single line, lowest score first");
  table->add_flag("--json", table_opts.json, "Structured output");
  table->add_option("--cap", table_opts.cap, "State cap for exact computation");

  MonteCarloOptions mc_opts;
  auto* mc = app.add_subcommand("montecarlo", "Sample sequences and compare with exact and closed-form moments");
  mc->add_option("-n,--length", mc_opts.n, "Sequence length")->required()->check(CLI::PositiveNumber);
  mc->add_option("--alphabet", mc_opts.alphabet, "Alphabet size l")->check(CLI::Range(2, 1 << 20));
  mc->add_option("--p", mc_opts.p, "Probability of digit 0 for a biased binary model");
  mc->add_option("--samples", mc_opts.samples, "Number of sampled sequences")->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_opts.seed, "Generator seed");
  mc->add_flag("--json", mc_opts.json, "Structured output");
  mc->add_option("--cap", mc_opts.cap, "State cap for the exact reference");

  auto* errata = app.add_subcommand("errata", "List known inconsistencies in the derivation and their resolutions");

  int oracle_n = 1;
  int oracle_alphabet = 2;
  bool oracle_by_counts = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle_cmd->group("");
  oracle_cmd->add_option("-n,--length", oracle_n)->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--alphabet", oracle_alphabet)->check(CLI::Range(2, 1 << 20));
  oracle_cmd->add_flag("--by-counts", oracle_by_counts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (score->parsed()) {
    std::string input;
    if (input_path.empty() || input_path == "-") {
      input.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(input_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << input_path << "'\n";
        return kExitUsage;
      }
      input.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return cmd_score(input, score_opts, out, err);
  }
  if (table->parsed()) return cmd_table(table_opts, out, err);
  if (mc->parsed()) return cmd_montecarlo(mc_opts, out, err);
  if (errata->parsed()) return cmd_errata(out);
  if (oracle_cmd->parsed()) return cmd_oracle(oracle_n, oracle_alphabet, oracle_by_counts, out, err);
  return kExitUsage;
}

}  // namespace seqtau::cli
