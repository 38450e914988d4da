// Command implementations behind the seqtau executable. Each command writes
// to the given streams and returns the process exit code.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqtau/approx.hpp"
#include "seqtau/core.hpp"

namespace seqtau::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::string token)
      : std::runtime_error(what), offset_(offset), token_(std::move(token)) {}
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
  [[nodiscard]] const std::string& token() const noexcept { return token_; }

 private:
  std::size_t offset_;
  std::string token_;
};

/// Whitespace- or comma-separated decimal digit tokens.
std::vector<Digit> parse_digits(std::string_view text, int alphabet);

/// Raw bytes reduced modulo the alphabet size.
std::vector<Digit> digits_from_bytes(std::string_view bytes, int alphabet);

/// "3/10", "0.3" or "1" style exact rational.
mpq_class parse_rational(std::string_view text);

struct TestReport {
  int n = 0;
  int alphabet = 2;
  std::optional<std::string> p;
  Score s = 0;
  Score s_plus = 0;
  Score s_minus = 0;
  std::string method;
  std::string tail;
  double p_value = 1.0;
  std::optional<std::string> p_value_exact;
  double z_score = 0.0;
  double kurtosis_ratio = 0.0;
  std::vector<std::string> warnings;
  std::string engine;
};

std::string to_json(const TestReport& report);
std::string to_text(const TestReport& report);

struct ScoreOptions {
  int alphabet = 2;
  std::optional<std::string> p;
  std::string method = "auto";
  std::string tail = "two-sided";
  bool json = false;
  bool bytes = false;
  bool continuity = true;
  double cap = 1e8;
};

/// Throws ResourceLimitExceeded when exact mode is forced past the cap.
TestReport analyze(const DigitSequence& seq, const ScoreOptions& options);

int cmd_score(std::string_view input, const ScoreOptions& options, std::ostream& out, std::ostream& err);

struct TableOptions {
  int n = 1;
  int alphabet = 2;
  std::optional<std::string> p;
  bool by_counts = false;
  bool row = false;
  bool json = false;
  double cap = 1e8;
};

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);

struct MonteCarloOptions {
  int n = 1;
  int alphabet = 2;
  std::optional<std::string> p;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  bool json = false;
  double cap = 1e8;
};

int cmd_montecarlo(const MonteCarloOptions& options, std::ostream& out, std::ostream& err);

int cmd_errata(std::ostream& out);

int cmd_oracle(int n, int alphabet, bool by_counts, std::ostream& out, std::ostream& err);

/// Full argument parsing and dispatch; `in` supplies the score input when no
/// file is named.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace seqtau::cli
