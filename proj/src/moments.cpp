#include "seqtau/moments.hpp"

#include <stdexcept>

namespace seqtau {

namespace {

void require_length(int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
}

void require_alphabet(int alphabet) {
  if (alphabet < 2) throw std::invalid_argument("alphabet size must be at least 2");
}
}  // namespace

double MomentSet::kurtosis() const {
  if (mu2 == 0) return std::nan("");
  return kurtosis_exact().get_d();
}

mpq_class MomentSet::kurtosis_exact() const {
  if (mu2 == 0) throw std::domain_error("kurtosis undefined for zero variance");
  mpq_class r = mu4 / (mu2 * mu2);
  r.canonicalize();
  return r;
}

mpq_class var_closed(int n, int alphabet) {
  require_length(n);
  require_alphabet(alphabet);
  const mpq_class N(n);
  const mpq_class l(alphabet);
  mpq_class r = (l - 1) / l * N * (N - 1) / 2 + (l * l - 1) / (l * l) * N * (N - 1) * (N - 2) / 9;
  r.canonicalize();
  return r;
}

mpq_class mu4_closed(int n, int alphabet) {
  require_length(n);
  require_alphabet(alphabet);
  const mpq_class N(n);
  const mpq_class l(alphabet);
  const mpq_class l2 = l * l;
  const mpq_class pairs = N * (N - 1);
  const mpq_class a = (l2 - 1) / l2;
  mpq_class r = a * a * (100 * N * N * N * N + 328 * N * N * N - 127 * N * N - 997 * N - 372) / 2700 * pairs +
                (l2 - 1) / (l2 * l2) * (252 * N * N * N + 507 * N * N - 3623 * N + 3652) / 900 * pairs -
                (l2 - 1) / (l2 * l) * (2 * N * N * N + 3 * N * N - 5 * N - 15) / 6 * pairs +
                (l - 1) / (l2 * l) * (N * N + 11 * N - 25) / 2 * pairs;
  r.canonicalize();
  return r;
}

MomentSet binary_moments(int n) {
  require_length(n);
  const mpq_class N(n);
  const mpq_class base = N * (N * N - 1);
  const mpq_class N2 = N * N, N3 = N2 * N, N4 = N3 * N, N5 = N4 * N, N6 = N5 * N;
  MomentSet m;
  m.mu2 = base / 12;
  m.mu4 = base * (5 * N3 - 6 * N2 - 5 * N + 14) / 240;
  m.mu6 = base * (35 * N6 - 126 * N5 + 74 * N4 + 420 * N3 - 829 * N2 - 294 * N + 1488) / 4032;
  m.mu2.canonicalize();
  m.mu4.canonicalize();
  m.mu6->canonicalize();
  return m;
}

MomentSet pq_moments(int n, const mpq_class& p) {
  require_length(n);
  if (!(p > 0 && p < 1)) throw std::invalid_argument("probability p must lie strictly between 0 and 1");
  const mpq_class qq = 1 - p;
  const mpq_class pq = p * qq;
  const mpq_class N(n);
  const mpq_class base = N * (N * N - 1);
  MomentSet m;
  m.mu2 = base * pq / 3;
  m.mu4 = base * (5 * N * N * N - 6 * N * N - 5 * N + 14) / 15 * pq * pq +
          base * (3 * N * N - 7) / 15 * pq * (p - qq) * (p - qq);
  m.mu2.canonicalize();
  m.mu4.canonicalize();
  return m;
}

MomentSet general_moments(int n, int alphabet) {
  MomentSet m;
  m.mu2 = var_closed(n, alphabet);
  m.mu4 = mu4_closed(n, alphabet);
  return m;
}

mpq_class binary_kurtosis_closed(int n) {
  if (n < 2) throw std::domain_error("kurtosis undefined for n < 2");
  const mpq_class N(n);
  mpq_class r = 3 * (5 * N * N * N - 6 * N * N - 5 * N + 14) / (5 * N * (N * N - 1));
  r.canonicalize();
  return r;
}

namespace {

bool recurrence_holds(int n, int alphabet, long offset) {
  require_length(n);
  require_alphabet(alphabet);
  const mpq_class N(n);
  const mpq_class l(alphabet);
  const mpq_class increment = N * (l - 1) / l + N * (N - offset) / 3 * (l * l - 1) / (l * l);
  return var_closed(n + 1, alphabet) - var_closed(n, alphabet) == increment;
}

}  // namespace

bool variance_recurrence_check(int n, int alphabet) { return recurrence_holds(n, alphabet, 1); }

bool variance_recurrence_check_as_printed(int n, int alphabet) { return recurrence_holds(n, alphabet, 3); }

}  // namespace seqtau
