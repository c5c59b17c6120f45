#include <cstdlib>
#include <numeric>
#include <sstream>

#include "rskop/bigint.hpp"
#include "rskop/error.hpp"
#include "rskop/limits.hpp"
#include "rskop/table.hpp"
#include "rskop/weight.hpp"

namespace rskop {

const char* kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_weight: return "invalid-weight";
    case ErrorKind::invalid_tableau: return "invalid-tableau";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::infeasible_swap: return "infeasible-swap";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Limits& default_limits() {
  static Limits limits = [] {
    Limits l;
    if (const char* s = std::getenv("RSKOP_MAX_BASIS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) l.max_basis = static_cast<std::size_t>(v);
    }
    return l;
  }();
  return limits;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool binomial_is_odd(std::uint64_t n, std::uint64_t k) { return (k & ~n) == 0; }

// ---- weights ----

int WeightVector::degree() const { return std::accumulate(entries.begin(), entries.end(), 0); }

int WeightVector::max_entry() const {
  int m = 0;
  for (int x : entries) m = std::max(m, x);
  return m;
}

std::string WeightVector::str() const {
  bool compact = true;
  for (int x : entries) compact = compact && x >= 0 && x < 10;
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!compact && i) os << ',';
    os << entries[i];
  }
  return os.str();
}

void WeightPair::validate() const {
  for (int x : sigma.entries)
    if (x < 0) fail(ErrorKind::invalid_weight, "negative entry in sigma " + sigma.str());
  for (int x : pi.entries)
    if (x < 0) fail(ErrorKind::invalid_weight, "negative entry in pi " + pi.str());
  if (sigma.degree() != pi.degree())
    fail(ErrorKind::invalid_weight, "degree mismatch: |" + sigma.str() + "| = " +
                                        std::to_string(sigma.degree()) + ", |" + pi.str() +
                                        "| = " + std::to_string(pi.degree()));
}

WeightVector ones(int n) { return WeightVector(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// ---- tables ----

ContingencyTable::ContingencyTable(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) fail(ErrorKind::invalid_argument, "negative table size");
}

ContingencyTable::ContingencyTable(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0 || e_.size() != static_cast<std::size_t>(rows) * cols)
    fail(ErrorKind::invalid_argument, "table entry count does not match its size");
  for (int x : e_)
    if (x < 0) fail(ErrorKind::invalid_argument, "negative table entry");
}

ContingencyTable ContingencyTable::from_rows(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  std::vector<int> flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      fail(ErrorKind::invalid_argument, "ragged table rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ContingencyTable(r, c, std::move(flat));
}

WeightVector ContingencyTable::row_margins() const {
  std::vector<int> s(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s[i] += at(i, j);
  return WeightVector(std::move(s));
}

WeightVector ContingencyTable::col_margins() const {
  std::vector<int> s(static_cast<std::size_t>(cols_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) s[j] += at(i, j);
  return WeightVector(std::move(s));
}

int ContingencyTable::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

ContingencyTable ContingencyTable::transpose() const {
  ContingencyTable t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<std::vector<int>> ContingencyTable::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[i].assign(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  return out;
}

std::string ContingencyTable::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
  }
  return os.str();
}

std::strong_ordering ContingencyTable::operator<=>(const ContingencyTable& o) const {
  if (auto c = rows_ <=> o.rows_; c != 0) return c;
  if (auto c = cols_ <=> o.cols_; c != 0) return c;
  return e_ <=> o.e_;
}

bool basis_precedes(const ContingencyTable& a, const ContingencyTable& b) {
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (a.at(i, j) != b.at(i, j)) return a.at(i, j) > b.at(i, j);
  return false;
}

std::size_t TableHash::operator()(const ContingencyTable& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.rows()) * 1000003u + static_cast<std::size_t>(t.cols());
  for (int x : t.flat()) h = h * 1099511628211ull + static_cast<std::size_t>(x) + 0x9e3779b9u;
  return h;
}

}  // namespace rskop
