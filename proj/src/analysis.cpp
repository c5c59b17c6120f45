#include "rskop/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "rskop/contingency.hpp"
#include "rskop/error.hpp"
#include "rskop/linalg.hpp"
#include "rskop/operator.hpp"
#include "rskop/weights.hpp"

namespace rskop {

namespace {

struct BlockStats {
  BigInt det;
  BigInt trace;
  std::optional<BigInt> trace_inverse;
};

// Per-pair determinant and traces, shared by the formula-based routines.
class StatsCache {
 public:
  BlockStats get(const WeightPair& pair, bool need_inverse) {
    std::lock_guard lock(mu_);
    auto it = cache_.find(pair);
    if (it == cache_.end()) {
      RskMatrix m = build_matrix(pair);
      it = cache_.emplace(pair, BlockStats{det(m.entries), trace(m.entries), std::nullopt}).first;
    }
    if (need_inverse && !it->second.trace_inverse)
      it->second.trace_inverse = trace(build_inverse(pair).entries);
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<WeightPair, BlockStats> cache_;
};

StatsCache& stats_cache() {
  static StatsCache c;
  return c;
}

void check_mnd(int m, int n, int d) {
  if (m < 0 || n < 0 || d < 0) fail(ErrorKind::invalid_argument, "m, n, d must be nonnegative");
}

// Parity of N_{sigma,pi}(m,n,d) from Lucas's theorem, without forming N.
bool multiplicity_is_odd(const WeightPair& p, int m, int n, int d) {
  int ls = p.sigma.length(), lp = p.pi.length();
  bool a_odd;
  if (std::max(ls, lp) >= 3) {
    int g = growth_matrix(p).zero_count();
    int dp = p.degree();
    a_odd = g == 0 ? d == dp : binomial_is_odd(static_cast<std::uint64_t>(d - dp + g - 1), static_cast<std::uint64_t>(g - 1));
  } else {
    a_odd = d == p.degree();  // 4(d - d') + delta
  }
  auto odd = [](int top, int bottom) {
    return bottom <= top && binomial_is_odd(static_cast<std::uint64_t>(top), static_cast<std::uint64_t>(bottom));
  };
  bool c = odd(m, ls) && odd(n, lp);
  if (p.sigma != p.pi) c = c != (odd(m, lp) && odd(n, ls));
  return a_odd && c;
}

// Every weight vector of length len and degree d, zeros allowed.
std::vector<WeightVector> all_weights(int len, int d) {
  std::vector<WeightVector> out;
  std::vector<int> cur(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == len - 1) {
      cur[i] = left;
      out.emplace_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (len == 0) {
    if (d == 0) out.emplace_back();
  } else {
    rec(rec, 0, d);
  }
  return out;
}

}  // namespace

int det_rsk(int m, int n, int d) {
  check_mnd(m, n, d);
  BlockCounts counts = block_multiplicities(m, n, d);
  int sign = 1;
  for (const auto& b : counts.blocks) {
    if (!multiplicity_is_odd(b.pair, m, n, d)) continue;
    BigInt dt = stats_cache().get(b.pair, false).det;
    if (dt != 1 && dt != -1) fail(ErrorKind::internal, "block determinant is not a unit");
    if (dt == -1) sign = -sign;
  }
  return sign;
}

int det_rsk_direct(int m, int n, int d) {
  check_mnd(m, n, d);
  int sign = 1;
  for (const auto& s : all_weights(m, d))
    for (const auto& p : all_weights(n, d)) {
      BigInt dt = det(build_matrix({s, p}).entries);
      if (dt != 1 && dt != -1) fail(ErrorKind::internal, "weight-space determinant is not a unit");
      if (dt == -1) sign = -sign;
    }
  return sign;
}

bool verify_det_period(int d, int m_lo, int m_hi, int n_lo, int n_hi) {
  int period = 1;
  while (period <= d) period *= 2;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = n_lo; n <= n_hi; ++n) {
      int base = det_rsk(m, n, d);
      if (det_rsk(m + period, n, d) != base || det_rsk(m, n + period, d) != base) return false;
    }
  return true;
}

BigInt trace_rsk(int m, int n, int d, bool inverse) {
  check_mnd(m, n, d);
  BlockCounts counts = block_multiplicities(m, n, d);
  BigInt total = counts.n0;
  for (const auto& b : counts.blocks) {
    BlockStats s = stats_cache().get(b.pair, inverse);
    total += b.multiplicity * (inverse ? *s.trace_inverse : s.trace);
  }
  return total;
}

BigInt trace_rsk_direct(int m, int n, int d, bool inverse) {
  check_mnd(m, n, d);
  BigInt total = 0;
  for (const auto& s : all_weights(m, d))
    for (const auto& p : all_weights(n, d)) {
      WeightPair pair{s, p};
      total += trace(inverse ? build_inverse(pair).entries : build_matrix(pair).entries);
    }
  return total;
}

// ---- permutation sweep ----

namespace {

constexpr int kMaxPerm = 16;

// Diagonal entry of RSK_{1^d,1^d} at the permutation table whose column j
// holds its 1 in row w[j]. Insertion into fixed arrays, no allocation.
int perm_diagonal(const std::array<std::int8_t, kMaxPerm>& w, int d) {
  std::int8_t rows[kMaxPerm][kMaxPerm];
  std::int8_t len[kMaxPerm] = {0};
  std::int8_t qrow[kMaxPerm], qcol[kMaxPerm];  // box of Q label j
  int nrows = 0;
  for (int j = 0; j < d; ++j) {
    std::int8_t x = w[j];
    int r = 0;
    while (true) {
      if (r == nrows) {
        ++nrows;
        len[r] = 0;
      }
      std::int8_t* row = rows[r];
      int l = len[r];
      int pos = 0;
      while (pos < l && row[pos] < x) ++pos;  // labels are distinct
      if (pos == l) {
        row[l] = x;
        len[r] = static_cast<std::int8_t>(l + 1);
        qrow[j] = static_cast<std::int8_t>(r);
        qcol[j] = static_cast<std::int8_t>(l);
        break;
      }
      std::swap(row[pos], x);
      ++r;
    }
  }
  std::int8_t prow[kMaxPerm], pcol[kMaxPerm];  // box of P label x
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < len[r]; ++c) {
      prow[rows[r][c]] = static_cast<std::int8_t>(r);
      pcol[rows[r][c]] = static_cast<std::int8_t>(c);
    }
  // Entry (r_j, j) of the table must join column c of P to column c of Q.
  for (int j = 0; j < d; ++j)
    if (pcol[w[j]] != qcol[j]) return 0;
  int sign = 1;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k)
      if (qcol[j] == qcol[k] && ((prow[w[j]] < prow[w[k]]) != (qrow[j] < qrow[k]))) sign = -sign;
  return sign;
}

std::uint64_t factorial(int d) {
  std::uint64_t f = 1;
  for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Permutation of 0..d-1 with the given lexicographic rank.
std::array<std::int8_t, kMaxPerm> unrank(std::uint64_t rank, int d) {
  std::vector<int> pool(static_cast<std::size_t>(d));
  std::iota(pool.begin(), pool.end(), 0);
  std::array<std::int8_t, kMaxPerm> w{};
  for (int i = 0; i < d; ++i) {
    std::uint64_t f = factorial(d - 1 - i);
    std::uint64_t k = rank / f;
    rank %= f;
    w[i] = static_cast<std::int8_t>(pool[k]);
    pool.erase(pool.begin() + static_cast<long>(k));
  }
  return w;
}

PermSweep sweep_range(int d, std::uint64_t lo, std::uint64_t hi) {
  PermSweep s;
  if (lo >= hi) return s;
  auto w = unrank(lo, d);
  for (std::uint64_t r = lo; r < hi; ++r) {
    int e = perm_diagonal(w, d);
    s.trace += e;
    s.zero_diagonal += e == 0;
    std::next_permutation(w.begin(), w.begin() + d);
  }
  return s;
}

}  // namespace

PermSweep permutation_sweep(int d, int workers) {
  if (d < 0) fail(ErrorKind::invalid_argument, "permutation sweep: d must be nonnegative");
  int limit = std::min(default_limits().max_perm_degree, kMaxPerm);
  if (d > limit)
    fail(ErrorKind::capacity, "permutation sweep: d = " + std::to_string(d) + " is above the limit of " +
                                  std::to_string(limit));
  if (d == 0) return {1, 0};
  workers = std::max(1, workers);
  std::uint64_t total = factorial(d);
  std::vector<PermSweep> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  for (int t = 0; t < workers; ++t) {
    std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(workers);
    std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(workers);
    if (workers == 1)
      parts[t] = sweep_range(d, lo, hi);
    else
      threads.emplace_back([&parts, t, d, lo, hi] { parts[t] = sweep_range(d, lo, hi); });
  }
  for (auto& th : threads) th.join();
  PermSweep s;
  for (const auto& p : parts) {
    s.trace += p.trace;
    s.zero_diagonal += p.zero_diagonal;
  }
  return s;
}

std::int64_t trace_perm(int d, int workers) { return permutation_sweep(d, workers).trace; }
std::int64_t count_Cd(int d, int workers) { return permutation_sweep(d, workers).zero_diagonal; }

// ---- classification ----

std::string dynkin_label(int m, int n, int d) {
  std::array<int, 3> a{m, n, d};
  std::sort(a.begin(), a.end());
  if (a[0] <= 1) {
    // A path; a length-0 arm leaves the other two arms joined end to end.
    int k = a[0] == 0 ? std::max(a[1] + a[2] - 1, 0) : a[1] + a[2] - 1;
    return "A" + std::to_string(k);
  }
  if (a[0] == 2 && a[1] == 2) return "D" + std::to_string(a[2] + 2);
  if (a[0] == 2 && a[1] == 3 && a[2] <= 6) return "E" + std::to_string(a[2] + 3);
  return "none";
}

ClassificationResult classify_diagonalizable(int m, int n, int d) {
  check_mnd(m, n, d);
  ClassificationResult r{m, n, d, false, dynkin_label(m, n, d), ""};
  int lo = std::min(m, n), hi = std::max(m, n);
  if (lo <= 1 || d == 0) {
    r.diagonalizable = true;
    r.rule = "identity operator (a side of length at most 1, or degree 0)";
  } else if (lo == 2 && hi == 2) {
    r.diagonalizable = true;
    r.rule = "2x2 matrices: every block is triangular";
  } else if (d <= 3) {
    r.diagonalizable = true;
    r.rule = "degree at most 3";
  } else if (lo == 2 && hi == 3 && d <= 6) {
    r.diagonalizable = true;
    r.rule = "2x3 matrices with degree at most 6";
  } else if (lo == 2 && hi == 3) {
    r.rule = "contains the block (43,223)";
  } else if (hi > 3) {
    r.rule = d == 4 ? "contains the block (22,1111)" : "contains the block (32,2111)";
  } else {
    r.rule = "contains the block (211,211)";
  }
  return r;
}

// ---- conjecture scanners ----

namespace {

std::vector<WeightPair> pairs_with_lengths(int degree_bound, int ls, int lp) {
  std::vector<WeightPair> out;
  for (auto& p : enumerate_reduced_pairs(degree_bound, ls, lp))
    if (p.sigma.length() == ls && p.pi.length() == lp) out.push_back(std::move(p));
  return out;
}

std::string range_text(int degree_bound, int ls, int lp) {
  return "reduced pairs with lengths (" + std::to_string(ls) + "," + std::to_string(lp) +
         ") and degree <= " + std::to_string(degree_bound);
}

}  // namespace

ConjectureReport scan_conjecture_complex(int degree_bound, int len_sigma, int len_pi) {
  if (len_sigma < 3 || len_pi < 3)
    fail(ErrorKind::invalid_argument, "the non-real eigenvalue scan needs both lengths at least 3");
  ConjectureReport rep{"non-real-eigenvalue", range_text(degree_bound, len_sigma, len_pi), {}, 0};
  for (const auto& p : pairs_with_lengths(degree_bound, len_sigma, len_pi)) {
    IntPoly s = squarefree_part(char_poly(build_matrix(p).entries));
    ++rep.checked;
    if (sturm_real_root_count(s) == s.degree()) rep.counterexamples.push_back(p);
  }
  return rep;
}

ConjectureReport scan_conjecture_nonintegral(int degree_bound, int len_sigma, int len_pi) {
  ConjectureReport rep{"non-integer-eigenvalue", range_text(degree_bound, len_sigma, len_pi), {}, 0};
  for (const auto& p : pairs_with_lengths(degree_bound, len_sigma, len_pi)) {
    PlusMinusOneSplit split = strip_pm1_factors(char_poly(build_matrix(p).entries));
    ++rep.checked;
    bool constant = split.remainder.degree() == 0;
    // Triangular pairs have only +1 and -1 as eigenvalues; anything else is a bug.
    if (is_triangular(p) ? !constant : constant) rep.counterexamples.push_back(p);
  }
  return rep;
}

bool roots_of_unity_presence(int k, int m, int n, int d) {
  if (k < 2 || m < 2 || n < k || d < k)
    fail(ErrorKind::invalid_argument, "roots_of_unity_presence needs k >= 2, m >= 2 and n, d >= k");
  WeightPair target{WeightVector{k - 1, 1}, ones(k)};
  if (k == 2) target = {WeightVector{1, 1}, WeightVector{1, 1}};
  bool present = false;
  for (const auto& b : block_multiplicities(m, n, d).blocks)
    if (b.pair == target && b.multiplicity > 0) present = true;
  if (!present) return false;
  IntPoly p = char_poly(build_matrix(target).entries);
  return divides(IntPoly::monomial(k) - IntPoly{1}, p);
}

}  // namespace rskop
