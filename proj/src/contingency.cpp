#include "rskop/contingency.hpp"

#include <algorithm>
#include <map>

#include "rskop/error.hpp"

namespace rskop {

namespace {

struct Filler {
  int m, n;
  std::vector<int> row_rem;
  std::vector<int> pi;
  ContingencyTable t;
  const std::function<bool(const ContingencyTable&)>& visit;
  std::size_t count = 0;
  bool stop = false;

  // Fill cell (i, j) with col_rem still owed to column j.
  void fill(int i, int j, int col_rem) {
    if (stop) return;
    if (j == n) {
      ++count;
      if (!visit(t)) stop = true;
      return;
    }
    if (i == m - 1) {
      // last row takes the rest of the column
      if (col_rem > row_rem[i]) return;
      t.at(i, j) = col_rem;
      row_rem[i] -= col_rem;
      fill(0, j + 1, j + 1 < n ? pi[j + 1] : 0);
      row_rem[i] += col_rem;
      t.at(i, j) = 0;
      return;
    }
    int below = 0;
    for (int k = i + 1; k < m; ++k) below += row_rem[k];
    int hi = std::min(row_rem[i], col_rem);
    int lo = std::max(0, col_rem - below);
    for (int x = hi; x >= lo && !stop; --x) {
      t.at(i, j) = x;
      row_rem[i] -= x;
      fill(i + 1, j, col_rem - x);
      row_rem[i] += x;
    }
    t.at(i, j) = 0;
  }
};

}  // namespace

std::size_t for_each_table(const WeightVector& sigma, const WeightVector& pi,
                           const std::function<bool(const ContingencyTable&)>& visit) {
  WeightPair{sigma, pi}.validate();
  int m = sigma.length(), n = pi.length();
  if (m == 0 || n == 0) {
    // Only the empty monomial, and only when nothing is owed.
    if (sigma.degree() != 0) return 0;
    visit(ContingencyTable(m, n));
    return 1;
  }
  Filler f{m, n, sigma.entries, pi.entries, ContingencyTable(m, n), visit};
  f.fill(0, 0, pi[0]);
  return f.count;
}

BigInt count_tables(const WeightVector& sigma, const WeightVector& pi) {
  WeightPair{sigma, pi}.validate();
  int m = sigma.length();
  if (m == 0 || pi.length() == 0) return sigma.degree() == 0 ? 1 : 0;
  std::map<std::vector<int>, BigInt> states{{sigma.entries, BigInt(1)}};
  for (int j = 0; j < pi.length(); ++j) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [rem, ways] : states) {
      std::vector<int> cur = rem;
      // distribute pi_j over the rows, bounded by what each row still owes
      auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == m) {
          if (left == 0) next[cur] += ways;
          return;
        }
        for (int x = 0; x <= std::min(left, rem[i]); ++x) {
          cur[i] = rem[i] - x;
          self(self, i + 1, left - x);
        }
        cur[i] = rem[i];
      };
      rec(rec, 0, pi[j]);
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [rem, ways] : states) total += ways;
  return total;
}

std::vector<ContingencyTable> enumerate_tables(const WeightVector& sigma, const WeightVector& pi,
                                               const Limits& limits) {
  BigInt projected = count_tables(sigma, pi);
  if (projected > BigInt(static_cast<unsigned long>(limits.max_basis)))
    fail(ErrorKind::capacity, "basis of " + WeightPair{sigma, pi}.str() + " has " +
                                  projected.get_str() + " tables, above the cap of " +
                                  std::to_string(limits.max_basis));
  std::vector<ContingencyTable> out;
  out.reserve(projected.get_ui());
  for_each_table(sigma, pi, [&](const ContingencyTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

ContingencyTable canonical_table(const WeightVector& sigma, const WeightVector& pi) {
  WeightPair{sigma, pi}.validate();
  int m = sigma.length(), n = pi.length();
  ContingencyTable t(m, n);
  std::vector<int> r = sigma.entries, c = pi.entries;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      int x = std::min(r[i], c[j]);
      t.at(i, j) = x;
      r[i] -= x;
      c[j] -= x;
    }
  return t;
}

ContingencyTable apply_swap(const ContingencyTable& alpha, const SwapMove& s) {
  auto bad_index = [&](int i, int hi) { return i < 1 || i > hi; };
  if (bad_index(s.r, alpha.rows()) || bad_index(s.r2, alpha.rows()) || bad_index(s.c, alpha.cols()) ||
      bad_index(s.c2, alpha.cols()) || s.r == s.r2 || s.c == s.c2)
    fail(ErrorKind::invalid_argument, "swap move indices out of range or not distinct");
  ContingencyTable t = alpha;
  int r = s.r - 1, r2 = s.r2 - 1, c = s.c - 1, c2 = s.c2 - 1;
  if (t.at(r, c2) == 0 || t.at(r2, c) == 0)
    fail(ErrorKind::infeasible_swap, "swap move would make an entry negative");
  ++t.at(r, c);
  ++t.at(r2, c2);
  --t.at(r, c2);
  --t.at(r2, c);
  return t;
}

}  // namespace rskop
