#include "rskop/weights.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rskop/error.hpp"

namespace rskop {

namespace {

WeightVector drop_zeros(const WeightVector& w) {
  std::vector<int> out;
  for (int x : w.entries)
    if (x != 0) out.push_back(x);
  return WeightVector(std::move(out));
}

}  // namespace

Normalized normalize(const WeightPair& pair) {
  pair.validate();
  WeightPair p{drop_zeros(pair.sigma), drop_zeros(pair.pi)};
  bool flip = p.sigma.length() > p.pi.length() ||
              (p.sigma.length() == p.pi.length() && p.sigma.entries < p.pi.entries);
  if (flip) return {p.transposed(), true};
  return {p, false};
}

bool is_normalized(const WeightPair& pair) {
  for (int x : pair.sigma.entries)
    if (x <= 0) return false;
  for (int x : pair.pi.entries)
    if (x <= 0) return false;
  if (pair.sigma.length() != pair.pi.length()) return pair.sigma.length() < pair.pi.length();
  return pair.sigma.entries >= pair.pi.entries;
}

int GrowthMatrix::zero_count() const {
  return static_cast<int>(std::count(entries.begin(), entries.end(), 0));
}

GrowthMatrix growth_matrix(const WeightPair& pair) {
  pair.validate();
  int d = pair.degree();
  GrowthMatrix g{pair.sigma.length(), pair.pi.length(), {}};
  for (int s : pair.sigma.entries)
    for (int p : pair.pi.entries) g.entries.push_back(s + p - d);
  return g;
}

bool is_reduced(const WeightPair& pair) {
  pair.validate();
  return pair.sigma.max_entry() + pair.pi.max_entry() <= pair.degree();
}

ReductionRecord reduce(const WeightPair& pair) {
  GrowthMatrix g = growth_matrix(pair);
  ReductionRecord rec{pair, pair, ContingencyTable(g.rows, g.cols)};
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) {
      int e = std::max(g.at(i, j), 0);
      rec.divisor.at(i, j) = e;
      rec.reduced.sigma.entries[i] -= e;
      rec.reduced.pi.entries[j] -= e;
    }
  return rec;
}

std::vector<WeightPair> poset_covers(const WeightPair& pair) {
  pair.validate();
  int d = pair.degree();
  std::vector<WeightPair> out;
  for (int k = 0; k < pair.sigma.length(); ++k)
    for (int l = 0; l < pair.pi.length(); ++l)
      if (pair.sigma[k] + pair.pi[l] >= d) {
        WeightPair up = pair;
        ++up.sigma.entries[k];
        ++up.pi.entries[l];
        out.push_back(std::move(up));
      }
  return out;
}

std::vector<WeightPair> poset_lower_covers(const WeightPair& pair) {
  GrowthMatrix g = growth_matrix(pair);
  std::vector<WeightPair> out;
  for (int k = 0; k < g.rows; ++k)
    for (int l = 0; l < g.cols; ++l)
      if (g.at(k, l) > 0) {
        WeightPair down = pair;
        --down.sigma.entries[k];
        --down.pi.entries[l];
        out.push_back(std::move(down));
      }
  return out;
}

std::vector<WeightPair> downward_closure(const WeightPair& pair) {
  std::set<WeightPair> seen{pair};
  std::deque<WeightPair> queue{pair};
  std::vector<WeightPair> out;
  while (!queue.empty()) {
    WeightPair p = queue.front();
    queue.pop_front();
    out.push_back(p);
    for (auto& q : poset_lower_covers(p))
      if (seen.insert(q).second) queue.push_back(q);
  }
  return out;
}

BigInt count_A(const WeightPair& reduced, int d) {
  reduced.validate();
  for (int x : reduced.sigma.entries)
    if (x <= 0) fail(ErrorKind::invalid_argument, "count_A: pair must have positive entries");
  for (int x : reduced.pi.entries)
    if (x <= 0) fail(ErrorKind::invalid_argument, "count_A: pair must have positive entries");
  if (reduced.sigma.length() == 0 || !is_reduced(reduced))
    fail(ErrorKind::invalid_argument, "count_A: " + reduced.str() + " is not a nonzero reduced pair");
  int dp = reduced.degree();
  if (d < dp) fail(ErrorKind::invalid_argument, "count_A: degree below that of the pair");
  int ls = reduced.sigma.length(), lp = reduced.pi.length();
  if (std::max(ls, lp) >= 3) {
    int g = growth_matrix(reduced).zero_count();
    if (g == 0) return d == dp ? 1 : 0;
    return binomial((d - dp) + (g - 1), g - 1);
  }
  // Both lengths are 2 here; reduced forces (aa, aa).
  return BigInt(4 * (d - dp) + (d == dp ? 1 : 0));
}

BigInt monomial_count(int m, int n, int d) {
  if (d == 0) return 1;
  return binomial(static_cast<long>(m) * n + d - 1, d);
}

BlockCounts block_multiplicities(int m, int n, int d) {
  if (m < 0 || n < 0 || d < 0) fail(ErrorKind::invalid_argument, "block_multiplicities: negative argument");
  BlockCounts out;
  // With d = 0 the single constant monomial stands alone.
  if (d == 0)
    out.n0 = 1;
  else
    out.n0 = binomial(d + n - 1, d) * m + binomial(d + m - 1, d) * n - BigInt(m) * n;
  for (const auto& p : enumerate_reduced_pairs(d, std::min(m, n), std::max(m, n))) {
    int ls = p.sigma.length(), lp = p.pi.length();
    BigInt choose = binomial(m, ls) * binomial(n, lp);
    if (p.sigma != p.pi) choose += binomial(m, lp) * binomial(n, ls);
    BigInt mult = count_A(p, d) * choose;
    if (mult != 0) out.blocks.push_back({p, mult});
  }
  return out;
}

std::vector<WeightVector> compositions(int d, int len) {
  std::vector<WeightVector> out;
  if (len <= 0 || d < len) {
    if (len == 0 && d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == len - 1) {
      cur[i] = left;
      out.emplace_back(cur);
      return;
    }
    for (int x = left - (len - 1 - i); x >= 1; --x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::vector<WeightPair> enumerate_reduced_pairs(int d_max, int max_len_sigma, int max_len_pi) {
  std::vector<WeightPair> out;
  for (int d = 1; d <= d_max; ++d)
    for (int ls = 1; ls <= std::min(max_len_sigma, d); ++ls)
      for (int lp = ls; lp <= std::min(max_len_pi, d); ++lp) {
        auto sigmas = compositions(d, ls);
        auto pis = compositions(d, lp);
        for (const auto& s : sigmas)
          for (const auto& p : pis) {
            WeightPair pair{s, p};
            if (ls == lp && s.entries < p.entries) continue;
            if (s.max_entry() + p.max_entry() <= d) out.push_back(pair);
          }
      }
  return out;
}

}  // namespace rskop
