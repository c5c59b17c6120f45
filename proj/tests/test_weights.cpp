#include <map>
#include <set>

#include "doctest.h"
#include "rskop/contingency.hpp"
#include "rskop/error.hpp"
#include "rskop/weights.hpp"
#include "support.hpp"

using namespace rskop;

namespace {

// All weight vectors of length len and degree d, zeros allowed.
std::vector<WeightVector> weak_compositions(int d, int len) {
  std::vector<WeightVector> out;
  std::vector<int> cur(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == len - 1) {
      cur[i] = left;
      out.emplace_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (len > 0) rec(rec, 0, d);
  return out;
}

// Tally raw pairs of N^m x N^n by the normalized form of their reduction.
std::map<WeightPair, BigInt> raw_tally(int m, int n, int d) {
  std::map<WeightPair, BigInt> tally;
  for (const auto& s : weak_compositions(d, m))
    for (const auto& p : weak_compositions(d, n)) {
      WeightPair r = normalize(reduce(normalize({s, p}).pair).reduced).pair;
      if (r.sigma.length() <= 1) r = {};
      tally[r] += 1;
    }
  return tally;
}

}  // namespace

TEST_CASE("normalization") {
  CHECK(normalize({{0, 2, 1}, {3, 0}}).pair == WeightPair{{3}, {2, 1}});
  CHECK(normalize({{0, 2, 1}, {3, 0}}).transposed);
  CHECK(normalize({{1, 2}, {2, 1}}).pair == WeightPair{{2, 1}, {1, 2}});
  CHECK(normalize({{2, 1}, {1, 2}}).pair == WeightPair{{2, 1}, {1, 2}});
  CHECK_FALSE(normalize({{2, 1}, {1, 1, 1}}).transposed);
  CHECK(is_normalized({{2, 1}, {1, 1, 1}}));
  CHECK_FALSE(is_normalized({{1, 1, 1}, {2, 1}}));
  CHECK_THROWS_AS(normalize({{2, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(normalize({{-1, 2}, {1}}), Error);
}

TEST_CASE("growth matrix and the worked reduction") {
  WeightPair p{{6, 1}, {2, 3, 2}};
  GrowthMatrix g = growth_matrix(p);
  CHECK(g.entries == std::vector<int>{1, 2, 1, -4, -3, -4});
  ReductionRecord r = reduce(p);
  CHECK(r.reduced == WeightPair{{2, 1}, {1, 1, 1}});
  CHECK(r.divisor == ContingencyTable::from_rows({{1, 2, 1}, {0, 0, 0}}));
  CHECK(is_reduced(r.reduced));
  CHECK_FALSE(is_reduced(p));
}

TEST_CASE("poset below (61,232)") {
  std::set<WeightPair> want;
  for (auto [s, q] : std::vector<std::pair<WeightVector, WeightVector>>{
           {{6, 1}, {2, 3, 2}}, {{5, 1}, {1, 3, 2}}, {{5, 1}, {2, 3, 1}}, {{5, 1}, {2, 2, 2}},
           {{4, 1}, {1, 3, 1}}, {{4, 1}, {1, 2, 2}}, {{4, 1}, {2, 2, 1}}, {{4, 1}, {2, 1, 2}},
           {{3, 1}, {1, 2, 1}}, {{3, 1}, {1, 1, 2}}, {{3, 1}, {2, 1, 1}}, {{2, 1}, {1, 1, 1}}})
    want.insert({s, q});
  auto got = downward_closure({{6, 1}, {2, 3, 2}});
  CHECK(std::set<WeightPair>(got.begin(), got.end()) == want);
  CHECK(got.size() == 12);
  // covers drawn in the figure
  auto lower = poset_lower_covers({{5, 1}, {2, 2, 2}});
  CHECK(std::set<WeightPair>(lower.begin(), lower.end()) ==
        std::set<WeightPair>{{{4, 1}, {1, 2, 2}}, {{4, 1}, {2, 2, 1}}, {{4, 1}, {2, 1, 2}}});
  auto upper = poset_covers({{2, 1}, {1, 1, 1}});
  for (const auto& u : upper) CHECK(u.degree() == 4);
}

TEST_CASE("reduction is unique along random descent paths") {
  for (int trial = 0; trial < 300; ++trial) {
    int d = oracle::uniform(3, 9);
    auto ss = compositions(d, oracle::uniform(1, 3));
    auto ps = compositions(d, oracle::uniform(1, 3));
    WeightPair p{ss[oracle::uniform(0, static_cast<int>(ss.size()) - 1)],
                 ps[oracle::uniform(0, static_cast<int>(ps.size()) - 1)]};
    WeightPair cur = p;
    while (true) {
      auto lower = poset_lower_covers(cur);
      if (lower.empty()) break;
      cur = lower[oracle::uniform(0, static_cast<int>(lower.size()) - 1)];
    }
    CHECK(cur == reduce(p).reduced);
  }
}

TEST_CASE("small-degree counts from the summary table") {
  for (int d = 2; d <= 8; ++d) {
    CHECK(count_A({{1, 1}, {1, 1}}, d) == 4 * (d - 2) + (d == 2));
    if (d >= 3) {
      CHECK(count_A({{2, 1}, {1, 1, 1}}, d) == binomial(d - 1, 2));
      CHECK(count_A({{1, 2}, {1, 1, 1}}, d) == binomial(d - 1, 2));
      CHECK(count_A({{1, 1, 1}, {1, 1, 1}}, d) == (d == 3));
    }
  }
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int d = 2; d <= 3; ++d) {
        BlockCounts c = block_multiplicities(m, n, d);
        std::map<WeightPair, BigInt> got;
        for (const auto& b : c.blocks) got[b.pair] = b.multiplicity;
        std::map<WeightPair, BigInt> want;
        BigInt n11 = BigInt(4 * (d - 2) + (d == 2)) * binomial(m, 2) * binomial(n, 2);
        if (n11 != 0) want[{{1, 1}, {1, 1}}] = n11;
        if (d == 3) {
          BigInt mixed = binomial(d - 1, 2) * (binomial(m, 2) * binomial(n, 3) + binomial(m, 3) * binomial(n, 2));
          if (mixed != 0) {
            want[{{2, 1}, {1, 1, 1}}] = mixed;
            want[{{1, 2}, {1, 1, 1}}] = mixed;
          }
          BigInt top = binomial(m, 3) * binomial(n, 3);
          if (top != 0) want[{{1, 1, 1}, {1, 1, 1}}] = top;
        }
        CHECK(got == want);
        CHECK(c.n0 == binomial(d + n - 1, d) * m + binomial(d + m - 1, d) * n - m * n);
      }
}

TEST_CASE("multiplicities equal raw pair counts") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= 6; ++d) {
        auto tally = raw_tally(m, n, d);
        BlockCounts c = block_multiplicities(m, n, d);
        std::map<WeightPair, BigInt> got;
        got[{}] = c.n0;
        for (const auto& b : c.blocks) got[b.pair] = b.multiplicity;
        CHECK_MESSAGE(got == tally, "m=", m, " n=", n, " d=", d);
      }
}

TEST_CASE("dimension identity") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 5; ++d) {
        BlockCounts c = block_multiplicities(m, n, d);
        BigInt total = c.n0;
        for (const auto& b : c.blocks) total += b.multiplicity * count_tables(b.pair.sigma, b.pair.pi);
        CHECK(total == binomial(m * n + d - 1, d));
      }
  CHECK(monomial_count(3, 3, 0) == 1);
  CHECK(monomial_count(3, 3, 8) == 12870);
}

TEST_CASE("reduced pair enumeration") {
  auto pairs = enumerate_reduced_pairs(3, 3, 3);
  std::vector<WeightPair> want{{{1, 1}, {1, 1}}, {{2, 1}, {1, 1, 1}}, {{1, 2}, {1, 1, 1}}, {{1, 1, 1}, {1, 1, 1}}};
  CHECK(pairs == want);
  for (const auto& p : enumerate_reduced_pairs(7, 3, 3)) {
    CHECK(is_reduced(p));
    CHECK(is_normalized(p));
  }
  // every normalized reduced pair of degree <= 5 on 3 x 3 appears once
  std::set<WeightPair> all;
  for (int d = 1; d <= 5; ++d)
    for (int ls = 2; ls <= 3; ++ls)
      for (int lp = ls; lp <= 3; ++lp)
        for (const auto& s : compositions(d, ls))
          for (const auto& p : compositions(d, lp))
            if (is_normalized({s, p}) && is_reduced({s, p})) all.insert({s, p});
  auto listed = enumerate_reduced_pairs(5, 3, 3);
  CHECK(std::set<WeightPair>(listed.begin(), listed.end()) == all);
  CHECK(listed.size() == all.size());
}

TEST_CASE("compositions") {
  CHECK(compositions(4, 2) == std::vector<WeightVector>{{3, 1}, {2, 2}, {1, 3}});
  CHECK(compositions(2, 3).empty());
  CHECK(compositions(0, 0).size() == 1);
}
