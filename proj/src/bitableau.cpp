#include "rskop/bitableau.hpp"

#include <algorithm>
#include <numeric>

#include "rskop/error.hpp"

namespace rskop {

namespace {

int max_label(const Tableau& t) {
  int m = 0;
  for (const auto& r : t.rows())
    for (int x : r) m = std::max(m, x);
  return m;
}

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

}  // namespace

Bitableau bitableau_of(const TableauPair& pair, int m, int n) {
  if (!(pair.p.shape() == pair.q.shape()))
    fail(ErrorKind::invalid_pair, "bitableau_of: P and Q have different shapes");
  Bitableau b;
  b.source = pair;
  b.m = m < 0 ? max_label(pair.p) : m;
  b.n = n < 0 ? max_label(pair.q) : n;
  if (max_label(pair.p) > b.m || max_label(pair.q) > b.n)
    fail(ErrorKind::invalid_pair, "bitableau_of: labels exceed the matrix size");
  int cols = pair.p.rows().empty() ? 0 : static_cast<int>(pair.p.rows()[0].size());
  for (int c = 0; c < cols; ++c) {
    Minor mi{pair.p.column(c), pair.q.column(c)};
    if (!strictly_increasing(mi.rows) || !strictly_increasing(mi.cols))
      fail(ErrorKind::invalid_pair, "bitableau_of: columns must strictly increase");
    b.minors.push_back(std::move(mi));
  }
  return b;
}

MonomialPoly expand_minor(const Minor& minor, int m, int n) {
  int k = minor.size();
  if (static_cast<int>(minor.cols.size()) != k)
    fail(ErrorKind::invalid_argument, "minor with unequal index counts");
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  MonomialPoly out;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    ContingencyTable t(m, n);
    for (int i = 0; i < k; ++i) ++t.at(minor.rows[i] - 1, minor.cols[perm[i]] - 1);
    out[t] += (inversions % 2) ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Repeated indices make terms cancel.
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b) {
  MonomialPoly out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      std::vector<int> e = ta.flat();
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += tb.flat()[i];
      out[ContingencyTable(ta.rows(), ta.cols(), std::move(e))] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MonomialPoly expand(const Bitableau& b, const Limits& limits) {
  double projected = 1;
  for (const auto& mi : b.minors)
    for (int i = 2; i <= mi.size(); ++i) projected *= i;
  if (projected > static_cast<double>(limits.max_terms))
    fail(ErrorKind::capacity, "bitableau expansion would have about " +
                                  std::to_string(static_cast<long long>(projected)) +
                                  " terms, above the cap of " + std::to_string(limits.max_terms));
  MonomialPoly acc{{ContingencyTable(b.m, b.n), BigInt(1)}};
  for (const auto& mi : b.minors) acc = multiply(acc, expand_minor(mi, b.m, b.n));
  return acc;
}

int evaluate_all_ones(const Bitableau& b) {
  for (const auto& mi : b.minors)
    if (mi.size() > 1) return 0;
  return 1;
}

}  // namespace rskop
