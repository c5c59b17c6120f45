#include "rskop/operator.hpp"

#include <algorithm>
#include <unordered_map>

#include "rskop/bitableau.hpp"
#include "rskop/contingency.hpp"
#include "rskop/error.hpp"
#include "rskop/tableau.hpp"
#include "rskop/weights.hpp"

namespace rskop {

int RskMatrix::index_of(const ContingencyTable& t) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i] == t) return i;
  return -1;
}

RskMatrix build_matrix(const WeightPair& pair, const Limits& limits) {
  pair.validate();
  BigInt projected = count_tables(pair.sigma, pair.pi);
  if (projected > BigInt(static_cast<unsigned long>(limits.max_dense_dim)))
    fail(ErrorKind::capacity, "matrix of " + pair.str() + " would have side " + projected.get_str() +
                                  ", above the dense cap of " + std::to_string(limits.max_dense_dim));
  RskMatrix r{pair, enumerate_tables(pair.sigma, pair.pi, limits), {}};
  int dim = r.dim();
  int m = pair.sigma.length(), n = pair.pi.length();
  std::unordered_map<ContingencyTable, int, TableHash> index;
  index.reserve(static_cast<std::size_t>(dim) * 2);
  for (int i = 0; i < dim; ++i) index.emplace(r.basis[i], i);
  r.entries = IntMatrix(dim, dim);
  for (int col = 0; col < dim; ++col) {
    MonomialPoly poly = expand(bitableau_of(rsk(r.basis[col]), m, n), limits);
    for (const auto& [t, c] : poly) {
      auto it = index.find(t);
      if (it == index.end())
        fail(ErrorKind::internal, "bitableau term " + t.str() + " lies outside the weight space");
      r.entries.at(it->second, col) = c;
    }
  }
  return r;
}

RskMatrix build_inverse(const WeightPair& pair, const Limits& limits) {
  RskMatrix r = build_matrix(pair, limits);
  r.entries = integer_inverse(r.entries);
  return r;
}

namespace {

bool is_permutation_table(const ContingencyTable& t) {
  if (t.rows() != t.cols()) return false;
  for (int x : t.row_margins().entries)
    if (x != 1) return false;
  for (int x : t.col_margins().entries)
    if (x != 1) return false;
  return true;
}

long small_det(const std::vector<std::vector<int>>& a) {
  int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  if (k == 1) return a[0][0];
  if (k == 2) return static_cast<long>(a[0][0]) * a[1][1] - static_cast<long>(a[0][1]) * a[1][0];
  long total = 0;
  for (int j = 0; j < k; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<int>> sub;
    for (int i = 1; i < k; ++i) {
      std::vector<int> row;
      for (int c = 0; c < k; ++c)
        if (c != j) row.push_back(a[i][c]);
      sub.push_back(std::move(row));
    }
    long term = a[0][j] * small_det(sub);
    total += (j % 2) ? -term : term;
  }
  return total;
}

// Product over the columns of the common shape of det beta[P col][Q col].
long column_minor_product(const ContingencyTable& beta, const TableauPair& pq) {
  const auto& first = pq.p.rows();
  int cols = first.empty() ? 0 : static_cast<int>(first[0].size());
  long prod = 1;
  for (int c = 0; c < cols && prod != 0; ++c) {
    auto rows = pq.p.column(c);
    auto cls = pq.q.column(c);
    std::vector<std::vector<int>> sub;
    for (int r : rows) {
      std::vector<int> row;
      for (int q : cls) row.push_back(beta.at(r - 1, q - 1));
      sub.push_back(std::move(row));
    }
    prod *= small_det(sub);
  }
  return prod;
}

}  // namespace

int permutation_entry(const ContingencyTable& beta, const ContingencyTable& alpha) {
  if (!is_permutation_table(beta) || !is_permutation_table(alpha) || beta.rows() != alpha.rows())
    fail(ErrorKind::invalid_argument, "permutation_entry: both tables must be permutation matrices of one size");
  TableauPair pq = rsk(alpha);
  // beta restricted to a column of (P,Q) is a partial permutation matrix; its
  // determinant is the sign of the induced bijection, or 0.
  int d = beta.rows();
  std::vector<int> image(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (beta.at(i, j)) image[i] = j + 1;
  int sign = 1;
  int cols = pq.p.rows().empty() ? 0 : static_cast<int>(pq.p.rows()[0].size());
  for (int c = 0; c < cols; ++c) {
    auto rows = pq.p.column(c);
    auto qs = pq.q.column(c);
    std::vector<int> pos;
    for (int r : rows) {
      auto it = std::find(qs.begin(), qs.end(), image[r - 1]);
      if (it == qs.end()) return 0;
      pos.push_back(static_cast<int>(it - qs.begin()));
    }
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = i + 1; j < pos.size(); ++j)
        if (pos[i] > pos[j]) sign = -sign;
  }
  return sign;
}

int voting_entry(const ContingencyTable& beta, const ContingencyTable& alpha) {
  WeightVector s = alpha.row_margins();
  if (alpha.rows() != 2 || beta.rows() != 2 || beta.cols() != alpha.cols() ||
      beta.row_margins() != s || alpha.col_margins() != ones(alpha.cols()) ||
      beta.col_margins() != ones(beta.cols()))
    fail(ErrorKind::invalid_argument, "voting_entry: tables must share margins (sigma, 1^d) with two rows");
  return static_cast<int>(column_minor_product(beta, rsk(alpha)));
}

RskMatrix matrix_A_d(int d) {
  if (d < 2) fail(ErrorKind::invalid_argument, "matrix_A_d: d must be at least 2");
  WeightPair pair{WeightVector{d - 1, 1}, ones(d)};
  RskMatrix r{pair, enumerate_tables(pair.sigma, pair.pi), IntMatrix(d, d)};
  r.entries.at(0, 0) = 1;
  r.entries.at(0, 1) = 1;
  for (int i = 1; i < d - 1; ++i) r.entries.at(i, i + 1) = 1;
  for (int j = 1; j < d; ++j) r.entries.at(d - 1, j) = -1;
  return r;
}

bool is_triangular(const WeightPair& pair) {
  pair.validate();
  return pair.sigma.length() == 2 && pair.pi.length() >= 2 && pair.sigma[0] == pair.pi[0] &&
         pair.sigma[1] > 0 && std::all_of(pair.pi.entries.begin(), pair.pi.entries.end(), [](int x) { return x > 0; }) &&
         is_reduced(pair);
}

namespace {

WeightPair triangular_pair(const WeightVector& pi) {
  if (pi.length() < 2) fail(ErrorKind::invalid_argument, "triangular pair needs at least two parts in pi");
  WeightPair pair{WeightVector{pi[0], pi.degree() - pi[0]}, pi};
  if (!is_triangular(pair)) fail(ErrorKind::invalid_argument, "pair " + pair.str() + " is not triangular");
  return pair;
}

// Compositions tau of pi_1 bounded by pi, decreasing lexicographic order.
std::vector<std::vector<int>> bounded_compositions(const WeightVector& pi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(pi.entries.size());
  int n = pi.length();
  std::vector<int> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int j = n - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + pi[j];
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int x = std::min(left, pi[j]); x >= 0; --x) {
      if (left - x > suffix[j + 1]) break;
      cur[j] = x;
      self(self, j + 1, left - x);
    }
  };
  rec(rec, 0, pi[0]);
  return out;
}

}  // namespace

RskMatrix matrix_M_pi(const WeightVector& pi) {
  WeightPair pair = triangular_pair(pi);
  auto comps = bounded_compositions(pi);
  int dim = static_cast<int>(comps.size());
  RskMatrix r{pair, {}, IntMatrix(dim, dim)};
  for (const auto& tau : comps) {
    std::vector<int> flat(tau);
    for (int j = 0; j < pi.length(); ++j) flat.push_back(pi[j] - tau[j]);
    r.basis.emplace_back(2, pi.length(), std::move(flat));
  }
  for (int a = 0; a < dim; ++a) {
    const auto& rho = comps[a];
    for (int b = 0; b < dim; ++b) {
      const auto& tau = comps[b];
      BigInt v = (pi[0] - rho[0]) % 2 ? -1 : 1;
      for (int j = 1; j < pi.length() && v != 0; ++j) v *= binomial(tau[j], rho[j]);
      r.entries.at(a, b) = v;
    }
  }
  return r;
}

EigenSplit triangular_eigen_multiplicities(const WeightVector& pi) {
  triangular_pair(pi);
  EigenSplit s;
  for (const auto& rho : bounded_compositions(pi)) ((pi[0] - rho[0]) % 2 ? s.minus : s.plus)++;
  return s;
}

BigInt BlockDecomposition::total_dimension() const {
  BigInt total = n0;
  for (const auto& b : blocks) {
    BigInt dim = b.matrix ? BigInt(b.matrix->dim()) : count_tables(b.pair.sigma, b.pair.pi);
    total += b.multiplicity * dim;
  }
  return total;
}

BlockDecomposition assemble_blocks(int m, int n, int d, bool materialize, const Limits& limits) {
  BlockCounts counts = block_multiplicities(m, n, d);
  BlockDecomposition out{m, n, d, counts.n0, {}};
  // Reduced pairs arrive normalized, so each block is built once.
  for (auto& b : counts.blocks) {
    Block block{b.pair, b.multiplicity, std::nullopt};
    if (materialize) block.matrix = build_matrix(b.pair, limits);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

CommutingReport check_rsk_commuting_multiplication(const WeightPair& pair, int k, int l) {
  pair.validate();
  int m = pair.sigma.length(), n = pair.pi.length();
  if (k < 1 || k > m || l < 1 || l > n)
    fail(ErrorKind::invalid_argument, "check_rsk_commuting_multiplication: index out of range");
  CommutingReport rep;
  rep.predicate = pair.sigma[k - 1] + pair.pi[l - 1] >= pair.degree();
  WeightPair up = pair;
  ++up.sigma.entries[k - 1];
  ++up.pi.entries[l - 1];
  rep.onto = count_tables(up.sigma, up.pi) == count_tables(pair.sigma, pair.pi);
  rep.commutes = true;
  for_each_table(pair.sigma, pair.pi, [&](const ContingencyTable& alpha) {
    ContingencyTable raised = alpha;
    ++raised.at(k - 1, l - 1);
    MonomialPoly lhs = expand(bitableau_of(rsk(raised), m, n));
    MonomialPoly rhs;
    for (const auto& [t, c] : expand(bitableau_of(rsk(alpha), m, n))) {
      ContingencyTable s = t;
      ++s.at(k - 1, l - 1);
      rhs.emplace(std::move(s), c);
    }
    if (lhs != rhs) {
      rep.commutes = false;
      rep.witness = alpha;
      return false;
    }
    return true;
  });
  return rep;
}

DiagonalEntry diagonal_entry_construction(int N) {
  if (N < 1) fail(ErrorKind::invalid_argument, "diagonal_entry_construction: N must be positive");
  DiagonalEntry e;
  e.pair = {WeightVector{N + 2, N + 1}, WeightVector{N + 1, N + 1, 1}};
  e.table = ContingencyTable::from_rows({{1, N, 1}, {N, 1, 0}});
  e.entry = N % 2 ? -N : N;
  return e;
}

}  // namespace rskop
