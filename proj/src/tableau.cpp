#include "rskop/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rskop/error.hpp"

namespace rskop {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

Partition Tableau::shape() const {
  Partition p;
  for (const auto& r : rows_) p.parts.push_back(static_cast<int>(r.size()));
  return p;
}

int Tableau::size() const { return shape().size(); }

std::vector<int> Tableau::column(int c) const {
  std::vector<int> out;
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) <= c) break;
    out.push_back(r[c]);
  }
  return out;
}

WeightVector Tableau::content(int labels) const {
  std::vector<int> c(static_cast<std::size_t>(std::max(labels, 0)), 0);
  for (const auto& r : rows_)
    for (int x : r)
      if (x >= 1 && x <= labels) ++c[x - 1];
  return WeightVector(std::move(c));
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.empty()) return false;
    if (i > 0 && r.size() > rows_[i - 1].size()) return false;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 1) return false;
      if (j > 0 && r[j - 1] > r[j]) return false;
      if (i > 0 && rows_[i - 1][j] >= r[j]) return false;
    }
  }
  return true;
}

std::string Tableau::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << rows_[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

Biletter BumpChain::value() const {
  if (biletters.empty()) return {};
  return {biletters.back().row, biletters.front().col};
}

// Mutating insertion shared by rsk, row_insert and bump chain tracking.
struct Inserter {
  // Inserts x; returns the 0-based cell added and the first-row position hit.
  static Cell insert(std::vector<std::vector<int>>& rows, int x, int* first_row_pos) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) rows.emplace_back();
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      int pos = static_cast<int>(it - row.begin());
      if (r == 0 && first_row_pos) *first_row_pos = pos;
      if (it == row.end()) {
        row.push_back(x);
        return {static_cast<int>(r), pos};
      }
      std::swap(*it, x);
    }
  }
};

std::vector<Biletter> biword(const ContingencyTable& alpha) {
  std::vector<Biletter> w;
  w.reserve(static_cast<std::size_t>(alpha.degree()));
  for (int j = 0; j < alpha.cols(); ++j)
    for (int i = 0; i < alpha.rows(); ++i)
      for (int k = 0; k < alpha.at(i, j); ++k) w.push_back({i + 1, j + 1});
  return w;
}

std::pair<Tableau, Cell> row_insert(const Tableau& t, int label) {
  if (!t.is_semistandard()) fail(ErrorKind::invalid_tableau, "row_insert: tableau " + t.str() + " is not semistandard");
  if (label < 1) fail(ErrorKind::invalid_tableau, "row_insert: labels must be positive");
  auto rows = t.rows();
  Cell c = Inserter::insert(rows, label, nullptr);
  return {Tableau(std::move(rows)), {c.row + 1, c.col + 1}};
}

namespace {

TableauPair insert_all(const ContingencyTable& alpha, std::vector<BumpChain>* chains) {
  std::vector<std::vector<int>> p, q;
  for (const Biletter& b : biword(alpha)) {
    int pos = 0;
    Cell c = Inserter::insert(p, b.row, &pos);
    if (static_cast<int>(q.size()) == c.row) q.emplace_back();
    q[c.row].push_back(b.col);
    if (chains) {
      if (pos == static_cast<int>(chains->size())) chains->push_back({pos + 1, {}});
      (*chains)[pos].biletters.push_back(b);
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

int max_label(const Tableau& t) {
  int m = 0;
  for (const auto& r : t.rows())
    for (int x : r) m = std::max(m, x);
  return m;
}

}  // namespace

TableauPair rsk(const ContingencyTable& alpha) { return insert_all(alpha, nullptr); }

std::vector<BumpChain> bump_chains(const ContingencyTable& alpha) {
  std::vector<BumpChain> chains;
  insert_all(alpha, &chains);
  return chains;
}

ContingencyTable inverse_rsk(const TableauPair& pair, int m, int n) {
  if (!pair.p.is_semistandard() || !pair.q.is_semistandard())
    fail(ErrorKind::invalid_pair, "inverse_rsk: tableaux must be semistandard");
  if (!(pair.p.shape() == pair.q.shape()))
    fail(ErrorKind::invalid_pair, "inverse_rsk: P and Q have different shapes");
  int mp = max_label(pair.p), mq = max_label(pair.q);
  if (m < 0) m = mp;
  if (n < 0) n = mq;
  if (mp > m || mq > n) fail(ErrorKind::invalid_pair, "inverse_rsk: labels exceed the table size");
  ContingencyTable alpha(m, n);
  auto p = pair.p.rows();
  auto q = pair.q.rows();
  while (!q.empty()) {
    // Largest label of Q, rightmost occurrence; it sits at the end of its row.
    int best = -1;
    for (std::size_t r = 0; r < q.size(); ++r) {
      if (best < 0 || q[r].back() > q[best].back() ||
          (q[r].back() == q[best].back() && q[r].size() > q[best].size()))
        best = static_cast<int>(r);
    }
    int col = q[best].back();
    q[best].pop_back();
    int x = p[best].back();
    p[best].pop_back();
    for (int r = best - 1; r >= 0; --r) {
      auto& row = p[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;  // rightmost entry strictly smaller than x
      std::swap(*it, x);
    }
    if (q[best].empty()) {
      q.erase(q.begin() + best);
      p.erase(p.begin() + best);
    }
    ++alpha.at(x - 1, col - 1);
  }
  return alpha;
}

namespace {

void strips(std::vector<std::vector<int>>& rows, int label, int remaining, std::size_t r,
            std::vector<std::vector<std::vector<int>>>& out) {
  if (remaining == 0) {
    out.push_back(rows);
    return;
  }
  if (r > rows.size()) return;
  int old_len = r < rows.size() ? static_cast<int>(rows[r].size()) : 0;
  // The strip may only reach under the previous row's old boxes.
  int bound = remaining;
  if (r > 0) {
    int above = static_cast<int>(rows[r - 1].size());
    // boxes of label in the row above were appended at its end; exclude them
    int above_old = above;
    while (above_old > 0 && rows[r - 1][above_old - 1] == label) --above_old;
    bound = std::min(bound, above_old - old_len);
  }
  for (int a = bound; a >= 0; --a) {
    if (a == 0) {
      if (r < rows.size()) strips(rows, label, remaining, r + 1, out);
      continue;
    }
    bool fresh = r == rows.size();
    if (fresh) rows.emplace_back();
    rows[r].insert(rows[r].end(), static_cast<std::size_t>(a), label);
    strips(rows, label, remaining - a, r + 1, out);
    rows[r].resize(static_cast<std::size_t>(old_len));
    if (fresh) rows.pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const WeightVector& content) {
  std::vector<std::vector<std::vector<int>>> current{{}};
  for (int i = 0; i < content.length(); ++i) {
    if (content[i] < 0) fail(ErrorKind::invalid_weight, "negative content entry");
    std::vector<std::vector<std::vector<int>>> next;
    for (auto& rows : current) strips(rows, i + 1, content[i], 0, next);
    current = std::move(next);
  }
  std::vector<Tableau> out;
  out.reserve(current.size());
  for (auto& rows : current) out.emplace_back(std::move(rows));
  return out;
}

std::vector<TableauPair> enumerate_ssyt_pairs(const WeightVector& sigma, const WeightVector& pi) {
  WeightPair{sigma, pi}.validate();
  std::map<std::vector<int>, std::vector<Tableau>> by_shape;
  for (auto& q : enumerate_ssyt(pi)) by_shape[q.shape().parts].push_back(std::move(q));
  std::vector<std::pair<ContingencyTable, TableauPair>> keyed;
  for (auto& p : enumerate_ssyt(sigma)) {
    auto it = by_shape.find(p.shape().parts);
    if (it == by_shape.end()) continue;
    for (const auto& q : it->second) {
      TableauPair pair{p, q};
      keyed.emplace_back(inverse_rsk(pair, sigma.length(), pi.length()), pair);
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return basis_precedes(a.first, b.first); });
  std::vector<TableauPair> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace rskop
