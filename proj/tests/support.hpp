#pragma once

// Independent oracles shared by the test binaries. Nothing here calls into
// the library routine it is used to check.

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rskop/bigint.hpp"
#include "rskop/linalg.hpp"
#include "rskop/table.hpp"
#include "rskop/tableau.hpp"
#include "rskop/weight.hpp"

namespace oracle {

using rskop::BigInt;
using rskop::BigRat;
using rskop::ContingencyTable;
using rskop::IntMatrix;
using rskop::IntPoly;
using rskop::Tableau;
using rskop::WeightVector;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Column-major comparison, larger entry first.
inline bool precedes(const ContingencyTable& a, const ContingencyTable& b) {
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (a.at(i, j) != b.at(i, j)) return a.at(i, j) > b.at(i, j);
  return false;
}

// Every m x n matrix with entries in [0, d], filtered by margins, then sorted.
inline std::vector<ContingencyTable> brute_tables(const WeightVector& sigma, const WeightVector& pi) {
  int m = sigma.length(), n = pi.length(), d = sigma.degree();
  std::vector<ContingencyTable> out;
  std::vector<int> e(static_cast<std::size_t>(m) * n, 0);
  while (true) {
    ContingencyTable t(m, n, e);
    if (t.row_margins() == sigma && t.col_margins() == pi) out.push_back(t);
    std::size_t k = 0;
    while (k < e.size() && e[k] == d) e[k++] = 0;
    if (k == e.size()) break;
    ++e[k];
  }
  std::sort(out.begin(), out.end(), precedes);
  return out;
}

inline ContingencyTable random_table(int m, int n, int max_entry) {
  std::vector<int> e(static_cast<std::size_t>(m) * n);
  for (auto& x : e) x = uniform(0, max_entry);
  return ContingencyTable(m, n, e);
}

// Row insertion written straight from the textbook description: bump the
// leftmost entry strictly larger, record the new box in the other tableau.
inline std::pair<Tableau, Tableau> schensted(const ContingencyTable& a) {
  std::vector<std::vector<int>> p, q;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.at(i, j); ++k) {
        int x = i + 1;
        std::size_t r = 0;
        while (true) {
          if (r == p.size()) {
            p.push_back({x});
            q.push_back({j + 1});
            break;
          }
          auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
          if (it == p[r].end()) {
            p[r].push_back(x);
            q[r].push_back(j + 1);
            break;
          }
          std::swap(*it, x);
          ++r;
        }
      }
  return {Tableau(p), Tableau(q)};
}

inline BigInt cofactor_det(const IntMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt total = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j)
        if (j != c) minor.at(i - 1, jj++) = m.at(i, j);
    BigInt term = m.at(0, c) * cofactor_det(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

// Faddeev-LeVerrier over the rationals.
inline IntPoly leverrier(const IntMatrix& a) {
  int n = a.rows();
  std::vector<std::vector<BigRat>> A(n, std::vector<BigRat>(n)), M(n, std::vector<BigRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = a.at(i, j);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[n] = 1;
  BigRat c = 1;
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<BigRat>> next(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigRat s = 0;
        for (int l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        next[i][j] = s + (i == j ? c : BigRat(0));
      }
    M = next;
    BigRat tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c = -tr / k;
    if (c.get_den() != 1) throw std::logic_error("non-integral coefficient");
    coeffs[n - k] = c.get_num();
  }
  return IntPoly(coeffs);
}

// Rank of a list of rational vectors.
inline int rank(std::vector<std::vector<BigRat>> rows) {
  int r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) piv = i;
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r && rows[i][c] != 0) {
        BigRat f = rows[i][c] / rows[r][c];
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
      }
    ++r;
  }
  return r;
}

// Degree of the minimal polynomial: the first k with I, M, ..., M^k dependent.
inline int min_poly_degree(const IntMatrix& m) {
  int n = m.rows();
  std::vector<std::vector<BigRat>> powers;
  IntMatrix p = IntMatrix::identity(n);
  for (int k = 0; k <= n; ++k) {
    std::vector<BigRat> flat;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(BigRat(p.at(i, j)));
    powers.push_back(flat);
    if (rank(powers) < static_cast<int>(powers.size())) return k;
    p = p * m;
  }
  return n;
}

// Expands a product like "(t-1)^2(t^2+t+1)^3" or "t^2 - 1" into a polynomial.
class FactorParser {
 public:
  explicit FactorParser(std::string s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  IntPoly parse() {
    IntPoly p = product();
    if (i_ != s_.size()) throw std::invalid_argument("trailing input in " + s_);
    return p;
  }

 private:
  IntPoly product() {
    IntPoly acc{1};
    while (i_ < s_.size() && s_[i_] == '(') {
      ++i_;
      IntPoly f = sum();
      expect(')');
      acc = acc * f.pow(exponent());
    }
    if (i_ < s_.size() && s_[i_] != ')') acc = acc * sum();
    return acc;
  }

  IntPoly sum() {
    IntPoly acc;
    bool first = true;
    while (i_ < s_.size() && s_[i_] != ')') {
      long sign = 1;
      if (s_[i_] == '+' || s_[i_] == '-') {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        throw std::invalid_argument("expected sign in " + s_);
      }
      first = false;
      long coef = 1;
      bool has_coef = false;
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        coef = number();
        has_coef = true;
      }
      int deg = 0;
      if (i_ < s_.size() && s_[i_] == 't') {
        ++i_;
        deg = exponent();
      } else if (!has_coef) {
        throw std::invalid_argument("empty term in " + s_);
      }
      acc = acc + IntPoly::monomial(deg, BigInt(sign * coef));
    }
    return acc;
  }

  int exponent() {
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      return static_cast<int>(number());
    }
    return 1;
  }

  long number() {
    long v = 0;
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = v * 10 + (s_[i_++] - '0');
    if (i_ == start) throw std::invalid_argument("expected number in " + s_);
    return v;
  }

  void expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) throw std::invalid_argument(std::string("expected ") + c + " in " + s_);
    ++i_;
  }

  std::string s_;
  std::size_t i_ = 0;
};

inline IntPoly expand(const std::string& factored) { return FactorParser(factored).parse(); }

inline IntMatrix mat(const std::vector<std::vector<long>>& rows) { return IntMatrix::from_rows(rows); }

}  // namespace oracle
