#pragma once

// Row insertion, RSK and its inverse, and bump chains.
//
// Convention: a matrix is read as a biword down each column, left to right,
// emitting alpha(i,j) copies of the biletter (i|j). The row labels i are
// inserted into P and the column labels j record the new boxes in Q. This is
// the transpose of the convention in Fulton's "Young Tableaux" and Stanley's
// EC2, whose (P,Q) is our (Q,P).

#include <string>
#include <utility>
#include <vector>

#include "rskop/table.hpp"
#include "rskop/weight.hpp"

namespace rskop {

struct Partition {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  bool operator==(const Partition&) const = default;
};

// Rows of positive labels. The empty tableau has no rows.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  // Labels of column c (0-based), top to bottom.
  std::vector<int> column(int c) const;
  // Multiplicity of each label 1..labels.
  WeightVector content(int labels) const;
  bool is_semistandard() const;
  std::string str() const;

  bool operator==(const Tableau&) const = default;

 private:
  friend struct Inserter;
  std::vector<std::vector<int>> rows_;
};

struct Biletter {
  int row = 0;  // p, inserted into P
  int col = 0;  // q, recorded in Q
  bool operator==(const Biletter&) const = default;
};

struct TableauPair {
  Tableau p;
  Tableau q;
  bool operator==(const TableauPair&) const = default;
};

// The biletters inserted into one box of the first row, in insertion order.
struct BumpChain {
  int column_index = 0;  // 1-based box position in the first row
  std::vector<Biletter> biletters;
  // The biletter read from box c of the first rows of (P,Q): the row label of
  // the last member with the column label of the first.
  Biletter value() const;
};

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  bool operator==(const Cell&) const = default;
};

std::vector<Biletter> biword(const ContingencyTable& alpha);

std::pair<Tableau, Cell> row_insert(const Tableau& t, int label);

TableauPair rsk(const ContingencyTable& alpha);

// m and n fix the size of the result; by default the largest labels present.
ContingencyTable inverse_rsk(const TableauPair& pair, int m = -1, int n = -1);

std::vector<BumpChain> bump_chains(const ContingencyTable& alpha);

// All pairs of semistandard tableaux with contents (sigma, pi) and a common
// shape, listed so that the k-th pair is rsk of the k-th basis table.
std::vector<TableauPair> enumerate_ssyt_pairs(const WeightVector& sigma,
                                              const WeightVector& pi);

// Semistandard tableaux of the given content, any shape.
std::vector<Tableau> enumerate_ssyt(const WeightVector& content);

}  // namespace rskop
