#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "rskop/weight.hpp"

namespace rskop {

// Nonnegative integer matrix, the exponent matrix of a monomial in the
// generic matrix entries z_ij. Storage is row-major; at() is 0-based.
class ContingencyTable {
 public:
  ContingencyTable() = default;
  ContingencyTable(int rows, int cols);
  ContingencyTable(int rows, int cols, std::vector<int> entries);
  static ContingencyTable from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<int>& flat() const { return e_; }

  WeightVector row_margins() const;
  WeightVector col_margins() const;
  int degree() const;
  ContingencyTable transpose() const;
  std::vector<std::vector<int>> to_rows() const;
  // "0,3,2;1,2,0;2,0,2"
  std::string str() const;

  bool operator==(const ContingencyTable&) const = default;
  // Shape first, then row-major entries. Only used for keyed containers.
  std::strong_ordering operator<=>(const ContingencyTable& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> e_;
};

// True when a comes strictly before b in the basis order: compare exponents
// in the variable order z11 > z21 > ... > zm1 > z12 > ..., larger first.
// Both tables must have the same shape.
bool basis_precedes(const ContingencyTable& a, const ContingencyTable& b);

struct TableHash {
  std::size_t operator()(const ContingencyTable& t) const noexcept;
};

}  // namespace rskop
