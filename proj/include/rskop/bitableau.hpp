#pragma once

#include <map>
#include <vector>

#include "rskop/bigint.hpp"
#include "rskop/limits.hpp"
#include "rskop/table.hpp"
#include "rskop/tableau.hpp"

namespace rskop {

// Minor of the generic matrix on 1-based rows and columns.
struct Minor {
  std::vector<int> rows;
  std::vector<int> cols;
  int size() const { return static_cast<int>(rows.size()); }
  bool operator==(const Minor&) const = default;
};

// Product of minors whose c-th factor uses column c of P as row indices and
// column c of Q as column indices.
struct Bitableau {
  std::vector<Minor> minors;
  TableauPair source;
  int m = 0;  // size of the generic matrix the minors live in
  int n = 0;
};

// Sparse integer polynomial in the z_ij, keyed by exponent matrix.
using MonomialPoly = std::map<ContingencyTable, BigInt>;

// m and n default to the largest labels of P and Q.
Bitableau bitableau_of(const TableauPair& pair, int m = -1, int n = -1);

// Signed Leibniz expansion of one minor inside an m x n generic matrix.
MonomialPoly expand_minor(const Minor& minor, int m, int n);
MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b);
MonomialPoly expand(const Bitableau& b, const Limits& limits = default_limits());

// Value at z_ij = 1: 1 when every minor is 1x1, else 0.
int evaluate_all_ones(const Bitableau& b);

}  // namespace rskop
