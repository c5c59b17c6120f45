#pragma once

#include <functional>
#include <vector>

#include "rskop/bigint.hpp"
#include "rskop/limits.hpp"
#include "rskop/table.hpp"
#include "rskop/weight.hpp"

namespace rskop {

// Swap move S(r,r'|c,c'): +1 at (r,c) and (r',c'), -1 at (r,c') and (r',c).
// Indices are 1-based, naming the variables z_rc.
struct SwapMove {
  int r = 0, r2 = 0;
  int c = 0, c2 = 0;
};

// Calls visit for each table with margins (sigma, pi) in basis order. Stops
// early when visit returns false. Returns the number of tables visited.
std::size_t for_each_table(const WeightVector& sigma, const WeightVector& pi,
                           const std::function<bool(const ContingencyTable&)>& visit);

// Cont(sigma, pi) in basis order. Throws capacity above limits.max_basis.
std::vector<ContingencyTable> enumerate_tables(const WeightVector& sigma,
                                               const WeightVector& pi,
                                               const Limits& limits = default_limits());

// |Cont(sigma, pi)| by dynamic programming over columns, without listing.
BigInt count_tables(const WeightVector& sigma, const WeightVector& pi);

// The north-west greedy filling, which is the first basis table.
ContingencyTable canonical_table(const WeightVector& sigma, const WeightVector& pi);

ContingencyTable apply_swap(const ContingencyTable& alpha, const SwapMove& s);

}  // namespace rskop
