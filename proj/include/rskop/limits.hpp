#pragma once

#include <cstddef>

namespace rskop {

// Size guards for enumeration and expansion. The defaults cover every
// computation the tables and scanners perform.
struct Limits {
  std::size_t max_basis = 2'000'000;
  std::size_t max_terms = 20'000'000;
  std::size_t max_dense_dim = 6'000;  // side of the largest dense matrix built
  int max_perm_degree = 11;
};

// Process-wide defaults, read once from RSKOP_MAX_BASIS if set.
Limits& default_limits();

}  // namespace rskop
