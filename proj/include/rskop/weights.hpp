#pragma once

// Weight-pair normalization, growth matrices, reduction and the block
// multiplicities of RSK_{m,n,d}.

#include <vector>

#include "rskop/bigint.hpp"
#include "rskop/table.hpp"
#include "rskop/weight.hpp"

namespace rskop {

struct Normalized {
  WeightPair pair;
  bool transposed = false;
};

// Drops zero entries, then transposes if needed so that len(sigma) <=
// len(pi), and for equal lengths sigma >= pi lexicographically.
Normalized normalize(const WeightPair& pair);
bool is_normalized(const WeightPair& pair);

// g(i,j) = sigma_i + pi_j - d, as a len(sigma) x len(pi) row-major matrix.
struct GrowthMatrix {
  int rows = 0, cols = 0;
  std::vector<int> entries;
  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
  int zero_count() const;
};

GrowthMatrix growth_matrix(const WeightPair& pair);

// max sigma + max pi <= d. The zero pair counts as reduced.
bool is_reduced(const WeightPair& pair);

struct ReductionRecord {
  WeightPair original;
  WeightPair reduced;
  ContingencyTable divisor;  // exponents max(g(i,j), 0)
};

ReductionRecord reduce(const WeightPair& pair);

// Pairs reached by multiplying by z_kl with sigma_k + pi_l >= d (upward) and
// by dividing by z_kl with g(k,l) > 0 (downward). Indices are not
// renormalized.
std::vector<WeightPair> poset_covers(const WeightPair& pair);
std::vector<WeightPair> poset_lower_covers(const WeightPair& pair);
// Every pair reachable by repeated downward covers, including pair itself.
std::vector<WeightPair> downward_closure(const WeightPair& pair);

// Number of degree-d pairs with positive entries and the same lengths that
// reduce to the given nonzero reduced pair. For two-row pairs (aa, aa) both
// orders of each pair are counted, matching the block multiplicities.
BigInt count_A(const WeightPair& reduced, int d);

struct BlockMultiplicity {
  WeightPair pair;
  BigInt multiplicity;
};

struct BlockCounts {
  BigInt n0;
  std::vector<BlockMultiplicity> blocks;
};

BlockCounts block_multiplicities(int m, int n, int d);

// dim R_{m,n,d} = C(mn + d - 1, d).
BigInt monomial_count(int m, int n, int d);

// Normalized nonzero reduced pairs with degree <= d_max and lengths within
// the bounds, ordered by degree, len(sigma), len(pi), then sigma and pi in
// decreasing lexicographic order.
std::vector<WeightPair> enumerate_reduced_pairs(int d_max, int max_len_sigma,
                                                int max_len_pi);

// Compositions of d into exactly len positive parts, decreasing lex order.
std::vector<WeightVector> compositions(int d, int len);

}  // namespace rskop
