#pragma once

// RSK as a matrix on a weight space: column alpha holds the expansion of the
// bitableau of rsk(alpha) in the monomial basis, both indexed by Cont(sigma,
// pi) in basis order.

#include <optional>
#include <vector>

#include "rskop/bigint.hpp"
#include "rskop/limits.hpp"
#include "rskop/linalg.hpp"
#include "rskop/table.hpp"
#include "rskop/weight.hpp"

namespace rskop {

struct RskMatrix {
  WeightPair pair;
  std::vector<ContingencyTable> basis;
  IntMatrix entries;

  int dim() const { return static_cast<int>(basis.size()); }
  // Position of a table in the basis, or -1.
  int index_of(const ContingencyTable& t) const;
};

RskMatrix build_matrix(const WeightPair& pair, const Limits& limits = default_limits());
// The inverse by exact elimination; entries are checked to be integers.
RskMatrix build_inverse(const WeightPair& pair, const Limits& limits = default_limits());

// Entry (beta, alpha) of RSK_{1^d,1^d}: product over columns c of the shape
// of det of beta restricted to column c of P (rows) and of Q (columns).
int permutation_entry(const ContingencyTable& beta, const ContingencyTable& alpha);
// Same product for two-row sigma and pi = 1^d.
int voting_entry(const ContingencyTable& beta, const ContingencyTable& alpha);

// The d x d matrix of RSK_{(d-1)1, 1^d} in closed form.
RskMatrix matrix_A_d(int d);

// Closed form for sigma = (pi_1, |pi| - pi_1), requiring the pair reduced.
RskMatrix matrix_M_pi(const WeightVector& pi);
bool is_triangular(const WeightPair& pair);

struct EigenSplit {
  int plus = 0;
  int minus = 0;
};
EigenSplit triangular_eigen_multiplicities(const WeightVector& pi);

struct Block {
  WeightPair pair;
  BigInt multiplicity;
  std::optional<RskMatrix> matrix;
};

struct BlockDecomposition {
  int m = 0, n = 0, d = 0;
  BigInt n0;
  std::vector<Block> blocks;
  BigInt total_dimension() const;  // needs materialized blocks
};

BlockDecomposition assemble_blocks(int m, int n, int d, bool materialize,
                                   const Limits& limits = default_limits());

struct CommutingReport {
  bool predicate = false;  // sigma_k + pi_l >= d
  bool commutes = false;
  bool onto = false;
  std::optional<ContingencyTable> witness;  // first table that fails
  bool agrees() const { return predicate == (commutes && onto); }
};

// Direct check that multiplication by z_kl (1-based) commutes with RSK on
// Cont(sigma, pi) and is onto Cont(sigma + e_k, pi + e_l).
CommutingReport check_rsk_commuting_multiplication(const WeightPair& pair, int k, int l);

struct DiagonalEntry {
  WeightPair pair;
  ContingencyTable table;
  BigInt entry;
};

// A table whose diagonal entry has absolute value N.
DiagonalEntry diagonal_entry_construction(int N);

}  // namespace rskop
