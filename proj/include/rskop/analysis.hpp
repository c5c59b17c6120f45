#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rskop/bigint.hpp"
#include "rskop/weight.hpp"

namespace rskop {

// Determinant of RSK_{m,n,d} from block determinants and the parity of the
// block multiplicities.
int det_rsk(int m, int n, int d);
// Product of the determinants of every weight space, no reduction.
int det_rsk_direct(int m, int n, int d);

// Checks det_rsk at (m,n) against (m + 2^r, n) and (m, n + 2^r), with 2^r > d
// the smallest such power, for m in m_range and n in n_range.
bool verify_det_period(int d, int m_lo, int m_hi, int n_lo, int n_hi);

BigInt trace_rsk(int m, int n, int d, bool inverse = false);
BigInt trace_rsk_direct(int m, int n, int d, bool inverse = false);

struct PermSweep {
  std::int64_t trace = 0;
  std::int64_t zero_diagonal = 0;  // |C_d|
};

// Diagonal of RSK_{1^d,1^d} summed over all d! permutations, split into
// contiguous lexicographic rank ranges across workers.
PermSweep permutation_sweep(int d, int workers = 1);
std::int64_t trace_perm(int d, int workers = 1);
std::int64_t count_Cd(int d, int workers = 1);

struct ClassificationResult {
  int m = 0, n = 0, d = 0;
  bool diagonalizable = false;
  std::string dynkin_label;  // "A5", "D6", "E6".."E9", or "none"
  std::string rule;
};

ClassificationResult classify_diagonalizable(int m, int n, int d);
std::string dynkin_label(int m, int n, int d);

struct ConjectureReport {
  std::string id;
  std::string range;
  std::vector<WeightPair> counterexamples;
  int checked = 0;
  bool all_pass() const { return counterexamples.empty(); }
};

// Every reduced pair with the given lengths and degree <= degree_bound has a
// non-real eigenvalue.
ConjectureReport scan_conjecture_complex(int degree_bound, int len_sigma, int len_pi);
// Every non-triangular reduced pair has an eigenvalue other than +1 and -1.
ConjectureReport scan_conjecture_nonintegral(int degree_bound, int len_sigma, int len_pi);

// t^k - 1 divides the characteristic polynomial of the A_k block present in
// RSK_{m,n,d}.
bool roots_of_unity_presence(int k, int m, int n, int d);

}  // namespace rskop
