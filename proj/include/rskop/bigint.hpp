#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rskop {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k) with C(n, k) = 0 for k < 0 or k > n >= 0.
BigInt binomial(long n, long k);

// Parity of C(n, k) by Lucas: odd iff the bits of k are a subset of those of n.
bool binomial_is_odd(std::uint64_t n, std::uint64_t k);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace rskop
