#pragma once

// Exact integer matrices and univariate integer polynomials.

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "rskop/bigint.hpp"

namespace rskop {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  BigInt& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  bool is_zero() const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> e_;
};

// Dense polynomial, coefficients ascending, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> ascending);
  explicit IntPoly(std::vector<BigInt> ascending);
  static IntPoly monomial(int degree, const BigInt& c = 1);
  // Product of (t - root).
  static IntPoly linear(long root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int k) const;
  const BigInt& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const BigInt& s) const;
  IntPoly pow(int e) const;
  bool operator==(const IntPoly& o) const = default;

  BigInt eval(const BigInt& x) const;
  IntPoly derivative() const;
  BigInt content() const;  // gcd of coefficients, sign of the lead; 0 for zero
  IntPoly primitive() const;
  std::string str() const;  // "t^3 + 2t^2 + 1"

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Exact division a = q*b for monic b, or any b dividing a over Z. Throws
// internal when the division is not exact.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly lcm_monic(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);
// a / gcd(a, a'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& a);

IntMatrix evaluate(const IntPoly& p, const IntMatrix& m);

BigInt det(const IntMatrix& m);
BigInt trace(const IntMatrix& m);
IntPoly char_poly(const IntMatrix& m);
IntPoly min_poly(const IntMatrix& m);
bool is_diagonalizable(const IntMatrix& m);
// Exact inverse; throws internal unless every entry is an integer.
IntMatrix integer_inverse(const IntMatrix& m);

int sturm_real_root_count(const IntPoly& p);
bool irreducible_mod2(const IntPoly& p);
std::set<BigInt> rational_roots(const IntPoly& monic);

struct PlusMinusOneSplit {
  int a = 0;  // multiplicity of t - 1
  int b = 0;  // multiplicity of t + 1
  IntPoly remainder;
};
PlusMinusOneSplit strip_pm1_factors(const IntPoly& p);

}  // namespace rskop
