#include "rskop/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "rskop/error.hpp"

namespace rskop {

// ---- IntMatrix ----

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) fail(ErrorKind::invalid_argument, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::invalid_argument, "matrix product size mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::invalid_argument, "matrix sum size mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::invalid_argument, "matrix difference size mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i].push_back(at(i, j).get_str());
  return out;
}

// ---- IntPoly ----

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long x : ascending) c_.emplace_back(x);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly IntPoly::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(long root) { return IntPoly{-root, 1}; }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
  IntPoly r = *this;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

IntPoly IntPoly::pow(int e) const {
  IntPoly r{1};
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  if (c_.empty()) return 0;
  BigInt g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return lead() < 0 ? BigInt(-g) : g;
}

IntPoly IntPoly::primitive() const {
  if (c_.empty()) return {};
  BigInt g = content();
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || k == 0) os << a.get_str();
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(ErrorKind::internal, "polynomial division by zero");
  std::vector<BigInt> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) {
    if (!a.is_zero()) fail(ErrorKind::internal, "inexact polynomial division");
    return {};
  }
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), b.lead().get_mpz_t()))
      fail(ErrorKind::internal, "inexact polynomial division");
    BigInt f = rem[k] / b.lead();
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeffs()[i];
  }
  for (const auto& x : rem)
    if (x != 0) fail(ErrorKind::internal, "inexact polynomial division");
  return IntPoly(std::move(q));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) fail(ErrorKind::internal, "pseudo-remainder by zero");
  std::vector<BigInt> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return a;
  const BigInt& lb = b.lead();
  for (int k = da; k >= db; --k) {
    BigInt f = r[k];
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_rem(x, y);
    x = y;
    y = r.primitive();
  }
  return x.primitive();
}

IntPoly lcm_monic(const IntPoly& a, const IntPoly& b) {
  IntPoly g = gcd(a, b);
  IntPoly r = exact_div(a * b, g);
  if (!r.is_zero() && r.lead() < 0) r = -r;
  return r;
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  return pseudo_rem(a, b).is_zero();
}

IntPoly squarefree_part(const IntPoly& a) {
  if (a.degree() <= 0) return a.primitive();
  return exact_div(a.primitive(), gcd(a, a.derivative())).primitive();
}

IntMatrix evaluate(const IntPoly& p, const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::invalid_argument, "evaluate: matrix must be square");
  IntMatrix r(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) {
    r = r * m;
    for (int i = 0; i < m.rows(); ++i) r.at(i, i) += p.coeffs()[k];
  }
  return r;
}

// ---- matrix invariants ----

BigInt det(const IntMatrix& m0) {
  if (!m0.square()) fail(ErrorKind::invalid_argument, "det: matrix must be square");
  int n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  BigInt r = m.at(n - 1, n - 1);
  return sign < 0 ? BigInt(-r) : r;
}

BigInt trace(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::invalid_argument, "trace: matrix must be square");
  BigInt t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

IntPoly char_poly(const IntMatrix& a) {
  if (!a.square()) fail(ErrorKind::invalid_argument, "char_poly: matrix must be square");
  int n = a.rows();
  if (n == 0) return IntPoly{1};
  // Berkowitz: coefficients kept highest degree first.
  std::vector<BigInt> v{BigInt(1), BigInt(-a.at(0, 0))};
  for (int r = 1; r < n; ++r) {
    std::vector<BigInt> c(static_cast<std::size_t>(r) + 2);
    c[0] = 1;
    c[1] = -a.at(r, r);
    // x runs through A_r^k S for the leading r x r block A_r.
    std::vector<BigInt> x(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) x[i] = a.at(i, r);
    for (int k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i) dot += a.at(r, i) * x[i];
      c[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<BigInt> y(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (a.at(i, j) != 0) y[i] += a.at(i, j) * x[j];
        x = std::move(y);
      }
    }
    std::vector<BigInt> w(static_cast<std::size_t>(r) + 2);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) w[i] += c[i - j] * v[j];
    v = std::move(w);
  }
  std::reverse(v.begin(), v.end());
  return IntPoly(std::move(v));
}

namespace {

std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& x) {
  std::vector<BigInt> y(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && x[j] != 0) y[i] += m.at(i, j) * x[j];
  return y;
}

bool annihilates(const IntPoly& p, const IntMatrix& m, int col) {
  // Horner on the vector e_col.
  std::vector<BigInt> acc(static_cast<std::size_t>(m.rows()));
  for (int k = p.degree(); k >= 0; --k) {
    acc = mat_vec(m, acc);
    acc[col] += p.coeffs()[k];
  }
  return std::all_of(acc.begin(), acc.end(), [](const BigInt& x) { return x == 0; });
}

// Monic annihilator of least degree for the Krylov sequence of e_col.
IntPoly krylov_annihilator(const IntMatrix& m, int col) {
  int n = m.rows();
  // Echelon rows over Q, each with its expression in the Krylov powers.
  std::vector<std::vector<BigRat>> rows, combos;
  std::vector<int> pivots;
  std::vector<BigInt> v(static_cast<std::size_t>(n));
  v[col] = 1;
  for (int k = 0; k <= n; ++k) {
    std::vector<BigRat> w(v.begin(), v.end());
    std::vector<BigRat> comb(static_cast<std::size_t>(n) + 1);
    comb[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const BigRat& f = w[pivots[r]];
      if (f == 0) continue;
      BigRat s = f;
      for (int j = 0; j < n; ++j)
        if (rows[r][j] != 0) w[j] -= s * rows[r][j];
      for (int j = 0; j <= n; ++j)
        if (combos[r][j] != 0) comb[j] -= s * combos[r][j];
    }
    int p = -1;
    for (int j = 0; j < n; ++j)
      if (w[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      // comb is a monic relation of degree k among the Krylov vectors.
      std::vector<BigInt> out(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j <= k; ++j) {
        if (comb[j].get_den() != 1) fail(ErrorKind::internal, "non-integral minimal polynomial");
        out[j] = comb[j].get_num();
      }
      return IntPoly(std::move(out));
    }
    BigRat inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& x : comb) x *= inv;
    rows.push_back(std::move(w));
    combos.push_back(std::move(comb));
    pivots.push_back(p);
    v = mat_vec(m, v);
  }
  fail(ErrorKind::internal, "Krylov sequence failed to become dependent");
}

}  // namespace

IntPoly min_poly(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::invalid_argument, "min_poly: matrix must be square");
  int n = m.rows();
  IntPoly mu{1};
  for (int j = 0; j < n; ++j) {
    // Once mu kills e_j the annihilator of e_j divides it already.
    if (annihilates(mu, m, j)) continue;
    mu = lcm_monic(mu, krylov_annihilator(m, j));
    if (mu.degree() == n) break;
  }
  // mu(M) e_j = 0 was reached for every j, or mu is the characteristic
  // polynomial; both give mu(M) = 0.
  if (mu.degree() == n && !(mu == char_poly(m)))
    fail(ErrorKind::internal, "minimal polynomial of full degree differs from the characteristic polynomial");
  return mu;
}

bool is_diagonalizable(const IntMatrix& m) {
  IntPoly mu = min_poly(m);
  return gcd(mu, mu.derivative()).degree() <= 0;
}

IntMatrix integer_inverse(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::invalid_argument, "inverse: matrix must be square");
  int n = m.rows();
  std::vector<std::vector<BigRat>> a(static_cast<std::size_t>(n), std::vector<BigRat>(2 * static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) fail(ErrorKind::internal, "matrix is singular");
    std::swap(a[k], a[p]);
    BigRat inv = 1 / a[k][k];
    for (auto& x : a[k]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      BigRat f = a[i][k];
      for (int j = 0; j < 2 * n; ++j)
        if (a[k][j] != 0) a[i][j] -= f * a[k][j];
    }
  }
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const BigRat& x = a[i][n + j];
      if (x.get_den() != 1) fail(ErrorKind::internal, "inverse has a non-integer entry");
      r.at(i, j) = x.get_num();
    }
  return r;
}

// ---- root questions ----

int sturm_real_root_count(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::invalid_argument, "sturm_real_root_count: zero polynomial");
  IntPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  std::vector<IntPoly> chain{s, s.derivative().primitive()};
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_rem(a, b);
    int delta = a.degree() - b.degree() + 1;
    // the pseudo-remainder carries lead(b)^delta; undo a negative factor
    if (b.lead() < 0 && delta % 2 != 0) r = -r;
    if (r.is_zero()) break;
    BigInt c = abs(r.content());
    r = -r;
    IntPoly scaled(std::vector<BigInt>(r.coeffs()));
    std::vector<BigInt> co = scaled.coeffs();
    for (auto& x : co) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    chain.emplace_back(std::move(co));
  }
  auto variations = [&](bool at_plus) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
      int sg = sgn(q.lead());
      if (!at_plus && q.degree() % 2 != 0) sg = -sg;
      if (sg != 0) {
        if (last != 0 && sg != last) ++count;
        last = sg;
      }
    }
    return count;
  };
  return variations(false) - variations(true);
}

namespace {

// Polynomials over GF(2): coefficient bytes, ascending, trimmed.
using Gf2 = std::vector<unsigned char>;

void gf2_trim(Gf2& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Gf2 gf2_mod(Gf2 a, const Gf2& f) {
  int df = static_cast<int>(f.size()) - 1;
  gf2_trim(a);
  while (static_cast<int>(a.size()) - 1 >= df) {
    int shift = static_cast<int>(a.size()) - 1 - df;
    for (int i = 0; i <= df; ++i) a[shift + i] ^= f[i];
    gf2_trim(a);
  }
  return a;
}

Gf2 gf2_mulmod(const Gf2& a, const Gf2& b, const Gf2& f) {
  if (a.empty() || b.empty()) return {};
  Gf2 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
  return gf2_mod(std::move(r), f);
}

Gf2 gf2_gcd(Gf2 a, Gf2 b) {
  gf2_trim(a);
  gf2_trim(b);
  while (!b.empty()) {
    Gf2 r = gf2_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool irreducible_mod2(const IntPoly& p) {
  Gf2 f;
  for (const auto& c : p.coeffs()) f.push_back(mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
  gf2_trim(f);
  if (f.empty()) fail(ErrorKind::invalid_argument, "irreducible_mod2: polynomial vanishes mod 2");
  int n = static_cast<int>(f.size()) - 1;
  if (n == 0) return false;
  Gf2 x{0, 1};
  Gf2 h = gf2_mod(x, f);
  for (int k = 1; k <= n / 2; ++k) {
    h = gf2_mulmod(h, h, f);  // x^(2^k) mod f
    Gf2 diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] ^= 1;
    gf2_trim(diff);
    Gf2 g = gf2_gcd(f, diff);
    if (g.size() != 1) return false;
  }
  return true;
}

std::set<BigInt> rational_roots(const IntPoly& p) {
  if (!p.is_monic()) fail(ErrorKind::invalid_argument, "rational_roots: polynomial must be monic");
  std::set<BigInt> roots;
  IntPoly q = p;
  while (q.degree() > 0 && q.coeffs()[0] == 0) {
    roots.insert(0);
    q = exact_div(q, IntPoly{0, 1});
  }
  if (q.degree() <= 0) return roots;
  BigInt c = abs(q.coeffs()[0]);
  if (c > BigInt("1000000000000"))
    fail(ErrorKind::capacity, "rational_roots: constant term too large to enumerate divisors");
  unsigned long long cv = std::stoull(c.get_str());
  for (unsigned long long d = 1; d * d <= cv; ++d) {
    if (cv % d) continue;
    for (unsigned long long e : {d, cv / d})
      for (int s : {1, -1}) {
        BigInt x = BigInt(std::to_string(e)) * s;
        if (q.eval(x) == 0) roots.insert(x);
      }
  }
  return roots;
}

PlusMinusOneSplit strip_pm1_factors(const IntPoly& p) {
  if (p.is_zero()) fail(ErrorKind::invalid_argument, "strip_pm1_factors: zero polynomial");
  PlusMinusOneSplit s;
  s.remainder = p;
  while (s.remainder.degree() > 0 && s.remainder.eval(1) == 0) {
    s.remainder = exact_div(s.remainder, IntPoly::linear(1));
    ++s.a;
  }
  while (s.remainder.degree() > 0 && s.remainder.eval(-1) == 0) {
    s.remainder = exact_div(s.remainder, IntPoly::linear(-1));
    ++s.b;
  }
  return s;
}

}  // namespace rskop
