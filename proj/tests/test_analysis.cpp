#include "doctest.h"
#include "golden.hpp"
#include "rskop/analysis.hpp"
#include "rskop/bitableau.hpp"
#include "rskop/contingency.hpp"
#include "rskop/error.hpp"
#include "rskop/operator.hpp"
#include "rskop/weights.hpp"
#include "support.hpp"

using namespace rskop;

namespace {

// Sum of the diagonal of RSK_{1^d,1^d} read off the bitableau expansion.
BigInt expansion_trace(int d) {
  BigInt s = 0;
  for (const auto& t : enumerate_tables(ones(d), ones(d))) {
    MonomialPoly p = expand(bitableau_of(rsk(t), d, d));
    auto it = p.find(t);
    if (it != p.end()) s += it->second;
  }
  return s;
}

}  // namespace

TEST_CASE("determinant grid") {
  const auto& g = golden::det_grid();
  for (int m = 1; m <= 5; ++m)
    for (int d = 1; d <= static_cast<int>(g[m - 1].size()); ++d) {
      CAPTURE(m);
      CAPTURE(d);
      CHECK(det_rsk(m, m, d) == g[m - 1][d - 1]);
    }
}

TEST_CASE("formula determinant equals the direct product") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d) CHECK(det_rsk(m, n, d) == det_rsk_direct(m, n, d));
}

TEST_CASE("determinant periodicity in m and n") {
  for (int d = 1; d <= 4; ++d) CHECK(verify_det_period(d, 1, 12, 1, 4));
}

TEST_CASE("trace grids") {
  const auto& g = golden::trace_grid();
  const auto& gi = golden::trace_inverse_grid();
  for (int m = 1; m <= 5; ++m)
    for (int d = 1; d <= static_cast<int>(g[m - 1].size()); ++d) {
      CAPTURE(m);
      CAPTURE(d);
      CHECK(trace_rsk(m, m, d) == g[m - 1][d - 1]);
      CHECK(trace_rsk(m, m, d, true) == gi[m - 1][d - 1]);
    }
}

TEST_CASE("formula trace equals the direct sum") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d) {
        CHECK(trace_rsk(m, n, d) == trace_rsk_direct(m, n, d));
        CHECK(trace_rsk(m, n, d, true) == trace_rsk_direct(m, n, d, true));
      }
}

TEST_CASE("closed trace formulas in low degree") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      CHECK(trace_rsk(m, n, 1) == m * n);
      CHECK(trace_rsk(m, n, 2) * 2 == m * n * (n + 1) + n * m * (m + 1) - 2 * m * n);
      BigInt t3 = binomial(n + 2, 3) * m + binomial(m + 2, 3) * n - m * n - 3 * binomial(m, 3) * binomial(n, 3) -
                  (binomial(m, 2) * binomial(n, 3) + binomial(m, 3) * binomial(n, 2));
      CHECK(trace_rsk(m, n, 3) == t3);
    }
  for (int m = 1; m <= 8; ++m) {
    long m2 = m * m;
    CHECK(trace_rsk(m, m, 2) == m2 * m);
    CHECK(trace_rsk(m, m, 3) * 12 == -m2 * (m2 * m2 - 4 * m2 * m + m2 - 14 * m + 4));
  }
}

TEST_CASE("two by two traces follow the concentric-squares recurrence") {
  std::vector<BigInt> s;
  for (int d = 0; d <= 12; ++d) s.push_back(trace_rsk(2, 2, d));
  for (int d = 4; d <= 12; ++d) CHECK(s[d] == 4 * d + s[d - 4]);
  for (int d = 1; d <= 10; ++d) CHECK(trace_rsk(2, 2, d, true) == trace_rsk(2, 2, d));
}

TEST_CASE("permutation sweep against two independent routes") {
  for (int d = 1; d <= 6; ++d) CHECK(trace_perm(d) == trace(build_matrix({ones(d), ones(d)}).entries));
  for (int d = 1; d <= 7; ++d) CHECK(BigInt(static_cast<long>(trace_perm(d))) == expansion_trace(d));
  const auto& want = golden::permutation_traces();
  for (int d = 1; d <= 7; ++d) CHECK(trace_perm(d) == want[d - 1]);
  CHECK(trace_perm(9) == want[8]);
  CHECK(trace_perm(0) == 1);
}

TEST_CASE("sweep is identical across worker counts") {
  for (int d = 5; d <= 9; ++d) {
    PermSweep one = permutation_sweep(d, 1);
    for (int w : {2, 3, 7}) {
      PermSweep many = permutation_sweep(d, w);
      CHECK(many.trace == one.trace);
      CHECK(many.zero_diagonal == one.zero_diagonal);
    }
  }
}

TEST_CASE("zero-diagonal census") {
  const auto& want = golden::zero_diagonal_counts();
  for (int d = 1; d <= 9; ++d) CHECK(count_Cd(d) == want[d - 1]);
  for (int d = 1; d <= 6; ++d) {
    RskMatrix m = build_matrix({ones(d), ones(d)});
    long zeros = 0;
    for (int i = 0; i < m.dim(); ++i) zeros += m.entries.at(i, i) == 0;
    CHECK(count_Cd(d) == zeros);
  }
  CHECK_THROWS_AS(permutation_sweep(12), Error);
}

TEST_CASE("classification against per-block minimal polynomials") {
  std::vector<std::array<int, 3>> cases;
  for (int d = 1; d <= 12; ++d) cases.push_back({2, 2, d});
  for (int d = 1; d <= 8; ++d) cases.push_back({2, 3, d});
  for (int d = 1; d <= 7; ++d) cases.push_back({3, 3, d});
  for (int d = 1; d <= 6; ++d) cases.push_back({2, 4, d});
  cases.push_back({3, 4, 4});
  for (auto [m, n, d] : cases) {
    CAPTURE(m);
    CAPTURE(n);
    CAPTURE(d);
    bool all = true;
    for (const auto& b : block_multiplicities(m, n, d).blocks) all = all && is_diagonalizable(build_matrix(b.pair).entries);
    ClassificationResult r = classify_diagonalizable(m, n, d);
    CHECK(r.diagonalizable == all);
    bool expected = (m == 2 && n == 2) || (m == 2 && n == 3 && d <= 6) || d <= 3;
    CHECK(r.diagonalizable == expected);
    CHECK(classify_diagonalizable(n, m, d).diagonalizable == r.diagonalizable);
  }
}

TEST_CASE("Dynkin labels") {
  CHECK(dynkin_label(2, 3, 3) == "E6");
  CHECK(dynkin_label(2, 3, 4) == "E7");
  CHECK(dynkin_label(2, 3, 5) == "E8");
  CHECK(dynkin_label(2, 3, 6) == "E9");
  CHECK(dynkin_label(3, 2, 6) == "E9");
  CHECK(dynkin_label(2, 3, 7) == "none");
  CHECK(dynkin_label(2, 2, 4) == "D6");
  CHECK(dynkin_label(1, 4, 3) == "A6");
  CHECK(dynkin_label(3, 3, 3) == "none");
  ClassificationResult r = classify_diagonalizable(2, 3, 6);
  CHECK(r.diagonalizable);
  CHECK(r.dynkin_label == "E9");
  CHECK_FALSE(classify_diagonalizable(2, 3, 7).diagonalizable);
}

TEST_CASE("conjecture scanners over small ranges") {
  ConjectureReport c = scan_conjecture_complex(6, 3, 3);
  CHECK(c.all_pass());
  CHECK(c.checked > 0);
  CHECK_FALSE(c.range.empty());
  ConjectureReport n = scan_conjecture_nonintegral(7, 2, 3);
  CHECK(n.all_pass());
  CHECK(n.checked > 0);
  CHECK_THROWS_AS(scan_conjecture_complex(5, 2, 3), Error);
}

TEST_CASE("roots of unity appear") {
  for (int k = 2; k <= 6; ++k) CHECK(roots_of_unity_presence(k, 2, k, k));
  CHECK(roots_of_unity_presence(3, 3, 4, 5));
}

TEST_CASE("non-solvable quintic ingredients") {
  IntPoly ch = char_poly(build_matrix({{2, 1, 1}, {1, 2, 1}}).entries);
  IntPoly quintic = oracle::expand("t^5+t^4-3t^3-2t^2-t-1");
  CHECK(exact_div(ch, oracle::expand("(t-1)(t+1)")) == quintic);
  CHECK(sturm_real_root_count(quintic) == 3);
  CHECK(irreducible_mod2(quintic));
}
