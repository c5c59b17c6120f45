#include "rskop/verify.hpp"

#include <functional>
#include <map>

#include "rskop/analysis.hpp"
#include "rskop/bitableau.hpp"
#include "rskop/contingency.hpp"
#include "rskop/error.hpp"
#include "rskop/linalg.hpp"
#include "rskop/operator.hpp"
#include "rskop/tableau.hpp"
#include "rskop/weights.hpp"

namespace rskop {

namespace {

// Weight pairs on at most 3 x 3 with degree 1..d_max, zeros excluded.
std::vector<WeightPair> small_pairs(int d_max) {
  std::vector<WeightPair> out;
  for (int d = 1; d <= d_max; ++d)
    for (int ls = 1; ls <= 3; ++ls)
      for (int lp = 1; lp <= 3; ++lp)
        for (const auto& s : compositions(d, ls))
          for (const auto& p : compositions(d, lp)) out.push_back({s, p});
  return out;
}

using Check = std::function<std::string()>;  // empty string means pass

std::vector<std::pair<std::string, Check>> tableaux_checks() {
  return {
      {"roundtrip and content, degree <= 5 on 3x3",
       []() -> std::string {
         for (const auto& pr : small_pairs(5))
           for (const auto& a : enumerate_tables(pr.sigma, pr.pi)) {
             TableauPair pq = rsk(a);
             if (inverse_rsk(pq, a.rows(), a.cols()) != a) return "roundtrip fails at " + a.str();
             if (pq.p.content(a.rows()) != a.row_margins() || pq.q.content(a.cols()) != a.col_margins())
               return "content mismatch at " + a.str();
             TableauPair t = rsk(a.transpose());
             if (!(t.p == pq.q && t.q == pq.p)) return "transpose symmetry fails at " + a.str();
           }
         return std::string();
       }},
      {"bump chains partition the biword and are antidiagonal",
       []() -> std::string {
         for (const auto& pr : small_pairs(5))
           for (const auto& a : enumerate_tables(pr.sigma, pr.pi)) {
             std::size_t total = 0;
             for (const auto& ch : bump_chains(a)) {
               total += ch.biletters.size();
               for (std::size_t i = 1; i < ch.biletters.size(); ++i)
                 if (!(ch.biletters[i - 1].row > ch.biletters[i].row && ch.biletters[i - 1].col < ch.biletters[i].col))
                   return "chain not antidiagonal at " + a.str();
             }
             if (total != static_cast<std::size_t>(a.degree())) return "chains miss biletters at " + a.str();
           }
         return std::string();
       }},
  };
}

std::vector<std::pair<std::string, Check>> contingency_checks() {
  return {
      {"tables strictly decrease in basis order; count matches",
       []() -> std::string {
         for (const auto& pr : small_pairs(5)) {
           auto ts = enumerate_tables(pr.sigma, pr.pi);
           for (std::size_t i = 1; i < ts.size(); ++i)
             if (!basis_precedes(ts[i - 1], ts[i])) return "order broken for " + pr.str();
           if (BigInt(static_cast<unsigned long>(ts.size())) != count_tables(pr.sigma, pr.pi))
             return "count mismatch for " + pr.str();
           if (ts.front() != canonical_table(pr.sigma, pr.pi)) return "canonical table not first for " + pr.str();
         }
         return std::string();
       }},
      {"margin identity of growth entries",
       []() -> std::string {
         for (const auto& pr : small_pairs(5)) {
           int d = pr.degree();
           for (const auto& a : enumerate_tables(pr.sigma, pr.pi))
             for (int k = 0; k < a.rows(); ++k)
               for (int l = 0; l < a.cols(); ++l) {
                 int off = 0;
                 for (int i = 0; i < a.rows(); ++i)
                   for (int j = 0; j < a.cols(); ++j)
                     if (i != k && j != l) off += a.at(i, j);
                 if (a.at(k, l) - off != pr.sigma[k] + pr.pi[l] - d) return "identity fails at " + a.str();
               }
         }
         return std::string();
       }},
  };
}

std::vector<std::pair<std::string, Check>> weights_checks() {
  return {
      {"dimension identity for m, n <= 3 and d <= 5",
       []() -> std::string {
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 3; ++n)
             for (int d = 0; d <= 5; ++d) {
               BlockCounts c = block_multiplicities(m, n, d);
               BigInt total = c.n0;
               for (const auto& b : c.blocks) total += b.multiplicity * count_tables(b.pair.sigma, b.pair.pi);
               if (total != monomial_count(m, n, d))
                 return "fails at (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
             }
         return std::string();
       }},
      {"reduction is idempotent and reduced output is reduced",
       []() -> std::string {
         for (const auto& pr : small_pairs(7)) {
           WeightPair p = normalize(pr).pair;
           WeightPair r = reduce(p).reduced;
           if (!is_reduced(r) || reduce(r).reduced != r) return "fails at " + pr.str();
         }
         return std::string();
       }},
  };
}

std::vector<std::pair<std::string, Check>> bitableau_checks() {
  return {
      {"coefficient sums are 0 or 1 and match evaluation at ones",
       []() -> std::string {
         for (const auto& pr : small_pairs(4))
           for (const auto& pq : enumerate_ssyt_pairs(pr.sigma, pr.pi)) {
             Bitableau b = bitableau_of(pq, pr.sigma.length(), pr.pi.length());
             BigInt sum = 0;
             for (const auto& [t, c] : expand(b)) {
               if (t.row_margins() != pr.sigma || t.col_margins() != pr.pi) return "term outside weight space";
               sum += c;
             }
             if (sum != evaluate_all_ones(b)) return "sum mismatch for " + pr.str();
           }
         return std::string();
       }},
  };
}

std::vector<std::pair<std::string, Check>> operator_checks() {
  return {
      {"unit determinant, column sums and integral inverse, degree <= 4",
       []() -> std::string {
         for (const auto& pr : small_pairs(4)) {
           RskMatrix m = build_matrix(pr);
           BigInt dt = det(m.entries);
           if (dt != 1 && dt != -1) return "determinant not a unit for " + pr.str();
           for (int j = 0; j < m.dim(); ++j) {
             BigInt s = 0;
             for (int i = 0; i < m.dim(); ++i) s += m.entries.at(i, j);
             if (s != (j == 0 ? 1 : 0)) return "column sum law fails for " + pr.str();
           }
           IntMatrix inv = integer_inverse(m.entries);
           if (!(inv * m.entries == IntMatrix::identity(m.dim()))) return "inverse fails for " + pr.str();
         }
         return std::string();
       }},
      {"closed forms agree with the bitableau construction",
       []() -> std::string {
         for (int d = 2; d <= 6; ++d)
           if (!(matrix_A_d(d).entries == build_matrix({WeightVector{d - 1, 1}, ones(d)}).entries))
             return "voting closed form fails at d = " + std::to_string(d);
         for (const auto& p : enumerate_reduced_pairs(5, 2, 4)) {
           if (!is_triangular(p)) continue;
           if (!(matrix_M_pi(p.pi).entries == build_matrix(p).entries)) return "triangular form fails for " + p.str();
         }
         return std::string();
       }},
  };
}

std::vector<std::pair<std::string, Check>> linalg_checks() {
  return {
      {"Cayley-Hamilton and minimal polynomial divisibility on reduced blocks of degree <= 5",
       []() -> std::string {
         for (const auto& p : enumerate_reduced_pairs(5, 3, 3)) {
           IntMatrix m = build_matrix(p).entries;
           IntPoly ch = char_poly(m), mu = min_poly(m);
           if (!evaluate(ch, m).is_zero()) return "Cayley-Hamilton fails for " + p.str();
           if (!evaluate(mu, m).is_zero()) return "minimal polynomial does not annihilate " + p.str();
           if (!divides(mu, ch)) return "minimal polynomial does not divide for " + p.str();
           BigInt c0 = ch.coeff(0);
           if (c0 != 1 && c0 != -1) return "constant term not a unit for " + p.str();
         }
         return std::string();
       }},
  };
}

std::vector<std::pair<std::string, Check>> analysis_checks() {
  return {
      {"formula determinant and trace match direct assembly, m, n <= 3, d <= 3",
       []() -> std::string {
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 3; ++n)
             for (int d = 1; d <= 3; ++d) {
               if (det_rsk(m, n, d) != det_rsk_direct(m, n, d)) return std::string("determinant mismatch");
               if (trace_rsk(m, n, d) != trace_rsk_direct(m, n, d)) return std::string("trace mismatch");
             }
         return std::string();
       }},
      {"permutation sweep matches the full matrix trace for d <= 5",
       []() -> std::string {
         for (int d = 1; d <= 5; ++d)
           if (BigInt(static_cast<long>(trace_perm(d))) != trace(build_matrix({ones(d), ones(d)}).entries))
             return "mismatch at d = " + std::to_string(d);
         return std::string();
       }},
      {"classification matches block diagonalizability on small cases",
       []() -> std::string {
         for (int m = 2; m <= 3; ++m)
           for (int n = m; n <= 3; ++n)
             for (int d = 1; d <= 5; ++d) {
               bool all = true;
               for (const auto& b : block_multiplicities(m, n, d).blocks)
                 all = all && is_diagonalizable(build_matrix(b.pair).entries);
               if (all != classify_diagonalizable(m, n, d).diagonalizable)
                 return "mismatch at (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
             }
         return std::string();
       }},
  };
}

const std::map<std::string, std::function<std::vector<std::pair<std::string, Check>>()>>& registry() {
  static const std::map<std::string, std::function<std::vector<std::pair<std::string, Check>>()>> r{
      {"tableaux", tableaux_checks},   {"contingency", contingency_checks},
      {"weights", weights_checks},     {"bitableau", bitableau_checks},
      {"operator", operator_checks},   {"linalg", linalg_checks},
      {"analysis", analysis_checks},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorKind::invalid_argument, "unknown suite '" + name + "'");
  std::vector<CheckResult> out;
  for (const auto& [check, fn] : it->second()) {
    std::string problem;
    try {
      problem = fn();
    } catch (const Error& e) {
      problem = std::string(kind_name(e.kind())) + ": " + e.what();
    }
    out.push_back({name, check, problem.empty(), problem});
  }
  return out;
}

}  // namespace rskop
