#pragma once

#include "kronhwv/coefficients.hpp"
#include "kronhwv/enumerate.hpp"
#include "kronhwv/kronecker.hpp"
#include "kronhwv/linalg.hpp"
#include "kronhwv/parallel.hpp"
#include "kronhwv/report.hpp"

#include <string>
#include <vector>

namespace kronhwv {

/// Checks the coefficient duality on every pair (T,S) ∈ A^lex(w') × A^lex(w):
///   odd d:  a(T,S) = (-1)^w b(S,T) for duplicate-free T, a(T,S) = 0 otherwise;
///   even d: a(T,S) = (-1)^w a(S,T), and b(S,T) = (-1)^w b(T,S) when both are
///           duplicate-free (b(S,T) = 0 when only S repeats a column).
inline Report check_duality(const WeightTuple& w, Method method = Method::automatic) {
  Stopwatch clock;
  Report report;
  report.claim = "duality " + w.str();
  const int sign = tuple_sign(w);
  const bool odd = w.d() % 2 == 1;
  const auto ts = enumerate_tables(w.conjugate(), TableKind::natural);
  const auto ss = enumerate_tables(w, TableKind::natural);
  std::vector<Report> parts(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    const Table& t = ts[i];
    const bool t_dup = t.has_duplicate_columns();
    Report& r = parts[i];
    for (const Table& s : ss) {
      const BigInt a = coeff_a(t, s, method);
      const std::string pair = "T=" + t.str() + " S=" + s.str();
      if (odd) {
        if (t_dup) {
          r.check(a == 0, "a(T,S) != 0 for T with repeated column: " + pair);
        } else {
          const BigInt b = coeff_b(s, t, method);
          r.check(a == sign * b, "a(T,S)=" + a.str() + " b(S,T)=" + b.str() + ": " + pair);
        }
        continue;
      }
      const BigInt a_rev = coeff_a(s, t, method);
      r.check(a == sign * a_rev, "a(T,S)=" + a.str() + " a(S,T)=" + a_rev.str() + ": " + pair);
      const bool s_dup = s.has_duplicate_columns();
      if (!t_dup && !s_dup) {
        const BigInt b = coeff_b(s, t, method);
        const BigInt b_rev = coeff_b(t, s, method);
        r.check(b == sign * b_rev, "b(S,T)=" + b.str() + " b(T,S)=" + b_rev.str() + ": " + pair);
      } else if (!t_dup) {
        r.check(coeff_b(s, t, method) == 0, "b(S,T) != 0 for S with repeated column: " + pair);
      } else if (!s_dup) {
        r.check(coeff_b(t, s, method) == 0, "b(T,S) != 0 for T with repeated column: " + pair);
      }
    }
  });
  for (const auto& p : parts) report.merge(p);
  report.elapsed_ms = clock.ms();
  return report;
}

/// Checks rank{a(T,S)} = g(w) and rank{b(S,T)} = g(w^(1)', w^(2), ...).
inline Report check_isomorphism(const WeightTuple& w, Method method = Method::automatic) {
  Stopwatch clock;
  Report report;
  report.claim = "isomorphism " + w.str();
  const BigInt g_sym = kron(w);
  const BigInt g_alt = kron(alt_kron_weight(w));
  const auto ma = coeff_matrix(w, CoeffKind::a, method);
  const int rank_a = exact_rank(ma);
  report.check(BigInt(rank_a) == g_sym,
               "rank(a) = " + std::to_string(rank_a) + " but g = " + g_sym.str());
  const auto mb = coeff_matrix(w, CoeffKind::b, method);
  const int rank_b = exact_rank(mb);
  report.check(BigInt(rank_b) == g_alt,
               "rank(b) = " + std::to_string(rank_b) + " but g_alt = " + g_alt.str());
  report.detail("rank_a", std::to_string(rank_a));
  report.detail("g", g_sym.str());
  report.detail("rank_b", std::to_string(rank_b));
  report.detail("g_alt", g_alt.str());
  report.elapsed_ms = clock.ms();
  return report;
}

}  // namespace kronhwv
