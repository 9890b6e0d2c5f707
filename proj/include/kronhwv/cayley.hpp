#pragma once

#include "kronhwv/coefficients.hpp"
#include "kronhwv/enumerate.hpp"
#include "kronhwv/expansion.hpp"
#include "kronhwv/hwv.hpp"
#include "kronhwv/latin.hpp"
#include "kronhwv/report.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronhwv {

enum class CanonicalKind { identity, fundamental };

/// I_{n,k} (d rows) or F_{d,k} (n ignored).
inline Table canonical_table(CanonicalKind kind, int d, int n, int k) {
  return kind == CanonicalKind::identity ? identity_table(d, n, k) : fundamental_table(d, k);
}

inline int int_pow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// (1/k!) Σ_{σ ∈ S_k^d} sgn(σ_1)...sgn(σ_d) e_{σ(1)} ⋄ ... ⋄ e_{σ(k)}, where
/// e_{σ(i)} has coordinates (σ_1(i), ..., σ_d(i)) and ⋄ is ∧ (alt) or ∨ (sym).
/// For alt and d = 3 this is the Cayley form; for sym it is Cayley's first
/// hyperdeterminant.
inline Expansion cayley_direct(Space space, int d, int k) {
  Expansion acc(space, WeightTuple::uniform(d, rectangle(k, 1)));
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 1);
  std::vector<Word> perms;
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  std::vector<std::size_t> pick(d, 0);
  while (true) {
    std::vector<Word> rows;
    int sign = 1;
    for (int r = 0; r < d; ++r) {
      rows.push_back(perms[pick[r]]);
      sign *= inv_sign(perms[pick[r]]);
    }
    acc.add_unsorted(Table::from_rows(rows), sign);
    int pos = d - 1;
    while (pos >= 0 && ++pick[pos] == perms.size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  const BigInt kf = factorial(k);
  Expansion out(space, acc.weight);
  for (const auto& [t, c] : acc.terms) out.add(t, exact_div(c, kf, "cayley_direct 1/k!"));
  return out;
}

struct PowerExpansion {
  Expansion expansion;
  Report report;
};

/// ω^n = ∇_{I_{n,k}} for odd d. Checks every coefficient against
/// (-1)^{(n x k)^d} Δ_T(I_n), and for n = k^{d-1} that the expansion is the
/// single volume-form term with coefficient (-1)^{(n x k)^d} (-1)^F AT_d(k).
inline PowerExpansion omega_power(int d, int k, int n, Method method = Method::automatic) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("omega_power: d must be odd and >= 3");
  if (k < 1 || n < 1) throw std::invalid_argument("omega_power: need k, n >= 1");
  Stopwatch clock;
  PowerExpansion out;
  out.report.claim = "omega^" + std::to_string(n) + " d=" + std::to_string(d) +
                     " k=" + std::to_string(k);
  const Table id = identity_table(d, n, k);
  out.expansion = nabla_expansion(id, method);
  const int sign = tuple_sign(WeightTuple::uniform(d, rectangle(n, k)));
  out.report.detail("sign", std::to_string(sign));
  const auto basis = enumerate_tables(out.expansion.weight, TableKind::zero_one);
  for (const Table& t : basis) {
    const BigInt c = pair(out.expansion, t);
    const BigInt ev = eval_unit(t, n, method);
    out.report.check(c == sign * ev, "T=" + t.str() + " coeff " + c.str() + " vs sign*eval " +
                                         BigInt(sign * ev).str());
  }
  const int volume = int_pow(k, d - 1);
  if (n == volume) {
    const Table f = fundamental_table(d, k);
    const BigInt at = alon_tarsi(d, k);
    out.report.check(out.expansion.size() <= 1, "expansion has more than one term");
    const BigInt c = pair(out.expansion, f);
    out.report.check(c == sign * table_sign(f) * at,
                     "volume coefficient " + c.str() + " vs AT " + at.str());
    out.report.detail("AT", at.str());
    out.report.detail("volume_coeff", c.str());
  } else if (n > volume) {
    out.report.check(out.expansion.is_zero(), "power beyond k^(d-1) is nonzero");
  }
  out.report.elapsed_ms = clock.ms();
  return out;
}

/// δ^n = Δ_{I_{n,k}} for even d. Checks every coefficient against Δ_S(I_n),
/// and for n = k^{d-1} the full-support coefficient against (-1)^F AT_d(k).
inline PowerExpansion delta_power(int d, int k, int n, Method method = Method::automatic) {
  if (d < 2 || d % 2 == 1) throw std::invalid_argument("delta_power: d must be even and >= 2");
  if (k < 1 || n < 1) throw std::invalid_argument("delta_power: need k, n >= 1");
  Stopwatch clock;
  PowerExpansion out;
  out.report.claim = "delta^" + std::to_string(n) + " d=" + std::to_string(d) +
                     " k=" + std::to_string(k);
  const Table id = identity_table(d, n, k);
  out.expansion = delta_expansion(id, method);
  const auto basis = enumerate_tables(out.expansion.weight, TableKind::natural);
  for (const Table& s : basis) {
    const BigInt c = pair(out.expansion, s);
    const BigInt ev = eval_unit(s, n, method);
    out.report.check(c == ev, "S=" + s.str() + " coeff " + c.str() + " vs eval " + ev.str());
  }
  if (n == int_pow(k, d - 1)) {
    const Table f = fundamental_table(d, k);
    const BigInt at = alon_tarsi(d, k);
    const BigInt c = pair(out.expansion, f);
    out.report.check(c == table_sign(f) * at,
                     "full-support coefficient " + c.str() + " vs AT " + at.str());
    out.report.detail("AT", at.str());
    out.report.detail("full_support_coeff", c.str());
  }
  out.report.elapsed_ms = clock.ms();
  return out;
}

/// Stacks F_{c,k} `copies` times and pads with rows 12..k 12..k ... up to d rows.
inline Table stacked_fundamental(int d, int c, int k, int copies) {
  const Table f = fundamental_table(c, k);
  std::vector<Word> rows;
  for (int rep = 0; rep < copies; ++rep)
    for (const auto& r : f.rows()) rows.push_back(r);
  Word pattern;
  for (int col = 0; col < f.m(); ++col) pattern.push_back(col % k + 1);
  while (static_cast<int>(rows.size()) < d) rows.push_back(pattern);
  return lex_normalize(Table::from_rows(rows)).table;
}

/// Coefficients of δ^{k^{c-1}} (d even) at T_even (F_{c,k} twice, needs
/// 2c ≤ d) and T_odd (F_{c,k} once): expected |L_c(k)| and ±AT_c(k). Each
/// coefficient is a(I_{k^{c-1},k}, T), read off directly.
inline Report check_even_coeff_props(int d, int c, int k, Method method = Method::automatic) {
  if (d % 2 || c % 2 || c < 2 || c > d)
    throw std::invalid_argument("evenprops: need even d, even 2 <= c <= d");
  Stopwatch clock;
  Report report;
  report.claim = "evenprops d=" + std::to_string(d) + " c=" + std::to_string(c) +
                 " k=" + std::to_string(k);
  const int n = int_pow(k, c - 1);
  const Table id = identity_table(d, n, k);
  const BigInt at = alon_tarsi(c, k);
  report.detail("AT", at.str());
  if (2 * c <= d) {
    const Table t_even = stacked_fundamental(d, c, k, 2);
    const BigInt count = latin_count(c, k);
    const BigInt coeff = coeff_a(id, t_even, method);
    report.check(coeff == count, "T_even coefficient " + coeff.str() + " vs |L| " + count.str());
    report.detail("latin_count", count.str());
    report.detail("T_even_coeff", coeff.str());
  }
  const Table t_odd = stacked_fundamental(d, c, k, 1);
  const BigInt coeff = coeff_a(id, t_odd, method);
  report.check(abs(coeff) == abs(at), "T_odd coefficient " + coeff.str() + " vs AT " + at.str());
  report.detail("T_odd_coeff", coeff.str());
  report.elapsed_ms = clock.ms();
  return report;
}

/// Orbits of lex tables under slice symmetries: swapping two letters of equal
/// multiplicity within one row, then re-sorting columns. Orbits are sorted.
inline std::vector<std::vector<Table>> slice_orbits(const std::vector<Table>& tables) {
  std::set<Table> pending(tables.begin(), tables.end());
  std::vector<std::vector<Table>> out;
  while (!pending.empty()) {
    std::set<Table> orbit{*pending.begin()};
    std::vector<Table> frontier{*pending.begin()};
    while (!frontier.empty()) {
      const Table t = frontier.back();
      frontier.pop_back();
      const auto w = t.weight();
      for (int r = 0; r < t.d(); ++r)
        for (int i = 1; i <= static_cast<int>(w[r].size()); ++i)
          for (int j = i + 1; j <= static_cast<int>(w[r].size()); ++j) {
            if (w[r][i - 1] != w[r][j - 1]) continue;
            Table u = lex_normalize(swap_letters(t, r, i, j)).table;
            if (orbit.insert(u).second) frontier.push_back(u);
          }
    }
    for (const auto& t : orbit) pending.erase(t);
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace kronhwv
