#pragma once

#include "kronhwv/coefficients.hpp"
#include "kronhwv/enumerate.hpp"
#include "kronhwv/expansion.hpp"
#include "kronhwv/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronhwv {

namespace detail {

inline Expansion collect(Space space, const WeightTuple& weight, const std::vector<Table>& basis,
                         const std::function<BigInt(const Table&)>& coeff) {
  std::vector<BigInt> values(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) { values[i] = coeff(basis[i]); });
  Expansion out(space, weight);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], values[i]);
  return out;
}

}  // namespace detail

/// Δ_T = Σ_{S ∈ A^lex} a(T,S) ⋁e_S, in the weight dual to T. T may be any
/// table (any column order, composition row weights).
inline Expansion delta_expansion(const Table& t, Method method = Method::automatic) {
  const WeightTuple w = t.dual_weight();
  if (t.m() == 0) return scalar_one(Space::sym, t.d());
  const auto basis = enumerate_tables(margins_of(w), TableKind::natural);
  return detail::collect(Space::sym, w, basis,
                         [&](const Table& s) { return coeff_a(t, s, method); });
}

/// ∇_S = Σ_{T ∈ B^lex} b(S,T) ⋀e_T.
inline Expansion nabla_expansion(const Table& s, Method method = Method::automatic) {
  const WeightTuple w = s.dual_weight();
  if (s.m() == 0) return scalar_one(Space::alt, s.d());
  const auto basis = enumerate_tables(margins_of(w), TableKind::zero_one);
  return detail::collect(Space::alt, w, basis,
                         [&](const Table& t) { return coeff_b(s, t, method); });
}

/// The identity table I_{n,k}: every row is 1^k 2^k ... n^k.
inline Table identity_table(int d, int n, int k) {
  Word row;
  for (int i = 1; i <= n; ++i)
    for (int r = 0; r < k; ++r) row.push_back(i);
  return Table::from_rows(std::vector<Word>(d, row));
}

/// Δ_T evaluated at the unit tensor of size n: a(T, I_{n,k}) with k = m/n.
/// Returns 0 when T's weight does not match any I_{n,k}.
inline BigInt eval_unit(const Table& t, int n, Method method = Method::automatic) {
  if (n < 1) throw std::invalid_argument("eval_unit: n must be >= 1");
  if (t.m() % n != 0) return 0;
  return coeff_a(t, identity_table(t.d(), n, t.m() / n), method);
}

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default coordinate budget for tensor_oracle.
inline constexpr std::uint64_t kDefaultDenseBudget = 1'000'000;

/// Dense brute force: writes P_X = Σ_S sgn_X(S) ⊗e_S with all letters ≤ n as
/// a vector in ((C^n)^{⊗d})^{⊗m}, applies the unnormalized symmetrizer
/// (Σ_π π) or alternator (Σ_π sgn(π) π), reads off the coefficients of
/// ⋁e_S / ⋀e_S, and divides by ‖X‖ (-1)^X. The result is Δ_X (sym) or ∇_X
/// (alt) restricted to basis tables with letters ≤ n.
inline Expansion tensor_oracle(const Table& x, Space mode, int n,
                               std::uint64_t budget = kDefaultDenseBudget) {
  const int d = x.d();
  const int m = x.m();
  const WeightTuple w = x.dual_weight();
  if (m == 0) return scalar_one(mode, d);
  std::uint64_t cols = 1;
  for (int r = 0; r < d; ++r) {
    cols *= static_cast<std::uint64_t>(n);
    if (cols > budget) throw BudgetExceeded("tensor_oracle: (n^d)^m exceeds budget");
  }
  std::uint64_t size = 1;
  for (int p = 0; p < m; ++p) {
    if (size > budget / cols) throw BudgetExceeded("tensor_oracle: (n^d)^m exceeds budget");
    size *= cols;
  }
  const auto N = static_cast<int>(cols);

  auto column_of = [&](int code) {
    Column c(d);
    for (int r = d - 1; r >= 0; --r) {
      c[r] = code % n + 1;
      code /= n;
    }
    return c;
  };
  auto decode = [&](std::uint64_t idx) {
    std::vector<Column> cs(m);
    for (int p = m - 1; p >= 0; --p) {
      cs[p] = column_of(static_cast<int>(idx % N));
      idx /= N;
    }
    return Table::from_columns(d, cs);
  };

  std::vector<std::int64_t> p_x(size);
  for (std::uint64_t idx = 0; idx < size; ++idx) p_x[idx] = table_signature(x, decode(idx));

  // Projected coordinates U[idx] = Σ_π (sgn π) P_X[idx ∘ π].
  std::vector<std::int64_t> u(size, 0);
  std::vector<int> perm(m);
  std::vector<int> digits(m);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    for (int p = m - 1; p >= 0; --p) {
      digits[p] = static_cast<int>(rest % N);
      rest /= N;
    }
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t acc = 0;
    do {
      std::uint64_t j = 0;
      for (int p = 0; p < m; ++p) j = j * N + digits[perm[p]];
      const std::int64_t v = p_x[j];
      if (v == 0) continue;
      acc += (mode == Space::alt && inversions(perm) % 2) ? -v : v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    u[idx] = acc;
  }

  const BigInt norm = stabilizer_size(x) * table_sign(x);
  Expansion out(mode, w);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (u[idx] == 0) continue;
    const Table s = decode(idx);
    if (!s.is_lex()) continue;
    if (mode == Space::alt) {
      if (s.has_duplicate_columns()) continue;
      out.add(s, exact_div(BigInt(u[idx]), norm, "tensor_oracle alt"));
    } else {
      out.add(s, exact_div(BigInt(u[idx]), stabilizer_size(s) * norm, "tensor_oracle sym"));
    }
  }
  return out;
}

/// Drops the terms of e whose index uses a letter larger than n.
inline Expansion truncate_letters(const Expansion& e, int n) {
  Expansion out(e.space, e.weight);
  for (const auto& [t, c] : e.terms)
    if (t.max_letter() <= n) out.terms.emplace(t, c);
  return out;
}

}  // namespace kronhwv
