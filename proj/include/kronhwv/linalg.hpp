#pragma once

#include "kronhwv/bigint.hpp"
#include "kronhwv/coefficients.hpp"
#include "kronhwv/enumerate.hpp"
#include "kronhwv/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kronhwv {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank over Q by fraction-free (Bareiss) elimination. Each step divides by the
/// previous pivot; those divisions are exact and checked.
inline int exact_rank(IntMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (pivot == rows || abs(a[i][c]) < abs(a[pivot][c])) pivot = i;
    }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) {
        // Row i still needs the uniform scaling by pivot/prev.
        for (std::size_t j = c + 1; j < cols; ++j)
          if (a[i][j] != 0) a[i][j] = exact_div(a[r][c] * a[i][j], prev, "bareiss");
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev, "bareiss");
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

enum class CoeffKind { a, b };

/// Exact coefficient matrix {a(T,S)} or {b(S,T)} over lex index sets.
struct CoeffMatrix {
  CoeffKind kind = CoeffKind::a;
  WeightTuple weight;
  std::vector<Table> row_index;
  std::vector<Table> col_index;
  IntMatrix entries;
};

/// kind=a: rows index Δ (B^lex(w') for odd d, A^lex(w') for even d), columns
/// A^lex(w). kind=b: rows index ∇ (A^lex(w') odd, B^lex(w') even), columns
/// B^lex(w).
inline CoeffMatrix coeff_matrix(const WeightTuple& w, CoeffKind kind,
                                Method method = Method::automatic) {
  const bool odd = w.d() % 2 == 1;
  CoeffMatrix out;
  out.kind = kind;
  out.weight = w;
  const Margins dual = margins_of(w.conjugate());
  const Margins direct = margins_of(w);
  if (kind == CoeffKind::a) {
    out.row_index = enumerate_tables(dual, odd ? TableKind::zero_one : TableKind::natural);
    out.col_index = enumerate_tables(direct, TableKind::natural);
  } else {
    out.row_index = enumerate_tables(dual, odd ? TableKind::natural : TableKind::zero_one);
    out.col_index = enumerate_tables(direct, TableKind::zero_one);
  }
  if (w.m() == 0) {
    out.row_index = {Table(w.d(), 0)};
    out.col_index = {Table(w.d(), 0)};
  }
  out.entries.assign(out.row_index.size(), std::vector<BigInt>(out.col_index.size()));
  parallel_for(out.row_index.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < out.col_index.size(); ++j) {
      out.entries[i][j] = kind == CoeffKind::a
                              ? coeff_a(out.row_index[i], out.col_index[j], method)
                              : coeff_b(out.row_index[i], out.col_index[j], method);
    }
  });
  return out;
}

inline int exact_rank(const CoeffMatrix& m) { return exact_rank(m.entries); }

}  // namespace kronhwv
