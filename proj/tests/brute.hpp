#pragma once

// Deliberately naive reference implementations used only by the tests. They
// share no code with the library beyond the Table/Partition containers.

#include "kronhwv/kronhwv.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using kronhwv::BigInt;
using kronhwv::Table;
using kronhwv::Word;

inline std::int64_t fact(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline int sign_of(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv % 2 ? -1 : 1;
}

/// Product over rows and letters i of the sign of s restricted to the
/// positions of i in t, or 0 if some restriction is not a permutation.
inline int signature(const Table& t, const Table& s) {
  int sign = 1;
  for (int r = 0; r < t.d(); ++r) {
    std::map<int, std::vector<int>> blocks;
    for (int c = 0; c < t.m(); ++c) blocks[t.at(r, c)].push_back(s.at(r, c));
    for (auto& [letter, vals] : blocks) {
      std::vector<int> sorted = vals;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) return 0;
      sign *= sign_of(vals);
    }
  }
  return sign;
}

inline std::int64_t column_stabilizer(const Table& t) {
  std::map<std::vector<int>, int> mult;
  for (int c = 0; c < t.m(); ++c) {
    std::vector<int> col;
    for (int r = 0; r < t.d(); ++r) col.push_back(t.at(r, c));
    ++mult[col];
  }
  std::int64_t s = 1;
  for (const auto& [col, k] : mult) s *= fact(k);
  return s;
}

inline int rows_sign(const Table& t) {
  int s = 1;
  for (int r = 0; r < t.d(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < t.m(); ++c) row.push_back(t.at(r, c));
    s *= sign_of(row);
  }
  return s;
}

inline Table reorder(const Table& t, const std::vector<int>& perm) {
  Table out(t.d(), t.m());
  for (int c = 0; c < t.m(); ++c)
    for (int r = 0; r < t.d(); ++r) out.at(r, c) = t.at(r, perm[c]);
  return out;
}

/// Σ over all m! reorderings of s, with or without the permutation sign.
inline std::int64_t raw_sum(const Table& t, const Table& s, bool with_sign) {
  std::vector<int> perm(t.m());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t sum = 0;
  do {
    int v = signature(t, reorder(s, perm));
    if (with_sign) v *= sign_of(perm);
    sum += v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// a(T,S) straight from its definition. Integrality is checked separately.
inline std::int64_t coeff_a(const Table& t, const Table& s) {
  if (t.m() == 0) return 1;
  const std::int64_t total = raw_sum(t, s, false);
  const std::int64_t den = column_stabilizer(t) * column_stabilizer(s);
  return rows_sign(t) * total / den;
}

inline bool coeff_a_integral(const Table& t, const Table& s) {
  if (t.m() == 0) return true;
  return raw_sum(t, s, false) % (column_stabilizer(t) * column_stabilizer(s)) == 0;
}

inline std::int64_t coeff_b(const Table& s, const Table& t) {
  if (s.m() == 0) return 1;
  return rows_sign(s) * raw_sum(s, t, true) / column_stabilizer(s);
}

/// All distinct rearrangements of each row's multiset, combined, collected
/// as lex-sorted tables. Margins are partitions or compositions.
inline std::set<Table> tables(const std::vector<std::vector<int>>& margins, bool zero_one) {
  const int d = static_cast<int>(margins.size());
  std::vector<std::vector<Word>> words(d);
  for (int r = 0; r < d; ++r) {
    Word w;
    for (std::size_t i = 0; i < margins[r].size(); ++i)
      for (int k = 0; k < margins[r][i]; ++k) w.push_back(static_cast<int>(i) + 1);
    do words[r].push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
  }
  std::set<Table> out;
  std::vector<std::size_t> pick(d, 0);
  while (true) {
    std::vector<std::vector<int>> cols;
    const int m = static_cast<int>(words[0][0].size());
    for (int c = 0; c < m; ++c) {
      std::vector<int> col;
      for (int r = 0; r < d; ++r) col.push_back(words[r][pick[r]][c]);
      cols.push_back(col);
    }
    std::sort(cols.begin(), cols.end());
    const bool dup = std::adjacent_find(cols.begin(), cols.end()) != cols.end();
    if (!(zero_one && dup)) {
      Table t(d, m);
      for (int c = 0; c < m; ++c)
        for (int r = 0; r < d; ++r) t.at(r, c) = cols[c][r];
      out.insert(t);
    }
    int pos = d - 1;
    while (pos >= 0 && ++pick[pos] == words[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

/// Latin squares of order k, counted and signed by rows and columns.
inline std::pair<std::int64_t, std::int64_t> latin_squares(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::int64_t count = 0;
  std::int64_t signed_sum = 0;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int r) -> void {
    if (r == k) {
      int s = 1;
      for (int i : rows) s *= sign_of(perms[i]);
      for (int c = 0; c < k; ++c) {
        std::vector<int> col;
        for (int i : rows) col.push_back(perms[i][c]);
        s *= sign_of(col);
      }
      ++count;
      signed_sum += s;
      return;
    }
    for (std::size_t i = 0; i < perms.size(); ++i) {
      bool ok = true;
      for (int prev : rows)
        for (int c = 0; c < k && ok; ++c) ok = perms[prev][c] != perms[i][c];
      if (!ok) continue;
      rows.push_back(static_cast<int>(i));
      self(self, r + 1);
      rows.pop_back();
    }
  };
  rec(rec, 0);
  return {count, signed_sum};
}

}  // namespace brute
