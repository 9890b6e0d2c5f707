#pragma once

#include "kronhwv/bigint.hpp"
#include "kronhwv/partition.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronhwv {

/// A word over the positive integers; letters are 1-based.
using Word = std::vector<int>;
/// A column of a table, an element of N^d.
using Column = std::vector<int>;

/// Multiplicities of letters 1..max in w (index 0 counts letter 1).
inline std::vector<int> word_weight(std::span<const int> w) {
  std::vector<int> counts;
  for (int a : w) {
    if (a < 1) throw std::invalid_argument("word letters must be positive");
    if (static_cast<std::size_t>(a) > counts.size()) counts.resize(a, 0);
    ++counts[a - 1];
  }
  return counts;
}

/// True iff every prefix has at least as many letters i as letters i+1.
inline bool is_lattice(std::span<const int> w) {
  std::vector<int> seen;
  for (int a : w) {
    if (static_cast<std::size_t>(a) > seen.size()) seen.resize(a, 0);
    ++seen[a - 1];
    if (a > 1 && seen[a - 1] > seen[a - 2]) return false;
  }
  return true;
}

inline int inversions(std::span<const int> w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

/// (-1)^{inv(w)}.
inline int inv_sign(std::span<const int> w) { return inversions(w) % 2 ? -1 : 1; }

/// Sign of the canonical word 12..l_1 12..l_2 ... of a partition.
inline int partition_sign(const Partition& p) {
  Word t0;
  for (int part : p.parts())
    for (int j = 1; j <= part; ++j) t0.push_back(j);
  return inv_sign(t0);
}

/// Product of partition_sign over the tuple.
inline int tuple_sign(const WeightTuple& w) {
  int s = 1;
  for (const auto& p : w.parts()) s *= partition_sign(p);
  return s;
}

/// A d x m array of positive integers; equivalently a d-tuple of words or a
/// map [m] -> N^d (column view). Stored row-major.
class Table {
 public:
  Table() = default;
  Table(int d, int m) : d_(d), m_(m), data_(static_cast<std::size_t>(d) * m, 1) {
    if (d < 1 || m < 0) throw std::invalid_argument("Table: need d >= 1, m >= 0");
  }

  static Table from_rows(const std::vector<Word>& rows) {
    if (rows.empty()) throw std::invalid_argument("Table: need at least one row");
    const int m = static_cast<int>(rows.front().size());
    Table t(static_cast<int>(rows.size()), m);
    for (int r = 0; r < t.d_; ++r) {
      if (static_cast<int>(rows[r].size()) != m)
        throw std::invalid_argument("Table: rows have different lengths");
      for (int c = 0; c < m; ++c) {
        if (rows[r][c] < 1) throw std::invalid_argument("Table: letters must be positive");
        t.at(r, c) = rows[r][c];
      }
    }
    return t;
  }

  static Table from_columns(int d, const std::vector<Column>& cols) {
    Table t(d, static_cast<int>(cols.size()));
    for (int c = 0; c < t.m_; ++c) {
      if (static_cast<int>(cols[c].size()) != d)
        throw std::invalid_argument("Table: column has wrong dimension");
      for (int r = 0; r < d; ++r) t.at(r, c) = cols[c][r];
    }
    return t;
  }

  int d() const { return d_; }
  int m() const { return m_; }

  int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * m_ + c]; }
  int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * m_ + c]; }

  std::span<const int> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * m_, static_cast<std::size_t>(m_)};
  }
  Column column(int c) const {
    Column col(d_);
    for (int r = 0; r < d_; ++r) col[r] = at(r, c);
    return col;
  }
  std::vector<Column> columns() const {
    std::vector<Column> cols;
    cols.reserve(m_);
    for (int c = 0; c < m_; ++c) cols.push_back(column(c));
    return cols;
  }
  std::vector<Word> rows() const {
    std::vector<Word> out;
    for (int r = 0; r < d_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
  }

  /// Letter multiplicities per row; may be compositions.
  std::vector<std::vector<int>> weight() const {
    std::vector<std::vector<int>> w;
    for (int r = 0; r < d_; ++r) w.push_back(word_weight(row(r)));
    return w;
  }

  /// True iff every row weight is a partition (no gaps, weakly decreasing).
  bool has_partition_weight() const {
    for (const auto& w : weight())
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 0 || (i && w[i] > w[i - 1])) return false;
    return true;
  }

  /// The weight tuple of row weights, each sorted into a partition.
  WeightTuple sorted_weight() const {
    std::vector<Partition> ps;
    for (const auto& w : weight()) ps.push_back(Partition::from_composition(w));
    return WeightTuple(std::move(ps));
  }

  /// Weight of the tables X with sgn_T(X) possibly nonzero: the conjugate of
  /// the block-size partitions of each row.
  WeightTuple dual_weight() const { return sorted_weight().conjugate(); }

  bool has_duplicate_columns() const {
    auto cols = columns();
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) != cols.end();
  }

  bool is_lex() const {
    for (int c = 1; c < m_; ++c)
      if (column(c) < column(c - 1)) return false;
    return true;
  }

  int max_letter() const {
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
  }

  /// Row-wise words joined with '/', e.g. "1122/1212". Letters above 9 are
  /// written in braces.
  std::string str() const {
    std::string s;
    for (int r = 0; r < d_; ++r) {
      if (r) s += "/";
      for (int a : row(r)) s += a < 10 ? std::to_string(a) : "{" + std::to_string(a) + "}";
    }
    return s;
  }

  auto operator<=>(const Table&) const = default;

 private:
  int d_ = 1;
  int m_ = 0;
  std::vector<int> data_;
};

/// (-1)^T: product of the inversion signs of the rows.
inline int table_sign(const Table& t) {
  int s = 1;
  for (int r = 0; r < t.d(); ++r) s *= inv_sign(t.row(r));
  return s;
}

struct LexNormalized {
  Table table;
  int sign = 1;  // parity of the stable column sort
  bool has_duplicate_columns = false;
};

/// Sorts columns lexicographically. The sign is the parity of the number of
/// strictly inverted column pairs, i.e. of the stable sorting permutation.
inline LexNormalized lex_normalize(const Table& t) {
  auto cols = t.columns();
  int inv = 0;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[j] < cols[i]) ++inv;
  std::stable_sort(cols.begin(), cols.end());
  const bool dup = std::adjacent_find(cols.begin(), cols.end()) != cols.end();
  return {Table::from_columns(t.d(), cols), inv % 2 ? -1 : 1, dup};
}

/// ||T||: product over distinct columns of (multiplicity)!.
inline BigInt stabilizer_size(const Table& t) {
  std::map<Column, int> mult;
  for (int c = 0; c < t.m(); ++c) ++mult[t.column(c)];
  BigInt s = 1;
  for (const auto& [col, k] : mult) s *= factorial(k);
  return s;
}

/// Row-wise p + (q shifted by the number of letters of p's row weight).
inline Table concat(const Table& p, const Table& q) {
  if (p.d() != q.d()) throw std::invalid_argument("concat: tables differ in d");
  Table out(p.d(), p.m() + q.m());
  for (int r = 0; r < p.d(); ++r) {
    const int shift = static_cast<int>(word_weight(p.row(r)).size());
    for (int c = 0; c < p.m(); ++c) out.at(r, c) = p.at(r, c);
    for (int c = 0; c < q.m(); ++c) out.at(r, p.m() + c) = q.at(r, c) + shift;
  }
  return out;
}

/// Applies a column permutation: column c of the result is column perm[c] of t.
inline Table permute_columns(const Table& t, std::span<const int> perm) {
  Table out(t.d(), t.m());
  for (int c = 0; c < t.m(); ++c)
    for (int r = 0; r < t.d(); ++r) out.at(r, c) = t.at(r, perm[c]);
  return out;
}

/// Swaps letters i and j in row r.
inline Table swap_letters(const Table& t, int r, int i, int j) {
  Table out = t;
  for (int c = 0; c < t.m(); ++c) {
    if (t.at(r, c) == i) out.at(r, c) = j;
    else if (t.at(r, c) == j) out.at(r, c) = i;
  }
  return out;
}

/// Parses "1122/1212" (single-digit letters) or "1,1,2,2/1,2,1,2".
inline Table parse_table_shorthand(const std::string& s) {
  std::vector<Word> rows(1);
  std::string num;
  const bool commas = s.find(',') != std::string::npos;
  auto flush = [&] {
    if (!num.empty()) {
      rows.back().push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : s) {
    if (ch == '/') {
      flush();
      rows.emplace_back();
    } else if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      if (commas) num += ch;
      else rows.back().push_back(ch - '0');
    } else if (ch != ' ') {
      throw std::invalid_argument(std::string("bad table shorthand character '") + ch + "'");
    }
  }
  flush();
  return Table::from_rows(rows);
}

}  // namespace kronhwv
