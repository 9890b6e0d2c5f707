#pragma once

#include "kronhwv/table.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace kronhwv {

/// Sparse d-dimensional N-hypermatrix; zero entries are never stored.
class Hypermatrix {
 public:
  explicit Hypermatrix(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("Hypermatrix: d must be >= 1");
  }

  int d() const { return d_; }
  const std::map<Column, int>& entries() const { return entries_; }

  void set(const Column& idx, int value) {
    check_index(idx);
    if (value < 0) throw std::invalid_argument("Hypermatrix: negative entry");
    if (value == 0) entries_.erase(idx);
    else entries_[idx] = value;
  }
  void add(const Column& idx, int value) { set(idx, get(idx) + value); }
  int get(const Column& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? 0 : it->second;
  }

  /// Sum of all entries.
  int size() const {
    int s = 0;
    for (const auto& [idx, v] : entries_) s += v;
    return s;
  }

  /// Slice sums per direction; marginals[l][j-1] is the sum of slice j in
  /// direction l.
  std::vector<std::vector<int>> marginals() const {
    std::vector<std::vector<int>> out(d_);
    for (const auto& [idx, v] : entries_) {
      for (int l = 0; l < d_; ++l) {
        if (static_cast<int>(out[l].size()) < idx[l]) out[l].resize(idx[l], 0);
        out[l][idx[l] - 1] += v;
      }
    }
    return out;
  }

  bool operator==(const Hypermatrix&) const = default;

 private:
  void check_index(const Column& idx) const {
    if (static_cast<int>(idx.size()) != d_)
      throw std::invalid_argument("Hypermatrix: index has wrong dimension");
    for (int i : idx)
      if (i < 1) throw std::invalid_argument("Hypermatrix: indices are 1-based");
  }

  int d_;
  std::map<Column, int> entries_;
};

/// d-line notation: each index repeated by its value, columns in lex order.
inline Table dline(const Hypermatrix& h) {
  std::vector<Column> cols;
  for (const auto& [idx, v] : h.entries())
    for (int k = 0; k < v; ++k) cols.push_back(idx);
  return Table::from_columns(h.d(), cols);
}

/// Collapses the columns of t to multiplicities.
inline Hypermatrix table_to_hyper(const Table& t) {
  Hypermatrix h(t.d());
  for (int c = 0; c < t.m(); ++c) h.add(t.column(c), 1);
  return h;
}

}  // namespace kronhwv
