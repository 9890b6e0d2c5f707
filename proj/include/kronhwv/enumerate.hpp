#pragma once

#include "kronhwv/table.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace kronhwv {

enum class TableKind { natural, zero_one };
enum class TableForm { lex, lattice };

/// Margin vectors, one per direction; entry j-1 is the required sum of slice j.
/// Zero entries are allowed (composition weights).
using Margins = std::vector<std::vector<int>>;

inline Margins margins_of(const WeightTuple& w) {
  Margins out;
  for (const auto& p : w.parts()) out.push_back(p.parts());
  return out;
}

namespace detail {

class LexTableEnumerator {
 public:
  LexTableEnumerator(const Margins& margins, TableKind kind) : margins_(margins), kind_(kind) {
    d_ = static_cast<int>(margins_.size());
    m_ = margins_.empty() ? 0 : std::accumulate(margins_[0].begin(), margins_[0].end(), 0);
    for (const auto& mg : margins_) {
      if (std::accumulate(mg.begin(), mg.end(), 0) != m_) feasible_ = false;
      for (int v : mg)
        if (v < 0) feasible_ = false;
      dims_.push_back(static_cast<int>(mg.size()));
    }
    if (!feasible_ || m_ == 0) return;
    cells_ = 1;
    for (int L : dims_) cells_ *= L;
    // remaining[c][l]: cells of the same l-slice strictly after cell c in lex order.
    remaining_.assign(static_cast<std::size_t>(cells_) * d_, 0);
    std::vector<std::vector<int>> counter(d_);
    for (int l = 0; l < d_; ++l) counter[l].assign(dims_[l], 0);
    index_.assign(static_cast<std::size_t>(cells_) * d_, 0);
    for (int c = 0; c < cells_; ++c) {
      int rest = c;
      for (int l = d_ - 1; l >= 0; --l) {
        index_[static_cast<std::size_t>(c) * d_ + l] = rest % dims_[l];
        rest /= dims_[l];
      }
    }
    for (int c = cells_ - 1; c >= 0; --c) {
      for (int l = 0; l < d_; ++l) {
        int j = index_[static_cast<std::size_t>(c) * d_ + l];
        remaining_[static_cast<std::size_t>(c) * d_ + l] = counter[l][j]++;
      }
    }
  }

  void run(const std::function<void(const Table&)>& emit) {
    if (!feasible_) return;
    if (m_ == 0) {
      emit(Table(std::max(d_, 1), 0));
      return;
    }
    residual_ = margins_;
    cols_.clear();
    emit_ = &emit;
    rec(0, m_);
  }

 private:
  void rec(int cell, int mass_left) {
    if (mass_left == 0) {
      (*emit_)(Table::from_columns(d_, cols_));
      return;
    }
    if (cell == cells_) return;
    const int* idx = &index_[static_cast<std::size_t>(cell) * d_];
    const int* rem = &remaining_[static_cast<std::size_t>(cell) * d_];
    int ub = mass_left;
    int lb = 0;
    for (int l = 0; l < d_; ++l) {
      const int res = residual_[l][idx[l]];
      ub = std::min(ub, res);
      if (kind_ == TableKind::zero_one) lb = std::max(lb, res - rem[l]);
      else if (rem[l] == 0) lb = std::max(lb, res);
    }
    if (kind_ == TableKind::zero_one) ub = std::min(ub, 1);
    for (int v = ub; v >= lb; --v) {
      Column col(idx, idx + d_);
      for (int& x : col) ++x;
      for (int l = 0; l < d_; ++l) residual_[l][idx[l]] -= v;
      for (int k = 0; k < v; ++k) cols_.push_back(col);
      rec(cell + 1, mass_left - v);
      cols_.resize(cols_.size() - v);
      for (int l = 0; l < d_; ++l) residual_[l][idx[l]] += v;
    }
  }

  Margins margins_;
  TableKind kind_;
  int d_ = 0;
  int m_ = 0;
  int cells_ = 0;
  bool feasible_ = true;
  std::vector<int> dims_;
  std::vector<int> index_;
  std::vector<int> remaining_;
  Margins residual_;
  std::vector<Column> cols_;
  const std::function<void(const Table&)>* emit_ = nullptr;
};

inline void lattice_words(const std::vector<int>& weight, Word& cur, std::vector<int>& used,
                          std::vector<Word>& out) {
  const std::size_t total = std::accumulate(weight.begin(), weight.end(), std::size_t{0});
  if (cur.size() == total) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 0; i < weight.size(); ++i) {
    if (used[i] == weight[i]) continue;
    if (i > 0 && used[i] + 1 > used[i - 1]) continue;
    ++used[i];
    cur.push_back(static_cast<int>(i) + 1);
    lattice_words(weight, cur, used, out);
    cur.pop_back();
    --used[i];
  }
}

}  // namespace detail

/// All lattice words of the given weight (empty if the weight is not a
/// partition).
inline std::vector<Word> lattice_words(const std::vector<int>& weight) {
  std::vector<Word> out;
  for (std::size_t i = 1; i < weight.size(); ++i)
    if (weight[i] > weight[i - 1]) return out;
  Word cur;
  std::vector<int> used(weight.size(), 0);
  detail::lattice_words(weight, cur, used, out);
  return out;
}

/// Streams tables of the given margins. form=lex yields the d-line notations of
/// all N- or (0,1)-hypermatrices (each exactly once, in backtracking order);
/// form=lattice yields tuples of lattice words (filtered for distinct columns
/// when kind=zero_one).
inline void for_each_table(const Margins& margins, TableKind kind, TableForm form,
                           const std::function<void(const Table&)>& emit) {
  if (margins.empty()) return;
  if (form == TableForm::lex) {
    detail::LexTableEnumerator(margins, kind).run(emit);
    return;
  }
  const int d = static_cast<int>(margins.size());
  std::vector<std::vector<Word>> per_row;
  for (const auto& mg : margins) {
    per_row.push_back(lattice_words(mg));
    if (per_row.back().empty()) return;
  }
  std::vector<std::size_t> pick(d, 0);
  while (true) {
    std::vector<Word> rows;
    for (int r = 0; r < d; ++r) rows.push_back(per_row[r][pick[r]]);
    Table t = Table::from_rows(rows);
    if (kind == TableKind::natural || !t.has_duplicate_columns()) emit(t);
    int pos = d - 1;
    while (pos >= 0 && ++pick[pos] == per_row[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
}

/// Same as for_each_table, collected and sorted by Table order.
inline std::vector<Table> enumerate_tables(const Margins& margins, TableKind kind,
                                           TableForm form = TableForm::lex) {
  std::vector<Table> out;
  for_each_table(margins, kind, form, [&](const Table& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Table> enumerate_tables(const WeightTuple& w, TableKind kind,
                                           TableForm form = TableForm::lex) {
  return enumerate_tables(margins_of(w), kind, form);
}

}  // namespace kronhwv
