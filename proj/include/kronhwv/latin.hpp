#pragma once

#include "kronhwv/bigint.hpp"
#include "kronhwv/parallel.hpp"
#include "kronhwv/table.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kronhwv {

/// F_{d,k}: the d x k^d table whose columns are all of [k]^d in lex order.
inline Table fundamental_table(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("fundamental_table: need d, k >= 1");
  std::vector<Column> cols;
  Column c(d, 1);
  while (true) {
    cols.push_back(c);
    int pos = d - 1;
    while (pos >= 0 && ++c[pos] > k) c[pos--] = 1;
    if (pos < 0) break;
  }
  return Table::from_columns(d, cols);
}

/// A filling of the support cells (columns of a lex, duplicate-free table)
/// with values in [n]; values[c] belongs to support column c.
struct PartialLatinHypercube {
  Table support;
  std::vector<int> values;
};

namespace detail {

/// Backtracking over the support cells in lex order. used[l][level] is the
/// bitmask of values already placed in that slice; since cells are visited in
/// lex order, the inversion count of each slice's reading is accumulated
/// incrementally.
class LatinSearch {
 public:
  LatinSearch(const Table& support, int n) : support_(support), n_(n) {
    if (support.has_duplicate_columns())
      throw std::invalid_argument("latin: support must be duplicate-column-free");
    if (!support.is_lex()) throw std::invalid_argument("latin: support must be lex");
    if (n < 1 || n > 63) throw std::invalid_argument("latin: need 1 <= n <= 63");
    d_ = support.d();
    m_ = support.m();
    feasible_ = m_ % n == 0;
    if (feasible_) {
      const int k = m_ / n;
      for (const auto& w : support.weight()) {
        if (static_cast<int>(w.size()) != k) feasible_ = false;
        for (int c : w)
          if (c != n) feasible_ = false;
      }
      levels_ = k;
    }
    used_.assign(static_cast<std::size_t>(d_) * (levels_ + 1), 0);
    values_.assign(m_, 0);
  }

  bool feasible() const { return feasible_; }
  int n() const { return n_; }

  /// Values allowed at cell 0, used for splitting the search.
  std::vector<int> first_choices() const {
    std::vector<int> out;
    if (!feasible_ || m_ == 0) return out;
    for (int v = 1; v <= n_; ++v) out.push_back(v);
    return out;
  }

  /// Signed sum and count over fillings; `first` fixes the value of cell 0
  /// (0 = free).
  void run(int first, std::int64_t& signed_sum, std::int64_t& count,
           const std::function<void(const std::vector<int>&, int)>* visit = nullptr) {
    signed_sum = 0;
    count = 0;
    if (!feasible_) return;
    if (m_ == 0) {
      signed_sum = count = 1;
      return;
    }
    sum_ = &signed_sum;
    count_ = &count;
    visit_ = visit;
    first_ = first;
    rec(0, 0);
  }

 private:
  std::uint64_t& slot(int l, int level) {
    return used_[static_cast<std::size_t>(l) * (levels_ + 1) + level];
  }

  void rec(int cell, int parity) {
    if (cell == m_) {
      *sum_ += parity % 2 ? -1 : 1;
      ++*count_;
      if (visit_) (*visit_)(values_, parity % 2 ? -1 : 1);
      return;
    }
    const int lo = cell == 0 && first_ ? first_ : 1;
    const int hi = cell == 0 && first_ ? first_ : n_;
    for (int v = lo; v <= hi; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      int par = parity;
      int l = 0;
      for (; l < d_; ++l) {
        const std::uint64_t mask = slot(l, support_.at(l, cell));
        if (mask & bit) break;
        par += std::popcount(mask >> v);
      }
      if (l < d_) continue;
      for (l = 0; l < d_; ++l) slot(l, support_.at(l, cell)) |= bit;
      values_[cell] = v;
      rec(cell + 1, par);
      for (l = 0; l < d_; ++l) slot(l, support_.at(l, cell)) &= ~bit;
    }
  }

  const Table& support_;
  int n_;
  int d_ = 0;
  int m_ = 0;
  int levels_ = 0;
  bool feasible_ = false;
  int first_ = 0;
  std::vector<std::uint64_t> used_;
  std::vector<int> values_;
  std::int64_t* sum_ = nullptr;
  std::int64_t* count_ = nullptr;
  const std::function<void(const std::vector<int>&, int)>* visit_ = nullptr;
};

struct LatinTotals {
  BigInt signed_sum = 0;
  BigInt count = 0;
};

inline LatinTotals latin_totals(const Table& support, int n) {
  const LatinSearch probe(support, n);
  LatinTotals out;
  if (!probe.feasible()) return out;
  if (support.m() == 0) return {1, 1};
  const auto firsts = probe.first_choices();
  std::vector<std::int64_t> sums(firsts.size()), counts(firsts.size());
  parallel_for(firsts.size(), [&](std::size_t i) {
    LatinSearch search(support, n);
    search.run(firsts[i], sums[i], counts[i]);
  });
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    out.signed_sum += sums[i];
    out.count += counts[i];
  }
  return out;
}

}  // namespace detail

/// Calls emit for each partial Latin hypercube on `support` (lex,
/// duplicate-free, weight (k x n)^d) with values in [n].
inline void enumerate_latin(const Table& support, int n,
                            const std::function<void(const PartialLatinHypercube&)>& emit) {
  detail::LatinSearch search(support, n);
  std::int64_t sum = 0;
  std::int64_t count = 0;
  const std::function<void(const std::vector<int>&, int)> visit =
      [&](const std::vector<int>& values, int) { emit({support, values}); };
  search.run(0, sum, count, &visit);
}

/// Product over all slices of the sign of the slice's values read in lex order
/// of its cells; 0 if some slice is not a permutation of [n].
inline int latin_sign(const PartialLatinHypercube& l) {
  const Table& t = l.support;
  const std::vector<int>& vals = l.values;
  int sign = 1;
  for (int r = 0; r < t.d(); ++r) {
    const int levels = t.max_letter();
    for (int level = 1; level <= levels; ++level) {
      Word reading;
      for (int c = 0; c < t.m(); ++c)
        if (t.at(r, c) == level) reading.push_back(vals[c]);
      if (reading.empty()) continue;
      std::vector<bool> seen(reading.size() + 1, false);
      for (int v : reading) {
        if (v < 1 || v > static_cast<int>(reading.size()) || seen[v]) return 0;
        seen[v] = true;
      }
      sign *= inv_sign(reading);
    }
  }
  return sign;
}

/// AT_d(T) = Σ_L sgn(L) over partial Latin hypercubes with support T.
inline BigInt alon_tarsi(const Table& support, int n) {
  return detail::latin_totals(support, n).signed_sum;
}

/// AT_d(k) over the full support [k]^d with n = k^{d-1}.
inline BigInt alon_tarsi(int d, int k) {
  int n = 1;
  for (int i = 1; i < d; ++i) n *= k;
  return alon_tarsi(fundamental_table(d, k), n);
}

/// |L_d(k)|: number of Latin hypercubes on [k]^d.
inline BigInt latin_count(int d, int k) {
  int n = 1;
  for (int i = 1; i < d; ++i) n *= k;
  return detail::latin_totals(fundamental_table(d, k), n).count;
}

}  // namespace kronhwv
