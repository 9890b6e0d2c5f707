#pragma once

#include "kronhwv/bigint.hpp"
#include "kronhwv/signature.hpp"
#include "kronhwv/table.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronhwv {

enum class Method { oracle, fillings, automatic };

inline Method parse_method(const std::string& s) {
  if (s == "oracle") return Method::oracle;
  if (s == "fillings") return Method::fillings;
  if (s == "auto") return Method::automatic;
  throw std::invalid_argument("unknown method '" + s + "' (expected oracle|fillings|auto)");
}

/// Largest m for which Method::automatic uses the m!-oracle.
inline std::atomic<int>& oracle_max_m() {
  static std::atomic<int> m{7};
  return m;
}

namespace detail {

/// True iff the row weights of x are exactly the dual weight of the index
/// table, i.e. sgn_index(pi x) can be nonzero for some pi.
inline bool weights_match(const Table& index, const Table& x) {
  if (index.d() != x.d() || index.m() != x.m()) return false;
  const auto dual = index.dual_weight();
  for (int r = 0; r < x.d(); ++r) {
    if (word_weight(x.row(r)) != dual[r].parts()) return false;
  }
  return true;
}

/// Precomputed block data of an index table, reused across content tables.
/// Cell (p, r) of the index lies in block slot_[p*d + r] (one slot per letter
/// per row) of size size_[p*d + r].
class IndexKernel {
 public:
  explicit IndexKernel(const Table& index) : d_(index.d()), m_(index.m()) {
    if (m_ > 64) throw std::invalid_argument("IndexKernel: m > 64 unsupported");
    slot_.resize(static_cast<std::size_t>(d_) * m_);
    size_.resize(slot_.size());
    for (int r = 0; r < d_; ++r) {
      const auto w = word_weight(index.row(r));
      for (int p = 0; p < m_; ++p) {
        const int letter = index.at(r, p) - 1;
        slot_[static_cast<std::size_t>(p) * d_ + r] = blocks_ + letter;
        size_[static_cast<std::size_t>(p) * d_ + r] = w[letter];
      }
      blocks_ += static_cast<int>(w.size());
    }
  }

  int d() const { return d_; }
  int m() const { return m_; }

  /// Sum over pi in S_m of [perm_sign ? sgn(pi) : 1] * sgn_index(pi content),
  /// (pi content)(p) = content(pi(p)). Every ordering of the labelled columns
  /// is visited position by position; a prefix that already breaks a block
  /// makes every completion contribute 0 and is not extended.
  std::int64_t oracle_sum(const Table& content, bool perm_sign) const {
    if (m_ > 12) throw std::invalid_argument("m!-oracle refuses m > 12");
    Search s(*this, content, perm_sign);
    for (int c = 0; c < m_; ++c) {
      s.count[c] = 1;
      s.label[c] = c;
    }
    s.groups = m_;
    s.start();
    return s.sum;
  }

  /// Signed count of fillings: the content's distinct columns, with
  /// multiplicity, placed on the cells so that every block of every row gets
  /// a permutation of [block size]. With perm_sign the content must not
  /// repeat a column and each filling also carries the sign of the induced
  /// ordering of content positions.
  std::int64_t filling_sum(const Table& content, bool perm_sign) const {
    Search s(*this, content, perm_sign);
    int order[64];
    std::iota(order, order + m_, 0);
    auto cmp = [&](int a, int b) {
      for (int r = 0; r < d_; ++r)
        if (content.at(r, a) != content.at(r, b)) return content.at(r, a) < content.at(r, b) ? -1 : 1;
      return 0;
    };
    std::sort(order, order + m_, [&](int a, int b) {
      const int c = cmp(a, b);
      return c ? c < 0 : a < b;
    });
    int g = -1;
    for (int i = 0; i < m_; ++i) {
      if (i == 0 || cmp(order[i - 1], order[i]) != 0) {
        ++g;
        s.label[g] = order[i];
        s.count[g] = 0;
      }
      ++s.count[g];
    }
    s.groups = g + 1;
    s.start();
    return s.sum;
  }

 private:
  struct Search {
    static constexpr int kInline = 256;

    const IndexKernel& k;
    bool perm_sign;
    std::uint64_t used_inline[kInline];
    std::vector<std::uint64_t> used_heap;
    std::uint64_t* used;
    const Table& content;
    std::vector<int> value;  // value[g*d + r]: row r of group g's column
    int count[64] = {};
    int label[64] = {};
    int groups = 0;
    std::uint64_t avail = 0;  // groups with count > 0
    std::uint64_t taken = 0;
    std::int64_t sum = 0;

    Search(const IndexKernel& kernel, const Table& t, bool sign)
        : k(kernel), perm_sign(sign), used(used_inline), content(t) {
      if (k.blocks_ > kInline) {
        used_heap.assign(k.blocks_, 0);
        used = used_heap.data();
      } else {
        std::fill_n(used_inline, k.blocks_, 0);
      }
    }

    void start() {
      value.resize(static_cast<std::size_t>(groups) * k.d_);
      for (int g = 0; g < groups; ++g) {
        for (int r = 0; r < k.d_; ++r)
          value[static_cast<std::size_t>(g) * k.d_ + r] = content.at(r, label[g]);
        avail |= std::uint64_t{1} << g;
      }
      rec(0, 0);
    }

    void rec(int p, int parity) {
      if (p == k.m_) {
        sum += parity % 2 ? -1 : 1;
        return;
      }
      const int d = k.d_;
      const int* slot = &k.slot_[static_cast<std::size_t>(p) * d];
      const int* size = &k.size_[static_cast<std::size_t>(p) * d];
      for (std::uint64_t todo = avail; todo; todo &= todo - 1) {
        const int g = std::countr_zero(todo);
        const int* v = &value[static_cast<std::size_t>(g) * d];
        int par = parity;
        int r = 0;
        for (; r < d; ++r) {
          if (v[r] > size[r]) break;
          const std::uint64_t mask = used[slot[r]];
          if (mask >> (v[r] - 1) & 1) break;
          par += std::popcount(mask >> v[r]);
        }
        if (r < d) continue;
        for (r = 0; r < d; ++r) used[slot[r]] |= std::uint64_t{1} << (v[r] - 1);
        const int c = label[g];
        if (perm_sign) par += std::popcount(taken >> c);
        taken |= std::uint64_t{1} << c;
        if (--count[g] == 0) avail &= ~(std::uint64_t{1} << g);
        rec(p + 1, par);
        if (count[g]++ == 0) avail |= std::uint64_t{1} << g;
        taken &= ~(std::uint64_t{1} << c);
        for (r = 0; r < d; ++r) used[slot[r]] &= ~(std::uint64_t{1} << (v[r] - 1));
      }
    }
  };

  int d_;
  int m_;
  int blocks_ = 0;
  std::vector<int> slot_;
  std::vector<int> size_;
};

inline bool use_oracle(Method method, int m) {
  return method == Method::oracle || (method == Method::automatic && m <= oracle_max_m().load());
}

}  // namespace detail

/// a(T,S) = <Delta_T, ⋁e_S>: the exact integer
/// (-1)^T / (||T|| ||S||) * sum_{pi in S_m} sgn_T(pi S).
/// Returns 0 when the weights of T and S are not conjugate.
inline BigInt coeff_a(const Table& t, const Table& s, Method method = Method::automatic) {
  if (t.m() > 64) throw std::invalid_argument("coeff_a: m > 64 unsupported");
  if (!detail::weights_match(t, s)) return 0;
  if (t.m() == 0) return 1;
  BigInt total;
  if (detail::use_oracle(method, t.m())) {
    total = exact_div(BigInt(detail::IndexKernel(t).oracle_sum(s, false)), stabilizer_size(s),
                      "coeff_a oracle ||S||");
  } else {
    total = BigInt(detail::IndexKernel(t).filling_sum(s, false));
  }
  return table_sign(t) * exact_div(total, stabilizer_size(t), "coeff_a ||T||");
}

/// b(S,T) = <Nabla_S, ⋀e_T>: the exact integer
/// (-1)^S / ||S|| * sum_{pi in S_m} sgn(pi) sgn_S(pi T). T must not repeat a
/// column.
inline BigInt coeff_b(const Table& s, const Table& t, Method method = Method::automatic) {
  if (t.has_duplicate_columns())
    throw std::invalid_argument("coeff_b: T must be duplicate-column-free");
  if (t.m() > 64) throw std::invalid_argument("coeff_b: m > 64 unsupported");
  if (!detail::weights_match(s, t)) return 0;
  if (s.m() == 0) return 1;
  BigInt total;
  if (detail::use_oracle(method, s.m())) {
    total = BigInt(detail::IndexKernel(s).oracle_sum(t, true));
  } else {
    total = BigInt(detail::IndexKernel(s).filling_sum(t, true));
  }
  return table_sign(s) * exact_div(total, stabilizer_size(s), "coeff_b ||S||");
}

}  // namespace kronhwv
