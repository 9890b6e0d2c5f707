#pragma once

#include "kronhwv/table.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace kronhwv {

/// Positions of each letter in a word: blocks[i] lists the 0-based positions
/// of letter i+1 in increasing order.
struct BlockStructure {
  std::vector<std::vector<int>> blocks;

  explicit BlockStructure(std::span<const int> s) {
    for (int p = 0; p < static_cast<int>(s.size()); ++p) {
      const auto letter = static_cast<std::size_t>(s[p]);
      if (letter > blocks.size()) blocks.resize(letter);
      blocks[letter - 1].push_back(p);
    }
  }
};

/// Sign of (a_1..a_k) if it is a permutation of [k], else 0.
inline int permutation_sign_or_zero(std::span<const int> a) {
  const int k = static_cast<int>(a.size());
  std::uint64_t seen = 0;
  std::vector<bool> seen_big;
  int inv = 0;
  for (int i = 0; i < k; ++i) {
    const int v = a[i];
    if (v < 1 || v > k) return 0;
    if (k <= 64) {
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (seen & bit) return 0;
      inv += std::popcount(seen >> v);
      seen |= bit;
    } else {
      if (seen_big.empty()) seen_big.assign(k, false);
      if (seen_big[v - 1]) return 0;
      for (int u = v; u < k; ++u) inv += seen_big[u];
      seen_big[v - 1] = true;
    }
  }
  return inv % 2 ? -1 : 1;
}

/// Product over blocks of s (checked in letter order, stopping at the first
/// zero) of the permutation sign of w restricted to the block.
inline int block_signature(const BlockStructure& s, std::span<const int> w) {
  int sign = 1;
  std::vector<int> buf;
  for (const auto& block : s.blocks) {
    buf.clear();
    for (int p : block) buf.push_back(w[p]);
    const int b = permutation_sign_or_zero(buf);
    if (b == 0) return 0;
    sign *= b;
  }
  return sign;
}

inline int block_signature(std::span<const int> s, std::span<const int> w) {
  if (s.size() != w.size()) throw std::invalid_argument("block_signature: length mismatch");
  return block_signature(BlockStructure(s), w);
}

/// sgn_T(S) = prod_i sgn_{t_i}(s_i).
inline int table_signature(const Table& t, const Table& s) {
  if (t.d() != s.d() || t.m() != s.m())
    throw std::invalid_argument("table_signature: shape mismatch");
  int sign = 1;
  for (int r = 0; r < t.d() && sign != 0; ++r) sign *= block_signature(t.row(r), s.row(r));
  return sign;
}

}  // namespace kronhwv
