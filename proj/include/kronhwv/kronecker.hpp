#pragma once

#include "kronhwv/bigint.hpp"
#include "kronhwv/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kronhwv {

/// z_μ = ∏_j j^{m_j} m_j!, the centralizer order of a permutation of cycle
/// type μ.
inline BigInt centralizer_size(const Partition& mu) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  for (const auto& [j, mj] : mult) {
    for (int i = 0; i < mj; ++i) z *= j;
    z *= factorial(mj);
  }
  return z;
}

struct ConjugacyClass {
  Partition cycle_type;
  BigInt class_size;
};

inline std::vector<ConjugacyClass> conjugacy_classes(int m) {
  std::vector<ConjugacyClass> out;
  const BigInt mf = factorial(m);
  for (auto& mu : partitions_of(m)) {
    BigInt size = exact_div(mf, centralizer_size(mu), "class size");
    out.push_back({std::move(mu), std::move(size)});
  }
  return out;
}

namespace detail {

class CharacterTable {
 public:
  BigInt get(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    const Key key{lambda, mu};
    {
      std::lock_guard lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    BigInt value = compute(lambda, mu);
    std::lock_guard lock(mu_);
    memo_.emplace(key, value);
    return value;
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  // Removes every border strip of size mu[0] via beta-numbers; the sign is the
  // parity of the beads jumped over (the strip's leg length).
  BigInt compute(const std::vector<int>& lambda, const std::vector<int>& mu) {
    const int r = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
      const int target = beta[i] - r;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++jumped;
      std::vector<int> nb = beta;
      nb[i] = target;
      std::sort(nb.begin(), nb.end(), std::greater<>());
      std::vector<int> shape;
      for (int k = 0; k < len; ++k) {
        const int part = nb[k] - (len - 1 - k);
        if (part > 0) shape.push_back(part);
      }
      const BigInt c = get(shape, rest);
      total += jumped % 2 ? -c : c;
    }
    return total;
  }

  std::mutex mu_;
  std::map<Key, BigInt> memo_;
};

inline CharacterTable& character_table() {
  static CharacterTable table;
  return table;
}

}  // namespace detail

/// χ^λ(μ) by the Murnaghan–Nakayama rule (memoized, thread-safe).
inline BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  return detail::character_table().get(lambda.parts(), mu.parts());
}

/// g(λ^(1),...,λ^(d)) = Σ_μ (1/z_μ) ∏_i χ^{λ^(i)}(μ).
inline BigInt kron(const WeightTuple& w) {
  const int m = w.m();
  BigRational sum = 0;
  for (const auto& mu : partitions_of(m)) {
    BigInt prod = 1;
    for (const auto& lambda : w.parts()) {
      prod *= mn_character(lambda, mu);
      if (prod == 0) break;
    }
    if (prod != 0) sum += BigRational(prod, centralizer_size(mu));
  }
  if (denominator(sum) != 1 || sum < 0)
    throw std::logic_error("kron: character sum is not a nonnegative integer");
  return numerator(sum);
}

/// f^λ by the hook-length formula.
inline BigInt dim_irrep(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return exact_div(factorial(lambda.size()), hooks, "hook-length formula");
}

/// Weight tuple with the first partition conjugated: the Kronecker index of
/// the alternating highest weight space of weight w.
inline WeightTuple alt_kron_weight(const WeightTuple& w) {
  std::vector<Partition> ps = w.parts();
  ps.front() = ps.front().conjugate();
  return WeightTuple(std::move(ps));
}

}  // namespace kronhwv
