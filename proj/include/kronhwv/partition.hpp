#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronhwv {

/// Weakly decreasing sequence of positive integers. The empty partition is the
/// partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw std::invalid_argument("Partition: parts must be positive and weakly decreasing");
      }
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros, so any composition becomes a partition.
  static Partition from_composition(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i (0-based), 0 past the end.
  int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> out;
    if (!parts_.empty()) {
      out.resize(parts_.front());
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[j];
    }
    return Partition(std::move(out));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

/// All partitions of m in reverse lexicographic order ((m) first).
inline std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// A d-tuple of partitions of a common size m (d >= 1).
class WeightTuple {
 public:
  WeightTuple() = default;
  WeightTuple(std::vector<Partition> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("WeightTuple: d must be >= 1");
    m_ = parts_.front().size();
    for (const auto& p : parts_) {
      if (p.size() != m_) throw std::invalid_argument("WeightTuple: partitions differ in size");
    }
  }
  WeightTuple(std::initializer_list<Partition> parts)
      : WeightTuple(std::vector<Partition>(parts)) {}

  /// d copies of one partition.
  static WeightTuple uniform(int d, const Partition& p) {
    return WeightTuple(std::vector<Partition>(static_cast<std::size_t>(d), p));
  }

  int d() const { return static_cast<int>(parts_.size()); }
  int m() const { return m_; }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<Partition>& parts() const { return parts_; }

  WeightTuple conjugate() const {
    std::vector<Partition> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) out.push_back(p.conjugate());
    return WeightTuple(std::move(out));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += "|";
      const auto& pp = parts_[i].parts();
      for (std::size_t j = 0; j < pp.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(pp[j]);
      }
    }
    return s;
  }

  auto operator<=>(const WeightTuple&) const = default;

 private:
  std::vector<Partition> parts_;
  int m_ = 0;
};

/// Every d-tuple of partitions of m, in lexicographic order of the tuple of
/// partition indices.
inline std::vector<WeightTuple> all_weight_tuples(int d, int m) {
  const auto ps = partitions_of(m);
  std::vector<WeightTuple> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<Partition> tuple;
    for (auto i : idx) tuple.push_back(ps[i]);
    out.emplace_back(std::move(tuple));
    int pos = d - 1;
    while (pos >= 0 && ++idx[pos] == ps.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

/// Rectangular partition with `rows` parts each equal to `width`
/// (written rows x width, i.e. (width^rows)).
inline Partition rectangle(int rows, int width) {
  if (rows <= 0 || width <= 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

}  // namespace kronhwv
