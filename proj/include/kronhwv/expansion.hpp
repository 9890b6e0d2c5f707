#pragma once

#include "kronhwv/bigint.hpp"
#include "kronhwv/table.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace kronhwv {

enum class Space { sym, alt };

inline const char* space_name(Space s) { return s == Space::sym ? "sym" : "alt"; }

/// A weight-graded sparse integer vector over the lex-table basis of a
/// symmetric (monomials) or alternating (wedges) weight space. Indices are
/// lex-normalized; alt indices are duplicate-free; zero coefficients are never
/// stored.
struct Expansion {
  Space space = Space::sym;
  WeightTuple weight;
  std::map<Table, BigInt> terms;

  Expansion() = default;
  Expansion(Space s, WeightTuple w) : space(s), weight(std::move(w)) {}

  /// Adds c to the coefficient of basis element `index`, which must already be
  /// lex-normalized.
  void add(const Table& index, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  /// Adds c times the (not necessarily lex) basis element ⋁e_X or ⋀e_X.
  void add_unsorted(const Table& x, const BigInt& c) {
    auto lex = lex_normalize(x);
    if (space == Space::alt) {
      if (lex.has_duplicate_columns) return;
      add(lex.table, lex.sign * c);
    } else {
      add(lex.table, c);
    }
  }

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  Expansion& operator+=(const Expansion& o) {
    if (o.space != space) throw std::invalid_argument("Expansion: space mismatch");
    for (const auto& [k, v] : o.terms) add(k, v);
    return *this;
  }
  Expansion scaled(const BigInt& c) const {
    Expansion out(space, weight);
    if (c == 0) return out;
    for (const auto& [k, v] : terms) out.terms.emplace(k, v * c);
    return out;
  }
  Expansion operator-() const { return scaled(-1); }

  bool operator==(const Expansion& o) const { return space == o.space && terms == o.terms; }
};

/// Scalar expansion 1 in degree 0.
inline Expansion scalar_one(Space s, int d) {
  Expansion e(s, WeightTuple::uniform(d, Partition()));
  e.terms.emplace(Table(d, 0), BigInt(1));
  return e;
}

/// Coefficient of the lex basis element x in e (0 if absent).
inline BigInt pair(const Expansion& e, const Table& x) {
  auto it = e.terms.find(x);
  return it == e.terms.end() ? BigInt(0) : it->second;
}

/// Concatenation of the column lists of a and b.
inline Table join_columns(const Table& a, const Table& b) {
  if (a.d() != b.d()) throw std::invalid_argument("join_columns: tables differ in d");
  Table out(a.d(), a.m() + b.m());
  for (int r = 0; r < a.d(); ++r) {
    for (int c = 0; c < a.m(); ++c) out.at(r, c) = a.at(r, c);
    for (int c = 0; c < b.m(); ++c) out.at(r, a.m() + c) = b.at(r, c);
  }
  return out;
}

/// Sum of two weight tuples as compositions, re-sorted.
inline WeightTuple add_weights(const WeightTuple& a, const WeightTuple& b) {
  std::vector<Partition> out;
  for (int l = 0; l < a.d(); ++l) {
    std::vector<int> s(std::max(a[l].length(), b[l].length()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[l].part_or_zero(i) + b[l].part_or_zero(i);
    out.push_back(Partition::from_composition(s));
  }
  return WeightTuple(std::move(out));
}

/// Product in the symmetric (monomial multiplication) or exterior (wedge with
/// merge sign) algebra.
inline Expansion product(const Expansion& a, const Expansion& b) {
  if (a.space != b.space) throw std::invalid_argument("product: space mismatch");
  if (a.weight.d() != b.weight.d()) throw std::invalid_argument("product: d mismatch");
  Expansion out(a.space, add_weights(a.weight, b.weight));
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) out.add_unsorted(join_columns(ka, kb), va * vb);
  return out;
}

}  // namespace kronhwv
