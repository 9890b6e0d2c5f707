#pragma once

#include "kronhwv/enumerate.hpp"
#include "kronhwv/expansion.hpp"
#include "kronhwv/hwv.hpp"
#include "kronhwv/kronecker.hpp"
#include "kronhwv/linalg.hpp"
#include "kronhwv/parallel.hpp"
#include "kronhwv/report.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kronhwv {

/// A raising index E^(l)_{ij}: direction l (1-based) and letters i < j.
struct RaisingIndex {
  int direction = 1;
  int i = 1;
  int j = 2;
};

/// ∂^(l)_{ij}(S): one table per occurrence of letter j in row l (1-based),
/// with that occurrence replaced by i. Column order is kept.
inline std::vector<Table> boundary(const Table& s, int l, int i, int j) {
  if (l < 1 || l > s.d()) throw std::invalid_argument("boundary: direction out of range");
  std::vector<Table> out;
  for (int c = 0; c < s.m(); ++c) {
    if (s.at(l - 1, c) != j) continue;
    Table t = s;
    t.at(l - 1, c) = i;
    out.push_back(std::move(t));
  }
  return out;
}

/// Applies E^(l)_{ij} term by term: each basis index goes to the sum of its
/// boundary tables, re-sorted (with sign and wedge vanishing in the
/// alternating case).
inline Expansion raising_apply(const Expansion& e, int l, int i, int j) {
  if (i >= j) throw std::invalid_argument("raising_apply: need i < j");
  std::vector<Partition> ws = e.weight.parts();
  if (l >= 1 && l <= static_cast<int>(ws.size())) {
    std::vector<int> comp = ws[l - 1].parts();
    if (static_cast<int>(comp.size()) < j) comp.resize(j, 0);
    ++comp[i - 1];
    if (comp[j - 1] > 0) --comp[j - 1];
    ws[l - 1] = Partition::from_composition(comp);
  }
  Expansion out(e.space, WeightTuple(ws));
  for (const auto& [t, c] : e.terms)
    for (const Table& b : boundary(t, l, i, j)) out.add_unsorted(b, c);
  return out;
}

/// True iff every Chevalley raising operator E^(l)_{i,i+1} kills e.
inline bool is_hwv(const Expansion& e) {
  const int d = e.weight.d();
  for (int l = 1; l <= d; ++l) {
    int letters = 0;
    for (const auto& [t, c] : e.terms)
      for (int a : t.row(l - 1)) letters = std::max(letters, a);
    for (int i = 1; i < letters; ++i)
      if (!raising_apply(e, l, i, i + 1).is_zero()) return false;
  }
  return true;
}

namespace detail {

/// Raising indices (l, i, j) with j ≤ number of letters of row l of `dual`.
inline std::vector<RaisingIndex> raising_indices(const WeightTuple& dual, bool all_pairs) {
  std::vector<RaisingIndex> out;
  for (int l = 1; l <= dual.d(); ++l) {
    const int letters = dual[l - 1].length();
    for (int i = 1; i <= letters; ++i)
      for (int j = i + 1; j <= letters; ++j)
        if (all_pairs || j == i + 1) out.push_back({l, i, j});
  }
  return out;
}

/// Margins of α^(l)_{ij} applied to `dual`, or empty if some entry goes
/// negative.
inline Margins shifted_margins(const WeightTuple& dual, const RaisingIndex& r) {
  Margins mg = margins_of(dual);
  auto& row = mg[r.direction - 1];
  ++row[r.i - 1];
  if (--row[r.j - 1] < 0) return {};
  return mg;
}

}  // namespace detail

/// For every raising index and every X of weight α^(l)_{ij} w' in the
/// relevant family, checks Σ_{T ∈ ∂^(l)_{ji}(X)} ‖T‖ Δ_T = 0 (X 0/1 for odd
/// d, arbitrary for even d) and Σ ‖S‖ ∇_S = 0 over ∂^(l)_{ji}(Y) (Y arbitrary
/// for odd d, 0/1 for even d). The weight ‖T‖ comes from E_{ij} acting as a
/// derivation on ⋁e_X: a column of multiplicity r is hit r times. It is 1
/// whenever the boundary table repeats no column, and a boundary table that
/// does repeat a column in the 0/1 families has a vanishing expansion anyway.
inline Report check_relations(const WeightTuple& w, bool all_pairs = false,
                              Method method = Method::automatic) {
  Stopwatch clock;
  Report report;
  report.claim = "relations " + w.str();
  const WeightTuple dual = w.conjugate();
  const bool odd = w.d() % 2 == 1;
  for (const auto& ri : detail::raising_indices(dual, all_pairs)) {
    const Margins mg = detail::shifted_margins(dual, ri);
    if (mg.empty()) continue;
    for (Space side : {Space::sym, Space::alt}) {
      const bool zero_one = (side == Space::sym) == odd;
      const auto xs = enumerate_tables(mg, zero_one ? TableKind::zero_one : TableKind::natural);
      std::vector<Report> parts(xs.size());
      parallel_for(xs.size(), [&](std::size_t k) {
        Expansion sum(side, w);
        for (const Table& t : boundary(xs[k], ri.direction, ri.j, ri.i)) {
          const Expansion e =
              side == Space::sym ? delta_expansion(t, method) : nabla_expansion(t, method);
          sum += e.scaled(stabilizer_size(t));
        }
        parts[k].check(sum.is_zero(), std::string(side == Space::sym ? "Delta" : "Nabla") +
                                          " relation l=" + std::to_string(ri.direction) +
                                          " i=" + std::to_string(ri.i) +
                                          " j=" + std::to_string(ri.j) + " X=" + xs[k].str() +
                                          " leaves " + std::to_string(sum.size()) + " terms");
      });
      for (const auto& p : parts) report.merge(p);
    }
  }
  report.elapsed_ms = clock.ms();
  return report;
}

/// Rank of the span of the boundary vectors ⋀∂(X) / Σ ‖S‖ ⋁e_S (S ∈ ∂(Y))
/// inside the domain weight space of the Δ map (side=sym) or the ∇ map
/// (side=alt), compared with dim(domain) - g.
inline Report kernel_dimension(const WeightTuple& w, Space side, bool all_pairs = false) {
  Stopwatch clock;
  Report report;
  report.claim = std::string("kernel ") + space_name(side) + " " + w.str();
  const WeightTuple dual = w.conjugate();
  const bool odd = w.d() % 2 == 1;
  const bool zero_one = (side == Space::sym) == odd;
  const Space domain_space = zero_one ? Space::alt : Space::sym;
  const TableKind kind = zero_one ? TableKind::zero_one : TableKind::natural;

  std::vector<Table> domain = enumerate_tables(dual, kind);
  if (w.m() == 0) domain = {Table(w.d(), 0)};
  std::map<Table, std::size_t> position;
  for (std::size_t k = 0; k < domain.size(); ++k) position.emplace(domain[k], k);

  IntMatrix rows;
  for (const auto& ri : detail::raising_indices(dual, all_pairs)) {
    const Margins mg = detail::shifted_margins(dual, ri);
    if (mg.empty()) continue;
    for (const Table& x : enumerate_tables(mg, kind)) {
      Expansion v(domain_space, dual);
      for (const Table& t : boundary(x, ri.direction, ri.j, ri.i))
        v.add_unsorted(t, stabilizer_size(t));
      if (v.is_zero()) continue;
      std::vector<BigInt> row(domain.size());
      for (const auto& [t, c] : v.terms) row.at(position.at(t)) = c;
      rows.push_back(std::move(row));
    }
  }
  const int r = exact_rank(rows);
  const BigInt g = side == Space::sym ? kron(w) : kron(alt_kron_weight(w));
  const BigInt expected = BigInt(domain.size()) - g;
  report.check(BigInt(r) == expected, "rank " + std::to_string(r) + " != dim " +
                                          std::to_string(domain.size()) + " - g " + g.str());
  report.detail("domain_dim", std::to_string(domain.size()));
  report.detail("rank", std::to_string(r));
  report.detail("g", g.str());
  report.elapsed_ms = clock.ms();
  return report;
}

}  // namespace kronhwv
