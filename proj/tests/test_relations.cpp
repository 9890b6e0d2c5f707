#include "brute.hpp"

#include <gtest/gtest.h>

using namespace kronhwv;

namespace {

Table T(const char* s) { return parse_table_shorthand(s); }

std::vector<std::string> strs(const std::vector<Table>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.str());
  return out;
}

}  // namespace

TEST(Boundary, Examples) {
  EXPECT_EQ(strs(boundary(T("11212"), 1, 1, 2)), (std::vector<std::string>{"11112", "11211"}));
  EXPECT_TRUE(boundary(T("111"), 1, 1, 2).empty());
  EXPECT_EQ(strs(boundary(T("11/22"), 2, 1, 2)), (std::vector<std::string>{"11/12", "11/21"}));
  EXPECT_THROW(boundary(T("11/22"), 3, 1, 2), std::invalid_argument);
}

TEST(RaisingApply, SingleTerms) {
  Expansion e(Space::alt, WeightTuple{{1, 1}, {1, 1}});
  e.add(T("12/12"), 1);
  // Row 2, 2 -> 1: 12/11, a wedge of two distinct columns.
  const Expansion r = raising_apply(e, 2, 1, 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(pair(r, T("12/11")), 1);

  Expansion dup(Space::alt, WeightTuple{{1, 1}, {2}});
  dup.add(T("12/11"), 1);
  EXPECT_TRUE(raising_apply(dup, 1, 1, 2).is_zero());
}

TEST(IsHwv, Examples) {
  Expansion e(Space::sym, WeightTuple{{1, 1}});
  e.add(T("12"), 1);
  EXPECT_FALSE(is_hwv(e));
  EXPECT_TRUE(is_hwv(scalar_one(Space::sym, 2)));
}

TEST(IsHwv, EveryExpansionIsHighestWeight) {
  for (int d = 1; d <= 3; ++d)
    for (int m = 1; m <= (d == 3 ? 3 : 4); ++m)
      for (const auto& w : all_weight_tuples(d, m))
        for (const auto& t : enumerate_tables(w, TableKind::natural)) {
          EXPECT_TRUE(is_hwv(delta_expansion(t))) << t.str();
          EXPECT_TRUE(is_hwv(nabla_expansion(t))) << t.str();
        }
}

TEST(IsHwv, ExpansionsAreKilledByEveryPair) {
  const Expansion e = delta_expansion(T("1122/1122/1212"));
  ASSERT_FALSE(e.is_zero());
  for (int l = 1; l <= 3; ++l) EXPECT_TRUE(raising_apply(e, l, 1, 2).is_zero());
}

TEST(Relations, SquareWeightTwoByTwo) {
  const WeightTuple w{{2, 2}, {2, 2}, {2, 2}};
  for (bool all : {false, true}) {
    const Report r = check_relations(w, all);
    EXPECT_TRUE(r.pass()) << (r.violations.empty() ? "" : r.violations[0]);
    EXPECT_GT(r.checked, 0u);
  }
  // The three slice relations tie X to zero and A, B, C together.
  const auto orbits = slice_orbits(enumerate_tables(w.conjugate(), TableKind::zero_one));
  int vanishing = 0;
  for (const auto& orbit : orbits)
    if (delta_expansion(orbit.front()).is_zero()) ++vanishing;
  EXPECT_EQ(vanishing, 1);
}

TEST(Relations, Vacuous) {
  const Report r = check_relations(WeightTuple{{1}, {1}});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checked, 0u);
}

TEST(Relations, SmallSweep) {
  for (int d : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (const auto& w : all_weight_tuples(d, m))
        for (bool all : {false, true}) {
          const Report r = check_relations(w, all);
          EXPECT_TRUE(r.pass()) << w.str() << ": " << (r.violations.empty() ? "" : r.violations[0]);
        }
}

TEST(Kernel, Examples) {
  const Report r = kernel_dimension(WeightTuple{{2, 2}, {2, 2}, {2, 2}}, Space::sym);
  EXPECT_TRUE(r.pass());
  const Report one = kernel_dimension(WeightTuple{{1}, {1}, {1}}, Space::sym);
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(one.details[0].second, "1");  // domain_dim
  EXPECT_EQ(one.details[1].second, "0");  // rank
  const Report zero = kernel_dimension(WeightTuple{{2}, {1, 1}}, Space::sym);
  EXPECT_TRUE(zero.pass());
  EXPECT_EQ(zero.details[0].second, zero.details[1].second);
}

TEST(Kernel, SmallSweep) {
  for (int d : {2, 3})
    for (int m = 1; m <= 3; ++m)
      for (const auto& w : all_weight_tuples(d, m))
        for (Space side : {Space::sym, Space::alt})
          for (bool all : {false, true})
            EXPECT_TRUE(kernel_dimension(w, side, all).pass()) << w.str();
}

// The relation sums weight each boundary table by ||T||; without that weight
// a ∇-relation for (2,2)^3 is left with nonzero terms.
TEST(Relations, StabilizerWeightIsNeeded) {
  const Table y = T("1112/1122/1122");
  Expansion weighted(Space::alt, WeightTuple{{2, 2}, {2, 2}, {2, 2}});
  Expansion plain = weighted;
  for (const Table& s : boundary(y, 1, 2, 1)) {
    const Expansion e = nabla_expansion(s);
    weighted += e.scaled(stabilizer_size(s));
    plain += e;
  }
  EXPECT_TRUE(weighted.is_zero());
  EXPECT_FALSE(plain.is_zero());
}
