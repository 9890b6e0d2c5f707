#include "brute.hpp"

#include <gtest/gtest.h>

using namespace kronhwv;

TEST(ExactRank, Basics) {
  EXPECT_EQ(exact_rank(IntMatrix{}), 0);
  EXPECT_EQ(exact_rank(IntMatrix{{0, 0}, {0, 0}}), 0);
  IntMatrix id(4, std::vector<BigInt>(4, 0));
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  EXPECT_EQ(exact_rank(id), 4);
  EXPECT_EQ(exact_rank(IntMatrix{{2, 4, 6}, {1, 2, 3}, {3, 6, 10}}), 2);
  EXPECT_EQ(exact_rank(IntMatrix{{0, 1}, {1, 0}, {1, 1}}), 2);
}

TEST(ExactRank, LargeEntriesStayExact) {
  // Rows r_i = (1, x_i, x_i^2) with distinct huge x_i have rank 3; a fourth
  // row equal to r_1 + r_2 keeps it there.
  const BigInt big = BigInt(1) << 200;
  IntMatrix m;
  for (int i = 1; i <= 3; ++i) {
    const BigInt x = big + i;
    m.push_back({1, x, x * x});
  }
  m.push_back({m[0][0] + m[1][0], m[0][1] + m[1][1], m[0][2] + m[1][2]});
  EXPECT_EQ(exact_rank(m), 3);
}

TEST(CoeffMatrix, Examples) {
  const auto m = coeff_matrix(WeightTuple{{2, 2}, {2, 2}, {2, 2}}, CoeffKind::a);
  EXPECT_GE(m.row_index.size(), 4u);
  EXPECT_EQ(exact_rank(m), 1);
  for (int d = 1; d <= 4; ++d) {
    const auto one = coeff_matrix(WeightTuple::uniform(d, Partition{1}), CoeffKind::a);
    EXPECT_EQ(one.entries, (IntMatrix{{1}}));
  }
  const auto zero = coeff_matrix(WeightTuple{{2}, {1, 1}}, CoeffKind::a);
  for (const auto& row : zero.entries)
    for (const auto& v : row) EXPECT_EQ(v, 0);
}

TEST(CoeffMatrix, EntriesMatchDefinition) {
  const WeightTuple w{{2, 1}, {2, 1}, {2, 1}};
  const auto a = coeff_matrix(w, CoeffKind::a);
  for (std::size_t i = 0; i < a.row_index.size(); ++i)
    for (std::size_t j = 0; j < a.col_index.size(); ++j)
      EXPECT_EQ(a.entries[i][j], brute::coeff_a(a.row_index[i], a.col_index[j]));
  const auto b = coeff_matrix(w, CoeffKind::b);
  for (std::size_t i = 0; i < b.row_index.size(); ++i)
    for (std::size_t j = 0; j < b.col_index.size(); ++j)
      EXPECT_EQ(b.entries[i][j], brute::coeff_b(b.row_index[i], b.col_index[j]));
}

TEST(Duality, OddAndEvenSmall) {
  for (int d : {2, 3, 4})
    for (int m = 0; m <= 3; ++m)
      for (const auto& w : all_weight_tuples(d, m)) {
        const Report r = check_duality(w);
        EXPECT_TRUE(r.pass()) << w.str() << ": " << (r.violations.empty() ? "" : r.violations[0]);
      }
}

TEST(Duality, OddSignIsTupleSign) {
  // b(S,T) = (-1)^λ a(T,S) with the sign read off independently.
  const WeightTuple w{{2, 2}, {2, 2}, {2, 2}};
  const int sign = tuple_sign(w);
  EXPECT_EQ(sign, -1);
  for (const auto& t : enumerate_tables(w.conjugate(), TableKind::zero_one))
    for (const auto& s : enumerate_tables(w, TableKind::natural))
      EXPECT_EQ(brute::coeff_b(s, t), sign * brute::coeff_a(t, s));
}

TEST(Isomorphism, Examples) {
  for (const auto& w : {WeightTuple{{2, 2}, {2, 2}, {2, 2}}, WeightTuple{{2}, {2}},
                        WeightTuple{{3}, {2, 1}, {2, 1}}, WeightTuple{{2, 1}, {2, 1}, {1, 1, 1}},
                        WeightTuple{{1}}}) {
    const Report r = check_isomorphism(w);
    EXPECT_TRUE(r.pass()) << w.str() << ": " << (r.violations.empty() ? "" : r.violations[0]);
  }
  const Report r = check_isomorphism(WeightTuple{{2, 2}, {2, 2}, {2, 2}});
  ASSERT_FALSE(r.details.empty());
  EXPECT_EQ(r.details[0], (std::pair<std::string, std::string>{"rank_a", "1"}));
}
