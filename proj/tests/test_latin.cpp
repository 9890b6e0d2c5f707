#include "brute.hpp"

#include <gtest/gtest.h>

using namespace kronhwv;

TEST(Latin, SquareCountsMatchBruteForce) {
  for (int k = 1; k <= 4; ++k) {
    const auto [count, signed_sum] = brute::latin_squares(k);
    EXPECT_EQ(latin_count(2, k), count) << k;
    EXPECT_EQ(alon_tarsi(2, k), signed_sum) << k;
  }
}

TEST(Latin, PinnedValues) {
  EXPECT_EQ(latin_count(2, 2), 2);
  EXPECT_EQ(latin_count(2, 3), 12);
  EXPECT_EQ(latin_count(2, 4), 576);
  EXPECT_EQ(alon_tarsi(2, 2), 2);
  EXPECT_EQ(alon_tarsi(2, 3), 0);
  EXPECT_EQ(alon_tarsi(3, 2), 24);
  EXPECT_EQ(latin_count(3, 2), 24);
}

TEST(Latin, EnumerateOrderTwo) {
  std::vector<std::vector<int>> seen;
  enumerate_latin(fundamental_table(2, 2), 2, [&](const PartialLatinHypercube& l) {
    seen.push_back(l.values);
    EXPECT_EQ(latin_sign(l), 1);
  });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{1, 2, 2, 1}, {2, 1, 1, 2}}));
}

TEST(Latin, SignOfSquares) {
  const Table f = fundamental_table(2, 2);
  EXPECT_EQ(latin_sign({f, {1, 2, 2, 1}}), 1);
  EXPECT_EQ(latin_sign({f, {2, 1, 1, 2}}), 1);
  EXPECT_EQ(latin_sign({f, {1, 1, 2, 2}}), 0);
  // The lex-increasing filling of a 0/1 support whose slices are increasing.
  const Table diag = parse_table_shorthand("12/12");
  EXPECT_EQ(latin_sign({diag, {1, 1}}), 1);
}

TEST(Latin, EnumeratedSignsSumToAlonTarsi) {
  const Table f = fundamental_table(3, 2);
  BigInt sum = 0;
  int count = 0;
  enumerate_latin(f, 4, [&](const PartialLatinHypercube& l) {
    sum += latin_sign(l);
    ++count;
  });
  EXPECT_EQ(count, latin_count(3, 2));
  EXPECT_EQ(sum, alon_tarsi(3, 2));
}

TEST(Latin, RejectsBadSupport) {
  EXPECT_THROW(alon_tarsi(parse_table_shorthand("11/11"), 2), std::invalid_argument);
  EXPECT_THROW(alon_tarsi(parse_table_shorthand("21/21"), 2), std::invalid_argument);
  EXPECT_EQ(alon_tarsi(parse_table_shorthand("12/12"), 2), 0);  // weight does not fit n
}

// Δ_T(I_n) = (-1)^T AT(T) for every 0/1 support of weight (k x n)^d, and
// AT(T) = 0 whenever k is odd.
TEST(Latin, BridgeIdentity) {
  for (int d : {2, 3})
    for (int k = 1; k <= 2; ++k)
      for (int n = 1; n <= 3; ++n) {
        if (d == 3 && k * n > 4) continue;
        const WeightTuple w = WeightTuple::uniform(d, rectangle(k, n));
        for (const auto& t : enumerate_tables(w, TableKind::zero_one)) {
          const BigInt at = alon_tarsi(t, n);
          EXPECT_EQ(eval_unit(t, n), BigInt(table_sign(t) * at)) << t.str();
        }
      }
}

TEST(Latin, CountBoundsSignedSum) {
  for (int k = 1; k <= 4; ++k) EXPECT_GE(latin_count(2, k), abs(alon_tarsi(2, k)));
  EXPECT_GE(latin_count(3, 2), abs(alon_tarsi(3, 2)));
}
