#include "brute.hpp"

#include <gtest/gtest.h>

using namespace kronhwv;

namespace {

int class_sign(const Partition& mu) {
  int s = 1;
  for (int p : mu.parts())
    if (p % 2 == 0) s = -s;
  return s;
}

}  // namespace

TEST(Characters, Examples) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& mu : partitions_of(m)) {
      EXPECT_EQ(mn_character(Partition(std::vector<int>{m}), mu), 1);
      EXPECT_EQ(mn_character(rectangle(m, 1), mu), class_sign(mu));
    }
  EXPECT_EQ(mn_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_THROW(mn_character({2, 1}, {2}), std::invalid_argument);
}

TEST(Characters, HookLengthAtIdentity) {
  for (int m = 1; m <= 8; ++m)
    for (const auto& lambda : partitions_of(m))
      EXPECT_EQ(dim_irrep(lambda), mn_character(lambda, rectangle(m, 1))) << lambda.str();
}

TEST(Characters, SumOfSquares) {
  for (int m = 1; m <= 10; ++m) {
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(m)) sum += dim_irrep(lambda) * dim_irrep(lambda);
    EXPECT_EQ(sum, factorial(m)) << m;
  }
}

TEST(Characters, ClassSizesSumToFactorial) {
  for (int m = 1; m <= 8; ++m) {
    BigInt sum = 0;
    for (const auto& c : conjugacy_classes(m)) sum += c.class_size;
    EXPECT_EQ(sum, factorial(m));
  }
}

TEST(DimIrrep, Examples) {
  EXPECT_EQ(dim_irrep({5}), 1);
  EXPECT_EQ(dim_irrep({2, 1}), 2);
  EXPECT_EQ(dim_irrep({3, 2}), 5);
}

TEST(Kron, Orthogonality) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& a : partitions_of(m))
      for (const auto& b : partitions_of(m))
        EXPECT_EQ(kron(WeightTuple{a, b}), a == b ? 1 : 0) << a.str() << b.str();
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(WeightTuple{{2, 2}, {2, 2}, {2, 2}}), 1);
  EXPECT_EQ(kron(WeightTuple{{3}, {2, 1}, {2, 1}}), 1);
  EXPECT_EQ(kron(WeightTuple{{2, 1}, {2, 1}, {2, 1}}), 1);
  EXPECT_EQ(kron(WeightTuple{{2}, {1, 1}}), 0);
}

TEST(Kron, TrivialFactorDrops) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& w : all_weight_tuples(2, m)) {
      std::vector<Partition> ps = w.parts();
      ps.insert(ps.begin(), Partition(std::vector<int>{m}));
      EXPECT_EQ(kron(WeightTuple(ps)), kron(w));
    }
}

TEST(Kron, Symmetries) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& w : all_weight_tuples(3, m)) {
      const BigInt g = kron(w);
      const auto& p = w.parts();
      EXPECT_EQ(kron(WeightTuple{p[1], p[0], p[2]}), g);
      EXPECT_EQ(kron(WeightTuple{p[2], p[1], p[0]}), g);
      EXPECT_EQ(kron(WeightTuple{p[0].conjugate(), p[1].conjugate(), p[2]}), g);
      EXPECT_EQ(kron(WeightTuple{p[0], p[1].conjugate(), p[2].conjugate()}), g);
    }
}

TEST(Kron, EmptyWeight) {
  EXPECT_EQ(kron(WeightTuple::uniform(3, Partition())), 1);
}
