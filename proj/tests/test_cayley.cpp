#include "brute.hpp"

#include <gtest/gtest.h>

using namespace kronhwv;

namespace {

Table T(const char* s) { return parse_table_shorthand(s); }

}  // namespace

TEST(Canonical, Tables) {
  EXPECT_EQ(canonical_table(CanonicalKind::identity, 3, 1, 2).str(), "11/11/11");
  EXPECT_EQ(canonical_table(CanonicalKind::identity, 2, 2, 2).str(), "1122/1122");
  const Table f = canonical_table(CanonicalKind::fundamental, 3, 0, 2);
  EXPECT_EQ(f.str(), "11112222/11221122/12121212");
  EXPECT_FALSE(f.has_duplicate_columns());
}

TEST(Omega, PowersOfTheCayleyForm) {
  for (int n = 1; n <= 5; ++n) {
    const auto p = omega_power(3, 2, n);
    EXPECT_TRUE(p.report.pass()) << n << ": "
                                 << (p.report.violations.empty() ? "" : p.report.violations[0]);
    if (n == 4) {
      ASSERT_EQ(p.expansion.size(), 1u);
      EXPECT_EQ(p.expansion.terms.begin()->first, fundamental_table(3, 2));
      EXPECT_EQ(abs(p.expansion.terms.begin()->second), alon_tarsi(3, 2));
    }
    if (n == 5) EXPECT_TRUE(p.expansion.is_zero());
  }
}

TEST(Omega, SignsAgreeForOddD) {
  // For odd d the tuple sign equals the sign of one rectangle.
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      EXPECT_EQ(tuple_sign(WeightTuple::uniform(3, rectangle(n, k))),
                partition_sign(rectangle(n, k)));
}

TEST(Omega, MatchesDirectFormula) {
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(nabla_expansion(identity_table(3, 1, k)), cayley_direct(Space::alt, 3, k)) << k;
}

TEST(Omega, Multiplicative) {
  const Expansion omega = omega_power(3, 2, 1).expansion;
  Expansion acc = omega;
  for (int n = 2; n <= 3; ++n) {
    acc = product(acc, omega);
    EXPECT_EQ(acc, omega_power(3, 2, n).expansion) << n;
  }
}

TEST(Hyperdet, Determinant) {
  const auto p = delta_power(2, 2, 1);
  EXPECT_TRUE(p.report.pass());
  ASSERT_EQ(p.expansion.size(), 2u);
  EXPECT_EQ(pair(p.expansion, T("12/12")), 1);
  EXPECT_EQ(pair(p.expansion, T("12/21")), -1);
}

TEST(Hyperdet, SquareOfDeterminant) {
  const auto p = delta_power(2, 2, 2);
  EXPECT_TRUE(p.report.pass());
  EXPECT_EQ(pair(p.expansion, fundamental_table(2, 2)), -2);
  const auto q = delta_power(2, 3, 3);
  EXPECT_TRUE(q.report.pass());
  EXPECT_EQ(pair(q.expansion, fundamental_table(2, 3)), 0);
}

TEST(Hyperdet, MatchesDirectFormula) {
  for (int d : {2, 4})
    for (int k = 1; k <= (d == 4 ? 2 : 3); ++k)
      EXPECT_EQ(delta_expansion(identity_table(d, 1, k)), cayley_direct(Space::sym, d, k));
}

TEST(Hyperdet, Multiplicative) {
  const Expansion delta = delta_power(2, 2, 1).expansion;
  EXPECT_EQ(product(delta, delta), delta_power(2, 2, 2).expansion);
  const Expansion d3 = delta_power(2, 3, 1).expansion;
  EXPECT_EQ(product(d3, d3), delta_power(2, 3, 2).expansion);
}

TEST(Cayley, WrongParityDirectFormulaVanishes) {
  for (int k = 2; k <= 3; ++k) {
    EXPECT_TRUE(cayley_direct(Space::sym, 3, k).is_zero()) << k;
    EXPECT_TRUE(cayley_direct(Space::alt, 2, k).is_zero()) << k;
  }
}

TEST(Cayley, ArgumentChecks) {
  EXPECT_THROW(omega_power(2, 2, 1), std::invalid_argument);
  EXPECT_THROW(delta_power(3, 2, 1), std::invalid_argument);
  EXPECT_THROW(check_even_coeff_props(4, 3, 2), std::invalid_argument);
}

TEST(EvenProps, FourTwoTwo) {
  const Report r = check_even_coeff_props(4, 2, 2);
  EXPECT_TRUE(r.pass());
  std::map<std::string, std::string> details(r.details.begin(), r.details.end());
  EXPECT_EQ(details["T_even_coeff"], "2");
  EXPECT_EQ(details["T_odd_coeff"].back(), '2');
}

TEST(EvenProps, OddSideVanishes) {
  const Report r = check_even_coeff_props(4, 2, 3);
  EXPECT_TRUE(r.pass());
  std::map<std::string, std::string> details(r.details.begin(), r.details.end());
  EXPECT_EQ(details["T_odd_coeff"], "0");
}

TEST(EvenProps, CoefficientsAreExpansionEntries) {
  // Read the same coefficients off the full expansion of δ^2 for d = 4.
  const Expansion e = delta_power(4, 2, 2).expansion;
  EXPECT_EQ(pair(e, stacked_fundamental(4, 2, 2, 2)), latin_count(2, 2));
  EXPECT_EQ(abs(pair(e, stacked_fundamental(4, 2, 2, 1))), alon_tarsi(2, 2));
}

TEST(SliceOrbits, SquareWeightTwoByTwo) {
  const auto b = enumerate_tables(WeightTuple{{2, 2}, {2, 2}, {2, 2}}, TableKind::zero_one);
  EXPECT_EQ(b.size(), 8u);
  const auto orbits = slice_orbits(b);
  ASSERT_EQ(orbits.size(), 4u);
  for (const auto& o : orbits) EXPECT_EQ(o.size(), 2u);
}
