#include <gtest/gtest.h>

#include "quandle.hpp"
#include "support/oracles.hpp"

using namespace quandle;
using namespace quandle::testing;

namespace {

const Quandle& p3() {
  static const Quandle q = p_quandle(2, parse_cycles("(1 2)", 2));
  return q;
}

}  // namespace

TEST(Cohomology, CoefficientParsing) {
  EXPECT_EQ(Coefficients::parse("Z"), Coefficients::integers());
  EXPECT_EQ(Coefficients::parse("Q"), Coefficients::rationals());
  EXPECT_EQ(Coefficients::parse("Z2"), Coefficients::integers_mod(2));
  EXPECT_EQ(Coefficients::parse("Z/5"), Coefficients::integers_mod(5));
  EXPECT_THROW(Coefficients::parse("Z4"), InvalidArgument);
  EXPECT_THROW(Coefficients::parse("R"), ParseError);
}

TEST(Cohomology, TupleBasisIsNondegenerateAndLex) {
  const TupleBasis b(3, 3);
  EXPECT_EQ(b.size(), 12u);  // 3 * 2 * 2
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_TRUE(TupleBasis::is_nondegenerate(b[i]));
    EXPECT_EQ(b.find(b[i]), static_cast<int>(i));
    if (i) {
      EXPECT_LT(b[i - 1], b[i]);
    }
  }
  EXPECT_EQ(b.find({0, 0, 1}), -1);
  EXPECT_THROW(TupleBasis(20, 6, 1000), LimitExceeded);
}

TEST(Cohomology, BoundarySquaresToZero) {
  for (const Quandle& q : {trivial(3), dihedral(3), p3(), p_quandle(4, parse_cycles("(1 2)(3 4)", 4)),
                           Quandle::from_table(conjugation_table(s3_multiplication()))}) {
    EXPECT_TRUE(multiply(boundary_matrix(q, 2), boundary_matrix(q, 3)).is_zero());
    EXPECT_TRUE(multiply(boundary_matrix(q, 3), boundary_matrix(q, 4)).is_zero());
  }
}

TEST(Cohomology, DegreeOneBoundaryOfPairs) {
  // d(x, y) = (x) - (x*y) in the basis of singletons.
  const IntMatrix d = boundary_matrix(p3(), 2);
  const TupleBasis pairs(3, 2);
  const int col = pairs.find({1, 0});
  ASSERT_GE(col, 0);
  EXPECT_EQ(d(1, static_cast<std::size_t>(col)), 1);
  EXPECT_EQ(d(2, static_cast<std::size_t>(col)), -1);
  EXPECT_EQ(d(0, static_cast<std::size_t>(col)), 0);
}

TEST(Cohomology, SecondCohomologyOfTrivialQuandles) {
  for (int m = 1; m <= 4; ++m) {
    const auto z = cohomology_Q(trivial(m), 2, Coefficients::integers());
    EXPECT_EQ(z.rank, static_cast<std::size_t>(m * m - m));
    EXPECT_TRUE(z.torsion.empty());
  }
}

TEST(Cohomology, DihedralOfOrderThree) {
  EXPECT_EQ(cohomology_Q(dihedral(3), 2, Coefficients::integers()).to_string(), "0");
  EXPECT_EQ(cohomology_Q(dihedral(3), 3, Coefficients::integers_mod(3)).rank, 1u);
  EXPECT_EQ(cohomology_Q(dihedral(3), 2, Coefficients::integers_mod(3)).rank, 0u);
}

TEST(Cohomology, FieldDimensionsMatchCounting) {
  for (const Quandle& q : {trivial(2), trivial(3), dihedral(3), p3(), p_quandle(3, long_cycle(3))}) {
    for (long long p : {2LL, 3LL}) {
      if (q.order() == 4 && p == 3) continue;
      EXPECT_EQ(cohomology_Q(q, 2, Coefficients::integers_mod(p)).rank,
                static_cast<std::size_t>(brute_force_h2_dimension(q, p)))
          << format_table(q) << "p = " << p;
    }
  }
}

TEST(Cohomology, SymmetricDimensionsMatchCounting) {
  for (const Quandle& q : {trivial(2), trivial(3), dihedral(3), p3()})
    for (const auto& s : good_involutions(q))
      EXPECT_EQ(symmetric_cohomology(s, 2, Coefficients::integers_mod(2)).rank,
                static_cast<std::size_t>(brute_force_h2_dimension(q, 2, &s.rho())))
          << format_table(q) << format_element_cycles(s.rho());
}

TEST(Cohomology, TrivialQuandleWithIdentityInvolution) {
  const SymmetricQuandle s(trivial(2), {0, 1});
  EXPECT_EQ(symmetric_cohomology(s, 2, Coefficients::integers_mod(2)).rank, 2u);
}

TEST(Cohomology, SymmetricP3WithSwap) {
  // By hand: admissible 1-cochains have f(1) = f(2) mod 2, so every coboundary
  // f(x) - f(x*y) vanishes; admissible 2-cocycles are spanned by
  // chi_(0,1) + chi_(0,2) and chi_(1,0) + chi_(2,0).
  const SymmetricQuandle s(p3(), {0, 2, 1});
  const Coefficients z2 = Coefficients::integers_mod(2);
  EXPECT_EQ(symmetric_cohomology(s, 2, z2).to_string(), "F^2");
  const auto slice = cochain_slice(p3(), 2, &s);
  const Cocycle2 chi = Cocycle2::indicator_sum(3, {{0, 1}, {0, 2}}, z2);
  EXPECT_TRUE(represents_nonzero_class(slice, chi.as_vector(slice.basis()), z2));
  const Cocycle2 pulled_back = Cocycle2::indicator_sum(3, {{1, 0}, {2, 0}}, z2);
  EXPECT_TRUE(represents_nonzero_class(slice, pulled_back.as_vector(slice.basis()), z2));
  const Cocycle2 both = Cocycle2::indicator_sum(3, {{0, 1}, {0, 2}, {1, 0}, {2, 0}}, z2);
  EXPECT_TRUE(represents_nonzero_class(slice, both.as_vector(slice.basis()), z2));
  // Without the involution the second one is the coboundary of chi_1.
  const auto plain = cochain_slice(p3(), 2);
  EXPECT_FALSE(represents_nonzero_class(plain, pulled_back.as_vector(plain.basis()), z2));
  const Cocycle2 single = Cocycle2::indicator_sum(3, {{0, 1}}, z2);
  EXPECT_FALSE(represents_nonzero_class(slice, single.as_vector(slice.basis()), z2));
}

TEST(Cohomology, CoboundariesAreNotNonzeroClasses) {
  const auto slice = cochain_slice(p_quandle(3, long_cycle(3)), 2);
  // delta of the indicator of element 1.
  std::vector<long long> c(slice.basis().size(), 0);
  for (std::size_t col = 0; col < slice.bases[0].size(); ++col)
    if (slice.bases[0][col] == std::vector<Element>{1})
      for (std::size_t r = 0; r < c.size(); ++r) c[r] = slice.coboundary_in(r, col);
  for (Coefficients k : {Coefficients::integers(), Coefficients::rationals(), Coefficients::integers_mod(2)})
    EXPECT_FALSE(represents_nonzero_class(slice, c, k));
}

TEST(Cohomology, ThetaIsACocycleOfPQuandles) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_permutations(n)) EXPECT_TRUE(is_2cocycle(p_quandle(n, s), theta_cocycle(n)));
  Cocycle2 bad = Cocycle2::zero(3);
  bad.values[1][2] = 1;
  EXPECT_FALSE(is_2cocycle(dihedral(3), bad));
  Cocycle2 diagonal = Cocycle2::zero(3);
  diagonal.values[1][1] = 1;
  EXPECT_FALSE(is_2cocycle(trivial(3), diagonal));
}

TEST(Cohomology, ThetaRepresentsANonzeroIntegralClass) {
  for (int n = 2; n <= 3; ++n) {
    const auto slice = cochain_slice(p_quandle(n, long_cycle(n)), 2);
    EXPECT_TRUE(represents_nonzero_class(slice, theta_cocycle(n).as_vector(slice.basis()), Coefficients::integers()));
  }
}

TEST(Cohomology, IntegralCocycleBasisSpansCocycles) {
  const auto slice = cochain_slice(p3(), 2);
  const auto basis = integral_cocycle_basis(slice);
  EXPECT_EQ(basis.size(), cohomology_Q(p3(), 2, Coefficients::integers()).rank + rank_rational(slice.coboundary_in));
  for (const auto& v : basis) {
    Cocycle2 c = Cocycle2::zero(3);
    for (std::size_t i = 0; i < v.size(); ++i)
      c.values[static_cast<std::size_t>(slice.basis()[i][0])][static_cast<std::size_t>(slice.basis()[i][1])] =
          v[i].convert_to<long long>();
    EXPECT_TRUE(is_2cocycle(p3(), c));
  }
}

TEST(Cohomology, DegreeBoundsAreChecked) {
  EXPECT_THROW(cohomology_Q(p3(), 1, Coefficients::integers()), InvalidArgument);
  EXPECT_THROW(cohomology_Q(p3(), 4, Coefficients::integers()), InvalidArgument);
  EXPECT_THROW(boundary_matrix(p3(), 5), InvalidArgument);
}

TEST(Cohomology, SummaryFormatting) {
  AbelianGroupSummary z{Coefficients::integers(), 2, {BigInt(2), BigInt(3)}};
  EXPECT_EQ(z.to_string(), "Z^2 (+) Z/2 (+) Z/3");
  AbelianGroupSummary f{Coefficients::integers_mod(5), 3, {}};
  EXPECT_EQ(f.to_string(), "F^3");
  AbelianGroupSummary zero{Coefficients::integers(), 0, {}};
  EXPECT_EQ(zero.to_string(), "0");
}
