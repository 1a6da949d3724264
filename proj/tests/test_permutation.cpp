#include <gtest/gtest.h>

#include <set>

#include "quandle/error.hpp"
#include "quandle/permutation.hpp"

using namespace quandle;

TEST(Permutation, ParsesCycleNotation) {
  const Permutation p = parse_cycles("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(3), 1);
  EXPECT_EQ(p(5), 4);
  EXPECT_EQ(p(6), 6);
  EXPECT_EQ(p.format_cycles(), "(1 2 3)(4 5)");
  EXPECT_EQ(p.cycle_count(), 3);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(parse_cycles("", 3), Permutation::identity(3));
  EXPECT_EQ(parse_cycles("()", 3).format_cycles(), "()");
}

TEST(Permutation, RejectsMalformedCycles) {
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(a b)", 3), ParseError);
  EXPECT_THROW(Permutation::from_image({1, 1, 2}), AxiomViolation);
  EXPECT_THROW(Permutation::from_image({0, 1}), AxiomViolation);
  EXPECT_THROW(Permutation::identity(0), InvalidArgument);
}

TEST(Permutation, CyclesIncludeFixedPoints) {
  const Permutation p = parse_cycles("(2 4)", 5);
  const std::vector<std::vector<int>> expected{{1}, {2, 4}, {3}, {5}};
  EXPECT_EQ(p.cycles(), expected);
  EXPECT_EQ(p.fixed_point_count(), 3);
  EXPECT_EQ(p.orbit_length(4), 2);
  EXPECT_EQ(p.orbit_length(5), 1);
  EXPECT_TRUE(p.is_involution());
  EXPECT_TRUE(Permutation::identity(5).is_involution());
  EXPECT_FALSE(parse_cycles("(1 2 3)", 5).is_involution());
}

TEST(Permutation, ComposeAppliesRightFirst) {
  const Permutation a = parse_cycles("(1 2)", 3);
  const Permutation b = parse_cycles("(2 3)", 3);
  const Permutation ab = compose(a, b);
  EXPECT_EQ(ab(2), a(b(2)));
  EXPECT_EQ(ab.format_cycles(), "(1 2 3)");
  EXPECT_EQ(compose(a, a.inverse()), Permutation::identity(3));
  EXPECT_EQ(power(ab, 3), Permutation::identity(3));
  EXPECT_EQ(power(ab, -1), ab.inverse());
}

TEST(Permutation, EnumeratesSymmetricGroups) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    std::set<Permutation> distinct(all.begin(), all.end());
    std::size_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
    EXPECT_EQ(all.size(), factorial);
    EXPECT_EQ(distinct.size(), factorial);
  }
  EXPECT_THROW(all_permutations(9), LimitExceeded);
}

TEST(Permutation, CentralizerOrderMatchesFiltering) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) ASSERT_EQ(centralizer(p).size(), centralizer_order(p)) << p.format_cycles();
}

TEST(Permutation, ConjugacyRepresentativesCoverEveryCycleType) {
  const std::size_t partitions[] = {0, 1, 2, 3, 5, 7, 11};
  for (int n = 1; n <= 6; ++n) {
    const auto reps = conjugacy_class_representatives(n);
    EXPECT_EQ(reps.size(), partitions[n]);
    EXPECT_TRUE(reps.front().is_identity());
    std::set<std::vector<int>> types;
    for (const auto& r : reps) types.insert(r.cycle_type());
    EXPECT_EQ(types.size(), reps.size());
    std::set<std::vector<int>> seen;
    for (const auto& p : all_permutations(n)) seen.insert(p.cycle_type());
    EXPECT_EQ(seen, types);
  }
}

TEST(Permutation, ConjugatorConjugates) {
  for (const auto& a : all_permutations(5))
    for (const auto& b : conjugacy_class_representatives(5)) {
      const auto h = conjugator(a, b);
      ASSERT_EQ(h.has_value(), a.cycle_type() == b.cycle_type());
      if (h) {
        ASSERT_EQ(a, compose(h->inverse(), compose(b, *h)));
      }
    }
}

TEST(Permutation, LongCycle) {
  EXPECT_EQ(long_cycle(4).format_cycles(), "(1 2 3 4)");
  EXPECT_EQ(long_cycle(4).order(), 4u);
  EXPECT_TRUE(long_cycle(1).is_identity());
}
