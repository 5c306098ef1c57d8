#include <algorithm>
#include <bit>
#include <random>

#include <gtest/gtest.h>

#include "fullcover/kcomb.h"
#include "oracle.h"

namespace fullcover {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(Binomial(6, 1), 6u);
  EXPECT_EQ(Binomial(6, 4), 15u);
  EXPECT_EQ(Binomial(5, 7), 0u);
  EXPECT_EQ(Binomial(5, -1), 0u);
  EXPECT_EQ(Binomial(62, 31), 465428353255261088u);
  EXPECT_THROW((void)Binomial(200, 100), std::overflow_error);
}

TEST(Binomial, MatchesBigIntegerOracle) {
  for (int a = 0; a <= 64; ++a) {
    for (int b = 0; b <= a; ++b) {
      EXPECT_EQ(boost::multiprecision::cpp_int(Binomial(a, b)), oracle::Choose(a, b));
    }
  }
}

TEST(BinomParity, Examples) {
  EXPECT_EQ(BinomParity(6, 1), 0);
  EXPECT_EQ(BinomParity(6, 4), 1);
  for (int a = 0; a < 100; ++a) EXPECT_EQ(BinomParity(a, a), 1);
  EXPECT_EQ(BinomParity(0, -1), 0);
  EXPECT_EQ(BinomParity(0, -2), 0);
  EXPECT_EQ(BinomParity(3, 4), 0);
}

TEST(BinomParity, MatchesBigIntegerOracle) {
  int cases = 0;
  for (int a = 0; a <= 64; ++a) {
    for (int b = 0; b <= a; ++b) {
      const int expected = static_cast<int>(oracle::Choose(a, b) % 2);
      EXPECT_EQ(BinomParity(a, b), expected) << "C(" << a << "," << b << ")";
      ++cases;
    }
  }
  EXPECT_EQ(cases, 2145);
}

TEST(KSubsetIndexer, ColexExamples) {
  const KSubsetIndexer idx(4, 2);
  EXPECT_EQ(idx.size(), 6u);
  const int first[] = {1, 2};
  const int last[] = {3, 4};
  EXPECT_EQ(idx.Rank(first), 0u);
  EXPECT_EQ(idx.Rank(last), 5u);
  EXPECT_EQ(idx.Unrank(1), (Subset{1, 3}));
  EXPECT_EQ(idx.Unrank(2), (Subset{2, 3}));
  EXPECT_EQ(idx.Unrank(3), (Subset{1, 4}));
}

TEST(KSubsetIndexer, Bijection) {
  const KSubsetIndexer idx(5, 3);
  ASSERT_EQ(idx.size(), 10u);
  for (std::size_t r = 0; r < idx.size(); ++r) EXPECT_EQ(idx.Rank(idx.Unrank(r)), r);
  for (const auto& w : oracle::Subsets(5, 3)) EXPECT_EQ(idx.Unrank(idx.Rank(w)), w);
}

TEST(KSubsetIndexer, ColexOrderDefinition) {
  // w < w' iff the largest element of the symmetric difference lies in w'.
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const KSubsetIndexer idx(n, k);
      for (std::size_t r = 0; r + 1 < idx.size(); ++r) {
        const SubsetMask a = idx.UnrankMask(r);
        const SubsetMask b = idx.UnrankMask(r + 1);
        const SubsetMask diff = a ^ b;
        const SubsetMask top = SubsetMask{1} << (63 - std::countl_zero(diff));
        EXPECT_TRUE(b & top);
      }
    }
  }
}

TEST(KSubsetIndexer, RanksStableAcrossN) {
  const KSubsetIndexer small(5, 2);
  const KSubsetIndexer big(8, 2);
  for (std::size_t r = 0; r < small.size(); ++r) {
    EXPECT_EQ(big.Unrank(r), small.Unrank(r));
  }
}

TEST(KSubsetIndexer, RejectsBadInput) {
  const KSubsetIndexer idx(4, 2);
  const int three[] = {1, 2, 3};
  const int outside[] = {1, 5};
  const int repeated[] = {2, 2};
  EXPECT_THROW((void)idx.Rank(three), std::invalid_argument);
  EXPECT_THROW((void)idx.Rank(outside), std::invalid_argument);
  EXPECT_THROW((void)idx.Rank(repeated), std::invalid_argument);
  EXPECT_THROW((void)idx.Unrank(6), std::out_of_range);
  EXPECT_THROW(KSubsetIndexer(3, 4), std::invalid_argument);
}

TEST(Perm, ParseAndPrint) {
  const Perm g = Perm::Parse("(1 2)(3 4 5)", 5);
  EXPECT_EQ(g(1), 2);
  EXPECT_EQ(g(2), 1);
  EXPECT_EQ(g(3), 4);
  EXPECT_EQ(g(5), 3);
  EXPECT_EQ(g.ToString(), "(1 2)(3 4 5)");
  EXPECT_TRUE(Perm::Parse("id", 4).is_identity());
  EXPECT_EQ(Perm::Identity(3).ToString(), "id");
  EXPECT_THROW((void)Perm::Parse("(1 2", 3), std::invalid_argument);
  EXPECT_THROW((void)Perm::Parse("(1 4)", 3), std::invalid_argument);
  EXPECT_THROW((void)Perm::Parse("(1 1)", 3), std::invalid_argument);
}

TEST(Perm, CompositionIsRightToLeft) {
  const Perm a = Perm::Parse("(1 2)", 3);
  const Perm b = Perm::Parse("(2 3)", 3);
  // (a * b)(3) = a(b(3)) = a(2) = 1.
  EXPECT_EQ((a * b)(3), 1);
  EXPECT_EQ(Perm::Parse("(1 2)(2 3)", 3), a * b);
}

TEST(Perm, SignAndInverse) {
  EXPECT_EQ(Perm::Parse("(1 2)", 4).Sign(), 1);
  EXPECT_EQ(Perm::Parse("(1 2 3)", 4).Sign(), 0);
  EXPECT_EQ(Perm::Parse("(1 2)(3 4)", 4).Sign(), 0);
  const Perm g = Perm::Parse("(1 3 4 2)", 5);
  EXPECT_TRUE((g * g.Inverse()).is_identity());
  EXPECT_TRUE((g.Inverse() * g).is_identity());
}

TEST(Apply, Examples) {
  const Subset w = {1, 3};
  EXPECT_EQ(Apply(Perm::Identity(4), w), w);
  EXPECT_EQ(Apply(Perm::Parse("(1 2)", 4), w), (Subset{2, 3}));
}

TEST(Apply, ActionAxiomExhaustiveSmall) {
  for (int n = 1; n <= 5; ++n) {
    const SymmetricGroup group(n);
    for (int k = 0; k <= n; ++k) {
      for (const auto& w : oracle::Subsets(n, k)) {
        for (const Perm& g : group.elements()) {
          EXPECT_EQ(Apply(g, w), FromMask(g.Apply(ToMask(w))));
        }
      }
    }
  }
  const SymmetricGroup s4(4);
  for (const Perm& g : s4.elements()) {
    for (const Perm& h : s4.elements()) {
      for (const auto& w : oracle::Subsets(4, 2)) {
        EXPECT_EQ(Apply(g, Apply(h, w)), Apply(g * h, w));
      }
    }
  }
}

TEST(RestrictionSign, Examples) {
  const Subset w12 = {1, 2};
  const Subset w123 = {1, 2, 3};
  EXPECT_EQ(RestrictionSign(Perm::Identity(4), w12), 0);
  EXPECT_EQ(RestrictionSign(Perm::Parse("(1 2)", 4), w12), 1);
  EXPECT_EQ(RestrictionSign(Perm::Parse("(1 2 3)", 4), w123), 0);
  EXPECT_THROW((void)RestrictionSign(Perm::Parse("(1 4)", 4), w12), std::invalid_argument);
}

TEST(RestrictionSign, IsHomomorphismOnStabilizer) {
  const SymmetricGroup group(5);
  const SubsetMask w = ToMask(Subset{2, 3, 5});
  std::vector<Perm> stab;
  for (const Perm& g : group.elements()) {
    if (g.Apply(w) == w) stab.push_back(g);
  }
  ASSERT_EQ(stab.size(), 12u);
  for (const Perm& g : stab) {
    for (const Perm& h : stab) {
      EXPECT_EQ(RestrictionSign(g * h, w), (RestrictionSign(g, w) + RestrictionSign(h, w)) % 2);
    }
  }
}

TEST(SymmetricGroup, IndexingAndGenerators) {
  const SymmetricGroup group(5);
  EXPECT_EQ(group.order(), 120u);
  EXPECT_TRUE(group.element(group.identity_index()).is_identity());
  for (std::size_t i = 0; i < group.order(); ++i) EXPECT_EQ(group.IndexOf(group.element(i)), i);

  // The standard generators reach every element.
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> queue = {0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& s : StandardGenerators(5)) {
      const std::size_t y = group.IndexOf(s * group.element(queue[head]));
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  EXPECT_EQ(queue.size(), group.order());
  EXPECT_EQ(StandardGenerators(2).size(), 1u);
}

}  // namespace
}  // namespace fullcover
