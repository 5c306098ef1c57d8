#include <random>

#include <gtest/gtest.h>

#include "fullcover/cohom.h"
#include "fullcover/errors.h"

namespace fullcover {
namespace {

gf2::Vec RandomVec(std::mt19937_64& rng, std::size_t len) {
  gf2::Vec v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i, (rng() & 1) != 0);
  return v;
}

// Number of homomorphisms Sym(n) -> Z2, by trying every assignment on the
// generators and checking it on the whole Cayley graph.
int CountSignLikeHomomorphisms(int n) {
  const SymmetricGroup group(n);
  const auto gens = StandardGenerators(n);
  int count = 0;
  for (unsigned bits = 0; bits < (1u << gens.size()); ++bits) {
    std::vector<int> value(group.order(), -1);
    value[0] = 0;
    std::vector<std::size_t> queue = {0};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const std::size_t x = queue[head];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const std::size_t y = group.IndexOf(gens[s] * group.element(x));
        const int v = value[x] ^ static_cast<int>(bits >> s & 1u);
        if (value[y] < 0) {
          value[y] = v;
          queue.push_back(y);
        } else if (value[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

TEST(GModule, QuotientsValidate) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
    for (const LatticeNode& node : LatticeReport(k, n).nodes) {
      const GModule m = GModule::Quotient(node.space, k, n);
      EXPECT_EQ(m.dim(), Binomial(n, k) - node.dim);
      EXPECT_NO_THROW(m.Validate());
    }
  }
}

TEST(GModule, WordRouteMatchesOrigin) {
  const GModule m = GModule::Quotient(StandardSubmodule({0}, 2, 5).materialized, 2, 5);
  const GModule copy =
      GModule::FromGenerators(5, m.dim(), {m.generator_action(0), m.generator_action(1)});
  const SymmetricGroup group(5);
  EXPECT_EQ(m.AllActions(group), copy.AllActions(group));
}

TEST(GModule, RejectsBadInput) {
  gf2::Mat order_three(2, 2);
  order_three.set(0, 1);
  order_three.set(1, 0);
  order_three.set(1, 1);
  // (1 2) must act as an involution.
  const GModule bad = GModule::FromGenerators(3, 2, {order_three, gf2::Mat::Identity(2)});
  EXPECT_THROW(bad.Validate(), std::invalid_argument);
  const GModule singular = GModule::FromGenerators(3, 2, {gf2::Mat(2, 2), gf2::Mat::Identity(2)});
  EXPECT_THROW(singular.Validate(), std::invalid_argument);

  gf2::Vec e(6);
  e.set(0);
  const std::vector<gf2::Vec> one = {e};
  EXPECT_THROW(GModule::Quotient(gf2::Subspace::Span(6, one), 2, 4), std::invalid_argument);
}

TEST(H1, Examples) {
  EXPECT_EQ(H1Dim(GModule::Zero(4)).h1_dim(), 0u);
  EXPECT_EQ(CountSignLikeHomomorphisms(4), 2);
  EXPECT_EQ(H1Dim(GModule::Trivial(4, 1)).h1_dim(), 1u);
  EXPECT_EQ(H1DimDense(GModule::Trivial(4, 1)).h1_dim(), 1u);
  EXPECT_EQ(H1Dim(GModule::Trivial(5, 3)).h1_dim(), 3u);
}

TEST(H1, SymmetricSquareQuotientAtSix) {
  const GModule m = GModule::Quotient(StandardSubmodule({0, 1}, 2, 6).materialized, 2, 6);
  EXPECT_EQ(m.dim(), 9u);
  const H1Result fast = H1Dim(m);
  const H1Result dense = H1DimDense(m);
  EXPECT_EQ(fast.z1_dim, dense.z1_dim);
  EXPECT_EQ(fast.b1_dim, dense.b1_dim);
  EXPECT_EQ(fast.h1_dim(), 1u);
}

TEST(H1, SolversAgreeOnQuotients) {
  for (auto [k, n] : {std::pair{2, 4}, {3, 4}, {2, 5}, {3, 5}}) {
    for (const LatticeNode& node : LatticeReport(k, n).nodes) {
      const GModule m = GModule::Quotient(node.space, k, n);
      if (SymmetricGroup(n).order() * m.dim() > 5000) continue;
      EXPECT_EQ(H1Dim(m).h1_dim(), H1DimDense(m).h1_dim()) << k << " " << n << " " << node.dim;
    }
  }
}

TEST(Is2Coboundary, ZeroCochain) {
  const CocycleTable zero =
      CocycleTable::FromFunction(4, 3, [](const Perm&, const Perm&) { return gf2::Vec(3); });
  const CoboundaryCertificate cert = Is2Coboundary(zero, GModule::Trivial(4, 3));
  EXPECT_TRUE(cert.sat);
  for (const gf2::Vec& u : cert.section) EXPECT_TRUE(u.is_zero());
}

TEST(Is2Coboundary, KernelContainingAlpha2KillsTheCocycle) {
  for (auto [k, n] : {std::pair{2, 4}, {3, 5}, {4, 6}}) {
    const SubmoduleSpec K = StandardSubmodule({2}, k, n);
    const GModule m = GModule::Quotient(K.materialized, k, n);
    const CocycleTable cover = CocycleTable::Cover(k, n);
    const SymmetricGroup& group = cover.group();
    for (std::size_t h = 0; h < group.order(); h += 3) {
      for (std::size_t g = 0; g < group.order(); g += 5) {
        EXPECT_TRUE(m.Project(cover.at(h, g)).is_zero());
      }
    }
    const CoboundaryCertificate cert = Is2Coboundary(cover, m);
    EXPECT_TRUE(cert.sat);
    for (const gf2::Vec& u : cert.section) EXPECT_TRUE(u.is_zero());
  }
}

TEST(Is2Coboundary, NonSplitAtThreePoints) {
  const CocycleTable cover = CocycleTable::Cover(2, 3);
  const GModule m = GModule::Quotient(gf2::Subspace::Zero(3), 2, 3);
  const CoboundaryCertificate fast = Is2Coboundary(cover, m);
  const CoboundaryCertificate dense = Is2CoboundaryDense(cover, m);
  EXPECT_FALSE(fast.sat);
  EXPECT_EQ(fast.rank_gap, 1u);
  EXPECT_FALSE(dense.sat);
  EXPECT_EQ(dense.rank_gap, 1u);
  EXPECT_EQ(fast.unknowns, 6u);
  EXPECT_EQ(dense.unknowns, 18u);
}

TEST(Is2Coboundary, RejectsUnnormalizedCochain) {
  const CocycleTable bad = CocycleTable::FromFunction(3, 1, [](const Perm&, const Perm&) {
    return gf2::Vec::FromString("1");
  });
  EXPECT_THROW((void)Is2Coboundary(bad, GModule::Trivial(3, 1)), std::invalid_argument);
  EXPECT_THROW((void)Is2CoboundaryDense(bad, GModule::Trivial(3, 1)), std::invalid_argument);
}

TEST(Is2Coboundary, RandomCoboundariesAreSat) {
  std::mt19937_64 rng(31);
  for (auto [k, n] : {std::pair{2, 4}, {3, 4}, {2, 5}}) {
    const KSubsetIndexer idx(n, k);
    const SymmetricGroup group(n);
    for (int t = 0; t < 3; ++t) {
      std::vector<gf2::Vec> u(group.order());
      for (std::size_t x = 1; x < group.order(); ++x) u[x] = RandomVec(rng, idx.size());
      u[0] = gf2::Vec(idx.size());
      const CocycleTable delta =
          CocycleTable::FromFunction(n, idx.size(), [&](const Perm& h, const Perm& g) {
            return u[group.IndexOf(h * g)] ^ u[group.IndexOf(h)] ^ Twist(h, u[group.IndexOf(g)], idx);
          });
      const GModule m = GModule::Quotient(gf2::Subspace::Zero(idx.size()), k, n);
      EXPECT_TRUE(Is2Coboundary(delta, m).sat);
      EXPECT_TRUE(Is2CoboundaryDense(delta, m).sat);
    }
  }
}

TEST(Is2Coboundary, ChangingByACoboundaryKeepsTheAnswer) {
  std::mt19937_64 rng(32);
  const int k = 2;
  const int n = 4;
  const KSubsetIndexer idx(n, k);
  const SymmetricGroup group(n);
  const CocycleTable cover = CocycleTable::Cover(k, n);
  std::vector<gf2::Vec> u(group.order());
  for (std::size_t x = 1; x < group.order(); ++x) u[x] = RandomVec(rng, idx.size());
  u[0] = gf2::Vec(idx.size());
  const CocycleTable shifted =
      CocycleTable::FromFunction(n, idx.size(), [&](const Perm& h, const Perm& g) {
        return Cocycle(h, g, idx) ^ u[group.IndexOf(h * g)] ^ u[group.IndexOf(h)] ^
               Twist(h, u[group.IndexOf(g)], idx);
      });
  for (const LatticeNode& node : LatticeReport(k, n).nodes) {
    const GModule m = GModule::Quotient(node.space, k, n);
    const bool base = Is2Coboundary(cover, m).sat;
    EXPECT_EQ(Is2Coboundary(shifted, m).sat, base);
    EXPECT_EQ(Is2CoboundaryDense(shifted, m).sat, base);
  }
}

TEST(Is2Coboundary, SectionSolvesTheEquation) {
  const int k = 3;
  const int n = 5;
  const SubmoduleSpec K = StandardSubmodule({0, 2}, k, n);
  const CocycleTable cover = CocycleTable::Cover(k, n);
  const GModule m = GModule::Quotient(K.materialized, k, n);
  const CoboundaryCertificate cert = Is2Coboundary(cover, m);
  ASSERT_TRUE(cert.sat);
  ASSERT_EQ(cert.witness_on_generators.size(), 2u);
  const SymmetricGroup& group = cover.group();
  EXPECT_TRUE(cert.section[0].is_zero());
  std::mt19937_64 rng(33);
  for (int t = 0; t < 500; ++t) {
    const std::size_t h = rng() % group.order();
    const std::size_t g = rng() % group.order();
    const gf2::Vec rhs = cert.section[group.Multiply(h, g)] ^ cert.section[h] ^
                         m.Action(group.element(h)).Apply(cert.section[g]);
    EXPECT_EQ(m.Project(cover.at(h, g)), rhs);
  }
}

TEST(FullSubgroupExists, Examples) {
  EXPECT_TRUE(FullSubgroupExists(StandardSubmodule({2}, 2, 4)).sat);
  EXPECT_TRUE(FullSubgroupExists(StandardSubmodule({3}, 3, 5)).sat);
  EXPECT_TRUE(FullSubgroupExists(StandardSubmodule({2}, 3, 5)).sat);
  const CoboundaryCertificate m = FullSubgroupExists(MSubmodule(3, 5));
  EXPECT_FALSE(m.sat);
  EXPECT_EQ(m.rank_gap, 1u);
  EXPECT_THROW((void)FullSubgroupExists(StandardSubmodule({2}, 3, 5), CocycleTable::Cover(2, 5)),
               std::invalid_argument);
}

TEST(FullSubgroupExists, MonotoneInK) {
  for (auto [k, n] : {std::pair{2, 5}, {3, 5}, {3, 6}}) {
    const Lattice lattice = LatticeReport(k, n);
    const CocycleTable cover = CocycleTable::Cover(k, n);
    std::vector<bool> sat;
    for (const LatticeNode& node : lattice.nodes) {
      sat.push_back(FullSubgroupExists(SubmoduleSpec{k, n, node.canonical_J(), node.space}, cover).sat);
    }
    for (std::size_t a = 0; a < sat.size(); ++a) {
      for (std::size_t b = 0; b < sat.size(); ++b) {
        if (lattice.contains[a][b] && sat[a]) EXPECT_TRUE(sat[b]);
      }
    }
  }
}

}  // namespace
}  // namespace fullcover
