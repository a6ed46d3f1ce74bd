#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "symcart/recognize.hpp"
#include "symcart/spacespec.hpp"

using namespace symcart;
using VK = Verdict::Kind;

namespace {

Verdict dist(const char* a, const char* b, int d = 9) {
  return distinguish(parse_space(a), parse_space(b), d);
}

bool contains(const std::vector<ProductSpace>& v, const ProductSpace& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// exact groups with free rank <= 2 and torsion order <= 32
std::vector<AbelianGroup> small_groups() {
  std::vector<AbelianGroup> tors{AbelianGroup::trivial()};
  std::function<void(AbelianGroup, std::uint64_t)> grow = [&](AbelianGroup g, std::uint64_t min_n) {
    for (std::uint64_t n = min_n; g.torsion_order() * n <= 32; ++n) {
      if (impl::factorize(n).size() != 1)
        continue;
      AbelianGroup h = g + AbelianGroup::cyclic(n);
      tors.push_back(h);
      grow(h, n);
    }
  };
  grow(AbelianGroup::trivial(), 2);
  std::vector<AbelianGroup> out;
  for (int r = 0; r <= 2; ++r)
    for (const auto& t : tors)
      out.push_back(AbelianGroup::free(r) + t);
  return out;
}

} // namespace

TEST(Distinguish, Examples) {
  Verdict blind = dist("CP(5)", "Gr(R,2,12)");
  EXPECT_EQ(blind.kind, VK::Indistinguishable);
  EXPECT_EQ(blind.degree, 9);

  Verdict v = dist("AI(12)", "AII(6)");
  EXPECT_EQ(v.kind, VK::Distinguishable);
  EXPECT_EQ(v.degree, 2);
  EXPECT_EQ(v.witness.field, 2u);

  // Gr(R,2,11) = BDI(2,9) sits just outside the blind spot
  Verdict w = dist("CP(5)", "Gr(R,2,11)");
  EXPECT_EQ(w.kind, VK::Distinguishable);
  EXPECT_EQ(w.degree, 9);

  Verdict f = dist("FII", "CP(8)");
  EXPECT_EQ(f.kind, VK::Distinguishable);
  EXPECT_EQ(f.degree, 2);
  EXPECT_EQ(f.witness.field, 0u);
}

TEST(Distinguish, ReflexiveOnFullyKnown) {
  for (const SpaceInstance& x : enumerate_catalog(80)) {
    Verdict v = distinguish(ProductSpace{x}, ProductSpace{x}, 9);
    EXPECT_NE(v.kind, VK::Distinguishable) << x.name();
    auto p = profile(x, 9);
    bool exact = std::all_of(p.groups.begin(), p.groups.end(),
                             [](const PartialAbelianGroup& g) { return g.is_exact(); });
    if (exact) {
      EXPECT_EQ(v.kind, VK::Indistinguishable) << x.name();
    } else {
      EXPECT_EQ(v.kind, VK::Undetermined) << x.name();
      EXPECT_FALSE(v.blocking.empty());
    }
  }
}

TEST(Distinguish, UndeterminedListsBlockingCells) {
  Verdict v = dist("EIX", "HP(30)");
  EXPECT_EQ(v.kind, VK::Undetermined);
  ASSERT_EQ(v.blocking.size(), 1u);
  EXPECT_NE(v.blocking[0].find("pi_3"), std::string::npos);
}

TEST(Distinguish, SoundAgainstBruteForce) {
  auto groups = small_groups();
  auto xs = enumerate_catalog(30);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      Verdict v = distinguish(ProductSpace{xs[i]}, ProductSpace{xs[j]}, 9);
      if (v.kind != VK::Distinguishable)
        continue;
      auto a = pi(xs[i], v.degree).group, b = pi(xs[j], v.degree).group;
      for (const AbelianGroup& g : groups)
        EXPECT_FALSE(refines(g, a) && refines(g, b))
            << xs[i].name() << " " << xs[j].name() << " pi_" << v.degree;
    }
}

TEST(Distinguish, WitnessOrderLowestDegreeThenQ) {
  // S(5) vs S(7): first difference at degree 5, over Q
  Verdict v = dist("S(5)", "S(7)");
  EXPECT_EQ(v.degree, 5);
  EXPECT_EQ(v.witness.field, 0u);
}

TEST(CrossTypeScan, BlindSpotCountAt40) {
  Corollary1Report r = corollary1_scan(40);
  std::size_t expected = 0;
  for (const SpaceInstance& a : enumerate_catalog(40))
    for (const SpaceInstance& b : enumerate_catalog(40))
      if (a.valid() && b.valid() && a.is_cp() && blind_spot_pair(a, b))
        ++expected;
  EXPECT_EQ(expected, 15u * 11u);  // CP(6..20) x BDI(2,10..20)
  EXPECT_EQ(r.blind_spot.size(), expected);
  for (const auto& p : r.violations)
    ADD_FAILURE() << p.a.name() << " vs " << p.b.name() << ": " << p.verdict.str();
  for (const auto& p : r.undetermined)
    ADD_FAILURE() << p.a.name() << " vs " << p.b.name() << ": " << p.verdict.str();
}

TEST(CrossTypeScan, RejectsSmallRange) { EXPECT_THROW(corollary1_scan(10), Error); }

TEST(Decompose, SphereAmbient) {
  auto r = decompose(sphere(12));
  std::vector<ProductSpace> want{ProductSpace{sphere(12)}, ProductSpace{sphere(11)},
                                 ProductSpace{sphere(10)}};
  EXPECT_EQ(r, want);
}

TEST(Decompose, GrassmannianContainsCPHeads) {
  auto r = decompose(parse_irreducible("Gr(R,2,12)"));
  EXPECT_TRUE(contains(r, ProductSpace{cp(5)}));
  EXPECT_TRUE(contains(r, ProductSpace{cp(5), sphere(10)}));
  EXPECT_TRUE(contains(r, ProductSpace{instantiate(Symbol::BDI, 2, 10)}));
}

TEST(Decompose, AIHeadsOnly) {
  auto r = decompose(instantiate(Symbol::AI, 11));
  ASSERT_FALSE(r.empty());
  for (const ProductSpace& q : r) {
    int heads = 0;
    for (const SpaceInstance& f : q.factors())
      if (!f.is_sphere()) {
        ++heads;
        EXPECT_EQ(f.symbol(), Symbol::AI) << q.name();
      } else {
        EXPECT_GE(f.dim(), 10) << q.name();
      }
    EXPECT_EQ(heads, 1) << q.name();
  }
}

TEST(Decompose, Invariants) {
  for (const SpaceInstance& p : enumerate_catalog(44)) {
    if (!p.valid())
      continue;
    auto r = decompose(p);
    auto prof = profile(p, 9);
    bool self_ok = true;
    for (int k = 1; k <= 9; ++k)
      self_ok = self_ok && !compatible(prof.at(k), prof.at(k)).incompatible();
    if (self_ok) {
      EXPECT_TRUE(contains(r, ProductSpace{p})) << p.name();
    }
    for (const ProductSpace& q : r) {
      EXPECT_LE(q.dim(), p.dim());
      auto qp = profile(q, 9);
      for (int k = 1; k <= 9; ++k)
        EXPECT_FALSE(compatible(prof.at(k), qp.at(k)).incompatible()) << q.name() << " " << k;
      for (int n = 10; q.dim() + n <= p.dim(); ++n)
        EXPECT_TRUE(contains(r, q.times(sphere(n)))) << q.name() << " x S(" << n << ")";
    }
    EXPECT_TRUE(std::is_sorted(r.begin(), r.end(), [](const ProductSpace& a, const ProductSpace& b) {
      return a.dim() > b.dim() || (a.dim() == b.dim() && a < b);
    }));
  }
}

TEST(Decompose, DeterministicAndCapped) {
  SpaceInstance p = instantiate(Symbol::AI, 11);
  EXPECT_EQ(decompose(p), decompose(p));
  DecomposeOptions tiny;
  tiny.max_candidates = 5;
  EXPECT_THROW(decompose(p, tiny), Error);
  EXPECT_THROW(decompose(sphere(5)), Error);  // invalid dimension
  DecomposeOptions bad;
  bad.max_degree = 10;
  EXPECT_THROW(decompose(p, bad), Error);
}

TEST(RankVectorTest, FromProfile) {
  RankVector v = RankVector::of(profile(instantiate(Symbol::AI, 11), 9));
  ASSERT_EQ(v.max_degree(), 9);
  EXPECT_EQ(v.ranks[1][0], RankInterval::exactly(0));  // pi_2 over Q
  EXPECT_EQ(v.ranks[1][1], RankInterval::exactly(1));  // pi_2 over Z_2
  EXPECT_EQ(v.ranks[4][0], RankInterval::exactly(1));  // pi_5 over Q
}
