#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "symcart/abelian.hpp"

using namespace symcart;
using K = PartialAbelianGroup::Kind;

namespace {

AbelianGroup G(const char* s) {
  PartialAbelianGroup x = parse_group(s);
  EXPECT_TRUE(x.is_exact()) << s;
  return x.group();
}

std::vector<PrimePower> pp(std::initializer_list<std::pair<int, int>> l) {
  std::vector<PrimePower> v;
  for (auto [p, e] : l)
    v.push_back({static_cast<std::uint64_t>(p), e});
  return v;
}

// All exact groups with free rank <= 3 and torsion order <= 64.
std::vector<AbelianGroup> small_groups() {
  // partitions of exponents per prime give every finite abelian group
  std::vector<AbelianGroup> finite;
  std::function<void(std::uint64_t, std::vector<PrimePower>)> rec =
      [&](std::uint64_t order, std::vector<PrimePower> t) {
        finite.push_back(AbelianGroup::from_parts(0, t));
        for (std::uint64_t p : {2, 3, 5, 7}) {
          // keep factors sorted to avoid duplicates
          std::uint64_t q = p;
          for (int e = 1; order * q <= 64; ++e, q *= p) {
            PrimePower f{p, e};
            if (!t.empty() && f < t.back())
              continue;
            auto t2 = t;
            t2.push_back(f);
            rec(order * q, t2);
          }
        }
      };
  rec(1, {});
  std::vector<AbelianGroup> out;
  for (int r = 0; r <= 3; ++r)
    for (const auto& f : finite)
      out.push_back(AbelianGroup::free(r) + f);
  return out;
}

std::vector<PartialAbelianGroup> sample_partials() {
  std::vector<PartialAbelianGroup> v = {
    PartialAbelianGroup::finite(), PartialAbelianGroup::rank_one(),
    PartialAbelianGroup::rank_at_least_one(), PartialAbelianGroup::unknown(),
  };
  for (const char* s : {"0", "Z", "Z_2", "Z_2^2", "Z + Z_2", "Z^2", "Z_12", "Z_3 + Z_8",
                        "Z_2 in", "Z in", "Z + Z_3 in", "Z_4^2 in", "Z_2^3", "Z_5"})
    v.push_back(parse_group(s));
  return v;
}

} // namespace

TEST(AbelianGroup, PrimaryDecomposition) {
  AbelianGroup g = G("Z + Z_12");
  EXPECT_EQ(g.free_rank(), 1);
  EXPECT_EQ(g.torsion(), pp({{2, 2}, {3, 1}}));

  AbelianGroup h = G("Z_24 + Z_3");
  EXPECT_EQ(h.torsion(), pp({{2, 3}, {3, 1}, {3, 1}}));
  EXPECT_EQ(h.torsion_order(), 72u);

  EXPECT_EQ(G("Z_2") + G("Z_2"), G("Z_2^2"));
  EXPECT_EQ(AbelianGroup::cyclic(1), AbelianGroup::trivial());
  EXPECT_THROW(AbelianGroup::from_parts(0, {{4, 1}}), std::invalid_argument);
}

TEST(AbelianGroup, NormalizationIdempotent) {
  for (const auto& g : small_groups())
    EXPECT_EQ(AbelianGroup::from_parts(g.free_rank(), g.torsion()), g);
}

TEST(PartialAbelianGroup, Ranks) {
  EXPECT_EQ(q_rank(parse_group("Z + Z_2")), RankInterval::exactly(1));
  EXPECT_EQ(q_rank(PartialAbelianGroup::finite()), RankInterval::exactly(0));
  EXPECT_EQ(q_rank(PartialAbelianGroup::rank_at_least_one()), RankInterval::at_least(1));
  EXPECT_EQ(q_rank(parse_group("Z^2 + Z_3 in")), RankInterval::at_least(2));
  EXPECT_EQ(q_rank(PartialAbelianGroup::unknown()), RankInterval::at_least(0));

  EXPECT_EQ(p_rank(parse_group("Z_24 + Z_2"), 2), RankInterval::exactly(2));
  EXPECT_EQ(p_rank(parse_group("Z_24 + Z_2"), 3), RankInterval::exactly(1));
  EXPECT_EQ(p_rank(parse_group("Z_2^4"), 2), RankInterval::exactly(4));
  EXPECT_EQ(p_rank(PartialAbelianGroup::finite(), 2), RankInterval::at_least(0));
  EXPECT_EQ(p_rank(PartialAbelianGroup::rank_one(), 5), RankInterval::at_least(1));
  EXPECT_EQ(p_rank(parse_group("Z_2 in"), 2), RankInterval::at_least(1));
  EXPECT_EQ(p_rank(parse_group("Z_2 in"), 3), RankInterval::at_least(0));
  EXPECT_THROW(p_rank(parse_group("Z"), 4), std::invalid_argument);
}

TEST(PartialAbelianGroup, RanksAdditiveOnExact) {
  std::mt19937 rng(7);
  auto groups = small_groups();
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    const auto& a = groups[pick(rng)];
    const auto& b = groups[pick(rng)];
    PartialAbelianGroup s = direct_sum(a, b);
    ASSERT_TRUE(s.is_exact());
    EXPECT_EQ(q_rank(s), q_rank(a) + q_rank(b));
    for (std::uint64_t p : {2, 3, 5, 7, 11})
      EXPECT_EQ(p_rank(s, p), p_rank(a, p) + p_rank(b, p));
  }
}

TEST(PartialAbelianGroup, DirectSumRules) {
  auto F = PartialAbelianGroup::finite();
  auto R1 = PartialAbelianGroup::rank_one();
  auto RA = PartialAbelianGroup::rank_at_least_one();
  auto U = PartialAbelianGroup::unknown();
  PartialAbelianGroup zero = AbelianGroup::trivial();

  EXPECT_EQ(direct_sum(parse_group("Z_2"), parse_group("Z_2")), parse_group("Z_2^2"));
  for (const auto& x : sample_partials()) {
    EXPECT_EQ(direct_sum(zero, x), x);
    EXPECT_EQ(direct_sum(x, zero), x);
  }
  EXPECT_EQ(direct_sum(F, F).kind(), K::Finite);
  EXPECT_EQ(direct_sum(R1, F).kind(), K::RankOne);
  EXPECT_EQ(direct_sum(F, parse_group("Z_3")).kind(), K::Finite);
  EXPECT_EQ(direct_sum(F, parse_group("Z + Z_3")).kind(), K::RankOne);
  EXPECT_EQ(direct_sum(R1, parse_group("Z_2")).kind(), K::RankOne);
  EXPECT_EQ(direct_sum(RA, F).kind(), K::RankAtLeastOne);

  // lower bound Z^2 survives the widening
  EXPECT_EQ(direct_sum(R1, R1), parse_group("Z^2 in"));
  EXPECT_EQ(direct_sum(R1, RA), parse_group("Z^2 in"));
  EXPECT_EQ(direct_sum(R1, parse_group("Z + Z_2")), parse_group("Z^2 + Z_2 in"));

  EXPECT_EQ(direct_sum(U, F).kind(), K::Unknown);
  EXPECT_EQ(direct_sum(U, parse_group("Z_2")), parse_group("Z_2 in"));
  EXPECT_EQ(direct_sum(U, R1), parse_group("Z in"));
  EXPECT_EQ(direct_sum(parse_group("Z_2 in"), parse_group("Z_3 in")),
            parse_group("Z_6 in"));
}

TEST(PartialAbelianGroup, DirectSumCommutativeAndSound) {
  auto xs = sample_partials();
  auto groups = small_groups();
  // a spread of refinements for each description
  auto refinements = [&](const PartialAbelianGroup& x) {
    std::vector<AbelianGroup> out;
    int seen = 0;
    for (const auto& g : groups)
      if (refines(g, x) && (seen++ % 7) == 0 && out.size() < 12)
        out.push_back(g);
    return out;
  };
  for (const auto& a : xs)
    for (const auto& b : xs) {
      PartialAbelianGroup s = direct_sum(a, b);
      EXPECT_EQ(s, direct_sum(b, a)) << format_group(a) << " + " << format_group(b);
      for (const auto& ga : refinements(a))
        for (const auto& gb : refinements(b))
          EXPECT_TRUE(refines(ga + gb, s))
              << format_group(ga) << " + " << format_group(gb) << " vs " << format_group(s);
    }
}

TEST(PartialAbelianGroup, DirectSumAssociativeOnExact) {
  std::mt19937 rng(11);
  auto groups = small_groups();
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  for (int i = 0; i < 500; ++i) {
    PartialAbelianGroup a = groups[pick(rng)], b = groups[pick(rng)], c = groups[pick(rng)];
    EXPECT_EQ(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c)));
  }
}

TEST(Compatible, Examples) {
  auto c1 = compatible(parse_group("Z_2"), parse_group("0"));
  ASSERT_TRUE(c1.incompatible());
  EXPECT_EQ(c1.witness.field, 2u);

  EXPECT_EQ(compatible(PartialAbelianGroup::finite(), parse_group("Z_12")).kind,
            Compatibility::Kind::PossiblyEqual);

  auto c3 = compatible(PartialAbelianGroup::rank_one(), parse_group("Z_2"));
  ASSERT_TRUE(c3.incompatible());
  EXPECT_EQ(c3.witness.field, 0u);
  EXPECT_EQ(c3.witness.field_name(), "Q");

  EXPECT_EQ(compatible(parse_group("Z + Z_2"), parse_group("Z_2 + Z")).kind,
            Compatibility::Kind::Equal);
  // Z_4 and Z_2 have the same p-ranks: not separable by ranks
  EXPECT_EQ(compatible(parse_group("Z_4"), parse_group("Z_2")).kind,
            Compatibility::Kind::PossiblyEqual);
  // a prime outside {2,3,5,7} enters through the operands
  EXPECT_TRUE(compatible(parse_group("Z_11"), parse_group("0")).incompatible());
  EXPECT_THROW(compatible(parse_group("Z"), parse_group("Z"), {}), std::invalid_argument);
}

TEST(Compatible, SymmetricAndSoundAgainstBruteForce) {
  auto xs = sample_partials();
  auto groups = small_groups();
  for (const auto& a : xs)
    for (const auto& b : xs) {
      auto ab = compatible(a, b), ba = compatible(b, a);
      EXPECT_EQ(ab.kind, ba.kind);
      if (!ab.incompatible())
        continue;
      for (const auto& g : groups)
        EXPECT_FALSE(refines(g, a) && refines(g, b))
            << format_group(g) << " refines both " << format_group(a) << " and "
            << format_group(b);
    }
}

TEST(Embeds, Basics) {
  EXPECT_TRUE(embeds(G("Z_2"), G("Z_4")));
  EXPECT_FALSE(embeds(G("Z_2^2"), G("Z_4")));
  EXPECT_TRUE(embeds(G("Z_2^2"), G("Z_4 + Z_2")));
  EXPECT_FALSE(embeds(G("Z_8"), G("Z_4^2")));
  EXPECT_TRUE(embeds(G("Z"), G("Z + Z_3")));
  EXPECT_FALSE(embeds(G("Z^2"), G("Z + Z_3")));
}

TEST(ParseGroup, Grammar) {
  AbelianGroup g = G("Z + Z_2^3");
  EXPECT_EQ(g.free_rank(), 1);
  EXPECT_EQ(g.torsion(), pp({{2, 1}, {2, 1}, {2, 1}}));
  EXPECT_EQ(parse_group("f").kind(), K::Finite);
  EXPECT_EQ(parse_group("r1").kind(), K::RankOne);
  EXPECT_EQ(parse_group("r>=1").kind(), K::RankAtLeastOne);
  EXPECT_EQ(parse_group("r >= 1").kind(), K::RankAtLeastOne);
  EXPECT_EQ(parse_group("?").kind(), K::Unknown);
  EXPECT_EQ(parse_group("  0 ").kind(), K::Exact);
  PartialAbelianGroup c = parse_group("Z_2 in");
  EXPECT_EQ(c.kind(), K::ContainsSubgroup);
  EXPECT_EQ(c.group(), G("Z_2"));
  EXPECT_EQ(G("Z_3+Z_4^2"), G("Z_4 + Z_3 + Z_4"));
  EXPECT_EQ(G("Z^3"), AbelianGroup::free(3));
}

TEST(ParseGroup, ErrorsCarryPosition) {
  for (const char* bad : {"", "Z +", "Z_", "Z_1", "Q", "Z_2 + f", "f + Z", "Z in Z", "Z_2 Z_3"}) {
    EXPECT_THROW(parse_group(bad), ParseError) << bad;
  }
  try {
    parse_group("Z + Z_x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 6u);
  }
}

TEST(ParseGroup, RoundTrip) {
  for (const auto& x : sample_partials())
    EXPECT_EQ(parse_group(format_group(x)), x) << format_group(x);
  for (const auto& g : small_groups())
    EXPECT_EQ(parse_group(format_group(g)), PartialAbelianGroup(g)) << format_group(g);
  EXPECT_EQ(format_group(G("Z_24 + Z_3")), "Z_8 + Z_3^2");
  EXPECT_EQ(format_group(parse_group("Z^2 + Z_2 in")), "Z^2 + Z_2 in");
}
