#include <gtest/gtest.h>

#include "symcart/homotopy.hpp"

using namespace symcart;

namespace {

PartialAbelianGroup G(const char* s) { return parse_group(s); }

PartialAbelianGroup pi_of(const char* space, int k) {
  return pi(parse_irreducible(space), k).group;
}

} // namespace

TEST(Pi, Examples) {
  EXPECT_EQ(pi_of("S(6)", 10), G("0"));  // pi_(6+4)(S^6)
  EXPECT_EQ(pi_of("S(5)", 10), G("Z_2"));
  EXPECT_EQ(pi_of("AI(6)", 5), G("Z"));
  EXPECT_EQ(pi_of("EII", 4), G("Z"));
  EXPECT_EQ(pi_of("S(4)", 7), G("Z + Z_12"));
  EXPECT_EQ(pi_of("S(4)", 10), G("Z_8 + Z_3^2"));
}

TEST(Pi, SpheresAndSimpleConnectivity) {
  for (int n = 2; n <= 40; ++n) {
    SpaceInstance s = sphere(n);
    for (int k = 1; k <= kMaxDegree; ++k) {
      PartialAbelianGroup g = pi(s, k).group;
      if (k < n) {
        EXPECT_EQ(g, G("0")) << n << " " << k;
      } else if (k == n) {
        EXPECT_EQ(g, G("Z")) << n;
      }
    }
  }
  for (const SpaceInstance& x : enumerate_catalog(300))
    EXPECT_EQ(pi(x, 1).group, G("0")) << x.name();
}

TEST(Pi, BlankCellsAreUnknownNotZero) {
  HomotopyCell c = pi(instantiate(Symbol::EII, 0), 9);
  EXPECT_TRUE(c.covered());
  EXPECT_TRUE(c.group.is_unknown());
  EXPECT_TRUE(pi(instantiate(Symbol::EIX, 0), 10).group.is_unknown());
}

TEST(Pi, StableGuardAndPeriodicity) {
  // SU(6): guard k <= 11 covers degree 10, taken from the degree-2 column
  HomotopyCell c = pi(instantiate(Symbol::A, 6), 10);
  ASSERT_TRUE(c.covered());
  EXPECT_EQ(c.record->tier, Tier::Stable);
  EXPECT_EQ(c.group, G("0"));
  EXPECT_EQ(pi_of("AI(11)", 10), G("Z_2"));
  EXPECT_EQ(pi_of("BDI(11,11)", 10), G("Z_2"));
  // AI(10): guard k <= 9, degree 10 comes from the explicit row
  HomotopyCell d = pi(instantiate(Symbol::AI, 10), 10);
  EXPECT_EQ(d.record->tier, Tier::Explicit);
  EXPECT_EQ(d.group, G("Z + Z_2"));
}

TEST(Pi, UnstableRowWinsOverlap) {
  // pi_4 of SU(4)/SO(4) is outside the stable guard; explicit row gives Z
  HomotopyCell c = pi(instantiate(Symbol::AI, 4), 4);
  EXPECT_EQ(c.record->tier, Tier::Explicit);
  EXPECT_EQ(c.group, G("Z"));
}

TEST(Pi, FiveFromFourOfSO) {
  // pi_5(SU(n)/SO(n)) = Z + pi_4(SO(n)), n >= 3
  for (int n : {3, 5, 6, 7, 8, 9, 10}) {
    auto lhs = pi(instantiate(Symbol::AI, n), 5).group;
    auto rhs = direct_sum(G("Z"), pi(instantiate(Symbol::BD, n), 4).group);
    EXPECT_EQ(lhs, rhs) << n;
  }
}

TEST(Pi, ReducibleRowsMatchProducts) {
  // Spin(4) = S^3 x S^3 and SO(4)/SO(2)SO(2) = S^2 x S^2; rows exist for
  // cross-checking only since the catalog rejects both presentations.
  const HomotopyDb& db = default_db();
  auto row_value = [&](const std::string& text, int k) -> std::optional<PartialAbelianGroup> {
    for (const HomotopyRecord& r : db.records())
      if (r.pattern.text == text)
        return r.groups.at(k);
    return std::nullopt;
  };
  auto s3 = profile(ProductSpace{sphere(3), sphere(3)}, 10);
  auto s2 = profile(ProductSpace{sphere(2), sphere(2)}, 10);
  for (int k = 1; k <= 10; ++k) {
    ASSERT_TRUE(row_value("Spin(4)", k));
    EXPECT_EQ(*row_value("Spin(4)", k), s3.at(k)) << k;
    EXPECT_EQ(*row_value("BDI(2,2)", k), s2.at(k)) << k;
  }
}

TEST(Pi, CPRowsMatchShiftedSpheres) {
  for (int n = 2; n <= 12; ++n)
    for (int k = 3; k <= 10; ++k)
      EXPECT_EQ(pi(cp(n), k).group, pi(sphere(2 * n + 1), k).group) << n << " " << k;
}

TEST(Profile, Examples) {
  auto p = profile(ProductSpace{sphere(10), sphere(10)}, 9);
  for (int k = 1; k <= 9; ++k)
    EXPECT_TRUE(p.at(k).is_exact() && p.at(k).group().is_trivial());
  auto c = profile(cp(5), 10);
  EXPECT_EQ(c.at(2), G("Z"));
  EXPECT_EQ(c.at(10), G("0"));
  auto g = profile(instantiate(Symbol::BDI, 2, 10), 10);
  EXPECT_EQ(g.at(2), G("Z"));
  EXPECT_EQ(g.at(10), G("Z"));
  EXPECT_TRUE(g.not_covered.empty());
  auto prod = profile(parse_space("AI(11) x S(5)"), 10);
  EXPECT_EQ(prod.at(5), G("Z^2"));
  EXPECT_EQ(prod.at(2), G("Z_2"));
}

TEST(Profile, PartialCellsWiden) {
  auto p = profile(parse_space("AI(3) x CP(2)"), 10);
  EXPECT_EQ(p.at(3).kind(), PartialAbelianGroup::Kind::Finite);
  EXPECT_EQ(p.at(7).kind(), PartialAbelianGroup::Kind::Finite);
}

TEST(ResolveIsomorphism, Examples) {
  EXPECT_EQ(resolve_isomorphism(instantiate(Symbol::BDI, 3, 3)), instantiate(Symbol::AI, 4));
  EXPECT_EQ(resolve_isomorphism(instantiate(Symbol::BD, 6)), instantiate(Symbol::A, 4));
  EXPECT_EQ(resolve_isomorphism(instantiate(Symbol::AI, 11)), instantiate(Symbol::AI, 11));
}

TEST(Consistency, NoIncompatibleOverlapsTo300) {
  auto conflicts = consistency_report(300);
  for (const auto& c : conflicts)
    ADD_FAILURE() << c.space << " pi_" << c.degree << ": " << format_group(c.a.group) << " ("
                  << c.a.source() << ") vs " << format_group(c.b.group) << " ("
                  << c.b.source() << ")";
}

TEST(Consistency, IsomorphicPresentationsAgreeWhereCovered) {
  for (const SpaceInstance& x : enumerate_presentations(120)) {
    SpaceInstance c = canonical(x);
    if (c == x)
      continue;
    for (int k = 1; k <= kMaxDegree; ++k) {
      HomotopyCell a = default_db().lookup_raw(x, k), b = pi(c, k);
      if (a.covered() && b.covered()) {
        EXPECT_FALSE(compatible(a.group, b.group).incompatible()) << x.name() << " " << k;
      }
    }
  }
}

TEST(Coverage, EveryCatalogSpaceCoveredThroughTen) {
  auto gaps = coverage_gaps(300, 10);
  for (const auto& [x, k] : gaps)
    ADD_FAILURE() << x.name() << " pi_" << k << " not covered";
}

TEST(DataFormat, ParseErrors) {
  HomotopyDb db;
  EXPECT_THROW(db.add_text("t", "SU(n) | k<=2n-1"), Error);
  EXPECT_THROW(db.add_text("t", "XX(n) | | 1=0"), Error);
  EXPECT_THROW(db.add_text("t", "SU(n) | k<<2 | 1=0"), Error);
  EXPECT_THROW(db.add_text("t", "SU(3) | | 11=0"), Error);
  EXPECT_THROW(db.add_text("t", "SU(3) | | 1=Z_"), Error);
  EXPECT_THROW(db.add_text("t", "SU(3) | | 1=0; 1=0"), Error);
  try {
    db.add_text("t", "# c\nSU(3) | | 2=Q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("t:2"), std::string::npos);
  }
}

TEST(DataFormat, GuardsAndVariables) {
  HomotopyDb db;
  db.add_text("stable", "AIII(p,q) | p>=2, q>=5, k<2q+1 | 1=0; 2=Z");
  db.add_text("x", "BDI(p,p) | | 1=0");
  EXPECT_TRUE(db.lookup_raw(instantiate(Symbol::AIII, 2, 5), 10).covered());
  EXPECT_EQ(db.lookup_raw(instantiate(Symbol::AIII, 2, 5), 10).group, G("Z"));
  EXPECT_FALSE(db.lookup_raw(instantiate(Symbol::AIII, 2, 4), 2).covered());
  EXPECT_TRUE(db.lookup_raw(instantiate(Symbol::BDI, 4, 4), 1).covered());
  EXPECT_FALSE(db.lookup_raw(instantiate(Symbol::BDI, 4, 5), 1).covered());
}
