// Telling symmetric spaces apart by pi_1..pi_9: pairwise verdicts, the
// cross-type scan with its CP^n / Gr(R,2,q) blind spot, and products whose
// profile is compatible with an ambient space (DFS over catalog multisets,
// pruned by per-degree rank bounds).

#ifndef SYMCART_RECOGNIZE_HPP_
#define SYMCART_RECOGNIZE_HPP_

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "catalog.hpp"
#include "homotopy.hpp"
#include "util.hpp"

namespace symcart {

/// Coefficient fields in witness order: Q (0), then Z_2, Z_3, Z_5, Z_7.
inline constexpr std::array<std::uint64_t, 5> kFields = {0, 2, 3, 5, 7};

inline std::string field_name(std::uint64_t f) {
  return f == 0 ? "Q" : "Z_" + std::to_string(f);
}

struct RankVector {
  // ranks[k-1][i] is the rank interval of pi_k over kFields[i]
  std::vector<std::array<RankInterval, kFields.size()>> ranks;

  static RankVector of(const HomotopyProfile& p) {
    RankVector v;
    for (int k = 1; k <= p.max_degree(); ++k) {
      std::array<RankInterval, kFields.size()> row;
      for (std::size_t i = 0; i < kFields.size(); ++i)
        row[i] = field_rank(p.at(k), kFields[i]);
      v.ranks.push_back(row);
    }
    return v;
  }
  int max_degree() const { return static_cast<int>(ranks.size()); }
};

struct Verdict {
  enum class Kind { Distinguishable, Indistinguishable, Undetermined };
  Kind kind = Kind::Undetermined;
  int degree = 0;  // witness degree, or the degree checked through
  CompatibilityWitness witness;
  std::vector<std::string> blocking;  // Undetermined: cells that are not exact or not equal

  std::string str() const {
    switch (kind) {
      case Kind::Distinguishable:
        return cat("Distinguishable(", degree, ", ", witness.field_name(), ")");
      case Kind::Indistinguishable:
        return cat("Indistinguishable(", degree, ")");
      case Kind::Undetermined:
        break;
    }
    std::string s = "Undetermined(";
    for (std::size_t i = 0; i < blocking.size(); ++i)
      s += (i ? "; " : "") + blocking[i];
    return s + ")";
  }
};

inline Verdict distinguish_profiles(const HomotopyProfile& a, const HomotopyProfile& b,
                                    int max_degree) {
  if (max_degree < 1 || max_degree > std::min(a.max_degree(), b.max_degree()))
    fail("distinguish: max degree ", max_degree, " outside the profiles");
  Verdict v;
  for (int k = 1; k <= max_degree; ++k) {
    Compatibility c = compatible(a.at(k), b.at(k));
    if (c.incompatible()) {
      v.kind = Verdict::Kind::Distinguishable;
      v.degree = k;
      v.witness = c.witness;
      v.blocking.clear();
      return v;
    }
    if (c.kind != Compatibility::Kind::Equal)
      v.blocking.push_back(
          cat("pi_", k, ": ", format_group(a.at(k)), " vs ", format_group(b.at(k))));
  }
  v.degree = max_degree;
  v.kind = v.blocking.empty() ? Verdict::Kind::Indistinguishable : Verdict::Kind::Undetermined;
  return v;
}

inline Verdict distinguish(const ProductSpace& a, const ProductSpace& b, int max_degree,
                           const HomotopyDb& db = default_db()) {
  return distinguish_profiles(profile(a, max_degree, db), profile(b, max_degree, db),
                              max_degree);
}

/// Cartan symbol for the scan; S^n = SO(n+1)/SO(n) counts as BDI.
inline std::string cartan_class(const SpaceInstance& x) {
  return x.is_sphere() ? "BDI" : x.cartan_type();
}

/// CP^n (n >= 5) against SO(2+q)/SO(2)SO(q) (q >= 10), either order.
inline bool blind_spot_pair(const SpaceInstance& a, const SpaceInstance& b) {
  auto is_cp = [](const SpaceInstance& x) { return x.is_cp() && x.q() >= 5; };
  auto is_gr = [](const SpaceInstance& x) {
    return x.symbol() == Symbol::BDI && x.p() == 2 && x.q() >= 10;
  };
  return (is_cp(a) && is_gr(b)) || (is_gr(a) && is_cp(b));
}

struct ScanPair {
  SpaceInstance a, b;
  Verdict verdict;
};

struct Corollary1Report {
  int max_dim = 0;
  std::size_t instances = 0;
  std::size_t pairs = 0;              // cross-type pairs examined
  std::size_t distinguishable = 0;
  std::vector<ScanPair> blind_spot;   // blind-spot pairs found Indistinguishable(9)
  std::vector<ScanPair> violations;   // wrong verdict for the claim
  std::vector<ScanPair> undetermined;

  bool ok() const { return violations.empty() && undetermined.empty(); }
};

/// Every cross-type pair of valid irreducible spaces with dim <= max_dim.
inline Corollary1Report corollary1_scan(int max_dim, const HomotopyDb& db = default_db()) {
  if (max_dim < 11)
    fail("corollary1_scan: max_dim must be >= 11");
  constexpr int D = 9;
  std::vector<SpaceInstance> xs;
  for (const SpaceInstance& x : enumerate_catalog(max_dim))
    if (x.valid())
      xs.push_back(x);
  std::vector<HomotopyProfile> prof;
  prof.reserve(xs.size());
  for (const SpaceInstance& x : xs)
    prof.push_back(profile(x, D, db));

  Corollary1Report r;
  r.max_dim = max_dim;
  r.instances = xs.size();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (cartan_class(xs[i]) == cartan_class(xs[j]))
        continue;
      ++r.pairs;
      Verdict v = distinguish_profiles(prof[i], prof[j], D);
      ScanPair sp{xs[i], xs[j], v};
      bool blind = blind_spot_pair(xs[i], xs[j]);
      switch (v.kind) {
        case Verdict::Kind::Distinguishable:
          ++r.distinguishable;
          if (blind)
            r.violations.push_back(sp);
          break;
        case Verdict::Kind::Indistinguishable:
          (blind ? r.blind_spot : r.violations).push_back(sp);
          break;
        case Verdict::Kind::Undetermined:
          r.undetermined.push_back(sp);
          break;
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// decompose

struct DecomposeOptions {
  int max_degree = 9;
  std::size_t max_candidates = 1000000;
};

namespace impl {

struct Candidate {
  SpaceInstance space;
  RankVector ranks;
};

class DecomposeSearch {
public:
  DecomposeSearch(const RankVector& target, std::vector<Candidate> cands, int budget,
                  std::size_t cap)
    : target_(target), cands_(std::move(cands)), budget_(budget), cap_(cap) {
    lo_.assign(target_.ranks.size(), {});
    hi_.assign(target_.ranks.size(), {});
  }

  std::vector<ProductSpace> run() {
    dfs(0, budget_);
    return std::move(found_);
  }

private:
  const RankVector& target_;
  std::vector<Candidate> cands_;
  int budget_;
  std::size_t cap_;
  std::size_t visited_ = 0;
  std::vector<std::array<long long, kFields.size()>> lo_, hi_;
  std::vector<const SpaceInstance*> chosen_;
  std::vector<ProductSpace> found_;

  static long long inf() { return RankInterval::kInf; }
  static long long sat(long long a, long long b) { return std::min(inf(), a + b); }

  bool fits_lower(const Candidate& c) const {
    for (std::size_t k = 0; k < lo_.size(); ++k)
      for (std::size_t f = 0; f < kFields.size(); ++f)
        if (lo_[k][f] + c.ranks.ranks[k][f].lo > target_.ranks[k][f].hi)
          return false;
    return true;
  }
  bool meets_upper() const {
    for (std::size_t k = 0; k < hi_.size(); ++k)
      for (std::size_t f = 0; f < kFields.size(); ++f)
        if (hi_[k][f] < target_.ranks[k][f].lo)
          return false;
    return true;
  }
  void apply(const Candidate& c, int sign) {
    for (std::size_t k = 0; k < lo_.size(); ++k)
      for (std::size_t f = 0; f < kFields.size(); ++f) {
        const RankInterval& r = c.ranks.ranks[k][f];
        lo_[k][f] += sign * r.lo;
        if (sign > 0) {
          hi_[k][f] = sat(hi_[k][f], r.hi);
        }
      }
  }

  void dfs(std::size_t from, int remaining) {
    for (std::size_t i = from; i < cands_.size(); ++i) {
      const Candidate& c = cands_[i];
      if (c.space.dim() > remaining || !fits_lower(c))
        continue;
      if (++visited_ > cap_)
        fail("decompose: more than ", cap_, " candidate products; raise --max-candidates");
      auto saved_hi = hi_;
      apply(c, +1);
      chosen_.push_back(&c.space);
      if (meets_upper()) {
        std::vector<SpaceInstance> f;
        for (const SpaceInstance* s : chosen_)
          f.push_back(*s);
        found_.emplace_back(std::move(f));
      }
      dfs(i, remaining - c.space.dim());
      chosen_.pop_back();
      apply(c, -1);
      hi_ = std::move(saved_hi);
    }
  }
};

} // namespace impl

/// Products of catalog spaces (spheres included) with total dimension at
/// most dim(ambient) whose pi_1..pi_max_degree are compatible with those of
/// the ambient space. Largest total dimension first.
inline std::vector<ProductSpace> decompose(const SpaceInstance& ambient,
                                           const DecomposeOptions& opt = {},
                                           const HomotopyDb& db = default_db()) {
  if (opt.max_degree < 1 || opt.max_degree > 9)
    fail("decompose: max degree must be in 1..9");
  if (!ambient.valid())
    fail("decompose: ", ambient.name(), " does not have a valid dimension (C_P = ",
         format_rational(ambient.C_P()), ")");
  const int D = opt.max_degree;
  HomotopyProfile target = profile(ambient, D, db);
  RankVector tv = RankVector::of(target);

  std::vector<impl::Candidate> cands;
  for (const SpaceInstance& t : enumerate_catalog(ambient.dim()))
    cands.push_back({t, RankVector::of(profile(t, D, db))});

  std::vector<ProductSpace> rough =
      impl::DecomposeSearch(tv, std::move(cands), ambient.dim(), opt.max_candidates).run();

  std::vector<ProductSpace> out;
  for (ProductSpace& q : rough) {
    HomotopyProfile p = profile(q, D, db);
    bool ok = true;
    for (int k = 1; k <= D && ok; ++k)
      ok = !compatible(target.at(k), p.at(k)).incompatible();
    if (ok)
      out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const ProductSpace& x, const ProductSpace& y) {
    if (x.dim() != y.dim())
      return x.dim() > y.dim();
    return x < y;
  });
  return out;
}

} // namespace symcart

#endif
