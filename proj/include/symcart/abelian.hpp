// Finitely generated abelian groups, exact and partially known.
//
// Torsion is kept in primary decomposition (a multiset of prime powers),
// which makes the per-prime rank used by the recognition code a count.

#ifndef SYMCART_ABELIAN_HPP_
#define SYMCART_ABELIAN_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "util.hpp"

namespace symcart {

namespace impl {

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// n = prod p^e, primes ascending
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0)
      out.emplace_back(d, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= base;
  return r;
}

} // namespace impl

/// A cyclic factor of prime-power order p^e, e >= 1.
struct PrimePower {
  std::uint64_t prime = 2;
  int exponent = 1;

  std::uint64_t order() const { return impl::ipow(prime, exponent); }
  auto operator<=>(const PrimePower&) const = default;
};

/// Z^free_rank (+) torsion, torsion stored as sorted prime powers.
class AbelianGroup {
public:
  AbelianGroup() = default;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(int rank) {
    AbelianGroup g;
    g.free_rank_ = rank;
    return g;
  }
  /// Z_n, normalized to its primary decomposition. Z_1 is trivial.
  static AbelianGroup cyclic(std::uint64_t n) {
    if (n == 0)
      return free(1);
    AbelianGroup g;
    for (auto [p, e] : impl::factorize(n))
      g.torsion_.push_back({p, e});
    return g;
  }
  static AbelianGroup from_parts(int free_rank, std::vector<PrimePower> torsion) {
    AbelianGroup g;
    g.free_rank_ = free_rank;
    for (const PrimePower& pp : torsion) {
      if (!impl::is_prime(pp.prime) || pp.exponent < 1)
        throw std::invalid_argument("torsion factor is not a prime power: " +
                                    std::to_string(pp.prime) + "^" +
                                    std::to_string(pp.exponent));
      g.torsion_.push_back(pp);
    }
    std::sort(g.torsion_.begin(), g.torsion_.end());
    return g;
  }

  int free_rank() const { return free_rank_; }
  const std::vector<PrimePower>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }

  /// Order of the torsion subgroup.
  std::uint64_t torsion_order() const {
    std::uint64_t n = 1;
    for (const PrimePower& pp : torsion_)
      n *= pp.order();
    return n;
  }

  /// dim over Z_p of G (x) Z_p.
  int p_rank(std::uint64_t p) const {
    int n = free_rank_;
    for (const PrimePower& pp : torsion_)
      if (pp.prime == p)
        ++n;
    return n;
  }

  std::set<std::uint64_t> primes() const {
    std::set<std::uint64_t> s;
    for (const PrimePower& pp : torsion_)
      s.insert(pp.prime);
    return s;
  }

  AbelianGroup operator+(const AbelianGroup& o) const {
    AbelianGroup g;
    g.free_rank_ = free_rank_ + o.free_rank_;
    g.torsion_ = torsion_;
    g.torsion_.insert(g.torsion_.end(), o.torsion_.begin(), o.torsion_.end());
    std::sort(g.torsion_.begin(), g.torsion_.end());
    return g;
  }
  AbelianGroup power(int k) const {
    AbelianGroup g;
    for (int i = 0; i < k; ++i)
      g = g + *this;
    return g;
  }
  AbelianGroup torsion_part() const {
    AbelianGroup g = *this;
    g.free_rank_ = 0;
    return g;
  }

  bool operator==(const AbelianGroup&) const = default;
  auto operator<=>(const AbelianGroup&) const = default;

private:
  int free_rank_ = 0;
  std::vector<PrimePower> torsion_;
};

/// True if h is isomorphic to a subgroup of g.
inline bool embeds(const AbelianGroup& h, const AbelianGroup& g) {
  if (h.free_rank() > g.free_rank())
    return false;
  // per prime, the partition of exponents of h must fit inside that of g
  std::map<std::uint64_t, std::vector<int>> hp, gp;
  for (const PrimePower& pp : h.torsion())
    hp[pp.prime].push_back(pp.exponent);
  for (const PrimePower& pp : g.torsion())
    gp[pp.prime].push_back(pp.exponent);
  for (auto& [p, hexp] : hp) {
    std::vector<int>& gexp = gp[p];
    if (hexp.size() > gexp.size())
      return false;
    std::sort(hexp.rbegin(), hexp.rend());
    std::sort(gexp.rbegin(), gexp.rend());
    for (std::size_t i = 0; i < hexp.size(); ++i)
      if (hexp[i] > gexp[i])
        return false;
  }
  return true;
}

/// Closed interval of ranks; hi may be infinite.
struct RankInterval {
  static constexpr int kInf = std::numeric_limits<int>::max();
  int lo = 0;
  int hi = kInf;

  static RankInterval exactly(int r) { return {r, r}; }
  static RankInterval at_least(int r) { return {r, kInf}; }

  bool bounded() const { return hi != kInf; }
  bool contains(int r) const { return lo <= r && r <= hi; }
  bool disjoint(const RankInterval& o) const { return hi < o.lo || o.hi < lo; }

  RankInterval operator+(const RankInterval& o) const {
    return {lo + o.lo, (hi == kInf || o.hi == kInf) ? kInf : hi + o.hi};
  }
  RankInterval scaled(int k) const {
    if (k == 0)
      return {0, 0};
    return {lo * k, hi == kInf ? kInf : hi * k};
  }
  bool operator==(const RankInterval&) const = default;

  std::string str() const {
    return "[" + std::to_string(lo) + "," + (hi == kInf ? std::string("inf")
                                                        : std::to_string(hi)) + "]";
  }
};

/// A table cell: an exact group or one of the partial descriptions
/// ("f", "r1", "r>=1", "H in", blank).
class PartialAbelianGroup {
public:
  enum class Kind { Exact, Finite, RankOne, RankAtLeastOne, ContainsSubgroup, Unknown };

  PartialAbelianGroup() : kind_(Kind::Unknown) {}
  PartialAbelianGroup(AbelianGroup g) : kind_(Kind::Exact), group_(std::move(g)) {}

  static PartialAbelianGroup exact(AbelianGroup g) { return {std::move(g)}; }
  static PartialAbelianGroup finite() { return PartialAbelianGroup(Kind::Finite); }
  static PartialAbelianGroup rank_one() { return PartialAbelianGroup(Kind::RankOne); }
  static PartialAbelianGroup rank_at_least_one() {
    return PartialAbelianGroup(Kind::RankAtLeastOne);
  }
  static PartialAbelianGroup containing(AbelianGroup h) {
    PartialAbelianGroup x(Kind::ContainsSubgroup);
    x.group_ = std::move(h);
    return x;
  }
  static PartialAbelianGroup unknown() { return PartialAbelianGroup(Kind::Unknown); }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }
  /// The exact group (Exact) or the known subgroup (ContainsSubgroup).
  const AbelianGroup& group() const { return group_; }

  bool operator==(const PartialAbelianGroup& o) const {
    if (kind_ != o.kind_)
      return false;
    if (kind_ == Kind::Exact || kind_ == Kind::ContainsSubgroup)
      return group_ == o.group_;
    return true;
  }

  /// A subgroup that every refinement provably contains.
  AbelianGroup known_subgroup() const {
    switch (kind_) {
      case Kind::Exact:
      case Kind::ContainsSubgroup:
        return group_;
      case Kind::RankOne:
      case Kind::RankAtLeastOne:
        return AbelianGroup::free(1);
      default:
        return {};
    }
  }

private:
  explicit PartialAbelianGroup(Kind k) : kind_(k) {}

  Kind kind_;
  AbelianGroup group_;
};

inline RankInterval q_rank(const PartialAbelianGroup& g) {
  using K = PartialAbelianGroup::Kind;
  switch (g.kind()) {
    case K::Exact: return RankInterval::exactly(g.group().free_rank());
    case K::Finite: return RankInterval::exactly(0);
    case K::RankOne: return RankInterval::exactly(1);
    case K::RankAtLeastOne: return RankInterval::at_least(1);
    case K::ContainsSubgroup: return RankInterval::at_least(g.group().free_rank());
    case K::Unknown: break;
  }
  return RankInterval::at_least(0);
}

inline RankInterval p_rank(const PartialAbelianGroup& g, std::uint64_t p) {
  if (!impl::is_prime(p))
    throw std::invalid_argument("p_rank: " + std::to_string(p) + " is not prime");
  using K = PartialAbelianGroup::Kind;
  switch (g.kind()) {
    case K::Exact: return RankInterval::exactly(g.group().p_rank(p));
    case K::Finite: return RankInterval::at_least(0);
    case K::RankOne:
    case K::RankAtLeastOne: return RankInterval::at_least(1);
    case K::ContainsSubgroup: return RankInterval::at_least(g.group().p_rank(p));
    case K::Unknown: break;
  }
  return RankInterval::at_least(0);
}

/// Rank over a coefficient field; field 0 means Q, otherwise a prime.
inline RankInterval field_rank(const PartialAbelianGroup& g, std::uint64_t field) {
  return field == 0 ? q_rank(g) : p_rank(g, field);
}

/// Does the exact group g satisfy the description x?
inline bool refines(const AbelianGroup& g, const PartialAbelianGroup& x) {
  using K = PartialAbelianGroup::Kind;
  switch (x.kind()) {
    case K::Exact: return g == x.group();
    case K::Finite: return g.is_finite();
    case K::RankOne: return g.free_rank() == 1;
    case K::RankAtLeastOne: return g.free_rank() >= 1;
    case K::ContainsSubgroup: return embeds(x.group(), g);
    case K::Unknown: break;
  }
  return true;
}

// The lower bound kept by widening: the known subgroup, as a cell.
inline PartialAbelianGroup direct_sum(const PartialAbelianGroup& a,
                                      const PartialAbelianGroup& b) {
  using K = PartialAbelianGroup::Kind;
  if (a.is_exact() && b.is_exact())
    return a.group() + b.group();
  if (a.is_exact() && a.group().is_trivial())
    return b;
  if (b.is_exact() && b.group().is_trivial())
    return a;

  // order so that a.kind() <= b.kind() in the enum
  if (static_cast<int>(a.kind()) > static_cast<int>(b.kind()))
    return direct_sum(b, a);

  const AbelianGroup lower = a.known_subgroup() + b.known_subgroup();
  if (a.kind() == K::ContainsSubgroup || b.kind() == K::ContainsSubgroup ||
      a.kind() == K::Unknown || b.kind() == K::Unknown) {
    if (lower.is_trivial())
      return PartialAbelianGroup::unknown();
    return PartialAbelianGroup::containing(lower);
  }

  // Remaining: Exact, Finite, RankOne, RankAtLeastOne with at least one partial.
  const bool unbounded = a.kind() == K::RankAtLeastOne || b.kind() == K::RankAtLeastOne;
  const int free = lower.free_rank();
  if (free == 0)
    return PartialAbelianGroup::finite();
  if (free >= 2)
    return PartialAbelianGroup::containing(lower);
  return unbounded ? PartialAbelianGroup::rank_at_least_one()
                   : PartialAbelianGroup::rank_one();
}

struct CompatibilityWitness {
  std::uint64_t field = 0;  // 0 = Q
  RankInterval left, right;

  std::string field_name() const {
    return field == 0 ? std::string("Q") : "Z_" + std::to_string(field);
  }
};

struct Compatibility {
  enum class Kind { Equal, PossiblyEqual, Incompatible };
  Kind kind = Kind::PossiblyEqual;
  CompatibilityWitness witness;  // meaningful when Incompatible

  bool incompatible() const { return kind == Kind::Incompatible; }
};

inline std::set<std::uint64_t> default_primes(const PartialAbelianGroup& a,
                                              const PartialAbelianGroup& b) {
  std::set<std::uint64_t> s{2, 3, 5, 7};
  for (const auto& g : {a, b})
    if (g.kind() == PartialAbelianGroup::Kind::Exact ||
        g.kind() == PartialAbelianGroup::Kind::ContainsSubgroup)
      for (std::uint64_t p : g.group().primes())
        s.insert(p);
  return s;
}

/// Decide whether two cells can describe the same group; Q first, then
/// primes ascending.
inline Compatibility compatible(const PartialAbelianGroup& a,
                                const PartialAbelianGroup& b,
                                const std::set<std::uint64_t>& primes) {
  if (primes.empty())
    throw std::invalid_argument("compatible: empty prime set");
  Compatibility c;
  RankInterval qa = q_rank(a), qb = q_rank(b);
  if (qa.disjoint(qb)) {
    c.kind = Compatibility::Kind::Incompatible;
    c.witness = {0, qa, qb};
    return c;
  }
  for (std::uint64_t p : primes) {
    RankInterval pa = p_rank(a, p), pb = p_rank(b, p);
    if (pa.disjoint(pb)) {
      c.kind = Compatibility::Kind::Incompatible;
      c.witness = {p, pa, pb};
      return c;
    }
  }
  c.kind = (a.is_exact() && b.is_exact() && a.group() == b.group())
               ? Compatibility::Kind::Equal
               : Compatibility::Kind::PossiblyEqual;
  return c;
}

inline Compatibility compatible(const PartialAbelianGroup& a,
                                const PartialAbelianGroup& b) {
  return compatible(a, b, default_primes(a, b));
}

// ---------------------------------------------------------------------------
// Text form:  Z + Z_2^3,  Z_24 + Z_3,  0,  f,  r1,  r>=1,  Z_2 in,  ?

namespace impl {

class GroupParser {
public:
  explicit GroupParser(std::string_view text) : s_(text) {}

  PartialAbelianGroup parse() {
    skip_ws();
    if (at_end())
      fail("empty group expression");
    if (try_word("?"))
      return finish(PartialAbelianGroup::unknown());
    if (try_word("f"))
      return finish(PartialAbelianGroup::finite());
    if (try_word("r>=1"))
      return finish(PartialAbelianGroup::rank_at_least_one());
    if (try_word("r1"))
      return finish(PartialAbelianGroup::rank_one());

    AbelianGroup g = term();
    for (;;) {
      skip_ws();
      if (at_end())
        return g;
      if (peek() == '+') {
        ++pos_;
        g = g + term();
        continue;
      }
      if (try_word("in")) {
        skip_ws();
        if (!at_end())
          fail("unexpected text after 'in'");
        return PartialAbelianGroup::containing(g);
      }
      fail("expected '+' or 'in'");
    }
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool try_word(std::string_view w) {
    skip_ws();
    std::size_t p = pos_;
    for (char c : w) {
      while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p])))
        ++p;
      if (p >= s_.size() || s_[p] != c)
        return false;
      ++p;
    }
    pos_ = p;
    return true;
  }
  PartialAbelianGroup finish(PartialAbelianGroup g) {
    skip_ws();
    if (!at_end())
      fail("partial group descriptions cannot be combined");
    return g;
  }
  std::uint64_t number() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::uint64_t n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (n > (1ull << 40))
        fail("number too large");
      ++pos_;
    }
    return n;
  }
  AbelianGroup term() {
    skip_ws();
    if (at_end())
      fail("expected a term");
    if (peek() == '0') {
      ++pos_;
      return {};
    }
    if (peek() != 'Z')
      fail("expected 'Z', '0' or a partial description");
    ++pos_;
    AbelianGroup base = AbelianGroup::free(1);
    skip_ws();
    if (!at_end() && peek() == '_') {
      ++pos_;
      std::size_t at = pos_;
      std::uint64_t n = number();
      if (n < 2) {
        pos_ = at;
        fail("cyclic order must be at least 2");
      }
      base = AbelianGroup::cyclic(n);
    }
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      std::uint64_t k = number();
      return base.power(static_cast<int>(k));
    }
    return base;
  }
};

} // namespace impl

inline PartialAbelianGroup parse_group(std::string_view text) {
  return impl::GroupParser(text).parse();
}

inline std::string format_group(const AbelianGroup& g) {
  if (g.is_trivial())
    return "0";
  std::vector<std::string> terms;
  if (g.free_rank() == 1)
    terms.push_back("Z");
  else if (g.free_rank() > 1)
    terms.push_back("Z^" + std::to_string(g.free_rank()));
  const auto& t = g.torsion();
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i])
      ++j;
    std::string term = "Z_" + std::to_string(t[i].order());
    if (j - i > 1)
      term += "^" + std::to_string(j - i);
    terms.push_back(term);
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += (i ? " + " : "") + terms[i];
  return out;
}

inline std::string format_group(const PartialAbelianGroup& g) {
  using K = PartialAbelianGroup::Kind;
  switch (g.kind()) {
    case K::Exact: return format_group(g.group());
    case K::Finite: return "f";
    case K::RankOne: return "r1";
    case K::RankAtLeastOne: return "r>=1";
    case K::ContainsSubgroup: return format_group(g.group()) + " in";
    case K::Unknown: break;
  }
  return "?";
}

} // namespace symcart

#endif
