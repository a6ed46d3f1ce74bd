// Irreducible simply-connected compact symmetric spaces and the numbers
// derived from their restricted root data: dim, k_P, d_P = dim - k_P,
// C_P = d_P/2 - 4 and the connectivity number of a submanifold.
//
// A SpaceInstance is one presentation (Cartan symbol + parameters).
// canonical() rewrites the low-dimensional coincidences to a single
// representative; enumerate_catalog() lists canonical ones only.

#ifndef SYMCART_CATALOG_HPP_
#define SYMCART_CATALOG_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rootsys.hpp"
#include "util.hpp"

namespace symcart {

using Rational = boost::rational<std::int64_t>;

inline std::string format_rational(const Rational& x) {
  if (x.denominator() == 1)
    return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

// Order matters only for canonical sorting of products (spheres last).
enum class Symbol {
  A, AI, AII, AIII, BD, BDI, C, CI, CII, DIII,
  E6, E7, E8, EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX,
  F4, FI, FII, G2, G, Sphere
};

/// The Cartan symbol as printed; group cases use the bare Lie type.
inline const char* cartan_symbol(Symbol s) {
  switch (s) {
    case Symbol::Sphere: return "S";
    case Symbol::A: return "A";
    case Symbol::AI: return "AI";
    case Symbol::AII: return "AII";
    case Symbol::AIII: return "AIII";
    case Symbol::BD: return "BD";
    case Symbol::BDI: return "BDI";
    case Symbol::C: return "C";
    case Symbol::CI: return "CI";
    case Symbol::CII: return "CII";
    case Symbol::DIII: return "DIII";
    case Symbol::E6: return "E6";
    case Symbol::E7: return "E7";
    case Symbol::E8: return "E8";
    case Symbol::EI: return "EI";
    case Symbol::EII: return "EII";
    case Symbol::EIII: return "EIII";
    case Symbol::EIV: return "EIV";
    case Symbol::EV: return "EV";
    case Symbol::EVI: return "EVI";
    case Symbol::EVII: return "EVII";
    case Symbol::EVIII: return "EVIII";
    case Symbol::EIX: return "EIX";
    case Symbol::F4: return "F4";
    case Symbol::FI: return "FI";
    case Symbol::FII: return "FII";
    case Symbol::G2: return "G2";
    case Symbol::G: return "G";
  }
  return "?";
}

inline bool is_exceptional(Symbol s) { return s >= Symbol::E6 && s <= Symbol::G; }

inline int param_count(Symbol s) {
  switch (s) {
    case Symbol::AIII: case Symbol::BDI: case Symbol::CII: return 2;
    default: return is_exceptional(s) ? 0 : 1;
  }
}

/// Printed values for an exceptional space.
struct ExceptionalRow {
  Symbol symbol;
  int dim;
  Family root_family;
  int root_rank;
  Multiplicities mult;
  int d_P;
  int k_P;
};

inline const std::vector<ExceptionalRow>& exceptional_rows() {
  static const std::vector<ExceptionalRow> rows = {
    {Symbol::E6, 78, Family::E6, 6, {0, 2, 0}, 32, 46},
    {Symbol::E7, 133, Family::E7, 7, {0, 2, 0}, 54, 79},
    {Symbol::E8, 248, Family::E8, 8, {0, 2, 0}, 114, 134},
    {Symbol::EI, 42, Family::E6, 6, {0, 1, 0}, 16, 26},
    {Symbol::EII, 40, Family::F4, 4, {2, 1, 0}, 21, 19},
    {Symbol::EIII, 32, Family::BC, 2, {8, 6, 1}, 21, 11},
    {Symbol::EIV, 26, Family::A, 2, {0, 8, 0}, 16, 10},
    {Symbol::EV, 70, Family::E7, 7, {0, 1, 0}, 27, 43},
    {Symbol::EVI, 64, Family::F4, 4, {4, 1, 0}, 33, 31},
    {Symbol::EVII, 54, Family::C, 3, {8, 1, 0}, 27, 27},
    {Symbol::EVIII, 128, Family::E8, 8, {0, 1, 0}, 57, 71},
    {Symbol::EIX, 112, Family::F4, 4, {8, 1, 0}, 57, 55},
    {Symbol::F4, 52, Family::F4, 4, {2, 2, 0}, 30, 22},
    {Symbol::FI, 28, Family::F4, 4, {1, 1, 0}, 15, 13},
    {Symbol::FII, 16, Family::BC, 1, {8, 0, 7}, 15, 1},
    {Symbol::G2, 14, Family::G2, 2, {2, 2, 0}, 10, 4},
    {Symbol::G, 8, Family::G2, 2, {1, 1, 0}, 5, 3},
  };
  return rows;
}

inline const ExceptionalRow& exceptional_row(Symbol s) {
  for (const ExceptionalRow& r : exceptional_rows())
    if (r.symbol == s)
      return r;
  fail("no exceptional row for ", cartan_symbol(s));
}

class SpaceInstance {
public:
  Symbol symbol() const { return symbol_; }
  /// n for one-parameter classes, p for (p,q) classes.
  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_; }

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  /// Restricted root data; empty for rank-one presentations that bypass it.
  const std::optional<RootSystemType>& root_type() const { return root_type_; }
  const Multiplicities& multiplicities() const { return mult_; }
  int k_P() const { return k_P_; }
  int d_P() const { return dim_ - k_P_; }
  Rational C_P() const { return Rational(d_P(), 2) - 4; }
  bool valid() const { return C_P() >= 1; }

  bool is_sphere() const { return symbol_ == Symbol::Sphere; }
  bool is_cp() const { return symbol_ == Symbol::AIII && p_ == 1; }
  bool is_hp() const { return symbol_ == Symbol::CII && p_ == 1; }
  bool classical() const { return !is_exceptional(symbol_); }
  /// Grassmannian classes for the gate: AIII, BDI, CII (incl. CP, HP).
  bool is_grassmannian() const {
    return symbol_ == Symbol::AIII || symbol_ == Symbol::BDI || symbol_ == Symbol::CII;
  }
  std::string cartan_type() const { return cartan_symbol(symbol_); }

  /// Space-spec form, e.g. "AI(11)", "CP(5)", "Spin(7)", "EIII".
  std::string name() const {
    auto one = [&](const char* s) { return std::string(s) + "(" + std::to_string(p_) + ")"; };
    auto two = [&](const char* s) {
      return std::string(s) + "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    };
    switch (symbol_) {
      case Symbol::Sphere: return one("S");
      case Symbol::A: return one("SU");
      case Symbol::AI: return one("AI");
      case Symbol::AII: return one("AII");
      case Symbol::AIII:
        return p_ == 1 ? "CP(" + std::to_string(q_) + ")" : two("AIII");
      case Symbol::BD: return one("Spin");
      case Symbol::BDI: return two("BDI");
      case Symbol::C: return one("Sp");
      case Symbol::CI: return one("CI");
      case Symbol::CII:
        return p_ == 1 ? "HP(" + std::to_string(q_) + ")" : two("CII");
      case Symbol::DIII: return one("DIII");
      default: return cartan_symbol(symbol_);
    }
  }

  bool operator==(const SpaceInstance& o) const {
    return symbol_ == o.symbol_ && p_ == o.p_ && q_ == o.q_;
  }
  auto operator<=>(const SpaceInstance& o) const {
    if (auto c = symbol_ <=> o.symbol_; c != 0)
      return c;
    if (auto c = p_ <=> o.p_; c != 0)
      return c;
    return q_ <=> o.q_;
  }

  friend SpaceInstance instantiate(Symbol s, int a, int b);

private:
  Symbol symbol_ = Symbol::Sphere;
  int p_ = 0, q_ = 0;
  int dim_ = 0;
  int rank_ = 0;
  std::optional<RootSystemType> root_type_;
  Multiplicities mult_;
  int k_P_ = 0;

  void set_roots(Family f, int r, Multiplicities m) {
    root_type_ = RootSystemType(f, r);
    mult_ = m;
    rank_ = r;
    k_P_ = kp_enumerated(*root_type_, m).kp;
  }
  void set_rank_one() {
    root_type_.reset();
    rank_ = 1;
    k_P_ = 1;
  }
};

/// Build a presentation; a and b are (n) or (p,q). Constraints follow the
/// Cartan-symbol table; reducible presentations are rejected.
inline SpaceInstance instantiate(Symbol s, int a, int b = 0) {
  SpaceInstance x;
  x.symbol_ = s;
  x.p_ = a;
  x.q_ = param_count(s) == 2 ? b : 0;
  if (param_count(s) == 0)
    x.p_ = 0;
  auto need = [&](bool ok, const char* cond) {
    if (!ok)
      fail(x.name(), ": violates condition ", cond);
  };
  const int n = a, p = a, q = b;
  switch (s) {
    case Symbol::Sphere:
      need(n >= 2, "n >= 2");
      x.dim_ = n;
      x.set_rank_one();
      break;
    case Symbol::A:
      need(n >= 2, "n >= 2");
      x.dim_ = n * n - 1;
      if (n == 2)
        x.set_rank_one();
      else
        x.set_roots(Family::A, n - 1, {0, 2, 0});
      break;
    case Symbol::AI:
      need(n >= 2, "n >= 2");
      x.dim_ = (n - 1) * (n + 2) / 2;
      x.set_roots(Family::A, n - 1, {0, 1, 0});
      break;
    case Symbol::AII:
      need(n >= 2, "n >= 2");
      x.dim_ = (n - 1) * (2 * n + 1);
      x.set_roots(Family::A, n - 1, {0, 4, 0});
      break;
    case Symbol::AIII:
      need(1 <= p && p <= q, "1 <= p <= q");
      x.dim_ = 2 * p * q;
      if (p == 1)
        x.set_rank_one();
      else if (p < q)
        x.set_roots(Family::BC, p, {2 * (q - p), 2, 1});
      else
        x.set_roots(Family::C, p, {2, 1, 0});
      break;
    case Symbol::BD:
      need(n >= 3 && n != 4, "n >= 3, n != 4");
      x.dim_ = n * (n - 1) / 2;
      if (n == 3)
        x.set_rank_one();
      else if (n % 2 == 1)
        x.set_roots(Family::B, (n - 1) / 2, {2, 2, 0});
      else if (n == 6)
        x.set_roots(Family::A, 3, {0, 2, 0});  // D3 = A3
      else
        x.set_roots(Family::D, n / 2, {0, 2, 0});
      break;
    case Symbol::BDI:
      need(1 <= p && p <= q && !(p == 1 && q == 1) && !(p == 2 && q == 2),
           "1 <= p <= q, (p,q) not in {(1,1),(2,2)}");
      x.dim_ = p * q;
      if (p == 1)
        x.set_rank_one();
      else if (p < q)
        x.set_roots(Family::B, p, {q - p, 1, 0});
      else if (p == 3)
        x.set_roots(Family::A, 3, {0, 1, 0});  // D3 = A3
      else
        x.set_roots(Family::D, p, {0, 1, 0});
      break;
    case Symbol::C:
      need(n >= 1, "n >= 1");
      x.dim_ = n * (2 * n + 1);
      if (n == 1)
        x.set_rank_one();
      else
        x.set_roots(Family::C, n, {2, 2, 0});
      break;
    case Symbol::CI:
      need(n >= 1, "n >= 1");
      x.dim_ = n * (n + 1);
      if (n == 1)
        x.set_rank_one();
      else
        x.set_roots(Family::C, n, {1, 1, 0});
      break;
    case Symbol::CII:
      need(1 <= p && p <= q, "1 <= p <= q");
      x.dim_ = 4 * p * q;
      if (p == 1)
        x.set_rank_one();
      else if (p < q)
        x.set_roots(Family::BC, p, {4 * (q - p), 4, 3});
      else
        x.set_roots(Family::C, p, {4, 3, 0});
      break;
    case Symbol::DIII:
      // SO(2n)/U(n)
      need(n >= 2, "n >= 2");
      x.dim_ = n * (n - 1);
      if (n <= 3)
        x.set_rank_one();
      else if (n % 2 == 0)
        x.set_roots(Family::C, n / 2, {4, 1, 0});
      else
        x.set_roots(Family::BC, (n - 1) / 2, {4, 4, 1});
      break;
    default: {
      const ExceptionalRow& row = exceptional_row(s);
      x.dim_ = row.dim;
      x.set_roots(row.root_family, row.root_rank, row.mult);
      break;
    }
  }
  return x;
}

inline SpaceInstance sphere(int n) { return instantiate(Symbol::Sphere, n); }
inline SpaceInstance cp(int n) { return instantiate(Symbol::AIII, 1, n); }
inline SpaceInstance hp(int n) { return instantiate(Symbol::CII, 1, n); }

/// One step of the special-isomorphism rewrite; nullopt if none applies.
inline std::optional<SpaceInstance> isomorphism_step(const SpaceInstance& x) {
  const int a = x.p(), b = x.q();
  switch (x.symbol()) {
    case Symbol::AI:
      if (a == 2) return sphere(2);
      break;
    case Symbol::DIII:
      if (a == 2) return sphere(2);
      if (a == 3) return cp(3);
      if (a == 4) return instantiate(Symbol::BDI, 2, 6);
      break;
    case Symbol::CI:
      if (a == 1) return sphere(2);
      if (a == 2) return instantiate(Symbol::BDI, 2, 3);
      break;
    case Symbol::AIII:
      if (a == 1 && b == 1) return sphere(2);
      if (a == 2 && b == 2) return instantiate(Symbol::BDI, 2, 4);
      break;
    case Symbol::A:
      if (a == 2) return sphere(3);
      break;
    case Symbol::BD:
      if (a == 3) return sphere(3);
      if (a == 6) return instantiate(Symbol::A, 4);
      break;
    case Symbol::C:
      if (a == 1) return sphere(3);
      if (a == 2) return instantiate(Symbol::BD, 5);
      break;
    case Symbol::CII:
      if (a == 1 && b == 1) return sphere(4);
      break;
    case Symbol::AII:
      if (a == 2) return sphere(5);
      break;
    case Symbol::BDI:
      if (a == 1) return sphere(b);
      if (a == 3 && b == 3) return instantiate(Symbol::AI, 4);
      break;
    default:
      break;
  }
  return std::nullopt;
}

/// Fixpoint of the special-isomorphism rewrite.
inline SpaceInstance canonical(SpaceInstance x) {
  while (auto y = isomorphism_step(x))
    x = *y;
  return x;
}

/// Every presentation isomorphic to x (x itself included), canonical first.
inline std::vector<SpaceInstance> isomorphism_class(const SpaceInstance& x);

/// 2 + d_P - 2 codim: the connectivity of the inclusion of a submanifold
/// of the given codimension.
inline int sharp(const SpaceInstance& x, int codim) {
  if (codim < 0 || codim > x.dim())
    fail("sharp: codim ", codim, " outside 0..", x.dim());
  return 2 + x.d_P() - 2 * codim;
}

class ProductSpace {
public:
  ProductSpace() = default;
  explicit ProductSpace(std::vector<SpaceInstance> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
  }
  ProductSpace(std::initializer_list<SpaceInstance> f)
    : ProductSpace(std::vector<SpaceInstance>(f)) {}

  const std::vector<SpaceInstance>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  bool irreducible() const { return factors_.size() == 1; }

  int dim() const {
    int d = 0;
    for (const auto& f : factors_)
      d += f.dim();
    return d;
  }
  std::string name() const {
    if (factors_.empty())
      return "pt";
    std::string s;
    for (auto it = factors_.begin(); it != factors_.end(); ++it)
      s += (it == factors_.begin() ? "" : " x ") + it->name();
    return s;
  }
  ProductSpace times(const SpaceInstance& f) const {
    std::vector<SpaceInstance> v = factors_;
    v.push_back(f);
    return ProductSpace(std::move(v));
  }
  bool operator==(const ProductSpace&) const = default;
  auto operator<=>(const ProductSpace& o) const { return factors_ <=> o.factors_; }

private:
  std::vector<SpaceInstance> factors_;
};

/// k for a product: total dim minus the smallest d_P among the factors.
inline int product_kp(const ProductSpace& x) {
  if (x.empty())
    fail("product_kp: empty product");
  int min_d = x.factors().front().d_P();
  for (const auto& f : x.factors())
    min_d = std::min(min_d, f.d_P());
  return x.dim() - min_d;
}

namespace impl {

template<typename F>
void for_n(int from, int max_dim, F dim_of, std::vector<int>& out) {
  for (int n = from; dim_of(n) <= max_dim; ++n)
    out.push_back(n);
}

} // namespace impl

/// Every presentation with dim <= max_dim, not canonicalized.
inline std::vector<SpaceInstance> enumerate_presentations(int max_dim) {
  std::vector<SpaceInstance> out;
  auto add = [&](Symbol s, int a, int b) { out.push_back(instantiate(s, a, b)); };
  for (int n = 2; n <= max_dim; ++n)
    add(Symbol::Sphere, n, 0);
  for (int n = 2; n * n - 1 <= max_dim; ++n)
    add(Symbol::A, n, 0);
  for (int n = 2; (n - 1) * (n + 2) / 2 <= max_dim; ++n)
    add(Symbol::AI, n, 0);
  for (int n = 2; (n - 1) * (2 * n + 1) <= max_dim; ++n)
    add(Symbol::AII, n, 0);
  for (int p = 1; 2 * p * p <= max_dim; ++p)
    for (int q = p; 2 * p * q <= max_dim; ++q)
      add(Symbol::AIII, p, q);
  for (int n = 3; n * (n - 1) / 2 <= max_dim; ++n)
    if (n != 4)
      add(Symbol::BD, n, 0);
  for (int p = 1; p * p <= max_dim; ++p)
    for (int q = p; p * q <= max_dim; ++q)
      if (!(p == 1 && q == 1) && !(p == 2 && q == 2))
        add(Symbol::BDI, p, q);
  for (int n = 1; n * (2 * n + 1) <= max_dim; ++n)
    add(Symbol::C, n, 0);
  for (int n = 1; n * (n + 1) <= max_dim; ++n)
    add(Symbol::CI, n, 0);
  for (int p = 1; 4 * p * p <= max_dim; ++p)
    for (int q = p; 4 * p * q <= max_dim; ++q)
      add(Symbol::CII, p, q);
  for (int n = 2; n * (n - 1) <= max_dim; ++n)
    add(Symbol::DIII, n, 0);
  for (const ExceptionalRow& r : exceptional_rows())
    if (r.dim <= max_dim)
      add(r.symbol, 0, 0);
  return out;
}

/// Canonical irreducible instances with dim <= max_dim, sorted.
inline std::vector<SpaceInstance> enumerate_catalog(int max_dim) {
  if (max_dim < 1)
    fail("enumerate_catalog: max_dim must be >= 1");
  std::set<SpaceInstance> seen;
  for (const SpaceInstance& x : enumerate_presentations(max_dim))
    seen.insert(canonical(x));
  return {seen.begin(), seen.end()};
}

inline std::vector<SpaceInstance> isomorphism_class(const SpaceInstance& x) {
  const SpaceInstance c = canonical(x);
  std::vector<SpaceInstance> out{c};
  for (const SpaceInstance& y : enumerate_presentations(c.dim()))
    if (y.dim() == c.dim() && !(y == c) && canonical(y) == c)
      out.push_back(y);
  return out;
}

} // namespace symcart

#endif
