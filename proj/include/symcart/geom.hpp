// Arithmetic gates for totally geodesic submanifolds of low codimension:
// connectivity of the inclusion, the shape-operator trace bound, the item
// classification of allowed submanifold types, and the meridian-codimension
// obstruction for Grassmannians.

#ifndef SYMCART_GEOM_HPP_
#define SYMCART_GEOM_HPP_

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "util.hpp"

namespace symcart {

/// (2l - k_P - dim + 2)-connected inclusion of an l-dimensional submanifold.
inline int connectivity(const SpaceInstance& ambient, int l) {
  if (l < 1 || l >= ambient.dim())
    fail("connectivity: need 1 <= l < ", ambient.dim(), ", got l = ", l);
  return 2 * l - ambient.k_P() - ambient.dim() + 2;
}

/// sqrt(lambda) k cot(pi/2 - sqrt(lambda) r) with lambda = delta / k.
/// cot(pi/2 - x) is evaluated as tan(x) so that r = 0 gives exactly 0.
inline double trace_bound(double delta, int k, double r) {
  if (!(delta > 0))
    fail("trace_bound: delta must be positive, got ", delta);
  if (k < 1)
    fail("trace_bound: k must be positive, got ", k);
  if (!(r >= 0))
    fail("trace_bound: focal radius must be >= 0, got ", r);
  double s = std::sqrt(delta / k);
  double x = s * r;
  if (!(x < std::numbers::pi / 2))
    fail("trace_bound: sqrt(delta/k) r = ", x, " is not below pi/2");
  return s * k * std::tan(x);
}

struct HypothesisSet {
  double delta = 1;    // Ric_{k_P} >= delta
  double focal_r = 0;  // focal radius of Q exceeds this
  int codim = 1;
};

struct GateVerdict {
  enum class Item { Item1, Item2, Item3, Item4, NotApplicable };
  Item item = Item::NotApplicable;
  std::string reason;          // NotApplicable only
  std::string cartan_type;     // Cartan type allowed for the non-sphere factor
  std::string description;
  std::vector<std::string> assumptions;  // symbolic, never checked here
  std::optional<double> trace;           // shape-operator trace bound, when in domain
  int connectivity = 0;

  static std::string item_name(Item i) {
    switch (i) {
      case Item::Item1: return "Item1";
      case Item::Item2: return "Item2";
      case Item::Item3: return "Item3";
      case Item::Item4: return "Item4";
      case Item::NotApplicable: break;
    }
    return "NotApplicable";
  }
  std::string name() const { return item_name(item); }
  bool applicable() const { return item != Item::NotApplicable; }
};

inline constexpr const char* kSphereClause = "sphere factors of dimension at least 10";

inline GateVerdict theorem_a_gate(const SpaceInstance& ambient_in, const HypothesisSet& h) {
  GateVerdict v;
  auto na = [&](std::string why) {
    v.item = GateVerdict::Item::NotApplicable;
    v.reason = std::move(why);
    return v;
  };
  SpaceInstance p = canonical(ambient_in);
  if (!p.classical())
    return na("the gate covers classical ambients only; " + p.name() + " is exceptional");
  if (!p.valid())
    return na(cat(p.name(), " has no valid dimension (d_P = ", p.d_P(), " < 10)"));
  if (h.codim < 1)
    return na(cat("codim ", h.codim, " is not a proper submanifold"));
  if (Rational(h.codim) > p.C_P())
    return na(cat("codim ", h.codim, " exceeds C_P = ", format_rational(p.C_P())));
  if (!(h.delta > 0))
    return na(cat("delta = ", h.delta, " is not positive"));
  if (!(h.focal_r >= 0 && h.focal_r < std::numbers::pi / 2))
    return na(cat("focal radius ", h.focal_r, " outside [0, pi/2)"));

  v.connectivity = connectivity(p, p.dim() - h.codim);
  if (std::sqrt(h.delta / p.k_P()) * h.focal_r < std::numbers::pi / 2)
    v.trace = trace_bound(h.delta, p.k_P(), h.focal_r);
  v.assumptions = {cat("Ric_", p.k_P(), " >= ", h.delta),
                   cat("foc_Q > ", h.focal_r), "Q totally geodesic, simply connected"};

  if (p.is_sphere()) {
    v.item = GateVerdict::Item::Item1;
    v.cartan_type = "S";
    v.description = cat("Q is a sphere or a product of ", kSphereClause);
  } else if ((p.symbol() == Symbol::BDI && p.p() == 2 && p.q() >= 10) ||
             (p.is_cp() && p.q() >= 11)) {
    v.item = GateVerdict::Item::Item2;
    v.cartan_type = p.cartan_type();
    v.description = cat("Q has the Cartan type of CP^n or Gr(R,2,q) (undecided between the two), "
                        "possibly times ", kSphereClause);
  } else if (p.is_grassmannian()) {
    v.item = GateVerdict::Item::Item3;
    v.cartan_type = p.cartan_type();
    v.description = cat("Q has Cartan type ", p.cartan_type(), ", possibly times ", kSphereClause);
  } else {
    v.item = GateVerdict::Item::Item4;
    v.cartan_type = p.cartan_type();
    v.description = cat("Q is reducible: Q_1 x ", kSphereClause, ", Q_1 of Cartan type ",
                        p.cartan_type());
  }
  return v;
}

// ---------------------------------------------------------------------------
// Grassmannian meridians

enum class Field { R, C, H };

inline int field_dim(Field f) { return f == Field::R ? 1 : f == Field::C ? 2 : 4; }
inline const char* field_letter(Field f) { return f == Field::R ? "R" : f == Field::C ? "C" : "H"; }

inline Field parse_field(const std::string& s) {
  if (s == "R")
    return Field::R;
  if (s == "C")
    return Field::C;
  if (s == "H")
    return Field::H;
  fail("field must be R, C or H, got '", s, "'");
}

/// Gr(field, p, n) as a catalog instance, n = p + q.
inline SpaceInstance grassmannian(Field f, int p, int q) {
  Symbol s = f == Field::R ? Symbol::BDI : f == Field::C ? Symbol::AIII : Symbol::CII;
  return instantiate(s, p, q);
}

/// Codimension of the meridian Gr(a, n-2b) x Gr(b, 2b) in Gr(p, p+q).
inline int meridian_codim(Field f, int p, int q, int a, int b) {
  if (a + b != p || a < 0 || a >= p || p > q || p < 1)
    fail("meridian_codim: need a + b = p, 0 <= a < p, 1 <= p <= q; got p = ", p, ", q = ", q,
         ", a = ", a, ", b = ", b);
  int c = field_dim(f), n = p + q;
  return c * p * q - (c * a * (n - 2 * b - a) + c * b * b);
}

struct MeridianMin {
  int codim = 0;
  int a = 0;  // minimizing a (smallest on ties), b = p - a
};

inline MeridianMin min_meridian_codim(Field f, int p, int q) {
  MeridianMin m{meridian_codim(f, p, q, 0, p), 0};
  for (int a = 1; a < p; ++a) {
    int c = meridian_codim(f, p, q, a, p - a);
    if (c < m.codim)
      m = {c, a};
  }
  return m;
}

struct TheoremBVerdict {
  bool applicable = false;
  std::string reason;
  SpaceInstance ambient = sphere(2);
  Rational C_P{0};
  std::optional<MeridianMin> meridian;  // set whenever 3 <= p < n/2
  bool obstruction = false;             // min meridian codim > C_P
  bool analogy_derived = false;         // real case: formula carried over with c = 1
};

inline TheoremBVerdict theorem_b_check(Field f, int p, int n, int codim, int index_lower_bound) {
  TheoremBVerdict v;
  if (p < 3 || 2 * p >= n) {
    v.reason = cat("precondition 3 <= p < n/2 fails for p = ", p, ", n = ", n);
    return v;
  }
  v.ambient = grassmannian(f, p, n - p);
  v.C_P = v.ambient.C_P();
  v.meridian = min_meridian_codim(f, p, n - p);
  v.obstruction = Rational(v.meridian->codim) > v.C_P;
  v.analogy_derived = f == Field::R;
  if (index_lower_bound > codim)
    v.reason = cat("codim ", codim, " is below the index lower bound ", index_lower_bound);
  else if (Rational(codim) > v.C_P)
    v.reason = cat("codim ", codim, " exceeds C_P = ", format_rational(v.C_P));
  else
    v.applicable = true;
  return v;
}

} // namespace symcart

#endif
