// Restricted root systems and the threshold k_P.
//
// k_P = r + max_j sum over positive roots a with c_j(a) = 0 of mult(a),
// where c_j are the coefficients over the simple roots. Two routes:
// counting the positive roots, and the per-type closed forms.
//
// Simple roots are numbered 1..r in Bourbaki order. Classical systems are
// listed explicitly from the e_i basis; exceptional ones are closed up
// from their Gram matrix.

#ifndef SYMCART_ROOTSYS_HPP_
#define SYMCART_ROOTSYS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "util.hpp"

namespace symcart {

enum class Family { A, B, C, D, BC, E6, E7, E8, F4, G2 };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

class RootSystemType {
public:
  RootSystemType(Family f, int rank) : family_(f), rank_(rank) {
    switch (f) {
      case Family::A:
      case Family::BC:
        if (rank < 1)
          fail(family_name(f), " needs rank >= 1, got ", rank);
        break;
      case Family::B:
      case Family::C:
        if (rank < 2)
          fail(family_name(f), " needs rank >= 2, got ", rank);
        break;
      case Family::D:
        // D2 is reducible and D3 is A3
        if (rank < 4)
          fail("D needs rank >= 4, got ", rank);
        break;
      case Family::E6: check_fixed(6); break;
      case Family::E7: check_fixed(7); break;
      case Family::E8: check_fixed(8); break;
      case Family::F4: check_fixed(4); break;
      case Family::G2: check_fixed(2); break;
    }
  }
  /// Exceptional types, rank implied.
  explicit RootSystemType(Family f) : RootSystemType(f, fixed_rank(f)) {}

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool simply_laced() const {
    switch (family_) {
      case Family::A: case Family::D: case Family::E6: case Family::E7: case Family::E8:
        return true;
      default:
        return false;
    }
  }
  bool exceptional() const {
    return family_ >= Family::E6;
  }
  bool has_short() const { return !simply_laced(); }
  // BC1 has only e_1 and 2e_1
  bool has_long() const { return !(family_ == Family::BC && rank_ == 1); }
  bool has_extra_long() const { return family_ == Family::BC; }

  std::string name() const {
    if (exceptional())
      return family_name(family_);
    return family_name(family_) + std::to_string(rank_);
  }

  bool operator==(const RootSystemType&) const = default;
  auto operator<=>(const RootSystemType&) const = default;

private:
  Family family_;
  int rank_;

  static int fixed_rank(Family f) {
    switch (f) {
      case Family::E6: return 6;
      case Family::E7: return 7;
      case Family::E8: return 8;
      case Family::F4: return 4;
      case Family::G2: return 2;
      default: fail(family_name(f), " needs an explicit rank");
    }
  }
  void check_fixed(int r) const {
    if (rank_ != r)
      fail(family_name(family_), " has rank ", r, ", got ", rank_);
  }
};

enum class LengthClass { Short, Long, ExtraLong };

inline const char* length_name(LengthClass c) {
  switch (c) {
    case LengthClass::Short: return "short";
    case LengthClass::Long: return "long";
    case LengthClass::ExtraLong: return "extra-long";
  }
  return "?";
}

struct PositiveRoot {
  std::vector<int> coeffs;  // over alpha_1..alpha_r
  LengthClass length = LengthClass::Long;

  int height() const {
    int h = 0;
    for (int c : coeffs)
      h += c;
    return h;
  }
  bool operator==(const PositiveRoot&) const = default;
  auto operator<=>(const PositiveRoot&) const = default;
};

/// Simply-laced multiplicity lives in m_l.
struct Multiplicities {
  int m_s = 0, m_l = 0, m_xl = 0;
  bool operator==(const Multiplicities&) const = default;
};

inline void check_multiplicities(const RootSystemType& t, const Multiplicities& m) {
  if (m.m_s < 0 || m.m_l < 0 || m.m_xl < 0)
    fail("negative multiplicity for ", t.name());
  if (t.has_long() != (m.m_l >= 1))
    fail(t.name(), t.has_long() ? " needs m_l >= 1" : " has no long roots, m_l must be 0");
  if (t.has_short() != (m.m_s >= 1))
    fail(t.name(), t.has_short() ? " needs m_s >= 1" : " has no short roots, m_s must be 0");
  if (t.has_extra_long() != (m.m_xl >= 1))
    fail(t.name(), t.has_extra_long() ? " needs m_xl >= 1"
                                      : " has no extra-long roots, m_xl must be 0");
}

namespace impl {

// sum_{l=from}^{to} alpha_l with the given weight; 1-based, inclusive
inline void add_range(std::vector<int>& c, int from, int to, int weight) {
  for (int l = from; l <= to; ++l)
    c[l - 1] += weight;
}

inline std::vector<PositiveRoot> classical_roots(const RootSystemType& t) {
  const int r = t.rank();
  std::vector<PositiveRoot> out;
  auto push = [&](std::vector<int> c, LengthClass lc) {
    out.push_back({std::move(c), lc});
  };
  const std::vector<int> zero(r, 0);
  switch (t.family()) {
    case Family::A:
      // e_i - e_j, 1 <= i < j <= r+1
      for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r + 1; ++j) {
          auto c = zero;
          add_range(c, i, j - 1, 1);
          push(c, LengthClass::Long);
        }
      break;
    case Family::B:
    case Family::BC:
      for (int j = 1; j <= r; ++j) {
        auto c = zero;
        add_range(c, j, r, 1);  // e_j
        push(c, LengthClass::Short);
        if (t.family() == Family::BC) {
          add_range(c, j, r, 1);  // 2e_j
          push(c, LengthClass::ExtraLong);
        }
      }
      for (int j = 1; j <= r; ++j)
        for (int k = j + 1; k <= r; ++k) {
          auto c = zero;
          add_range(c, j, k - 1, 1);  // e_j - e_k
          push(c, LengthClass::Long);
          add_range(c, k, r, 2);      // e_j + e_k
          push(c, LengthClass::Long);
        }
      break;
    case Family::C:
      for (int j = 1; j <= r; ++j) {
        auto c = zero;
        add_range(c, j, r - 1, 2);  // 2e_j
        c[r - 1] += 1;
        push(c, LengthClass::Long);
      }
      for (int j = 1; j <= r; ++j)
        for (int k = j + 1; k <= r; ++k) {
          auto c = zero;
          add_range(c, j, k - 1, 1);  // e_j - e_k
          push(c, LengthClass::Short);
          add_range(c, k, r - 1, 2);  // e_j + e_k
          c[r - 1] += 1;
          push(c, LengthClass::Short);
        }
      break;
    case Family::D:
      // alpha_r = e_{r-1} + e_r
      for (int j = 1; j <= r; ++j)
        for (int k = j + 1; k <= r; ++k) {
          auto c = zero;
          add_range(c, j, k - 1, 1);  // e_j - e_k
          push(c, LengthClass::Long);
          c = zero;                   // e_j + e_k
          add_range(c, j, r - 2, 1);
          add_range(c, k, r - 1, 1);
          c[r - 1] += 1;
          push(c, LengthClass::Long);
        }
      break;
    default:
      fail("classical_roots: ", t.name(), " is exceptional");
  }
  return out;
}

// Bourbaki E-diagram: chain 1-3-4-5-6-7-8 with 2 attached to 4.
inline std::vector<std::vector<int>> e_gram(int r) {
  std::vector<std::vector<int>> g(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    g[i][i] = 2;
  auto edge = [&](int a, int b) {
    if (a <= r && b <= r)
      g[a - 1][b - 1] = g[b - 1][a - 1] = -1;
  };
  edge(1, 3);
  edge(2, 4);
  for (int i = 3; i < 8; ++i)
    edge(i, i + 1);
  return g;
}

} // namespace impl

/// Gram matrix of the simple roots, scaled to integers. Reduced types only.
inline std::vector<std::vector<int>> gram_matrix(const RootSystemType& t) {
  const int r = t.rank();
  switch (t.family()) {
    case Family::E6: case Family::E7: case Family::E8:
      return impl::e_gram(r);
    case Family::F4:
      return {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case Family::G2:
      return {{2, -3}, {-3, 6}};
    case Family::BC:
      fail("gram_matrix: BC is not reduced");
    default:
      break;
  }
  // classical: simple roots as vectors in the e-basis
  const int dim = t.family() == Family::A ? r + 1 : r;
  std::vector<std::vector<int>> simple(r, std::vector<int>(dim, 0));
  for (int l = 0; l < r; ++l) {
    if (l + 1 < dim) {
      simple[l][l] = 1;
      simple[l][l + 1] = -1;
    }
  }
  if (t.family() == Family::B) {
    simple[r - 1].assign(dim, 0);
    simple[r - 1][r - 1] = 1;
  } else if (t.family() == Family::C) {
    simple[r - 1].assign(dim, 0);
    simple[r - 1][r - 1] = 2;
  } else if (t.family() == Family::D) {
    simple[r - 1].assign(dim, 0);
    simple[r - 1][r - 2] = 1;
    simple[r - 1][r - 1] = 1;
  }
  std::vector<std::vector<int>> g(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < dim; ++k)
        g[i][j] += simple[i][k] * simple[j][k];
  return g;
}

/// Positive roots of a reduced system generated from its Gram matrix by
/// alpha-strings: beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0,
/// where p is the largest integer with beta - p alpha_i a root.
inline std::vector<PositiveRoot> closure_roots(const std::vector<std::vector<int>>& gram,
                                               bool simply_laced) {
  const int r = static_cast<int>(gram.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer, all;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    layer.push_back(c);
    seen.insert(c);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (int i = 0; i < r; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        for (;;) {
          if (down[i] == 0)
            break;
          --down[i];
          if (!seen.count(down))
            break;
          ++p;
        }
        int ip = 0;
        for (int j = 0; j < r; ++j)
          ip += beta[j] * gram[j][i];
        const int pairing = 2 * ip / gram[i][i];
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (seen.insert(up).second)
            next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  auto norm = [&](const std::vector<int>& c) {
    int n = 0;
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        n += c[j] * c[k] * gram[j][k];
    return n;
  };
  int max_norm = 0;
  for (const auto& c : all)
    max_norm = std::max(max_norm, norm(c));
  std::vector<PositiveRoot> out;
  for (const auto& c : all)
    out.push_back({c, simply_laced || norm(c) == max_norm ? LengthClass::Long
                                                          : LengthClass::Short});
  return out;
}

inline int expected_root_count(const RootSystemType& t) {
  const int r = t.rank();
  switch (t.family()) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B: case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::BC: return r * r + r;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
  }
  return 0;
}

/// Positive roots, sorted by height then coefficients. Memoized per type.
inline const std::vector<PositiveRoot>& positive_roots(const RootSystemType& t) {
  static std::mutex mu;
  static std::map<RootSystemType, std::vector<PositiveRoot>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end())
    return it->second;
  std::vector<PositiveRoot> roots = t.exceptional()
      ? closure_roots(gram_matrix(t), t.simply_laced())
      : impl::classical_roots(t);
  if (static_cast<int>(roots.size()) != expected_root_count(t))
    fail("internal: ", t.name(), " produced ", roots.size(), " positive roots, expected ",
         expected_root_count(t));
  std::sort(roots.begin(), roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    if (a.height() != b.height())
      return a.height() < b.height();
    return a < b;
  });
  return cache.emplace(t, std::move(roots)).first->second;
}

struct ClassCounts {
  int n_s = 0, n_l = 0, n_xl = 0;
  int weighted(const Multiplicities& m) const {
    return m.m_s * n_s + m.m_l * n_l + m.m_xl * n_xl;
  }
  bool operator==(const ClassCounts&) const = default;
};

/// Positive roots vanishing on xi_j, i.e. with c_j = 0, per length class.
inline ClassCounts zero_coeff_counts(const RootSystemType& t, int j) {
  if (j < 1 || j > t.rank())
    fail("simple-root index ", j, " out of range 1..", t.rank(), " for ", t.name());
  ClassCounts n;
  for (const PositiveRoot& a : positive_roots(t)) {
    if (a.coeffs[j - 1] != 0)
      continue;
    switch (a.length) {
      case LengthClass::Short: ++n.n_s; break;
      case LengthClass::Long: ++n.n_l; break;
      case LengthClass::ExtraLong: ++n.n_xl; break;
    }
  }
  return n;
}

struct KpEnumeration {
  int kp = 0;
  int maximizer = 1;  // smallest j attaining the maximum
};

inline KpEnumeration kp_enumerated(const RootSystemType& t, const Multiplicities& m) {
  check_multiplicities(t, m);
  KpEnumeration res;
  int best = -1;
  for (int j = 1; j <= t.rank(); ++j) {
    int w = zero_coeff_counts(t, j).weighted(m);
    if (w > best) {
      best = w;
      res.maximizer = j;
    }
  }
  res.kp = t.rank() + best;
  return res;
}

/// Per-j class counts printed for the low-rank B, C and BC systems.
inline std::vector<ClassCounts> small_rank_table(const RootSystemType& t) {
  const int r = t.rank();
  switch (t.family()) {
    case Family::B:
      if (r == 2) return {{1, 0, 0}, {0, 1, 0}};
      if (r == 3) return {{2, 2, 0}, {1, 1, 0}, {0, 3, 0}};
      break;
    case Family::C:
      if (r == 2) return {{0, 1, 0}, {1, 0, 0}};  // B2 read right to left
      if (r == 3) return {{2, 2, 0}, {1, 1, 0}, {3, 0, 0}};
      break;
    case Family::BC:
      if (r == 1) return {{0, 0, 0}};
      if (r == 2) return {{1, 0, 1}, {0, 1, 0}};
      if (r == 3) return {{2, 2, 2}, {1, 1, 1}, {0, 3, 0}};
      break;
    default:
      break;
  }
  return {};
}

struct KpClosedForm {
  enum class Route { Formula, SmallRankTable, Fallback };
  int kp = 0;
  Route route = Route::Formula;
};

inline const char* route_name(KpClosedForm::Route r) {
  switch (r) {
    case KpClosedForm::Route::Formula: return "formula";
    case KpClosedForm::Route::SmallRankTable: return "small-rank table";
    case KpClosedForm::Route::Fallback: return "fallback to enumeration";
  }
  return "?";
}

inline KpClosedForm kp_closed_form(const RootSystemType& t, const Multiplicities& m) {
  check_multiplicities(t, m);
  using Route = KpClosedForm::Route;
  const int r = t.rank();
  const int ms = m.m_s, ml = m.m_l, mxl = m.m_xl;
  switch (t.family()) {
    case Family::A: return {r + r * (r - 1) * ml / 2, Route::Formula};
    case Family::D: return {r + ml * (r - 1) * (r - 2), Route::Formula};
    case Family::E6: return {r + ml * 20, Route::Formula};
    case Family::E7: return {r + ml * 36, Route::Formula};
    case Family::E8: return {r + ml * 63, Route::Formula};
    case Family::G2: return {2 + std::max(ms, ml), Route::Formula};
    case Family::F4:
      if (ml == 1)
        return {7 + 6 * ms, Route::Formula};
      return {kp_enumerated(t, m).kp, Route::Fallback};
    case Family::B:
    case Family::C:
    case Family::BC:
      if (r < 4) {
        int best = 0;
        for (const ClassCounts& n : small_rank_table(t))
          best = std::max(best, n.weighted(m));
        return {r + best, Route::SmallRankTable};
      }
      if (t.family() == Family::B)
        return {r + ms * (r - 1) + ml * (r - 1) * (r - 2), Route::Formula};
      if (t.family() == Family::C)
        return {r + ms * (r - 1) * (r - 2) + ml * (r - 1), Route::Formula};
      return {r + (ms + mxl) * (r - 1) + ml * (r - 1) * (r - 2), Route::Formula};
  }
  return {kp_enumerated(t, m).kp, Route::Fallback};
}

} // namespace symcart

#endif
