// Printed closed forms for d_P, k_P, C_P and the connectivity number of
// the classical higher-rank spaces, one row per printed condition.
// Used by `symcart table --check` and the golden tests; the catalog never
// reads from here.

#ifndef SYMCART_TABLES_HPP_
#define SYMCART_TABLES_HPP_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"

namespace symcart {

struct ClassicalRow {
  std::string label;      // e.g. "AIII(2,q), q >= 4"
  std::string d_text, k_text, C_text, sharp_text;
  // parameter sweep within the row's condition, parameters <= limit
  std::function<std::vector<std::pair<int, int>>(int limit)> sweep;
  std::function<SpaceInstance(int, int)> make;
  std::function<int(int, int)> d, k;
  std::function<Rational(int, int)> C;
  std::function<int(int, int)> sharp0;  // connectivity at codim 0
};

namespace impl {

inline std::function<std::vector<std::pair<int, int>>(int)> fixed(int a, int b = 0) {
  return [=](int) { return std::vector<std::pair<int, int>>{{a, b}}; };
}
inline std::function<std::vector<std::pair<int, int>>(int)> from_n(int lo) {
  return [=](int limit) {
    std::vector<std::pair<int, int>> v;
    for (int n = lo; n <= limit; ++n)
      v.push_back({n, 0});
    return v;
  };
}
inline std::function<std::vector<std::pair<int, int>>(int)> fixed_p(int p, int qlo) {
  return [=](int limit) {
    std::vector<std::pair<int, int>> v;
    for (int q = qlo; q <= limit; ++q)
      v.push_back({p, q});
    return v;
  };
}
inline std::function<std::vector<std::pair<int, int>>(int)> p_le_q(int plo) {
  return [=](int limit) {
    std::vector<std::pair<int, int>> v;
    for (int p = plo; p <= limit; ++p)
      for (int q = p; q <= limit; ++q)
        v.push_back({p, q});
    return v;
  };
}
inline Rational R(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

} // namespace impl

inline const std::vector<ClassicalRow>& classical_rows() {
  using namespace impl;
  using S = Symbol;
  auto one = [](S s) { return [s](int a, int) { return instantiate(s, a); }; };
  auto two = [](S s) { return [s](int a, int b) { return instantiate(s, a, b); }; };
  static const std::vector<ClassicalRow> rows = {
    {"SU(n), n >= 3", "2(n-1)", "(n-1)^2", "n-5", "2n",
     from_n(3), one(S::A),
     [](int n, int) { return 2 * (n - 1); }, [](int n, int) { return (n - 1) * (n - 1); },
     [](int n, int) { return R(n - 5); }, [](int n, int) { return 2 * n; }},
    {"AI(n), n >= 2", "n-1", "n(n-1)/2", "(n-9)/2", "n+1",
     from_n(2), one(S::AI),
     [](int n, int) { return n - 1; }, [](int n, int) { return n * (n - 1) / 2; },
     [](int n, int) { return R(n - 9, 2); }, [](int n, int) { return n + 1; }},
    {"AII(n), n >= 2", "4(n-1)", "(2n-3)(n-1)", "2n-6", "4n-2",
     from_n(2), one(S::AII),
     [](int n, int) { return 4 * (n - 1); }, [](int n, int) { return (2 * n - 3) * (n - 1); },
     [](int n, int) { return R(2 * n - 6); }, [](int n, int) { return 4 * n - 2; }},
    {"AIII(2,2)", "4", "4", "-2", "6",
     fixed(2, 2), two(S::AIII),
     [](int, int) { return 4; }, [](int, int) { return 4; },
     [](int, int) { return R(-2); }, [](int, int) { return 6; }},
    {"AIII(2,3)", "7", "5", "-1/2", "9",
     fixed(2, 3), two(S::AIII),
     [](int, int) { return 7; }, [](int, int) { return 5; },
     [](int, int) { return R(-1, 2); }, [](int, int) { return 9; }},
    {"AIII(2,q), q >= 4", "2q+1", "2q-1", "q-7/2", "2q+3",
     fixed_p(2, 4), two(S::AIII),
     [](int, int q) { return 2 * q + 1; }, [](int, int q) { return 2 * q - 1; },
     [](int, int q) { return R(q) - R(7, 2); }, [](int, int q) { return 2 * q + 3; }},
    {"AIII(p,q), 3 <= p <= q", "2(p+q)-3", "2pq-2(p+q)+3", "p+q-11/2", "2(p+q)-1",
     p_le_q(3), two(S::AIII),
     [](int p, int q) { return 2 * (p + q) - 3; },
     [](int p, int q) { return 2 * p * q - 2 * (p + q) + 3; },
     [](int p, int q) { return R(p + q) - R(11, 2); },
     [](int p, int q) { return 2 * (p + q) - 1; }},
    {"Spin(2n+1), n >= 2", "4n-2", "n(2n-3)+2", "2n-5", "4n",
     from_n(2), [](int n, int) { return instantiate(S::BD, 2 * n + 1); },
     [](int n, int) { return 4 * n - 2; }, [](int n, int) { return n * (2 * n - 3) + 2; },
     [](int n, int) { return R(2 * n - 5); }, [](int n, int) { return 4 * n; }},
    {"Spin(2n), n >= 4", "4n-4", "n(2n-5)+4", "2n-6", "4n-2",
     from_n(4), [](int n, int) { return instantiate(S::BD, 2 * n); },
     [](int n, int) { return 4 * n - 4; }, [](int n, int) { return n * (2 * n - 5) + 4; },
     [](int n, int) { return R(2 * n - 6); }, [](int n, int) { return 4 * n - 2; }},
    {"BDI(2,q), q >= 3", "q", "q", "q/2-4", "q+2",
     fixed_p(2, 3), two(S::BDI),
     [](int, int q) { return q; }, [](int, int q) { return q; },
     [](int, int q) { return R(q, 2) - 4; }, [](int, int q) { return q + 2; }},
    {"BDI(3,3)", "3", "6", "-5/2", "5",
     fixed(3, 3), two(S::BDI),
     [](int, int) { return 3; }, [](int, int) { return 6; },
     [](int, int) { return R(-5, 2); }, [](int, int) { return 5; }},
    {"BDI(3,q), q >= 4", "q+1", "2q-1", "(q-7)/2", "q+3",
     fixed_p(3, 4), two(S::BDI),
     [](int, int q) { return q + 1; }, [](int, int q) { return 2 * q - 1; },
     [](int, int q) { return R(q - 7, 2); }, [](int, int q) { return q + 3; }},
    {"BDI(p,q), 4 <= p <= q", "p+q-2", "pq-p-q+2", "(p+q-10)/2", "p+q",
     p_le_q(4), two(S::BDI),
     [](int p, int q) { return p + q - 2; }, [](int p, int q) { return p * q - p - q + 2; },
     [](int p, int q) { return R(p + q - 10, 2); }, [](int p, int q) { return p + q; }},
    {"Sp(n), n >= 2", "4n-2", "n(2n-3)+2", "2n-5", "4n",
     from_n(2), one(S::C),
     [](int n, int) { return 4 * n - 2; }, [](int n, int) { return n * (2 * n - 3) + 2; },
     [](int n, int) { return R(2 * n - 5); }, [](int n, int) { return 4 * n; }},
    {"CI(n), n >= 2", "2n-1", "n(n-1)+1", "n-9/2", "2n+1",
     from_n(2), one(S::CI),
     [](int n, int) { return 2 * n - 1; }, [](int n, int) { return n * (n - 1) + 1; },
     [](int n, int) { return R(n) - R(9, 2); }, [](int n, int) { return 2 * n + 1; }},
    {"CII(2,2)", "10", "6", "1", "12",
     fixed(2, 2), two(S::CII),
     [](int, int) { return 10; }, [](int, int) { return 6; },
     [](int, int) { return R(1); }, [](int, int) { return 12; }},
    {"CII(2,q), q >= 3", "4q+3", "4q-3", "2q-5/2", "4q+5",
     fixed_p(2, 3), two(S::CII),
     [](int, int q) { return 4 * q + 3; }, [](int, int q) { return 4 * q - 3; },
     [](int, int q) { return R(2 * q) - R(5, 2); }, [](int, int q) { return 4 * q + 5; }},
    {"CII(p,q), 3 <= p <= q", "4(p+q)-5", "4pq-4p-4q+5", "2(p+q)-13/2", "4(p+q)-3",
     p_le_q(3), two(S::CII),
     [](int p, int q) { return 4 * (p + q) - 5; },
     [](int p, int q) { return 4 * p * q - 4 * p - 4 * q + 5; },
     [](int p, int q) { return R(2 * (p + q)) - R(13, 2); },
     [](int p, int q) { return 4 * (p + q) - 3; }},
    {"DIII(4)", "6", "6", "-1", "8",
     fixed(4), one(S::DIII),
     [](int, int) { return 6; }, [](int, int) { return 6; },
     [](int, int) { return R(-1); }, [](int, int) { return 8; }},
    {"DIII(5)", "13", "7", "5/2", "15",
     fixed(5), one(S::DIII),
     [](int, int) { return 13; }, [](int, int) { return 7; },
     [](int, int) { return R(5, 2); }, [](int, int) { return 15; }},
    {"DIII(6)", "15", "15", "7/2", "17",
     fixed(6), one(S::DIII),
     [](int, int) { return 15; }, [](int, int) { return 15; },
     [](int, int) { return R(7, 2); }, [](int, int) { return 17; }},
    {"DIII(7)", "21", "21", "13/2", "23",
     fixed(7), one(S::DIII),
     [](int, int) { return 21; }, [](int, int) { return 21; },
     [](int, int) { return R(13, 2); }, [](int, int) { return 23; }},
    {"DIII(n), n >= 8", "4n-7", "n(n-5)+7", "2n-15/2", "4n-5",
     from_n(8), one(S::DIII),
     [](int n, int) { return 4 * n - 7; }, [](int n, int) { return n * (n - 5) + 7; },
     [](int n, int) { return R(2 * n) - R(15, 2); }, [](int n, int) { return 4 * n - 5; }},
  };
  return rows;
}

struct TableMismatch {
  std::string row;
  std::string instance;
  std::string column;
  std::string printed;
  std::string computed;
};

/// Compare every classical row over its sweep (parameters <= limit).
inline std::vector<TableMismatch> check_classical_rows(int limit) {
  std::vector<TableMismatch> out;
  for (const ClassicalRow& row : classical_rows())
    for (auto [a, b] : row.sweep(limit)) {
      SpaceInstance x = row.make(a, b);
      auto cmp = [&](const char* col, const std::string& printed, const std::string& got) {
        if (printed != got)
          out.push_back({row.label, x.name(), col, printed, got});
      };
      cmp("d_P", std::to_string(row.d(a, b)), std::to_string(x.d_P()));
      cmp("k_P", std::to_string(row.k(a, b)), std::to_string(x.k_P()));
      cmp("C_P", format_rational(row.C(a, b)), format_rational(x.C_P()));
      cmp("sharp(0)", std::to_string(row.sharp0(a, b)), std::to_string(sharp(x, 0)));
    }
  return out;
}

/// Compare every exceptional row: enumeration against the printed numbers.
inline std::vector<TableMismatch> check_exceptional_rows() {
  std::vector<TableMismatch> out;
  for (const ExceptionalRow& row : exceptional_rows()) {
    SpaceInstance x = instantiate(row.symbol, 0);
    auto cmp = [&](const char* col, int printed, int got) {
      if (printed != got)
        out.push_back({cartan_symbol(row.symbol), x.name(), col, std::to_string(printed),
                       std::to_string(got)});
    };
    cmp("dim", row.dim, x.dim());
    cmp("d_P", row.d_P, x.d_P());
    cmp("k_P", row.k_P, kp_enumerated(*x.root_type(), x.multiplicities()).kp);
  }
  return out;
}

} // namespace symcart

#endif
