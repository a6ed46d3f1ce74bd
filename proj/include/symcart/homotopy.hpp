// Homotopy groups pi_1..pi_10 of catalog spaces, read from line-oriented
// data files:
//
//   pattern | guard | k=<group>; k=<group>; ...
//
// pattern is a space term whose arguments may be variables (n, p, q);
// guard is a comma-separated conjunction of linear comparisons over the
// pattern variables and the degree k. '#' starts a comment.
//
// Lookup order for pi_k(X): canonical representative of X, then the sphere
// rows, then explicit (unstable, exceptional, Grassmannian, derived) rows,
// then the stable rows; otherwise the cell is not covered.

#ifndef SYMCART_HOMOTOPY_HPP_
#define SYMCART_HOMOTOPY_HPP_

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "catalog.hpp"
#include "spacespec.hpp"
#include "util.hpp"

#ifndef SYMCART_DATA_DIR
#define SYMCART_DATA_DIR "data"
#endif

namespace symcart {

constexpr int kMaxDegree = 10;

enum class Tier { Sphere = 0, Explicit = 1, Stable = 2 };

inline const char* tier_name(Tier t) {
  switch (t) {
    case Tier::Sphere: return "sphere";
    case Tier::Explicit: return "explicit";
    case Tier::Stable: return "stable";
  }
  return "?";
}

/// Linear form c + sum coeff[v] * v over single-letter variables.
struct LinearForm {
  int constant = 0;
  std::map<char, int> coeff;

  std::optional<int> eval(const std::map<char, int>& env) const {
    long long v = constant;
    for (auto [var, c] : coeff) {
      auto it = env.find(var);
      if (it == env.end())
        return std::nullopt;
      v += static_cast<long long>(c) * it->second;
    }
    return static_cast<int>(v);
  }
  bool mentions(char var) const { return coeff.count(var) != 0; }
};

struct Comparison {
  LinearForm lhs, rhs;
  std::string op;  // "<", "<=", ">", ">=", "="

  /// nullopt if some variable is unbound.
  std::optional<bool> holds(const std::map<char, int>& env) const {
    auto a = lhs.eval(env), b = rhs.eval(env);
    if (!a || !b)
      return std::nullopt;
    if (op == "<") return *a < *b;
    if (op == "<=") return *a <= *b;
    if (op == ">") return *a > *b;
    if (op == ">=") return *a >= *b;
    return *a == *b;
  }
};

/// One pattern slot: fixed integer or variable.
struct Slot {
  std::optional<int> value;
  char var = 0;
  bool used = false;
};

struct Pattern {
  Symbol symbol = Symbol::Sphere;
  Slot a, b;
  std::string text;

  /// Bind variables against a presentation (raw parameters).
  std::optional<std::map<char, int>> match(const SpaceInstance& x) const {
    if (x.symbol() != symbol)
      return std::nullopt;
    std::map<char, int> env;
    auto bind = [&](const Slot& s, int v) {
      if (!s.used)
        return true;
      if (s.value)
        return *s.value == v;
      auto [it, fresh] = env.emplace(s.var, v);
      return fresh || it->second == v;
    };
    if (!bind(a, x.p()) || !bind(b, x.q()))
      return std::nullopt;
    return env;
  }
};

struct HomotopyRecord {
  Pattern pattern;
  std::vector<Comparison> guard;
  std::string guard_text;
  std::map<int, PartialAbelianGroup> groups;
  std::string source;  // file stem
  int line = 0;
  Tier tier = Tier::Explicit;

  std::string label() const {
    return cat(source, ":", line, " ", pattern.text,
               guard_text.empty() ? "" : " [" + guard_text + "]");
  }

  /// Value at degree k for x, or nullopt when the record does not apply.
  /// Stable rows extend to k >= 10 by mod-8 periodicity inside the guard.
  std::optional<PartialAbelianGroup> value_at(const SpaceInstance& x, int k) const {
    auto env = pattern.match(x);
    if (!env)
      return std::nullopt;
    (*env)['k'] = k;
    for (const Comparison& c : guard) {
      auto h = c.holds(*env);
      if (!h)
        fail(label(), ": guard uses an unbound variable");
      if (!*h)
        return std::nullopt;
    }
    if (auto it = groups.find(k); it != groups.end())
      return it->second;
    if (tier == Tier::Stable && k >= 10) {
      int r = 2 + (k - 2) % 8;
      if (auto it = groups.find(r); it != groups.end())
        return it->second;
    }
    return std::nullopt;
  }
};

/// A resolved table cell.
struct HomotopyCell {
  PartialAbelianGroup group;  // Unknown when not covered
  const HomotopyRecord* record = nullptr;

  bool covered() const { return record != nullptr; }
  std::string source() const { return record ? record->label() : "not covered"; }
};

namespace impl {

class RecordParser {
public:
  RecordParser(std::string source, Tier tier) : source_(std::move(source)), tier_(tier) {}

  std::optional<HomotopyRecord> line(const std::string& raw, int lineno) {
    line_ = lineno;
    std::string text = raw.substr(0, raw.find('#'));
    if (text.find_first_not_of(" \t\r") == std::string::npos)
      return std::nullopt;
    std::vector<std::string> parts;
    std::size_t start = 0, bar;
    while ((bar = text.find('|', start)) != std::string::npos) {
      parts.push_back(text.substr(start, bar - start));
      start = bar + 1;
    }
    parts.push_back(text.substr(start));
    if (parts.size() != 3)
      error("expected 'pattern | guard | groups'");

    HomotopyRecord r;
    r.source = source_;
    r.line = lineno;
    r.tier = tier_;
    r.pattern = pattern(trim(parts[0]));
    r.guard_text = trim(parts[1]);
    if (!r.guard_text.empty())
      for (const std::string& c : split(r.guard_text, ','))
        r.guard.push_back(comparison(trim(c)));
    for (const std::string& cell : split(parts[2], ';')) {
      std::string c = trim(cell);
      if (c.empty())
        continue;
      auto eq = c.find('=');
      if (eq == std::string::npos)
        error(cat("cell '", c, "' lacks '='"));
      auto deg = to_int(trim(c.substr(0, eq)));
      if (!deg || *deg < 1 || *deg > kMaxDegree)
        error(cat("bad degree in '", c, "'"));
      if (r.groups.count(*deg))
        error(cat("degree ", *deg, " given twice"));
      try {
        r.groups[*deg] = parse_group(trim(c.substr(eq + 1)));
      } catch (const Error& e) {
        error(cat("degree ", *deg, ": ", e.what()));
      }
    }
    return r;
  }

private:
  std::string source_;
  Tier tier_;
  int line_ = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(source_, ":", line_, ": ", msg);
  }

  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }
  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
      out.push_back(item);
    return out;
  }

  Slot slot(const std::string& s) {
    Slot out;
    out.used = true;
    if (auto v = to_int(s))
      out.value = *v;
    else if (s.size() == 1 && std::islower(static_cast<unsigned char>(s[0])) && s != "k")
      out.var = s[0];
    else
      error(cat("pattern argument '", s, "' is neither an integer nor a variable"));
    return out;
  }

  Pattern pattern(const std::string& text) {
    SpaceTerm t;
    try {
      TermLexer lx(text);
      t = lx.term();
      if (!lx.at_end())
        error("trailing text after pattern");
    } catch (const ParseError& e) {
      error(e.what());
    }
    auto info = head_info(t.head);
    if (!info)
      error(cat("unknown pattern head '", t.head, "'"));
    if (static_cast<int>(t.args.size()) != info->arity)
      error(cat(t.head, " expects ", info->arity, " argument(s)"));
    Pattern p;
    p.symbol = info->symbol;
    p.text = text;
    if (info->fixed_p) {
      p.a = Slot{info->fixed_p, 0, true};
      p.b = slot(t.args[0]);
    } else {
      if (info->arity >= 1)
        p.a = slot(t.args[0]);
      if (info->arity == 2)
        p.b = slot(t.args[1]);
    }
    return p;
  }

  LinearForm form(const std::string& s) {
    LinearForm f;
    std::size_t i = 0;
    if (s.empty())
      error("empty expression in guard");
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        error(cat("bad expression '", s, "'"));
      }
      int num = 1;
      bool have_num = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        num = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          num = num * 10 + (s[i++] - '0');
        have_num = true;
      }
      if (i < s.size() && s[i] == '*')
        ++i;
      if (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
        f.coeff[s[i]] += sign * num;
        ++i;
      } else if (have_num) {
        f.constant += sign * num;
      } else {
        error(cat("bad expression '", s, "'"));
      }
    }
    return f;
  }

  Comparison comparison(const std::string& c) {
    std::string s;
    for (char ch : c)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        s += ch;
    for (const char* op : {"<=", ">=", "<", ">", "="}) {
      auto at = s.find(op);
      if (at != std::string::npos) {
        std::string o = op;
        return {form(s.substr(0, at)), form(s.substr(at + o.size())), o};
      }
    }
    error(cat("guard '", c, "' has no comparison operator"));
  }
};

} // namespace impl

class HomotopyDb {
public:
  /// Parse one file's text; source is the file stem, which fixes the tier.
  void add_text(const std::string& source, const std::string& text) {
    Tier tier = source == "spheres" ? Tier::Sphere
              : source == "stable"  ? Tier::Stable
                                    : Tier::Explicit;
    impl::RecordParser parser(source, tier);
    std::istringstream in(text);
    std::string l;
    int n = 0;
    while (std::getline(in, l))
      if (auto r = parser.line(l, ++n))
        records_.push_back(std::move(*r));
    std::stable_sort(records_.begin(), records_.end(),
                     [](const HomotopyRecord& x, const HomotopyRecord& y) {
                       return x.tier < y.tier;
                     });
  }

  /// Every *.dat file in dir, in file-name order.
  static HomotopyDb load(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
      fail("data directory not found: ", dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".dat")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
      fail("no .dat files in ", dir.string());
    HomotopyDb db;
    for (const auto& f : files) {
      std::ifstream in(f);
      std::stringstream buf;
      buf << in.rdbuf();
      db.add_text(f.stem().string(), buf.str());
    }
    return db;
  }

  const std::vector<HomotopyRecord>& records() const { return records_; }

  /// Every record value for the presentation x as written (no rewriting).
  std::vector<HomotopyCell> raw_cells(const SpaceInstance& x, int k) const {
    std::vector<HomotopyCell> out;
    for (const HomotopyRecord& r : records_)
      if (auto g = r.value_at(x, k))
        out.push_back({*g, &r});
    return out;
  }

  /// First covering record for x as written, in tier order.
  HomotopyCell lookup_raw(const SpaceInstance& x, int k) const {
    for (const HomotopyRecord& r : records_)
      if (auto g = r.value_at(x, k))
        return {*g, &r};
    return {};
  }

  HomotopyCell pi(const SpaceInstance& x, int k) const {
    if (k < 1 || k > kMaxDegree)
      fail("degree ", k, " outside 1..", kMaxDegree);
    return lookup_raw(canonical(x), k);
  }

private:
  std::vector<HomotopyRecord> records_;
};

inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("SYMCART_DATA"))
    return env;
  return SYMCART_DATA_DIR;
}

/// Process-wide database from default_data_dir(), loaded on first use.
inline const HomotopyDb& default_db() {
  static const HomotopyDb db = HomotopyDb::load(default_data_dir());
  return db;
}

inline SpaceInstance resolve_isomorphism(const SpaceInstance& x) { return canonical(x); }

inline HomotopyCell pi(const SpaceInstance& x, int k, const HomotopyDb& db = default_db()) {
  return db.pi(x, k);
}

struct HomotopyProfile {
  ProductSpace space;
  std::vector<PartialAbelianGroup> groups;  // groups[k-1]
  std::vector<std::string> not_covered;     // "<factor> pi_<k>"

  int max_degree() const { return static_cast<int>(groups.size()); }
  const PartialAbelianGroup& at(int k) const { return groups.at(k - 1); }
};

inline HomotopyProfile profile(const ProductSpace& q, int max_degree,
                               const HomotopyDb& db = default_db()) {
  if (max_degree < 1 || max_degree > kMaxDegree)
    fail("max degree ", max_degree, " outside 1..", kMaxDegree);
  HomotopyProfile out{q, {}, {}};
  for (int k = 1; k <= max_degree; ++k) {
    PartialAbelianGroup g = AbelianGroup::trivial();
    for (const SpaceInstance& f : q.factors()) {
      HomotopyCell c = db.pi(f, k);
      if (!c.covered())
        out.not_covered.push_back(cat(f.name(), " pi_", k));
      g = direct_sum(g, c.group);
    }
    out.groups.push_back(g);
  }
  return out;
}

inline HomotopyProfile profile(const SpaceInstance& x, int max_degree,
                               const HomotopyDb& db = default_db()) {
  return profile(ProductSpace{x}, max_degree, db);
}

/// Two table cells for the same space and degree that cannot both hold.
struct TableConflict {
  std::string space;
  int degree;
  HomotopyCell a, b;
  CompatibilityWitness witness;
};

/// Cross-check every covering record across each isomorphism class of
/// presentations with dim <= max_dim.
inline std::vector<TableConflict> consistency_report(int max_dim,
                                                     const HomotopyDb& db = default_db()) {
  std::map<SpaceInstance, std::vector<SpaceInstance>> classes;
  for (const SpaceInstance& x : enumerate_presentations(max_dim))
    classes[canonical(x)].push_back(x);
  std::vector<TableConflict> out;
  for (const auto& [c, members] : classes)
    for (int k = 1; k <= kMaxDegree; ++k) {
      std::vector<HomotopyCell> cells;
      for (const SpaceInstance& m : members)
        for (HomotopyCell& cell : db.raw_cells(m, k))
          cells.push_back(cell);
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
          Compatibility r = compatible(cells[i].group, cells[j].group);
          if (r.incompatible())
            out.push_back({c.name(), k, cells[i], cells[j], r.witness});
        }
    }
  return out;
}

/// Instances (canonical, dim <= max_dim) with a degree <= max_degree that
/// no record covers.
inline std::vector<std::pair<SpaceInstance, int>>
coverage_gaps(int max_dim, int max_degree, const HomotopyDb& db = default_db()) {
  std::vector<std::pair<SpaceInstance, int>> out;
  for (const SpaceInstance& x : enumerate_catalog(max_dim))
    for (int k = 1; k <= max_degree; ++k)
      if (!db.pi(x, k).covered())
        out.push_back({x, k});
  return out;
}

} // namespace symcart

#endif
