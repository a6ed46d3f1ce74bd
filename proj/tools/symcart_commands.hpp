// Command implementations behind the symcart executable. Each command
// returns its JSON document, its text rendering and an exit code; run_cli()
// does argument parsing and dispatch so the tests can drive it in-process.

#ifndef SYMCART_TOOLS_COMMANDS_HPP_
#define SYMCART_TOOLS_COMMANDS_HPP_

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcart/geom.hpp"
#include "symcart/homotopy.hpp"
#include "symcart/recognize.hpp"
#include "symcart/rootsys.hpp"
#include "symcart/spacespec.hpp"
#include "symcart/tables.hpp"

namespace symcart::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Output {
  json data;
  std::string text;
  int exit_code = 0;
};

struct Context {
  const HomotopyDb* db = nullptr;
  std::size_t max_candidates = DecomposeOptions{}.max_candidates;
};

namespace impl {

inline json header(const char* command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

inline std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

// plain column table: widths from content, two spaces between columns
inline std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i)
        w.push_back(0);
      w[i] = std::max(w[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i)
      line += i + 1 < r.size() ? pad(r[i], w[i] + 2) : r[i];
    os << line << "\n";
  }
  return os.str();
}

inline json interval(const RankInterval& r) {
  json j;
  j["lo"] = r.lo;
  j["hi"] = r.bounded() ? json(r.hi) : json(nullptr);
  return j;
}

inline json verdict_json(const Verdict& v) {
  json j;
  switch (v.kind) {
    case Verdict::Kind::Distinguishable: j["kind"] = "Distinguishable"; break;
    case Verdict::Kind::Indistinguishable: j["kind"] = "Indistinguishable"; break;
    case Verdict::Kind::Undetermined: j["kind"] = "Undetermined"; break;
  }
  j["degree"] = v.degree;
  if (v.kind == Verdict::Kind::Distinguishable)
    j["witness"] = {{"field", v.witness.field_name()},
                    {"left_rank", interval(v.witness.left)},
                    {"right_rank", interval(v.witness.right)}};
  j["blocking"] = v.blocking;
  j["summary"] = v.str();
  return j;
}

inline std::string mult_text(const Multiplicities& m) {
  return cat("m_s=", m.m_s, " m_l=", m.m_l, " m_xl=", m.m_xl);
}

inline json instance_json(const SpaceInstance& x) {
  json j;
  j["name"] = x.name();
  j["cartan_type"] = x.cartan_type();
  j["dim"] = x.dim();
  j["rank"] = x.rank();
  j["root_system"] = x.root_type() ? json(x.root_type()->name()) : json(nullptr);
  const Multiplicities& m = x.multiplicities();
  j["multiplicities"] = {{"m_s", m.m_s}, {"m_l", m.m_l}, {"m_xl", m.m_xl}};
  j["k_P"] = x.k_P();
  j["d_P"] = x.d_P();
  j["C_P"] = format_rational(x.C_P());
  j["valid"] = x.valid();
  j["sharp0"] = sharp(x, 0);
  return j;
}

inline json mismatch_json(const std::vector<TableMismatch>& ms) {
  json a = json::array();
  for (const TableMismatch& m : ms)
    a.push_back({{"row", m.row}, {"instance", m.instance}, {"column", m.column},
                 {"printed", m.printed}, {"computed", m.computed}});
  return a;
}

inline std::string mismatch_text(const std::vector<TableMismatch>& ms) {
  std::vector<std::vector<std::string>> rows{{"row", "instance", "column", "printed", "computed"}};
  for (const TableMismatch& m : ms)
    rows.push_back({m.row, m.instance, m.column, m.printed, m.computed});
  return render(rows);
}

inline std::optional<RootSystemType> parse_root_type(const std::string& s) {
  static const std::pair<const char*, Family> heads[] = {
    {"BC", Family::BC}, {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D}};
  static const std::pair<const char*, Family> fixed[] = {
    {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}, {"F4", Family::F4},
    {"G2", Family::G2}};
  for (const auto& [name, f] : fixed)
    if (s == name)
      return RootSystemType(f);
  for (const auto& [name, f] : heads) {
    std::string h(name);
    if (s.rfind(h, 0) == 0) {
      auto r = symcart::impl::to_int(s.substr(h.size()));
      if (!r)
        return std::nullopt;
      return RootSystemType(f, *r);
    }
  }
  return std::nullopt;
}

} // namespace impl

// ---------------------------------------------------------------------------

inline Output cmd_table(const std::string& kind, bool check, int limit = 30) {
  if (kind != "classical" && kind != "exceptional" && kind != "all")
    fail("table: kind must be classical, exceptional or all, got '", kind, "'");
  Output o{impl::header("table"), "", 0};
  std::ostringstream text;
  std::vector<TableMismatch> bad;

  if (kind != "exceptional") {
    std::vector<TableMismatch> ms = check_classical_rows(limit);
    json rows = json::array();
    std::vector<std::vector<std::string>> t{
        {"row", "d_P", "k_P", "C_P", "sharp(0)", "checked", "status"}};
    for (const ClassicalRow& r : classical_rows()) {
      auto sweep = r.sweep(limit);
      std::size_t nbad = std::count_if(ms.begin(), ms.end(),
                                       [&](const TableMismatch& m) { return m.row == r.label; });
      json inst = json::array();
      for (auto [a, b] : sweep) {
        SpaceInstance x = r.make(a, b);
        inst.push_back({{"name", x.name()}, {"d_P", x.d_P()}, {"k_P", x.k_P()},
                        {"C_P", format_rational(x.C_P())}, {"sharp0", sharp(x, 0)}});
      }
      rows.push_back({{"row", r.label}, {"d_P", r.d_text}, {"k_P", r.k_text},
                      {"C_P", r.C_text}, {"sharp0", r.sharp_text}, {"instances", inst},
                      {"mismatches", nbad}});
      t.push_back({r.label, r.d_text, r.k_text, r.C_text, r.sharp_text,
                   std::to_string(sweep.size()), nbad ? "MISMATCH" : "ok"});
    }
    o.data["classical"] = {{"limit", limit}, {"rows", rows}};
    text << "classical rows (parameters <= " << limit << ")\n" << impl::render(t);
    bad.insert(bad.end(), ms.begin(), ms.end());
  }

  if (kind != "classical") {
    std::vector<TableMismatch> ms = check_exceptional_rows();
    json rows = json::array();
    std::vector<std::vector<std::string>> t{
        {"space", "dim", "roots", "multiplicities", "d_P", "k_P", "printed", "status"}};
    for (const ExceptionalRow& r : exceptional_rows()) {
      SpaceInstance x = instantiate(r.symbol, 0);
      KpEnumeration e = kp_enumerated(*x.root_type(), x.multiplicities());
      int d = x.dim() - e.kp;
      bool ok = d == r.d_P && e.kp == r.k_P && x.dim() == r.dim;
      rows.push_back({{"space", x.name()}, {"dim", x.dim()}, {"root_system", x.root_type()->name()},
                      {"multiplicities", impl::mult_text(x.multiplicities())}, {"d_P", d},
                      {"k_P", e.kp}, {"maximizer", e.maximizer},
                      {"printed", {{"d_P", r.d_P}, {"k_P", r.k_P}}}, {"ok", ok}});
      t.push_back({x.name(), std::to_string(x.dim()), x.root_type()->name(),
                   impl::mult_text(x.multiplicities()), std::to_string(d), std::to_string(e.kp),
                   cat(r.d_P, " / ", r.k_P), ok ? "ok" : "MISMATCH"});
    }
    o.data["exceptional"] = {{"rows", rows}};
    if (kind != "exceptional")
      text << "\n";
    text << "exceptional rows\n" << impl::render(t);
    bad.insert(bad.end(), ms.begin(), ms.end());
  }

  if (check) {
    o.data["check"] = {{"ok", bad.empty()}, {"mismatches", impl::mismatch_json(bad)}};
    if (bad.empty()) {
      text << "\ncheck: all rows match\n";
    } else {
      text << "\ncheck: " << bad.size() << " mismatch(es)\n" << impl::mismatch_text(bad);
      o.exit_code = 1;
    }
  }
  o.text = text.str();
  return o;
}

inline Output cmd_kp(const std::string& spec) {
  ProductSpace p = parse_space(spec);
  Output o{impl::header("kp"), "", 0};
  std::ostringstream text;
  json factors = json::array();
  for (const SpaceInstance& x : p.factors()) {
    json j = impl::instance_json(x);
    if (x.root_type()) {
      KpEnumeration e = kp_enumerated(*x.root_type(), x.multiplicities());
      KpClosedForm c = kp_closed_form(*x.root_type(), x.multiplicities());
      j["maximizer"] = e.maximizer;
      j["closed_form"] = {{"k_P", c.kp}, {"route", route_name(c.route)}};
    }
    factors.push_back(j);
    text << x.name() << ": dim " << x.dim() << ", rank " << x.rank();
    if (x.root_type())
      text << ", roots " << x.root_type()->name() << " (" << impl::mult_text(x.multiplicities())
           << ")";
    text << "\n  k_P = " << x.k_P() << ", d_P = " << x.d_P()
         << ", C_P = " << format_rational(x.C_P()) << (x.valid() ? "" : " (not a valid dimension)")
         << ", sharp(0) = " << sharp(x, 0) << "\n";
  }
  o.data["space"] = p.name();
  o.data["factors"] = factors;
  if (!p.irreducible()) {
    o.data["product_k"] = product_kp(p);
    o.data["dim"] = p.dim();
    text << p.name() << ": dim " << p.dim() << ", k = " << product_kp(p) << "\n";
  }
  o.text = text.str();
  return o;
}

inline Output cmd_homotopy(const std::string& spec, int max_degree, const Context& ctx) {
  ProductSpace p = parse_space(spec);
  HomotopyProfile prof = profile(p, max_degree, *ctx.db);
  Output o{impl::header("homotopy"), "", 0};
  o.data["space"] = p.name();
  o.data["max_degree"] = max_degree;
  json degs = json::array();
  std::vector<std::vector<std::string>> t;
  for (int k = 1; k <= max_degree; ++k) {
    json d{{"degree", k}, {"group", format_group(prof.at(k))}};
    std::vector<std::string> row{cat("pi_", k), "=", format_group(prof.at(k))};
    if (p.irreducible()) {
      HomotopyCell c = ctx.db->pi(p.factors().front(), k);
      d["source"] = c.source();
      row.push_back("[" + c.source() + "]");
    }
    degs.push_back(d);
    t.push_back(row);
  }
  o.data["groups"] = degs;
  o.data["not_covered"] = prof.not_covered;
  o.text = p.name() + "\n" + impl::render(t);
  for (const std::string& s : prof.not_covered)
    o.text += "not covered: " + s + "\n";
  return o;
}

inline Output cmd_distinguish(const std::string& a, const std::string& b, int max_degree,
                              const Context& ctx) {
  ProductSpace x = parse_space(a), y = parse_space(b);
  Verdict v = distinguish(x, y, max_degree, *ctx.db);
  Output o{impl::header("distinguish"), "", 0};
  o.data["a"] = x.name();
  o.data["b"] = y.name();
  o.data["max_degree"] = max_degree;
  o.data["verdict"] = impl::verdict_json(v);
  std::ostringstream text;
  text << x.name() << " vs " << y.name() << ": " << v.str() << "\n";
  if (v.kind == Verdict::Kind::Distinguishable) {
    auto pa = profile(x, v.degree, *ctx.db), pb = profile(y, v.degree, *ctx.db);
    text << "  pi_" << v.degree << ": " << format_group(pa.at(v.degree)) << " vs "
         << format_group(pb.at(v.degree)) << "; rank over " << v.witness.field_name() << " "
         << v.witness.left.str() << " vs " << v.witness.right.str() << "\n";
  }
  o.text = text.str();
  return o;
}

inline Output cmd_corollary1(int max_dim, const Context& ctx) {
  Corollary1Report r = corollary1_scan(max_dim, *ctx.db);
  Output o{impl::header("corollary1-check"), "", r.ok() ? 0 : 1};
  auto pairs = [](const std::vector<ScanPair>& v) {
    json a = json::array();
    for (const ScanPair& p : v)
      a.push_back({{"a", p.a.name()}, {"b", p.b.name()}, {"verdict", p.verdict.str()}});
    return a;
  };
  o.data["max_dim"] = max_dim;
  o.data["instances"] = r.instances;
  o.data["pairs"] = r.pairs;
  o.data["distinguishable"] = r.distinguishable;
  o.data["blind_spot"] = r.blind_spot.size();
  o.data["violations"] = pairs(r.violations);
  o.data["undetermined"] = pairs(r.undetermined);
  o.data["ok"] = r.ok();
  std::ostringstream text;
  text << "valid instances with dim <= " << max_dim << ": " << r.instances << "\n"
       << "cross-type pairs: " << r.pairs << "\n"
       << "distinguishable: " << r.distinguishable << "\n"
       << "blind spot (CP^n vs Gr(R,2,q)), Indistinguishable(9): " << r.blind_spot.size() << "\n"
       << "violations: " << r.violations.size() << "\n"
       << "undetermined: " << r.undetermined.size() << "\n";
  for (const ScanPair& p : r.violations)
    text << "  violation: " << p.a.name() << " vs " << p.b.name() << ": " << p.verdict.str() << "\n";
  for (const ScanPair& p : r.undetermined)
    text << "  undetermined: " << p.a.name() << " vs " << p.b.name() << ": " << p.verdict.str()
         << "\n";
  text << (r.ok() ? "OK\n" : "FAILED\n");
  o.text = text.str();
  return o;
}

inline Output cmd_decompose(const std::string& spec, int max_degree, const Context& ctx) {
  SpaceInstance p = parse_irreducible(spec);
  DecomposeOptions opt;
  opt.max_degree = max_degree;
  opt.max_candidates = ctx.max_candidates;
  std::vector<ProductSpace> r = decompose(p, opt, *ctx.db);
  Output o{impl::header("decompose"), "", 0};
  o.data["space"] = p.name();
  o.data["max_degree"] = max_degree;
  json a = json::array();
  std::vector<std::vector<std::string>> t{{"dim", "product"}};
  for (const ProductSpace& q : r) {
    a.push_back({{"product", q.name()}, {"dim", q.dim()}});
    t.push_back({std::to_string(q.dim()), q.name()});
  }
  o.data["products"] = a;
  o.text = cat(p.name(), " (dim ", p.dim(), "): ", r.size(), " compatible product(s) through pi_",
               max_degree, "\n") + impl::render(t);
  return o;
}

inline Output cmd_gate(const std::string& spec, double delta, double focal_r, int codim) {
  SpaceInstance p = parse_irreducible(spec);
  GateVerdict v = theorem_a_gate(p, {delta, focal_r, codim});
  Output o{impl::header("gate"), "", 0};
  o.data["space"] = p.name();
  o.data["hypotheses"] = {{"delta", delta}, {"focal_r", focal_r}, {"codim", codim}};
  o.data["verdict"] = v.name();
  std::ostringstream text;
  text << p.name() << ", codim " << codim << ": " << v.name() << "\n";
  if (!v.applicable()) {
    o.data["reason"] = v.reason;
    text << "  " << v.reason << "\n";
  } else {
    o.data["cartan_type"] = v.cartan_type;
    o.data["description"] = v.description;
    o.data["connectivity"] = v.connectivity;
    o.data["trace_bound"] = v.trace ? json(*v.trace) : json(nullptr);
    o.data["assumptions"] = v.assumptions;
    text << "  " << v.description << "\n"
         << "  inclusion is " << v.connectivity << "-connected\n";
    if (v.trace)
      text << "  trace bound " << std::setprecision(12) << *v.trace << "\n";
    for (const std::string& s : v.assumptions)
      text << "  assumes " << s << "\n";
  }
  o.text = text.str();
  return o;
}

inline Output cmd_tgeo(const std::string& spec, int codim, int index_lower_bound) {
  std::vector<SpaceTerm> terms = parse_terms(spec);
  if (terms.size() != 1)
    throw ParseError("tgeo expects a single Grassmannian", 0);
  SpaceInstance x = instantiate_term(terms.front());
  Field f;
  switch (x.symbol()) {
    case Symbol::BDI: f = Field::R; break;
    case Symbol::AIII: f = Field::C; break;
    case Symbol::CII: f = Field::H; break;
    default: throw ParseError(cat("tgeo expects a Grassmannian, got ", x.name()), terms[0].pos);
  }
  int p = x.p(), n = x.p() + x.q();
  TheoremBVerdict v = theorem_b_check(f, p, n, codim, index_lower_bound);
  Output o{impl::header("tgeo"), "", 0};
  o.data["field"] = field_letter(f);
  o.data["p"] = p;
  o.data["n"] = n;
  o.data["codim"] = codim;
  o.data["index_lower_bound"] = index_lower_bound;
  o.data["applicable"] = v.applicable;
  std::ostringstream text;
  text << "Gr(" << field_letter(f) << "," << p << "," << n << "), codim " << codim << ": "
       << (v.applicable ? "Applicable" : "NotApplicable") << "\n";
  if (!v.reason.empty()) {
    o.data["reason"] = v.reason;
    text << "  " << v.reason << "\n";
  }
  if (v.meridian) {
    o.data["C_P"] = format_rational(v.C_P);
    o.data["min_meridian_codim"] = v.meridian->codim;
    o.data["argmin"] = {{"a", v.meridian->a}, {"b", p - v.meridian->a}};
    o.data["obstruction"] = v.obstruction;
    o.data["analogy_derived"] = v.analogy_derived;
    text << "  C_P = " << format_rational(v.C_P) << ", min meridian codim = " << v.meridian->codim
         << " (a = " << v.meridian->a << ", b = " << p - v.meridian->a << ")"
         << (v.obstruction ? " > C_P: sphere factors excluded" : " <= C_P: no obstruction") << "\n";
    if (v.analogy_derived)
      text << "  real case: meridian formula carried over from C/H with c = 1\n";
  }
  o.text = text.str();
  return o;
}

inline Output cmd_dump_roots(const std::string& type) {
  std::optional<RootSystemType> t = impl::parse_root_type(type);
  if (!t)
    fail("dump-roots: unknown root system '", type, "' (A<r>, B<r>, C<r>, D<r>, BC<r>, E6, E7, E8, F4, G2)");
  const auto& roots = positive_roots(*t);
  Output o{impl::header("dump-roots"), "", 0};
  o.data["type"] = t->name();
  o.data["count"] = roots.size();
  json a = json::array();
  std::ostringstream text;
  text << t->name() << ": " << roots.size() << " positive roots\n";
  std::vector<std::vector<std::string>> rows;
  for (const PositiveRoot& r : roots) {
    a.push_back({{"coeffs", r.coeffs}, {"length", length_name(r.length)}, {"height", r.height()}});
    std::string c;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      c += (i ? " " : "") + std::to_string(r.coeffs[i]);
    rows.push_back({"(" + c + ")", length_name(r.length), cat("height ", r.height())});
  }
  o.data["roots"] = a;
  o.text = text.str() + impl::render(rows);
  return o;
}

// ---------------------------------------------------------------------------

/// Parse args (without the program name), run, write to out/err.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symcart: Ricci thresholds, codimension bounds and homotopy recognition for "
               "compact symmetric spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text", data_dir;
  std::size_t max_candidates = DecomposeOptions{}.max_candidates;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--data-dir", data_dir, "directory of homotopy table files");
  app.add_option("--max-candidates", max_candidates, "node limit for decompose");

  std::string a, b, kind = "all";
  int max_degree = 0, max_dim = 300, limit = 30, codim = 1, index = 0;
  double delta = 1, focal_r = 0;
  bool check = false;

  auto* table = app.add_subcommand("table", "print the classical or exceptional table");
  table->add_option("kind", kind, "classical, exceptional or all");
  table->add_flag("--check", check, "compare against the printed values; exit 1 on mismatch");
  table->add_option("--limit", limit, "parameter bound for the classical sweep");

  auto* kp = app.add_subcommand("kp", "k_P, d_P, C_P of a space or product");
  kp->add_option("space", a)->required();

  auto* hom = app.add_subcommand("homotopy", "homotopy groups pi_1..pi_k");
  hom->add_option("space", a)->required();
  hom->add_option("--max-degree", max_degree, "highest degree (<= 10)");

  auto* dist = app.add_subcommand("distinguish", "tell two spaces apart by homotopy");
  dist->add_option("a", a)->required();
  dist->add_option("b", b)->required();
  dist->add_option("--max-degree", max_degree, "highest degree (default 9)");

  auto* cor = app.add_subcommand("corollary1-check", "scan all cross-type pairs");
  cor->add_option("--max-dim", max_dim, "dimension bound (default 300)");

  auto* dec = app.add_subcommand("decompose", "products with a compatible profile");
  dec->add_option("space", a)->required();
  dec->add_option("--max-degree", max_degree, "highest degree (default 9)");

  auto* gate = app.add_subcommand("gate", "classify allowed submanifold types");
  gate->add_option("space", a)->required();
  gate->add_option("--delta", delta, "Ric_{k_P} lower bound (> 0)");
  gate->add_option("--focal-r", focal_r, "focal radius lower bound in [0, pi/2)");
  gate->add_option("--codim", codim, "codimension");

  auto* tgeo = app.add_subcommand("tgeo", "meridian obstruction for a Grassmannian");
  tgeo->add_option("space", a, "Gr(R|C|H,p,n), BDI/AIII/CII(p,q)")->required();
  tgeo->add_option("--codim", codim, "codimension")->required();
  tgeo->add_option("--index", index, "lower bound for the index")->required();

  auto* roots = app.add_subcommand("dump-roots", "list positive roots");
  roots->add_option("type", a, "A4, B3, C3, D5, BC2, E6, E7, E8, F4, G2")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    std::optional<HomotopyDb> own;
    Context ctx;
    ctx.max_candidates = max_candidates;
    if (!data_dir.empty()) {
      own = HomotopyDb::load(data_dir);
      ctx.db = &*own;
    } else {
      ctx.db = &default_db();
    }

    Output o;
    if (*table)
      o = cmd_table(kind, check, limit);
    else if (*kp)
      o = cmd_kp(a);
    else if (*hom)
      o = cmd_homotopy(a, max_degree ? max_degree : kMaxDegree, ctx);
    else if (*dist)
      o = cmd_distinguish(a, b, max_degree ? max_degree : 9, ctx);
    else if (*cor)
      o = cmd_corollary1(max_dim, ctx);
    else if (*dec)
      o = cmd_decompose(a, max_degree ? max_degree : 9, ctx);
    else if (*gate)
      o = cmd_gate(a, delta, focal_r, codim);
    else if (*tgeo)
      o = cmd_tgeo(a, codim, index);
    else
      o = cmd_dump_roots(a);

    if (format == "json")
      out << o.data.dump(2) << "\n";
    else
      out << o.text;
    return o.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace symcart::cli

#endif
