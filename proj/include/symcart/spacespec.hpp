// Space-spec grammar shared by the CLI and the table data files:
//   S(n) AI(n) AII(n) AIII(p,q) BDI(p,q) CI(n) CII(p,q) DIII(n)
//   SU(n) Spin(n) Sp(n) E6 E7 E8 F4 G2 EI..EIX FI FII G
//   CP(n) HP(n) Gr(R|C|H,p,n)
// and products joined by "x".

#ifndef SYMCART_SPACESPEC_HPP_
#define SYMCART_SPACESPEC_HPP_

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"
#include "util.hpp"

namespace symcart {

/// One factor as written: head, raw argument strings, source position.
struct SpaceTerm {
  std::string head;
  std::vector<std::string> args;
  std::size_t pos = 0;
};

namespace impl {

class TermLexer {
public:
  explicit TermLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      error("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      error(cat("expected '", c, "'"));
  }

  SpaceTerm term() {
    skip_ws();
    SpaceTerm t;
    t.pos = pos_;
    t.head = word();
    if (accept('(')) {
      do {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')')
          ++pos_;
        std::string a(s_.substr(start, pos_ - start));
        while (!a.empty() && std::isspace(static_cast<unsigned char>(a.back())))
          a.pop_back();
        if (a.empty())
          error("empty argument");
        t.args.push_back(a);
      } while (accept(','));
      expect(')');
    }
    return t;
  }

  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, pos_); }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::optional<int> to_int(const std::string& s) {
  if (s.empty() || s.size() > 9)
    return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return std::nullopt;
  return std::stoi(s);
}

struct HeadInfo {
  Symbol symbol;
  int arity;        // number of written arguments
  int fixed_p = 0;  // CP/HP: p is fixed to 1 and the argument is q
};

inline std::optional<HeadInfo> head_info(const std::string& h) {
  using S = Symbol;
  static const std::pair<const char*, HeadInfo> table[] = {
    {"S", {S::Sphere, 1}}, {"SU", {S::A, 1}}, {"Spin", {S::BD, 1}}, {"Sp", {S::C, 1}},
    {"AI", {S::AI, 1}}, {"AII", {S::AII, 1}}, {"AIII", {S::AIII, 2}},
    {"BDI", {S::BDI, 2}}, {"CI", {S::CI, 1}}, {"CII", {S::CII, 2}}, {"DIII", {S::DIII, 1}},
    {"CP", {S::AIII, 1, 1}}, {"HP", {S::CII, 1, 1}},
    {"E6", {S::E6, 0}}, {"E7", {S::E7, 0}}, {"E8", {S::E8, 0}}, {"F4", {S::F4, 0}},
    {"G2", {S::G2, 0}}, {"EI", {S::EI, 0}}, {"EII", {S::EII, 0}}, {"EIII", {S::EIII, 0}},
    {"EIV", {S::EIV, 0}}, {"EV", {S::EV, 0}}, {"EVI", {S::EVI, 0}}, {"EVII", {S::EVII, 0}},
    {"EVIII", {S::EVIII, 0}}, {"EIX", {S::EIX, 0}}, {"FI", {S::FI, 0}}, {"FII", {S::FII, 0}},
    {"G", {S::G, 0}},
  };
  for (const auto& [name, info] : table)
    if (h == name)
      return info;
  return std::nullopt;
}

} // namespace impl

/// Symbol and integer parameters (a, b) named by a term; no constraint
/// checks beyond arity and integrality.
struct SpaceKey {
  Symbol symbol;
  int a = 0, b = 0;
};

inline SpaceKey term_key(const SpaceTerm& t) {
  auto err = [&](const std::string& m) -> ParseError { return ParseError(m, t.pos); };
  auto num = [&](const std::string& s) {
    auto v = impl::to_int(s);
    if (!v)
      throw err(cat(t.head, ": '", s, "' is not a nonnegative integer"));
    return *v;
  };
  if (t.head == "Gr") {
    if (t.args.size() != 3)
      throw err("Gr expects (R|C|H, p, n)");
    int p = num(t.args[1]), n = num(t.args[2]);
    if (p < 1 || p >= n)
      throw err(cat("Gr: need 1 <= p < n, got p = ", p, ", n = ", n));
    int lo = std::min(p, n - p), hi = std::max(p, n - p);
    const std::string& f = t.args[0];
    if (f == "R")
      return {Symbol::BDI, lo, hi};
    if (f == "C")
      return {Symbol::AIII, lo, hi};
    if (f == "H")
      return {Symbol::CII, lo, hi};
    throw err(cat("Gr: field must be R, C or H, got '", f, "'"));
  }
  auto info = impl::head_info(t.head);
  if (!info)
    throw err(cat("unknown space '", t.head, "'"));
  if (static_cast<int>(t.args.size()) != info->arity)
    throw err(cat(t.head, " expects ", info->arity, " argument(s), got ", t.args.size()));
  SpaceKey k{info->symbol};
  if (info->fixed_p) {
    k.a = info->fixed_p;
    k.b = num(t.args[0]);
  } else {
    if (info->arity >= 1)
      k.a = num(t.args[0]);
    if (info->arity == 2)
      k.b = num(t.args[1]);
  }
  return k;
}

/// One factor, instantiated but not canonicalized.
inline SpaceInstance instantiate_term(const SpaceTerm& t) {
  SpaceKey k = term_key(t);
  try {
    return instantiate(k.symbol, k.a, k.b);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), t.pos);
  }
}

inline std::vector<SpaceTerm> parse_terms(std::string_view text) {
  impl::TermLexer lx(text);
  std::vector<SpaceTerm> out;
  if (lx.at_end())
    lx.error("empty space spec");
  out.push_back(lx.term());
  while (!lx.at_end()) {
    std::size_t at = lx.pos();
    if (lx.word() != "x")
      throw ParseError("expected 'x' between factors", at);
    out.push_back(lx.term());
  }
  return out;
}

inline std::string format_terms(const std::vector<SpaceTerm>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i)
      s += " x ";
    s += terms[i].head;
    if (!terms[i].args.empty()) {
      s += "(";
      for (std::size_t j = 0; j < terms[i].args.size(); ++j)
        s += (j ? "," : "") + terms[i].args[j];
      s += ")";
    }
  }
  return s;
}

/// Parse a product; each factor is canonicalized through the special
/// isomorphisms.
inline ProductSpace parse_space(std::string_view text) {
  std::vector<SpaceInstance> f;
  for (const SpaceTerm& t : parse_terms(text))
    f.push_back(canonical(instantiate_term(t)));
  return ProductSpace(std::move(f));
}

/// Single irreducible factor; products are rejected.
inline SpaceInstance parse_irreducible(std::string_view text) {
  ProductSpace p = parse_space(text);
  if (!p.irreducible())
    throw ParseError("expected a single irreducible space, got a product", 0);
  return p.factors().front();
}

} // namespace symcart

#endif
