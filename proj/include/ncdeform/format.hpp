#pragma once
// The presentation text format and its polynomial expression grammar.
//
//   # comment
//   points r
//   gen NAME : i -> j
//   rel POLY
//   maxdeg N
//
// POLY is a +/- separated list of terms; a term is an optional rational
// coefficient p/q followed by '*'-separated generator names or e_i.
// Whitespace-insensitive; printing is canonical (terms in descending deglex)
// so emitted presentations re-parse to canonically equal ones.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ncdeform/errors.hpp"
#include "ncdeform/rewriting.hpp"

namespace ncdeform {

namespace detail {

struct PolyLexer {
  std::string_view text;
  size_t pos = 0;
  int line;
  int col_base;  // 1-based column of text[0] in the original line

  PolyLexer(std::string_view t, int line_, int col_base_)
      : text(t), line(line_), col_base(col_base_) {}

  int col() const { return col_base + static_cast<int>(pos); }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(line, col(), "expected a number");
    return std::string(text.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    auto ok = [&](char c, bool first) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!first && std::isdigit(static_cast<unsigned char>(c)));
    };
    while (pos < text.size() && ok(text[pos], pos == start)) ++pos;
    if (start == pos) throw ParseError(line, col(), "expected a generator name or e_i");
    return std::string(text.substr(start, pos - start));
  }
};

inline int parse_small_int(const std::string& digits, int line, int col) {
  if (digits.size() > 9) throw ParseError(line, col, "number out of range");
  return std::stoi(digits);
}

inline bool is_idempotent_name(std::string_view s, int* point) {
  if (s.size() < 3 || s.size() > 11 || s.substr(0, 2) != "e_") return false;
  int v = 0;
  for (char c : s.substr(2)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
  }
  *point = v;
  return true;
}

template <class S>
S scalar_from_fraction(const std::string& p, const std::string& q, int line, int col);

template <>
inline Rational scalar_from_fraction<Rational>(const std::string& p, const std::string& q,
                                               int line, int col) {
  BigInt den = BigInt::from_string(q);
  if (den.is_zero()) throw ParseError(line, col, "zero denominator");
  return Rational(BigInt::from_string(p), std::move(den));
}

template <class S>
NCPoly<S> parse_poly_impl(std::string_view text, const SignaturePtr& sig, int line,
                          int col_base) {
  PolyLexer lx(text, line, col_base);
  NCPoly<S> out = NCPoly<S>::zero(sig);
  bool first = true;
  while (!lx.eof()) {
    bool neg = false;
    if (first) {
      if (lx.eat('-')) neg = true;
      first = false;
    } else if (lx.eat('+')) {
      neg = false;
    } else if (lx.eat('-')) {
      neg = true;
    } else {
      throw ParseError(lx.line, lx.col(), "expected '+' or '-' between terms");
    }
    // optional rational coefficient
    S coeff(1);
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string p = lx.number();
      if (lx.eat('/')) {
        std::string q = lx.number();
        coeff = scalar_from_fraction<S>(p, q, lx.line, lx.col());
      } else {
        coeff = scalar_from_fraction<S>(p, "1", lx.line, lx.col());
      }
      lx.eat('*');
      if (lx.eof() || lx.peek() == '+' || lx.peek() == '-')
        throw ParseError(lx.line, lx.col(),
                         "term has no generators; use e_i for degree-0 terms");
    }
    // '*'-separated factors
    NCPoly<S> term = NCPoly<S>::zero(sig);
    bool have_term = false;
    do {
      int fcol = lx.col();
      std::string name = lx.ident();
      NCPoly<S> factor = NCPoly<S>::zero(sig);
      int pt = 0;
      if (is_idempotent_name(name, &pt)) {
        if (pt < 1 || pt > sig->points())
          throw ParseError(lx.line, fcol, "idempotent point out of range: " + name);
        factor = NCPoly<S>::idempotent(sig, pt);
      } else {
        int k = sig->find(name);
        if (k < 0) throw ParseError(lx.line, fcol, "unknown generator '" + name + "'");
        factor = NCPoly<S>::generator(sig, k);
      }
      term = have_term ? term * factor : factor;
      have_term = true;
    } while (lx.eat('*'));
    term = coeff * term;
    out = neg ? out - term : out + term;
  }
  return out;
}

}  // namespace detail

inline NCPoly<Rational> parse_poly(std::string_view text, const SignaturePtr& sig,
                                   int line = 1, int col_base = 1) {
  return detail::parse_poly_impl<Rational>(text, sig, line, col_base);
}

inline std::string path_to_string(const AlgebraSignature& sig, const Path& p) {
  if (p.is_idempotent()) return "e_" + std::to_string(p.source());
  std::string out;
  for (uint32_t k : p.arrows()) {
    if (!out.empty()) out += "*";
    out += sig.arrow(static_cast<int>(k)).name;
  }
  return out;
}

inline std::string poly_to_string(const NCPoly<Rational>& f) {
  if (f.is_zero()) return "0";
  const AlgebraSignature& sig = *f.signature();
  std::string out;
  auto ts = f.terms();
  for (size_t k = ts.size(); k-- > 0;) {  // descending deglex
    const auto& [path, c] = ts[k];
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!mag.is_one()) out += mag.str() + "*";
    out += path_to_string(sig, path);
  }
  return out;
}

inline std::string presentation_to_string(const Presentation<Rational>& pres) {
  std::ostringstream os;
  os << "points " << pres.sig->points() << "\n";
  for (const Arrow& a : pres.sig->arrows())
    os << "gen " << a.name << " : " << a.source << " -> " << a.target << "\n";
  for (const auto& r : pres.relations) os << "rel " << poly_to_string(r) << "\n";
  os << "maxdeg " << pres.truncation << "\n";
  return os.str();
}

// Parse the full presentation file format. Generators must be declared before
// the first relation; "points" must come first.
inline Presentation<Rational> parse_presentation(std::string_view text) {
  int r = -1;
  int maxdeg = -1;
  std::vector<ArrowSpec> arrows;
  SignaturePtr sig;
  std::vector<NCPoly<Rational>> rels;
  int line_no = 0;
  size_t cursor = 0;

  auto fail = [&](int col, const std::string& msg) -> ParseError {
    return ParseError(line_no, col, msg);
  };

  while (cursor <= text.size()) {
    size_t nl = text.find('\n', cursor);
    std::string_view line = text.substr(cursor, nl == std::string_view::npos
                                                    ? text.size() - cursor
                                                    : nl - cursor);
    cursor = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    detail::PolyLexer lx(line, line_no, 1);
    if (lx.eof()) continue;
    int kwcol = lx.col();
    std::string kw = lx.ident();

    if (kw == "points") {
      if (r >= 0) throw fail(kwcol, "duplicate 'points' line");
      if (!arrows.empty() || !rels.empty()) throw fail(kwcol, "'points' must come first");
      int rcol = lx.col();
      r = detail::parse_small_int(lx.number(), line_no, rcol);
      if (r < 1) throw fail(kwcol, "need at least one point");
      if (!lx.eof()) throw fail(lx.col(), "trailing input after 'points'");
    } else if (kw == "gen") {
      if (r < 0) throw fail(kwcol, "'points' must come before 'gen'");
      if (sig) throw fail(kwcol, "generators must be declared before relations");
      int ncol = lx.col();
      std::string name = lx.ident();
      if (!detail::valid_generator_name(name))
        throw fail(ncol, "invalid generator name '" + name + "'");
      for (const auto& sp : arrows)
        if (sp.name == name) throw fail(ncol, "duplicate generator name '" + name + "'");
      if (!lx.eat(':')) throw fail(lx.col(), "expected ':'");
      int icol = lx.col();
      int i = detail::parse_small_int(lx.number(), line_no, icol);
      if (!lx.eat('-') || !lx.eat('>')) throw fail(lx.col(), "expected '->'");
      int jcol = lx.col();
      int j = detail::parse_small_int(lx.number(), line_no, jcol);
      if (i < 1 || i > r) throw fail(icol, "source point out of range");
      if (j < 1 || j > r) throw fail(jcol, "target point out of range");
      if (!lx.eof()) throw fail(lx.col(), "trailing input after 'gen'");
      arrows.push_back({std::move(name), i, j});
    } else if (kw == "rel") {
      if (r < 0) throw fail(kwcol, "'points' must come before 'rel'");
      if (!sig) sig = make_signature(r, arrows);
      std::string_view rest = line.substr(lx.pos);
      rels.push_back(detail::parse_poly_impl<Rational>(rest, sig, line_no,
                                                       static_cast<int>(lx.pos) + 1));
    } else if (kw == "maxdeg") {
      if (maxdeg >= 0) throw fail(kwcol, "duplicate 'maxdeg' line");
      int mcol = lx.col();
      maxdeg = detail::parse_small_int(lx.number(), line_no, mcol);
      if (maxdeg < 1) throw fail(kwcol, "maxdeg must be >= 1");
      if (!lx.eof()) throw fail(lx.col(), "trailing input after 'maxdeg'");
    } else {
      throw fail(kwcol, "unknown directive '" + kw + "'");
    }
  }
  if (r < 0) throw ParseError(line_no, 1, "missing 'points' line");
  if (!sig) sig = make_signature(r, arrows);
  if (maxdeg < 0) {
    maxdeg = 1;
    for (const auto& f : rels) maxdeg = std::max(maxdeg, f.degree());
  }
  return Presentation<Rational>(sig, std::move(rels), maxdeg);
}

}  // namespace ncdeform
