#pragma once
// Exact arithmetic in the free r-pointed algebra: orthogonal idempotents
// e_1..e_r, arrows between points, composable words (paths) as the monomial
// basis, and NC polynomials with the bimodule/graded decompositions.
//
// All values are immutable after construction and operations are pure, so
// everything here is safe to share across threads.

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncdeform/errors.hpp"
#include "ncdeform/scalar.hpp"

namespace ncdeform {

struct ArrowSpec {
  std::string name;
  int source = 1;
  int target = 1;
};

struct Arrow {
  std::string name;
  int source = 1;
  int target = 1;
  int slot = 0;  // basis index within the (source,target) block
};

namespace detail {
// Generator names must be plain identifiers and must not collide with the
// reserved idempotent spelling e_<digits> used by the text format.
inline bool valid_generator_name(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  for (char c : s.substr(1))
    if (!alpha(c) && !digit(c)) return false;
  if (s.size() > 2 && s.substr(0, 2) == "e_") {
    bool all_digits = true;
    for (char c : s.substr(2))
      if (!digit(c)) all_digits = false;
    if (all_digits) return false;
  }
  return true;
}
}  // namespace detail

// The generating bimodule: r points plus an ordered arrow list. The arrow
// order is part of the signature; monomial orders downstream depend on it.
class AlgebraSignature {
public:
  AlgebraSignature(int r, std::vector<ArrowSpec> specs) : r_(r) {
    if (r < 1) throw std::invalid_argument("signature: need r >= 1");
    dims_.assign(r, std::vector<int>(r, 0));
    arrows_.reserve(specs.size());
    for (auto& sp : specs) {
      if (sp.source < 1 || sp.source > r || sp.target < 1 || sp.target > r)
        throw std::invalid_argument("signature: point index out of range for arrow '" +
                                    sp.name + "'");
      if (!detail::valid_generator_name(sp.name))
        throw std::invalid_argument("signature: invalid generator name '" + sp.name + "'");
      if (by_name_.count(sp.name))
        throw std::invalid_argument("signature: duplicate generator name '" + sp.name + "'");
      int slot = dims_[sp.source - 1][sp.target - 1]++;
      by_name_.emplace(sp.name, static_cast<int>(arrows_.size()));
      arrows_.push_back(Arrow{std::move(sp.name), sp.source, sp.target, slot});
    }
  }

  int points() const { return r_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int k) const { return arrows_[static_cast<size_t>(k)]; }
  std::span<const Arrow> arrows() const { return arrows_; }
  const std::vector<std::vector<int>>& dims() const { return dims_; }
  int find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? -1 : it->second;
  }

  friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
    if (a.r_ != b.r_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (size_t k = 0; k < a.arrows_.size(); ++k) {
      const Arrow &x = a.arrows_[k], &y = b.arrows_[k];
      if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
  }

private:
  int r_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> dims_;
  std::unordered_map<std::string, int> by_name_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

inline SignaturePtr make_signature(int r, std::vector<ArrowSpec> arrows) {
  return std::make_shared<const AlgebraSignature>(r, std::move(arrows));
}

inline bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  if (!same_signature(a, b)) throw SignatureMismatch("operands use different signatures");
}

// A basis monomial: either the idempotent e_i (empty word based at point i)
// or a composable word of arrows. Endpoints are cached.
class Path {
public:
  static Path idempotent(int point) {
    Path p;
    p.src_ = p.tgt_ = point;
    return p;
  }
  static Path arrow(const AlgebraSignature& sig, int arrow_index) {
    Path p;
    const Arrow& a = sig.arrow(arrow_index);
    p.src_ = a.source;
    p.tgt_ = a.target;
    p.word_ = {static_cast<uint32_t>(arrow_index)};
    return p;
  }
  static Path word(const AlgebraSignature& sig, std::vector<uint32_t> arrows) {
    if (arrows.empty()) throw std::invalid_argument("Path::word: empty word; use idempotent");
    Path p;
    p.src_ = sig.arrow(static_cast<int>(arrows.front())).source;
    int at = p.src_;
    for (uint32_t k : arrows) {
      const Arrow& a = sig.arrow(static_cast<int>(k));
      if (a.source != at) throw std::invalid_argument("Path::word: arrows not composable");
      at = a.target;
    }
    p.tgt_ = at;
    p.word_ = std::move(arrows);
    return p;
  }

  int degree() const { return static_cast<int>(word_.size()); }
  bool is_idempotent() const { return word_.empty(); }
  int source() const { return src_; }
  int target() const { return tgt_; }
  std::span<const uint32_t> arrows() const { return word_; }

  // Point visited before position k (0 => source, degree() => target).
  int point_at(const AlgebraSignature& sig, int k) const {
    if (k == 0) return src_;
    return sig.arrow(static_cast<int>(word_[static_cast<size_t>(k - 1)])).target;
  }

  friend std::optional<Path> concat(const Path& a, const Path& b) {
    if (a.tgt_ != b.src_) return std::nullopt;
    if (a.is_idempotent()) return b;
    if (b.is_idempotent()) return a;
    Path p;
    p.src_ = a.src_;
    p.tgt_ = b.tgt_;
    p.word_ = a.word_;
    p.word_.insert(p.word_.end(), b.word_.begin(), b.word_.end());
    return p;
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.word_ == b.word_;
  }

  // deglex: shorter first, then left-to-right by arrow declaration index;
  // idempotents are ordered by their point. Total on all paths, degree
  // compatible and multiplicative on composable concatenation.
  friend std::strong_ordering deglex_compare(const Path& a, const Path& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
    if (a.word_.empty()) return a.src_ <=> b.src_;
    for (size_t k = 0; k < a.word_.size(); ++k)
      if (a.word_[k] != b.word_[k]) return a.word_[k] <=> b.word_[k];
    return std::strong_ordering::equal;
  }
  friend bool deglex_less(const Path& a, const Path& b) {
    return deglex_compare(a, b) == std::strong_ordering::less;
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(src_) * 131 + static_cast<size_t>(tgt_);
    for (uint32_t k : word_) h = h * 1000003u ^ (k + 1);
    return h;
  }

private:
  Path() = default;
  int src_ = 1, tgt_ = 1;
  std::vector<uint32_t> word_;
};

struct PathHash {
  size_t operator()(const Path& p) const { return p.hash(); }
};

// NC polynomial: finite Scalar-linear combination of paths, stored sparsely
// in ascending deglex order with no zero coefficients.
template <class S = Rational>
class NCPoly {
public:
  using Term = std::pair<Path, S>;

  explicit NCPoly(SignaturePtr sig) : sig_(std::move(sig)) {
    if (!sig_) throw std::invalid_argument("NCPoly: null signature");
  }
  static NCPoly zero(SignaturePtr sig) { return NCPoly(std::move(sig)); }
  static NCPoly idempotent(SignaturePtr sig, int i) {
    if (i < 1 || i > sig->points()) throw std::invalid_argument("idempotent: point out of range");
    return term(std::move(sig), Path::idempotent(i), S(1));
  }
  static NCPoly generator(SignaturePtr sig, int arrow_index) {
    Path p = Path::arrow(*sig, arrow_index);
    return term(std::move(sig), std::move(p), S(1));
  }
  static NCPoly term(SignaturePtr sig, Path p, S c) {
    NCPoly out(std::move(sig));
    if (!c.is_zero()) out.terms_.emplace_back(std::move(p), std::move(c));
    return out;
  }
  static NCPoly from_terms(SignaturePtr sig, std::vector<Term> raw) {
    NCPoly out(std::move(sig));
    out.terms_ = std::move(raw);
    out.normalize();
    return out;
  }

  const SignaturePtr& signature() const { return sig_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
    return terms_.back();
  }
  int degree() const { return terms_.empty() ? -1 : terms_.back().first.degree(); }
  int min_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

  S coeff(const Path& p) const {
    for (const Term& t : terms_)
      if (t.first == p) return t.second;
    return S(0);
  }

  friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    require_same_signature(a.sig_, b.sig_);
    NCPoly out(a.sig_);
    out.terms_ = merge(a.terms_, b.terms_, false);
    return out;
  }
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    require_same_signature(a.sig_, b.sig_);
    NCPoly out(a.sig_);
    out.terms_ = merge(a.terms_, b.terms_, true);
    return out;
  }
  NCPoly operator-() const {
    NCPoly out(sig_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

  friend NCPoly operator*(const S& c, const NCPoly& f) {
    NCPoly out(f.sig_);
    if (c.is_zero()) return out;
    out.terms_ = f.terms_;
    for (auto& t : out.terms_) t.second = c * t.second;
    return out;
  }

  // Bilinear product; path * path = concatenation or 0 when not composable.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    require_same_signature(a.sig_, b.sig_);
    NCPoly out(a.sig_);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_)
        if (auto p = concat(ta.first, tb.first))
          raw.emplace_back(std::move(*p), ta.second * tb.second);
    out.terms_ = std::move(raw);
    out.normalize();
    return out;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
  }

  // e_i * f * e_j
  NCPoly component(int i, int j) const {
    if (i < 1 || i > sig_->points() || j < 1 || j > sig_->points())
      throw std::invalid_argument("component: point index out of range");
    NCPoly out(sig_);
    for (const Term& t : terms_)
      if (t.first.source() == i && t.first.target() == j) out.terms_.push_back(t);
    return out;
  }

  // terms of word length exactly d
  NCPoly graded_piece(int d) const {
    NCPoly out(sig_);
    for (const Term& t : terms_)
      if (t.first.degree() == d) out.terms_.push_back(t);
    return out;
  }

  // terms of word length <= d
  NCPoly truncated(int d) const {
    NCPoly out(sig_);
    for (const Term& t : terms_)
      if (t.first.degree() <= d) out.terms_.push_back(t);
    return out;
  }

  NCPoly monic() const {
    if (terms_.empty()) return *this;
    S lc = terms_.back().second;
    NCPoly out(sig_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = t.second / lc;
    return out;
  }

private:
  SignaturePtr sig_;
  std::vector<Term> terms_;

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return deglex_less(x.first, y.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                 bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && deglex_less(a[i].first, b[j].first))) {
        out.push_back(a[i++]);
      } else if (i == a.size() || deglex_less(b[j].first, a[i].first)) {
        out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
        ++j;
      } else {
        S c = negate_b ? a[i].second - b[j].second : a[i].second + b[j].second;
        if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }
};

template <class S>
NCPoly<S> multiply(const NCPoly<S>& f, const NCPoly<S>& g) {
  return f * g;
}
template <class S>
NCPoly<S> component(const NCPoly<S>& f, int i, int j) {
  return f.component(i, j);
}
template <class S>
NCPoly<S> graded_piece(const NCPoly<S>& f, int d) {
  return f.graded_piece(d);
}

// Number of degree-d paths i -> j, i.e. the (i,j) entry of D^d for the arrow
// count matrix D (D^0 = identity).
inline long long free_dim(const AlgebraSignature& sig, int d, int i, int j) {
  if (d < 0) throw std::invalid_argument("free_dim: negative degree");
  const int r = sig.points();
  if (i < 1 || i > r || j < 1 || j > r)
    throw std::invalid_argument("free_dim: point index out of range");
  std::vector<std::vector<long long>> pw(r, std::vector<long long>(r, 0));
  for (int a = 0; a < r; ++a) pw[a][a] = 1;
  for (int step = 0; step < d; ++step) {
    std::vector<std::vector<long long>> nx(r, std::vector<long long>(r, 0));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) nx[a][c] += pw[a][b] * sig.dims()[b][c];
    pw = std::move(nx);
  }
  return pw[i - 1][j - 1];
}

}  // namespace ncdeform
