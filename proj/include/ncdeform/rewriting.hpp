#pragma once
// Degree-truncated two-sided ideal computation in free r-pointed algebras:
// deglex monomial order, overlap (diamond lemma) completion, normal forms,
// and quotient dimension counting by normal words.
//
// Everything is computed modulo a degree bound: completion processes exactly
// the overlap ambiguities whose overlap word fits under the bound, so normal
// forms are well-defined up to that degree and nothing is claimed beyond it
// (free algebras are not Noetherian, so no global claim is possible).
// Inhomogeneous relations are handled by ordinary rewriting with lower-order
// tails; reported dimensions are then dimensions of the word-length
// filtration quotients.

#include <deque>
#include <map>
#include <span>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ncdeform/algebra.hpp"

namespace ncdeform {

// deglex over the signature's arrow declaration order; the only order used.
struct MonomialOrder {
  static std::strong_ordering compare(const Path& a, const Path& b) {
    return deglex_compare(a, b);
  }
  static bool less(const Path& a, const Path& b) { return deglex_less(a, b); }
};

// Generators + relations + truncation degree N: stands for the quotient of
// the completed tensor algebra by (relations) + M^(N+1). Relations are
// canonicalized on construction: split into (i,j) components, zero components
// dropped, duplicates (up to scalar) removed.
template <class S = Rational>
struct Presentation {
  SignaturePtr sig;
  std::vector<NCPoly<S>> relations;
  int truncation = 1;

  Presentation(SignaturePtr sig_, std::vector<NCPoly<S>> rels, int truncation_)
      : sig(std::move(sig_)), truncation(truncation_) {
    if (!sig) throw std::invalid_argument("Presentation: null signature");
    if (truncation < 1) throw std::invalid_argument("Presentation: truncation must be >= 1");
    std::unordered_map<size_t, std::vector<int>> seen;
    for (const auto& r : rels) {
      require_same_signature(sig, r.signature());
      for (int i = 1; i <= sig->points(); ++i)
        for (int j = 1; j <= sig->points(); ++j) {
          NCPoly<S> c = r.component(i, j);
          if (c.is_zero()) continue;
          NCPoly<S> canon = c.monic();
          size_t h = poly_hash(canon);
          bool dup = false;
          for (int idx : seen[h])
            if (relations[static_cast<size_t>(idx)].monic() == canon) dup = true;
          if (dup) continue;
          seen[h].push_back(static_cast<int>(relations.size()));
          relations.push_back(std::move(c));
        }
    }
  }

  int max_relation_degree() const {
    int d = 0;
    for (const auto& r : relations) d = std::max(d, r.degree());
    return d;
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return same_signature(a.sig, b.sig) && a.relations == b.relations &&
           a.truncation == b.truncation;
  }

private:
  static size_t poly_hash(const NCPoly<S>& f) {
    size_t h = 17;
    for (const auto& t : f.terms()) h = h * 1000003u ^ (t.first.hash() * 31 + t.second.hash());
    return h;
  }
};

using DimMatrix = std::vector<std::vector<long long>>;

namespace detail {

struct WordHash {
  size_t operator()(const std::vector<uint32_t>& w) const {
    size_t h = 1469598103u;
    for (uint32_t k : w) h = (h ^ (k + 1)) * 1099511628211ull;
    return h;
  }
};

using LeadIndex = std::unordered_map<std::vector<uint32_t>, int, WordHash>;

// Position where `small` occurs inside `big` as a subword, or -1. An
// idempotent occurs at the first split point whose base point matches.
inline int find_sub(const AlgebraSignature& sig, const Path& small, const Path& big) {
  if (small.is_idempotent()) {
    for (int p = 0; p <= big.degree(); ++p)
      if (big.point_at(sig, p) == small.source()) return p;
    return -1;
  }
  auto s = small.arrows();
  auto b = big.arrows();
  if (s.size() > b.size()) return -1;
  for (size_t p = 0; p + s.size() <= b.size(); ++p) {
    bool hit = true;
    for (size_t k = 0; k < s.size(); ++k)
      if (b[p + k] != s[k]) {
        hit = false;
        break;
      }
    if (hit) return static_cast<int>(p);
  }
  return -1;
}

// Does u's suffix of length L equal v's prefix of length L?
inline bool overlap_matches(const Path& u, const Path& v, int L) {
  auto a = u.arrows();
  auto b = v.arrows();
  for (int k = 0; k < L; ++k)
    if (a[a.size() - static_cast<size_t>(L) + static_cast<size_t>(k)] !=
        b[static_cast<size_t>(k)])
      return false;
  return true;
}

// Replace the subword [pos, pos+len) of w by the word of path t.
inline Path splice(const AlgebraSignature& sig, const Path& w, int pos, int len,
                   const Path& t) {
  std::vector<uint32_t> word;
  auto a = w.arrows();
  word.insert(word.end(), a.begin(), a.begin() + pos);
  auto m = t.arrows();
  word.insert(word.end(), m.begin(), m.end());
  word.insert(word.end(), a.begin() + pos + len, a.end());
  if (word.empty()) return Path::idempotent(w.point_at(sig, pos));
  return Path::word(sig, std::move(word));
}

// Full normal form against a monic basis described by its index structures.
// Retires irreducible leading terms, rewrites reducible ones (leftmost
// shortest reducer) until nothing is left; rewriting never raises degree.
template <class S>
NCPoly<S> reduce_by(const AlgebraSignature& sig, const std::vector<NCPoly<S>>& elems,
                    const LeadIndex& lead_index, const std::vector<char>& dead_point,
                    const std::vector<int>& dead_elem, int max_lead_len, NCPoly<S> work) {
  std::vector<typename NCPoly<S>::Term> done;
  std::vector<uint32_t> key;
  while (!work.is_zero()) {
    Path w = work.leading().first;
    S c = work.leading().second;
    int rpos = -1, rlen = 0, relem = -1;
    for (int p = 0; p <= w.degree() && rpos < 0; ++p) {
      int pt = w.point_at(sig, p);
      if (dead_point[static_cast<size_t>(pt - 1)]) {
        rpos = p;
        relem = dead_elem[static_cast<size_t>(pt - 1)];
      }
    }
    if (rpos < 0) {
      auto arrows = w.arrows();
      for (int p = 0; p < w.degree() && rpos < 0; ++p) {
        key.clear();
        int maxl = std::min(max_lead_len, w.degree() - p);
        for (int l = 1; l <= maxl; ++l) {
          key.push_back(arrows[static_cast<size_t>(p + l - 1)]);
          auto it = lead_index.find(key);
          if (it != lead_index.end()) {
            rpos = p;
            rlen = l;
            relem = it->second;
            break;
          }
        }
      }
    }
    if (rpos < 0) {
      done.emplace_back(w, c);
      work -= NCPoly<S>::term(work.signature(), w, c);
      continue;
    }
    const NCPoly<S>& g = elems[static_cast<size_t>(relem)];
    std::vector<typename NCPoly<S>::Term> repl;
    repl.reserve(g.terms().size());
    for (const auto& t : g.terms())
      repl.emplace_back(splice(sig, w, rpos, rlen, t.first), c * t.second);
    work -= NCPoly<S>::from_terms(work.signature(), std::move(repl));
  }
  return NCPoly<S>::from_terms(work.signature(), std::move(done));
}

// The S-polynomial of the overlap u = x.c, v = c.y with |c| = L: gi*y - x*gj.
template <class S>
NCPoly<S> spoly(const AlgebraSignature& sig, const SignaturePtr& sp, const NCPoly<S>& gi,
                const NCPoly<S>& gj, int L) {
  const Path& u = gi.leading().first;
  const Path& v = gj.leading().first;
  auto ua = u.arrows();
  auto va = v.arrows();
  std::vector<uint32_t> xw(ua.begin(), ua.end() - L);
  std::vector<uint32_t> yw(va.begin() + L, va.end());
  Path x = xw.empty() ? Path::idempotent(u.source()) : Path::word(sig, std::move(xw));
  Path y = yw.empty() ? Path::idempotent(v.target()) : Path::word(sig, std::move(yw));
  return gi * NCPoly<S>::term(sp, y, S(1)) - NCPoly<S>::term(sp, x, S(1)) * gj;
}

}  // namespace detail

template <class S>
class GroebnerBasis;
template <class S>
GroebnerBasis<S> complete(const Presentation<S>& pres, int degree_bound);

// Inter-reduced monic basis whose normal forms are well-defined up to
// complete_up_to(). Immutable once built; safe to share.
template <class S = Rational>
class GroebnerBasis {
public:
  const Presentation<S>& presentation() const { return pres_; }
  const SignaturePtr& signature() const { return pres_.sig; }
  std::span<const NCPoly<S>> elements() const { return elems_; }
  int degree_bound() const { return bound_; }
  int complete_up_to() const { return bound_; }
  bool point_killed(int i) const { return dead_point_[static_cast<size_t>(i - 1)] != 0; }

  NCPoly<S> normal_form(const NCPoly<S>& f) const {
    require_same_signature(pres_.sig, f.signature());
    if (f.degree() > bound_)
      throw std::invalid_argument("normal_form: degree exceeds completion bound");
    return detail::reduce_by(*pres_.sig, elems_, lead_index_, dead_point_, dead_elem_,
                             max_lead_len_, f);
  }

  // normal words of each degree 0..dmax, all components together
  std::vector<std::vector<Path>> normal_words_up_to(int dmax) const {
    std::vector<std::vector<Path>> out(static_cast<size_t>(dmax) + 1);
    const AlgebraSignature& sig = *pres_.sig;
    for (int i = 1; i <= sig.points(); ++i)
      if (!dead_point_[static_cast<size_t>(i - 1)]) out[0].push_back(Path::idempotent(i));
    std::vector<uint32_t> key;
    for (int d = 1; d <= dmax; ++d) {
      for (const Path& w : out[static_cast<size_t>(d - 1)]) {
        for (int k = 0; k < sig.arrow_count(); ++k) {
          const Arrow& a = sig.arrow(k);
          if (a.source != w.target()) continue;
          if (dead_point_[static_cast<size_t>(a.target - 1)]) continue;
          std::vector<uint32_t> word(w.arrows().begin(), w.arrows().end());
          word.push_back(static_cast<uint32_t>(k));
          bool normal = true;
          int maxl = std::min(max_lead_len_, d);
          for (int l = 1; l <= maxl && normal; ++l) {
            key.assign(word.end() - l, word.end());
            if (lead_index_.count(key)) normal = false;
          }
          if (normal) out[static_cast<size_t>(d)].push_back(Path::word(sig, std::move(word)));
        }
      }
    }
    return out;
  }

  // diamond-lemma check: every overlap ambiguity with overlap word within the
  // bound reduces to zero
  bool overlaps_resolve() const {
    for (size_t i = 0; i < elems_.size(); ++i)
      for (size_t j = 0; j < elems_.size(); ++j) {
        const Path& u = elems_[i].leading().first;
        const Path& v = elems_[j].leading().first;
        int maxL = std::min(u.degree(), v.degree()) - 1;
        for (int L = 1; L <= maxL; ++L) {
          if (u.degree() + v.degree() - L > bound_) continue;
          if (!detail::overlap_matches(u, v, L)) continue;
          NCPoly<S> s = detail::spoly(*pres_.sig, pres_.sig, elems_[i], elems_[j], L);
          if (!detail::reduce_by(*pres_.sig, elems_, lead_index_, dead_point_, dead_elem_,
                                 max_lead_len_, std::move(s))
                   .is_zero())
            return false;
        }
      }
    return true;
  }

private:
  friend GroebnerBasis complete<S>(const Presentation<S>&, int);

  GroebnerBasis(Presentation<S> pres, int bound) : pres_(std::move(pres)), bound_(bound) {}

  Presentation<S> pres_;
  int bound_ = 1;
  std::vector<NCPoly<S>> elems_;  // monic, inter-reduced, sorted by leading word
  detail::LeadIndex lead_index_;
  std::vector<char> dead_point_;
  std::vector<int> dead_elem_;
  int max_lead_len_ = 0;
};

namespace detail {

template <class S>
struct Completion {
  const Presentation<S>& pres;
  const AlgebraSignature& sig;
  int bound;

  std::vector<NCPoly<S>> elems;
  std::vector<char> alive;
  LeadIndex lead_index;
  std::vector<char> dead_point;
  std::vector<int> dead_elem;
  std::vector<int> alive_count_by_len;
  int max_lead_len = 0;
  std::deque<NCPoly<S>> queue;
  std::map<std::pair<int, long long>, std::tuple<int, int, int>> pairs;  // (odeg,seq)->(i,j,L)
  long long seq = 0;
  bool killed_any = false;

  Completion(const Presentation<S>& p, int b) : pres(p), sig(*p.sig), bound(b) {
    dead_point.assign(static_cast<size_t>(sig.points()), 0);
    dead_elem.assign(static_cast<size_t>(sig.points()), -1);
    alive_count_by_len.assign(static_cast<size_t>(bound) + 1, 0);
    for (const auto& r : p.relations) queue.push_back(r);
  }

  NCPoly<S> reduce(NCPoly<S> work) const {
    return reduce_by(sig, elems, lead_index, dead_point, dead_elem, max_lead_len,
                     std::move(work));
  }

  void refresh_max_len() {
    max_lead_len = 0;
    for (int l = bound; l >= 1; --l)
      if (alive_count_by_len[static_cast<size_t>(l)] > 0) {
        max_lead_len = l;
        break;
      }
  }

  void kill(int idx) {
    alive[static_cast<size_t>(idx)] = 0;
    const Path& u = elems[static_cast<size_t>(idx)].leading().first;
    if (!u.is_idempotent()) {
      std::vector<uint32_t> key(u.arrows().begin(), u.arrows().end());
      lead_index.erase(key);
      alive_count_by_len[static_cast<size_t>(u.degree())]--;
      refresh_max_len();
    }
    killed_any = true;
    queue.push_back(elems[static_cast<size_t>(idx)]);
  }

  void add_element(NCPoly<S> h) {
    const Path u = h.leading().first;
    int idx = static_cast<int>(elems.size());
    if (u.is_idempotent()) {
      int pt = u.source();
      // anything whose lead visits pt is now reducible
      for (size_t e = 0; e < elems.size(); ++e) {
        if (!alive[e]) continue;
        const Path& v = elems[e].leading().first;
        bool visits = false;
        for (int p = 0; p <= v.degree() && !visits; ++p)
          if (v.point_at(sig, p) == pt) visits = true;
        if (visits) kill(static_cast<int>(e));
      }
      elems.push_back(std::move(h));
      alive.push_back(1);
      dead_point[static_cast<size_t>(pt - 1)] = 1;
      dead_elem[static_cast<size_t>(pt - 1)] = idx;
      return;
    }
    // retire alive elements whose (longer) lead contains u
    bool longer_exists = false;
    for (int l = u.degree() + 1; l <= bound; ++l)
      if (alive_count_by_len[static_cast<size_t>(l)] > 0) longer_exists = true;
    if (longer_exists) {
      for (size_t e = 0; e < elems.size(); ++e) {
        if (!alive[e]) continue;
        const Path& v = elems[e].leading().first;
        if (v.degree() > u.degree() && find_sub(sig, u, v) >= 0) kill(static_cast<int>(e));
      }
    }
    elems.push_back(std::move(h));
    alive.push_back(1);
    lead_index.emplace(std::vector<uint32_t>(u.arrows().begin(), u.arrows().end()), idx);
    alive_count_by_len[static_cast<size_t>(u.degree())]++;
    max_lead_len = std::max(max_lead_len, u.degree());
    // overlap pairs with every alive element (including itself)
    for (size_t e = 0; e < elems.size(); ++e) {
      if (!alive[e]) continue;
      const Path& v = elems[e].leading().first;
      if (v.is_idempotent()) continue;
      int maxL = std::min(u.degree(), v.degree()) - 1;
      for (int L = 1; L <= maxL; ++L) {
        int odeg = u.degree() + v.degree() - L;
        if (odeg > bound) continue;
        if (overlap_matches(u, v, L))
          pairs.emplace(std::make_pair(odeg, seq++),
                        std::make_tuple(idx, static_cast<int>(e), L));
        if (static_cast<int>(e) != idx && overlap_matches(v, u, L))
          pairs.emplace(std::make_pair(odeg, seq++),
                        std::make_tuple(static_cast<int>(e), idx, L));
      }
    }
  }

  void run() {
    while (!queue.empty() || !pairs.empty()) {
      NCPoly<S> cand = NCPoly<S>::zero(pres.sig);
      if (!queue.empty()) {
        cand = std::move(queue.front());
        queue.pop_front();
      } else {
        auto it = pairs.begin();
        auto [i, j, L] = it->second;
        pairs.erase(it);
        if (!alive[static_cast<size_t>(i)] || !alive[static_cast<size_t>(j)]) continue;
        cand = spoly(sig, pres.sig, elems[static_cast<size_t>(i)],
                     elems[static_cast<size_t>(j)], L);
      }
      NCPoly<S> h = reduce(std::move(cand));
      if (h.is_zero()) continue;
      add_element(h.monic());
    }
  }

  // re-check every ambiguity of the current alive set; add what fails
  bool sweep() {
    bool clean = true;
    for (size_t i = 0; i < elems.size(); ++i) {
      if (!alive[i]) continue;
      for (size_t j = 0; j < elems.size(); ++j) {
        if (!alive[j]) continue;
        const Path& u = elems[i].leading().first;
        const Path& v = elems[j].leading().first;
        int maxL = std::min(u.degree(), v.degree()) - 1;
        for (int L = 1; L <= maxL; ++L) {
          if (u.degree() + v.degree() - L > bound) continue;
          if (!overlap_matches(u, v, L)) continue;
          NCPoly<S> h =
              reduce(spoly(sig, pres.sig, elems[i], elems[j], L));
          if (!h.is_zero()) {
            add_element(h.monic());
            clean = false;
            run();
          }
        }
      }
    }
    return clean;
  }

  void tail_normalize() {
    for (size_t e = 0; e < elems.size(); ++e) {
      if (!alive[e]) continue;
      const auto& [lw, lc] = elems[e].leading();
      NCPoly<S> lead = NCPoly<S>::term(pres.sig, lw, lc);
      NCPoly<S> tail = reduce(elems[e] - lead);
      elems[e] = lead + tail;
    }
  }
};

}  // namespace detail

template <class S>
GroebnerBasis<S> complete(const Presentation<S>& pres, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("complete: degree bound must be >= 1");
  if (degree_bound < pres.max_relation_degree())
    throw std::invalid_argument("complete: degree bound below max relation degree");
  detail::Completion<S> c(pres, degree_bound);
  c.run();
  int guard = 0;
  while (c.killed_any) {
    c.killed_any = false;
    if (c.sweep()) break;
    if (++guard > 1000) throw std::logic_error("complete: no fixpoint");
  }
  c.tail_normalize();

  GroebnerBasis<S> gb(pres, degree_bound);
  for (size_t e = 0; e < c.elems.size(); ++e)
    if (c.alive[e]) gb.elems_.push_back(c.elems[e]);
  std::sort(gb.elems_.begin(), gb.elems_.end(), [](const NCPoly<S>& a, const NCPoly<S>& b) {
    return deglex_less(a.leading().first, b.leading().first);
  });
  gb.dead_point_.assign(static_cast<size_t>(pres.sig->points()), 0);
  gb.dead_elem_.assign(static_cast<size_t>(pres.sig->points()), -1);
  for (size_t k = 0; k < gb.elems_.size(); ++k) {
    const Path& u = gb.elems_[k].leading().first;
    if (u.is_idempotent()) {
      gb.dead_point_[static_cast<size_t>(u.source() - 1)] = 1;
      gb.dead_elem_[static_cast<size_t>(u.source() - 1)] = static_cast<int>(k);
    } else {
      gb.lead_index_.emplace(std::vector<uint32_t>(u.arrows().begin(), u.arrows().end()),
                             static_cast<int>(k));
      gb.max_lead_len_ = std::max(gb.max_lead_len_, u.degree());
    }
  }
  return gb;
}

template <class S>
NCPoly<S> normal_form(const NCPoly<S>& f, const GroebnerBasis<S>& gb) {
  return gb.normal_form(f);
}

// Graded/filtered dimensions of the quotient: entry [d][i-1][j-1] counts the
// normal words of degree d from i to j.
template <class S>
std::vector<DimMatrix> quotient_dims(const Presentation<S>& pres, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("quotient_dims: degree bound must be >= 1");
  int internal = std::max(degree_bound, pres.max_relation_degree());
  GroebnerBasis<S> gb = complete(pres, internal);
  auto words = gb.normal_words_up_to(degree_bound);
  const int r = pres.sig->points();
  std::vector<DimMatrix> dims(static_cast<size_t>(degree_bound) + 1,
                              DimMatrix(static_cast<size_t>(r), std::vector<long long>(r, 0)));
  for (int d = 0; d <= degree_bound; ++d)
    for (const Path& w : words[static_cast<size_t>(d)])
      dims[static_cast<size_t>(d)][static_cast<size_t>(w.source() - 1)]
          [static_cast<size_t>(w.target() - 1)]++;
  return dims;
}

struct TotalDimReport {
  bool finite = false;
  long long total = 0;     // exact total when finite, partial sum otherwise
  int vanish_degree = -1;  // first degree with no normal words, -1 if none found
  std::vector<DimMatrix> dims;

  std::vector<long long> per_degree() const {
    std::vector<long long> out;
    for (const auto& m : dims) {
      long long s = 0;
      for (const auto& row : m)
        for (long long v : row) s += v;
      out.push_back(s);
    }
    return out;
  }
};

// Detects finite total dimension: once some degree has no normal words in any
// component, no later degree can (subwords of normal words are normal).
template <class S>
TotalDimReport total_dim_if_finite(const Presentation<S>& pres, int degree_bound) {
  TotalDimReport rep;
  rep.dims = quotient_dims(pres, degree_bound);
  auto per = rep.per_degree();
  for (size_t d = 0; d < per.size(); ++d) {
    if (per[d] == 0) {
      rep.finite = true;
      rep.vanish_degree = static_cast<int>(d);
      break;
    }
    rep.total += per[d];
  }
  return rep;
}

// Append all generator commutators; defined for one-pointed algebras only.
template <class S>
Presentation<S> abelianize(const Presentation<S>& pres) {
  if (pres.sig->points() != 1)
    throw std::invalid_argument("abelianize: defined only for r = 1");
  std::vector<NCPoly<S>> rels = pres.relations;
  const int n = pres.sig->arrow_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      NCPoly<S> ga = NCPoly<S>::generator(pres.sig, a);
      NCPoly<S> gb = NCPoly<S>::generator(pres.sig, b);
      rels.push_back(ga * gb - gb * ga);
    }
  return Presentation<S>(pres.sig, std::move(rels), pres.truncation);
}

}  // namespace ncdeform
