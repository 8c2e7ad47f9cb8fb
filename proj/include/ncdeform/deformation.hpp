#pragma once
// Semi-universal NC deformation base algebras from tangent/obstruction data:
// the presentation T(T1)* / (m*(T2)*) built by dualizing higher products, and
// the inductive obstruction-lifting construction against an abstract oracle.
//
// Computing the A-infinity data itself (from geometry, DGAs, ...) is out of
// scope here: tables come in as input, the oracle abstracts the deformation
// functor.

#include <functional>
#include <string>
#include <vector>

#include "ncdeform/errors.hpp"
#include "ncdeform/rewriting.hpp"

namespace ncdeform {

// Dimensions of the tangent and obstruction bimodules T1, T2 over k^r.
struct BimoduleDims {
  int r = 1;
  std::vector<std::vector<int>> t1;  // r x r
  std::vector<std::vector<int>> t2;  // r x r, finite by hypothesis

  void validate() const {
    if (r < 1) throw std::invalid_argument("BimoduleDims: need r >= 1");
    auto check = [&](const std::vector<std::vector<int>>& m, const char* what) {
      if (static_cast<int>(m.size()) != r)
        throw std::invalid_argument(std::string("BimoduleDims: bad ") + what);
      for (const auto& row : m) {
        if (static_cast<int>(row.size()) != r)
          throw std::invalid_argument(std::string("BimoduleDims: bad ") + what);
        for (int v : row)
          if (v < 0) throw std::invalid_argument(std::string("BimoduleDims: negative ") + what);
      }
    };
    check(t1, "t1");
    check(t2, "t2");
  }

  long long t1_total() const {
    long long s = 0;
    for (const auto& row : t1)
      for (int v : row) s += v;
    return s;
  }
  long long t2_total() const {
    long long s = 0;
    for (const auto& row : t2)
      for (int v : row) s += v;
    return s;
  }
};

struct AInfBasisElem {
  std::string name;
  int src = 1;
  int tgt = 1;
};

// One entry of a higher product table: m_d(t1[inputs[0]] x ... ) has
// coefficient coeff on the T2 basis element t2[output].
struct AInfProductEntry {
  int d = 2;
  std::vector<int> inputs;  // indices into t1 basis
  int output = 0;           // index into t2 basis
  Rational coeff;
};

// Tables of the products m_d : (T1)^(tensor d) -> T2 on chosen bases.
struct AInfinityData {
  int r = 1;
  std::vector<AInfBasisElem> t1;
  std::vector<AInfBasisElem> t2;
  std::vector<AInfProductEntry> products;

  int max_d() const {
    int d = 2;
    for (const auto& e : products) d = std::max(d, e.d);
    return d;
  }

  BimoduleDims dims() const {
    BimoduleDims out;
    out.r = r;
    out.t1.assign(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 0));
    out.t2 = out.t1;
    for (const auto& b : t1) out.t1[static_cast<size_t>(b.src - 1)][static_cast<size_t>(b.tgt - 1)]++;
    for (const auto& b : t2) out.t2[static_cast<size_t>(b.src - 1)][static_cast<size_t>(b.tgt - 1)]++;
    return out;
  }

  // The dual basis of T1 realized as arrows: a functional on T1_ij is placed
  // as an arrow i -> j, keeping the quiver shape of T1.
  SignaturePtr signature() const {
    std::vector<ArrowSpec> specs;
    specs.reserve(t1.size());
    for (const auto& b : t1) specs.push_back({b.name, b.src, b.tgt});
    return make_signature(r, std::move(specs));
  }

  // Contract checks on the tables: entries only on composable tuples, with a
  // T2 coordinate whose component matches the tuple's endpoints.
  void validate() const {
    if (r < 1) throw ContractViolation("ainfinity: need r >= 1");
    for (const auto& b : t1)
      if (b.src < 1 || b.src > r || b.tgt < 1 || b.tgt > r)
        throw ContractViolation("ainfinity: t1 basis endpoint out of range");
    for (const auto& b : t2)
      if (b.src < 1 || b.src > r || b.tgt < 1 || b.tgt > r)
        throw ContractViolation("ainfinity: t2 basis endpoint out of range");
    for (const auto& e : products) {
      if (e.d < 2 || static_cast<int>(e.inputs.size()) != e.d)
        throw ContractViolation("ainfinity: product arity mismatch");
      if (e.output < 0 || e.output >= static_cast<int>(t2.size()))
        throw ContractViolation("ainfinity: unknown t2 basis element");
      if (e.coeff.is_zero()) continue;
      int at = -1;
      for (size_t k = 0; k < e.inputs.size(); ++k) {
        int idx = e.inputs[k];
        if (idx < 0 || idx >= static_cast<int>(t1.size()))
          throw ContractViolation("ainfinity: unknown t1 basis element");
        const auto& b = t1[static_cast<size_t>(idx)];
        if (k > 0 && b.src != at)
          throw ContractViolation("ainfinity: non-composable tuple with nonzero entry");
        at = b.tgt;
      }
      const auto& z = t2[static_cast<size_t>(e.output)];
      if (t1[static_cast<size_t>(e.inputs.front())].src != z.src || at != z.tgt)
        throw ContractViolation("ainfinity: entry lands in a mismatched T2 component");
    }
  }
};

// Relations of the base algebra presentation, one per T2 basis element, prior
// to any canonicalization: s_l = sum over tuples w of <m_d(w), z_l> w*.
inline std::vector<NCPoly<Rational>> dualized_relations(const AInfinityData& a,
                                                        const SignaturePtr& sig) {
  a.validate();
  std::vector<NCPoly<Rational>> rels;
  rels.reserve(a.t2.size());
  for (size_t l = 0; l < a.t2.size(); ++l) {
    std::vector<std::pair<Path, Rational>> raw;
    for (const auto& e : a.products) {
      if (e.output != static_cast<int>(l) || e.coeff.is_zero()) continue;
      std::vector<uint32_t> word(e.inputs.begin(), e.inputs.end());
      raw.emplace_back(Path::word(*sig, std::move(word)), e.coeff);
    }
    rels.push_back(NCPoly<Rational>::from_terms(sig, std::move(raw)));
  }
  return rels;
}

// T(T1)* / (m*(T2)*): the semi-universal base algebra presentation, correct
// modulo degree max_d + 1 (higher products beyond the supplied tables are
// treated as zero).
inline Presentation<Rational> dualize_products(const AInfinityData& a) {
  SignaturePtr sig = a.signature();
  std::vector<NCPoly<Rational>> rels = dualized_relations(a, sig);
  return Presentation<Rational>(sig, std::move(rels), std::max(2, a.max_d()));
}

// Given the current relation set {s_{k,l}} and the truncation degree k,
// returns each s_{k+1,l}: degree <= k+1, agreeing with s_{k,l} modulo degree
// k+1 (graded pieces up to k unchanged).
using ObstructionOracle = std::function<std::vector<NCPoly<Rational>>(
    const std::vector<NCPoly<Rational>>&, int)>;

// The oracle induced by a fixed relation set: returns its truncations. Models
// a deformation functor whose semi-universal base is already known.
inline ObstructionOracle truncation_oracle(std::vector<NCPoly<Rational>> target) {
  return [target = std::move(target)](const std::vector<NCPoly<Rational>>& current,
                                      int k) {
    (void)current;
    std::vector<NCPoly<Rational>> out;
    out.reserve(target.size());
    for (const auto& s : target) out.push_back(s.truncated(k + 1));
    return out;
  };
}

// The inductive construction: start from s_{1,l} = 0 and refine one degree at
// a time through the oracle. Returns the presentation on the dual tangent
// arrows with relations {s_{degree_bound,l}}, one per T2 basis element.
// An oracle answer that disagrees with the previous truncation aborts the
// computation; it is a functoriality breach, not something to repair.
inline Presentation<Rational> lift_obstructions(const BimoduleDims& dims, SignaturePtr sig,
                                                const ObstructionOracle& oracle,
                                                int degree_bound) {
  dims.validate();
  if (degree_bound < 2) throw std::invalid_argument("lift_obstructions: need degree bound >= 2");
  if (!sig) throw std::invalid_argument("lift_obstructions: null signature");
  // the signature must realize (T1)*: one arrow i -> j per t1[i][j]
  for (int i = 1; i <= dims.r; ++i)
    for (int j = 1; j <= dims.r; ++j) {
      int count = 0;
      for (const Arrow& arr : sig->arrows())
        if (arr.source == i && arr.target == j) ++count;
      if (count != dims.t1[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)])
        throw std::invalid_argument("lift_obstructions: signature does not match t1 dims");
    }

  const size_t n = static_cast<size_t>(dims.t2_total());
  std::vector<NCPoly<Rational>> current(n, NCPoly<Rational>::zero(sig));
  for (int k = 1; k < degree_bound; ++k) {
    std::vector<NCPoly<Rational>> next = oracle(current, k);
    if (next.size() != n)
      throw ContractViolation("oracle returned a wrong number of relations");
    for (size_t l = 0; l < n; ++l) {
      require_same_signature(sig, next[l].signature());
      if (next[l].degree() > k + 1)
        throw ContractViolation("oracle returned a relation beyond degree " +
                                std::to_string(k + 1));
      if (!(next[l].truncated(k) == current[l].truncated(k)))
        throw ContractViolation("oracle answer disagrees with its previous truncation");
    }
    current = std::move(next);
  }
  return Presentation<Rational>(sig, std::move(current), degree_bound);
}

// Convenience overload: a canonical signature built from t1 with auto-named
// arrows x<i><j>_<slot>.
inline Presentation<Rational> lift_obstructions(const BimoduleDims& dims,
                                                const ObstructionOracle& oracle,
                                                int degree_bound) {
  dims.validate();
  std::vector<ArrowSpec> specs;
  for (int i = 1; i <= dims.r; ++i)
    for (int j = 1; j <= dims.r; ++j)
      for (int s = 0; s < dims.t1[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; ++s)
        specs.push_back({"x" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(s),
                         i, j});
  return lift_obstructions(dims, make_signature(dims.r, std::move(specs)), oracle,
                           degree_bound);
}

// Nakayama-style generator test: with candidate_gens contained in the ideal
// of ideal_gens, the two generate the same truncated ideal iff the quotient
// dimensions agree through pres.truncation.
inline bool nakayama_reduce(const std::vector<NCPoly<Rational>>& ideal_gens,
                            const std::vector<NCPoly<Rational>>& candidate_gens,
                            const Presentation<Rational>& pres) {
  Presentation<Rational> full(pres.sig, ideal_gens, pres.truncation);
  Presentation<Rational> cand(pres.sig, candidate_gens, pres.truncation);
  return quotient_dims(full, pres.truncation) == quotient_dims(cand, pres.truncation);
}

}  // namespace ncdeform
