#pragma once
// Generators and verifiers for the worked examples: NC deformations of linear
// subspaces (Grassmann case), the trivial extension R_e, and the arithmetic
// of contraction algebras under generic deformation (matrix models and
// dimension identities).

#include <map>
#include <string>
#include <vector>

#include "ncdeform/deformation.hpp"
#include "ncdeform/rewriting.hpp"

namespace ncdeform {

namespace detail {

inline long long rational_rank(std::vector<std::vector<Rational>> mat) {
  const size_t rows = mat.size();
  if (rows == 0) return 0;
  const size_t cols = mat[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && mat[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(mat[rank], mat[piv]);
    for (size_t r2 = rank + 1; r2 < rows; ++r2) {
      if (mat[r2][c].is_zero()) continue;
      Rational f = mat[r2][c] / mat[rank][c];
      for (size_t c2 = c; c2 < cols; ++c2) mat[r2][c2] -= f * mat[rank][c2];
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

}  // namespace detail

// An m-dimensional subspace of an n-dimensional space; deformation parameters
// a_{ij} with 1 <= i <= m < j <= n.
struct GrassmannSpec {
  int m = 1;
  int n = 2;

  void validate() const {
    if (m < 0 || n < m) throw std::invalid_argument("GrassmannSpec: need 0 <= m <= n");
  }
  int params() const { return m * (n - m); }
};

namespace detail {
inline std::string grassmann_name(int i, int j) {
  return "a" + std::to_string(i) + "_" + std::to_string(j);
}
}  // namespace detail

// One-pointed presentation on the a_{ij} with the two families of quadratic
// relations: plain commutators within a row i, and the crossed four-term
// relations for i1 < i2, j1 < j2.
inline Presentation<Rational> grassmann_presentation(GrassmannSpec spec) {
  spec.validate();
  const int m = spec.m, n = spec.n;
  std::vector<ArrowSpec> arrows;
  for (int i = 1; i <= m; ++i)
    for (int j = m + 1; j <= n; ++j) arrows.push_back({detail::grassmann_name(i, j), 1, 1});
  SignaturePtr sig = make_signature(1, std::move(arrows));
  using P = NCPoly<Rational>;
  auto g = [&](int i, int j) {
    return P::generator(sig, sig->find(detail::grassmann_name(i, j)));
  };
  std::vector<P> rels;
  for (int i = 1; i <= m; ++i)
    for (int j1 = m + 1; j1 <= n; ++j1)
      for (int j2 = j1 + 1; j2 <= n; ++j2)
        rels.push_back(g(i, j1) * g(i, j2) - g(i, j2) * g(i, j1));
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1 + 1; i2 <= m; ++i2)
      for (int j1 = m + 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2)
          rels.push_back(g(i1, j1) * g(i2, j2) - g(i2, j2) * g(i1, j1) +
                         g(i2, j1) * g(i1, j2) - g(i1, j2) * g(i2, j1));
  return Presentation<Rational>(sig, std::move(rels), 2);
}

struct GrassmannCounts {
  long long t1_dim = 0;
  long long t2_dim = 0;
  long long relation_rank = 0;
};

// t1 = m(n-m), t2 = C(m+1,2) C(n-m,2), and the exact rank over Q of the
// quadratic relation coefficients. The rank always equals t2: the relations
// are linearly independent quadratic forms; this is re-derived here rather
// than assumed.
inline GrassmannCounts grassmann_counts(GrassmannSpec spec) {
  spec.validate();
  GrassmannCounts out;
  out.t1_dim = static_cast<long long>(spec.m) * (spec.n - spec.m);
  out.t2_dim = detail::binom(spec.m + 1, 2) * detail::binom(spec.n - spec.m, 2);
  Presentation<Rational> pres = grassmann_presentation(spec);
  const long long ng = out.t1_dim;
  std::vector<std::vector<Rational>> mat;
  for (const auto& rel : pres.relations) {
    std::vector<Rational> row(static_cast<size_t>(ng * ng), Rational(0));
    for (const auto& [path, c] : rel.terms()) {
      auto w = path.arrows();
      row[static_cast<size_t>(w[0]) * static_cast<size_t>(ng) + w[1]] = c;
    }
    mat.push_back(std::move(row));
  }
  out.relation_rank = detail::rational_rank(std::move(mat));
  if (out.relation_rank != out.t2_dim)
    throw std::logic_error("grassmann_counts: relation rank differs from the obstruction dim");
  return out;
}

// Quadratic product tables read off the presentation: m_2(u (x) v) has
// z_l-coordinate equal to the coefficient of the word uv in relation l.
inline AInfinityData grassmann_ainfinity(GrassmannSpec spec) {
  spec.validate();
  Presentation<Rational> pres = grassmann_presentation(spec);
  AInfinityData a;
  a.r = 1;
  for (const Arrow& arr : pres.sig->arrows()) a.t1.push_back({arr.name, 1, 1});
  for (size_t l = 0; l < pres.relations.size(); ++l)
    a.t2.push_back({"z" + std::to_string(l + 1), 1, 1});
  for (size_t l = 0; l < pres.relations.size(); ++l)
    for (const auto& [path, c] : pres.relations[l].terms()) {
      auto w = path.arrows();
      a.products.push_back(
          {2, {static_cast<int>(w[0]), static_cast<int>(w[1])}, static_cast<int>(l), c});
    }
  return a;
}

// Recentering at constant values leaves commutators unchanged:
// (u - u0)(v - v0) - (v - v0)(u - u0) = uv - vu, for constants from a fixed
// rational test set, verified symbolically for all generator pairs.
inline bool recentering_identity_check(GrassmannSpec spec) {
  spec.validate();
  if (spec.params() < 2)
    throw std::invalid_argument("recentering_identity_check: need at least two parameters");
  Presentation<Rational> pres = grassmann_presentation(spec);
  using P = NCPoly<Rational>;
  P e = P::idempotent(pres.sig, 1);
  const std::vector<Rational> constants = {Rational(0), Rational(1), Rational(3),
                                           Rational(-2, 5), Rational(-7, 3)};
  const int ng = pres.sig->arrow_count();
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < ng; ++v) {
      if (u == v) continue;
      P gu = P::generator(pres.sig, u);
      P gv = P::generator(pres.sig, v);
      for (const Rational& cu : constants)
        for (const Rational& cv : constants) {
          P du = gu - cu * e;
          P dv = gv - cv * e;
          if (!(du * dv - dv * du == gu * gv - gv * gu)) return false;
        }
    }
  return true;
}

// Degeneration multiplicities of exceptional curves: s generic curves, r
// components, mult[j][i] the coefficient of component i in the 1-cycle
// degeneration of curve j.
struct DegenerationData {
  int r = 1;
  std::vector<std::vector<long long>> mult;  // s x r

  void validate() const {
    if (r < 1) throw std::invalid_argument("DegenerationData: need r >= 1");
    for (const auto& row : mult) {
      if (static_cast<int>(row.size()) != r)
        throw std::invalid_argument("DegenerationData: row width != r");
      long long s = 0;
      for (long long v : row) {
        if (v < 0) throw std::invalid_argument("DegenerationData: negative multiplicity");
        s += v;
      }
      if (s == 0) throw std::invalid_argument("DegenerationData: zero row");
    }
  }
  int curves() const { return static_cast<int>(mult.size()); }
};

struct ContractionNumerics {
  std::vector<long long> m;            // m_j = sum_i mult[j][i]
  std::map<long long, long long> n_d;  // n_d = #{j : m_j = d}
  long long dim_R = 0;                 // sum_j m_j^2
  DimMatrix bimodule_dims;             // [i][i'] = sum_j mult[j][i] mult[j][i']
};

inline ContractionNumerics contraction_numerics(const DegenerationData& data) {
  data.validate();
  ContractionNumerics out;
  out.bimodule_dims.assign(static_cast<size_t>(data.r),
                           std::vector<long long>(static_cast<size_t>(data.r), 0));
  for (const auto& row : data.mult) {
    long long mj = 0;
    for (long long v : row) mj += v;
    out.m.push_back(mj);
    out.n_d[mj] += 1;
    out.dim_R += mj * mj;
    for (int i = 0; i < data.r; ++i)
      for (int i2 = 0; i2 < data.r; ++i2)
        out.bimodule_dims[static_cast<size_t>(i)][static_cast<size_t>(i2)] +=
            row[static_cast<size_t>(i)] * row[static_cast<size_t>(i2)];
  }
  long long by_count = 0;
  for (const auto& [d, nd] : out.n_d) by_count += nd * d * d;
  if (by_count != out.dim_R)
    throw std::logic_error("contraction_numerics: dimension identity failed");
  return out;
}

// r-pointed presentation of prod_j Mat(m_j x m_j). Rows of block j are
// assigned to points according to mult[j]; e_i is the sum of the diagonal
// units at point i. Generators are the off-diagonal matrix units plus all
// diagonal units except one designated unit per point, which is absorbed
// into e_i; every product of two generators is a relation, so the
// presentation closes at degree 2. Points that carry no unit are killed.
inline Presentation<Rational> matrix_model(const DegenerationData& data) {
  data.validate();
  struct Row {
    int block;
    int index;  // within block, 1-based
    int point;  // 1-based
  };
  std::vector<Row> rows;
  std::vector<std::vector<int>> block_rows(data.mult.size());  // global row ids per block
  for (size_t j = 0; j < data.mult.size(); ++j)
    for (int i = 1; i <= data.r; ++i)
      for (long long c = 0; c < data.mult[j][static_cast<size_t>(i - 1)]; ++c) {
        block_rows[j].push_back(static_cast<int>(rows.size()));
        rows.push_back({static_cast<int>(j), static_cast<int>(block_rows[j].size()), i});
      }

  std::vector<int> designated(static_cast<size_t>(data.r), -1);  // point -> global row
  for (size_t g = 0; g < rows.size(); ++g)
    if (designated[static_cast<size_t>(rows[g].point - 1)] < 0)
      designated[static_cast<size_t>(rows[g].point - 1)] = static_cast<int>(g);

  // generators: units u<j>_<p>_<q> (p != q) and free diagonals d<j>_<p>
  std::vector<ArrowSpec> arrows;
  std::map<std::pair<int, int>, int> unit_gen;  // (global row p, global row q) -> arrow idx
  for (size_t j = 0; j < block_rows.size(); ++j)
    for (int p : block_rows[j])
      for (int q : block_rows[j]) {
        const Row &rp = rows[static_cast<size_t>(p)], &rq = rows[static_cast<size_t>(q)];
        if (p == q && designated[static_cast<size_t>(rp.point - 1)] == p) continue;
        std::string name =
            p == q ? "d" + std::to_string(j + 1) + "_" + std::to_string(rp.index)
                   : "u" + std::to_string(j + 1) + "_" + std::to_string(rp.index) + "_" +
                         std::to_string(rq.index);
        unit_gen[{p, q}] = static_cast<int>(arrows.size());
        arrows.push_back({std::move(name), rp.point, rq.point});
      }
  SignaturePtr sig = make_signature(data.r, std::move(arrows));
  using P = NCPoly<Rational>;

  // the unit E_pp as a polynomial: its generator, or e_i minus the other
  // diagonals at the point for the designated row
  auto diag_expr = [&](int p) {
    const Row& rp = rows[static_cast<size_t>(p)];
    if (designated[static_cast<size_t>(rp.point - 1)] != p)
      return P::generator(sig, unit_gen.at({p, p}));
    P out = P::idempotent(sig, rp.point);
    for (size_t g = 0; g < rows.size(); ++g)
      if (rows[g].point == rp.point && static_cast<int>(g) != p)
        out -= P::generator(sig, unit_gen.at({static_cast<int>(g), static_cast<int>(g)}));
    return out;
  };
  auto unit_expr = [&](int p, int q) {
    return p == q ? diag_expr(p) : P::generator(sig, unit_gen.at({p, q}));
  };

  std::vector<P> rels;
  for (const auto& [pq1, a1] : unit_gen)
    for (const auto& [pq2, a2] : unit_gen) {
      const Row& tgt1 = rows[static_cast<size_t>(pq1.second)];
      const Row& src2 = rows[static_cast<size_t>(pq2.first)];
      if (tgt1.point != src2.point) continue;  // not even composable as a path
      P word = P::generator(sig, a1) * P::generator(sig, a2);
      if (pq1.second == pq2.first)  // matrix indices meet: E_pq E_qs = E_ps
        rels.push_back(word - unit_expr(pq1.first, pq2.second));
      else
        rels.push_back(std::move(word));
    }
  for (int i = 1; i <= data.r; ++i)
    if (designated[static_cast<size_t>(i - 1)] < 0) rels.push_back(P::idempotent(sig, i));
  return Presentation<Rational>(sig, std::move(rels), 2);
}

// The trivial extension k^r + End(k^r) with square-zero ideal: one arrow per
// ordered pair of points, every degree-2 word a relation.
inline Presentation<Rational> trivial_extension_re(int r) {
  if (r < 1) throw std::invalid_argument("trivial_extension_re: need r >= 1");
  std::vector<ArrowSpec> arrows;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      arrows.push_back({"E" + std::to_string(i) + "_" + std::to_string(j), i, j});
  SignaturePtr sig = make_signature(r, std::move(arrows));
  using P = NCPoly<Rational>;
  std::vector<P> rels;
  for (int k = 0; k < sig->arrow_count(); ++k)
    for (int l = 0; l < sig->arrow_count(); ++l) {
      P w = P::generator(sig, k) * P::generator(sig, l);
      if (!w.is_zero()) rels.push_back(std::move(w));
    }
  return Presentation<Rational>(sig, std::move(rels), 2);
}

}  // namespace ncdeform
