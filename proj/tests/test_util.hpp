#pragma once
// Shared helpers for the test suites: random signatures/polynomials and an
// independent brute-force path enumerator used as a counting oracle.

#include <random>
#include <string>
#include <vector>

#include "ncdeform/algebra.hpp"

namespace testutil {

using ncdeform::AlgebraSignature;
using ncdeform::ArrowSpec;
using ncdeform::NCPoly;
using ncdeform::Path;
using ncdeform::Rational;
using ncdeform::SignaturePtr;

// All composable words of length d from point i to point j, by direct walk.
// Deliberately ignores free_dim and the rewriting machinery.
inline std::vector<std::vector<uint32_t>> enumerate_paths(const AlgebraSignature& sig, int d,
                                                          int i, int j) {
  std::vector<std::vector<uint32_t>> acc;
  std::vector<uint32_t> cur;
  auto walk = [&](auto&& self, int at, int left) -> void {
    if (left == 0) {
      if (at == j) acc.push_back(cur);
      return;
    }
    for (int k = 0; k < sig.arrow_count(); ++k) {
      if (sig.arrow(k).source != at) continue;
      cur.push_back(static_cast<uint32_t>(k));
      self(self, sig.arrow(k).target, left - 1);
      cur.pop_back();
    }
  };
  walk(walk, i, d);
  return acc;
}

inline SignaturePtr random_signature(std::mt19937_64& rng, int max_r = 3, int max_arrows = 5) {
  int r = 1 + static_cast<int>(rng() % max_r);
  int n = 1 + static_cast<int>(rng() % max_arrows);
  std::vector<ArrowSpec> specs;
  for (int k = 0; k < n; ++k)
    specs.push_back({"g" + std::to_string(k), 1 + static_cast<int>(rng() % r),
                     1 + static_cast<int>(rng() % r)});
  return ncdeform::make_signature(r, std::move(specs));
}

inline Path random_path(std::mt19937_64& rng, const AlgebraSignature& sig, int max_deg) {
  int d = static_cast<int>(rng() % (max_deg + 1));
  for (int attempt = 0; attempt < 64; ++attempt) {
    int at = 1 + static_cast<int>(rng() % sig.points());
    std::vector<uint32_t> word;
    int here = at;
    bool ok = true;
    for (int step = 0; step < d; ++step) {
      std::vector<int> outs;
      for (int k = 0; k < sig.arrow_count(); ++k)
        if (sig.arrow(k).source == here) outs.push_back(k);
      if (outs.empty()) {
        ok = false;
        break;
      }
      int k = outs[rng() % outs.size()];
      word.push_back(static_cast<uint32_t>(k));
      here = sig.arrow(k).target;
    }
    if (!ok) {
      d = d > 0 ? d - 1 : 0;
      continue;
    }
    if (word.empty()) return Path::idempotent(at);
    return Path::word(sig, std::move(word));
  }
  return Path::idempotent(1);
}

inline NCPoly<Rational> random_poly(std::mt19937_64& rng, const SignaturePtr& sig, int max_deg,
                                    int max_terms = 4) {
  std::vector<std::pair<Path, Rational>> raw;
  int n = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < n; ++t) {
    long long num = static_cast<long long>(rng() % 9) - 4;
    long long den = 1 + static_cast<long long>(rng() % 3);
    raw.emplace_back(random_path(rng, *sig, max_deg), Rational(num, den));
  }
  return NCPoly<Rational>::from_terms(sig, std::move(raw));
}

}  // namespace testutil
