#include "doctest.h"

#include <random>

#include "ncdeform/algebra.hpp"
#include "test_util.hpp"

using namespace ncdeform;
using Poly = NCPoly<Rational>;

namespace {

SignaturePtr two_loops() {
  return make_signature(1, {{"a", 1, 1}, {"b", 1, 1}});
}
SignaturePtr two_cycle() {
  return make_signature(2, {{"x", 1, 2}, {"y", 2, 1}});
}

}  // namespace

TEST_CASE("make_signature computes dims and keeps arrow order") {
  auto s1 = two_loops();
  CHECK(s1->dims() == std::vector<std::vector<int>>{{2}});
  CHECK(s1->arrow(0).name == "a");
  CHECK(s1->arrow(1).slot == 1);

  auto s2 = two_cycle();
  CHECK(s2->dims() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  auto s3 = make_signature(
      2, {{"e12", 1, 2}, {"e21", 2, 1}, {"e11", 1, 1}, {"e22", 2, 2}});
  CHECK(s3->dims() == std::vector<std::vector<int>>{{1, 1}, {1, 1}});

  CHECK_THROWS_AS(make_signature(2, {{"x", 1, 2}, {"x", 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(2, {{"x", 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(0, {}), std::invalid_argument);
  // reserved spelling collides with idempotents in the text format
  CHECK_THROWS_AS(make_signature(1, {{"e_1", 1, 1}}), std::invalid_argument);
}

TEST_CASE("idempotents act as partial identities") {
  auto sig = two_cycle();
  Poly e1 = Poly::idempotent(sig, 1);
  Poly e2 = Poly::idempotent(sig, 2);
  Poly x = Poly::generator(sig, 0);
  Poly y = Poly::generator(sig, 1);

  CHECK(e1 * e1 == e1);
  CHECK((e1 * e2).is_zero());
  CHECK(e1 * x == x);
  CHECK((x * e1).is_zero());
  CHECK(x * e2 == x);

  Poly xy = x * y;
  CHECK(xy.degree() == 2);
  CHECK(xy.leading().first.source() == 1);
  CHECK(xy.leading().first.target() == 1);
  Poly yx = y * x;
  CHECK(yx.leading().first.source() == 2);
  CHECK((x * x).is_zero());
}

TEST_CASE("multiplication is bilinear and noncommutative") {
  auto sig = two_loops();
  Poly a = Poly::generator(sig, 0);
  Poly b = Poly::generator(sig, 1);
  Poly prod = (a + b) * (a - b);
  // aa - ab + ba - bb
  CHECK(prod == a * a - a * b + b * a - b * b);
  CHECK(prod.term_count() == 4);
  CHECK(a * b != b * a);
}

TEST_CASE("component and graded_piece") {
  auto sig = two_cycle();
  Poly e1 = Poly::idempotent(sig, 1);
  Poly x = Poly::generator(sig, 0);
  Poly f = e1 + x;
  CHECK(f.component(1, 1) == e1);
  CHECK(f.component(1, 2) == x);
  CHECK(f.component(2, 2).is_zero());
  CHECK_THROWS_AS(f.component(0, 1), std::invalid_argument);

  Poly xy = x * Poly::generator(sig, 1);
  Poly g = e1 + x + xy;
  CHECK(g.graded_piece(0) == e1);
  CHECK(g.graded_piece(1) == x);
  CHECK(g.graded_piece(2) == xy);
  CHECK(g.graded_piece(3).is_zero());

  auto sl = two_loops();
  Poly a = Poly::generator(sl, 0), b = Poly::generator(sl, 1);
  Poly comm = a * b - b * a;
  CHECK(comm.graded_piece(2) == comm);
}

TEST_CASE("sum of graded pieces and components reassembles f") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 200; ++iter) {
    auto sig = testutil::random_signature(rng);
    Poly f = testutil::random_poly(rng, sig, 4);
    Poly by_deg = Poly::zero(sig);
    for (int d = 0; d <= f.degree(); ++d) by_deg += f.graded_piece(d);
    CHECK(by_deg == f);
    Poly by_comp = Poly::zero(sig);
    for (int i = 1; i <= sig->points(); ++i)
      for (int j = 1; j <= sig->points(); ++j) by_comp += f.component(i, j);
    CHECK(by_comp == f);
  }
}

TEST_CASE("full idempotent sum is a two-sided identity") {
  std::mt19937_64 rng(515);
  for (int iter = 0; iter < 100; ++iter) {
    auto sig = testutil::random_signature(rng);
    Poly unit = Poly::zero(sig);
    for (int i = 1; i <= sig->points(); ++i) unit += Poly::idempotent(sig, i);
    Poly f = testutil::random_poly(rng, sig, 4);
    CHECK(unit * f == f);
    CHECK(f * unit == f);
  }
}

TEST_CASE("orthogonality of idempotents") {
  auto sig = two_cycle();
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Poly p = Poly::idempotent(sig, i) * Poly::idempotent(sig, j);
      if (i == j)
        CHECK(p == Poly::idempotent(sig, i));
      else
        CHECK(p.is_zero());
    }
}

TEST_CASE("incomposable arrows annihilate") {
  auto sig = make_signature(3, {{"u", 1, 2}, {"v", 1, 3}, {"w", 3, 1}});
  Poly u = Poly::generator(sig, 0), v = Poly::generator(sig, 1), w = Poly::generator(sig, 2);
  CHECK((u * v).is_zero());
  CHECK((u * w).is_zero());
  CHECK(!(v * w).is_zero());
}

TEST_CASE("associativity on randomized polynomials") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 1000; ++iter) {
    auto sig = testutil::random_signature(rng);
    Poly f = testutil::random_poly(rng, sig, 4, 3);
    Poly g = testutil::random_poly(rng, sig, 4, 3);
    Poly h = testutil::random_poly(rng, sig, 4, 3);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("free_dim matches hand counts") {
  auto sl = two_loops();
  CHECK(free_dim(*sl, 3, 1, 1) == 8);
  CHECK(free_dim(*sl, 0, 1, 1) == 1);

  auto sc = two_cycle();
  CHECK(free_dim(*sc, 2, 1, 1) == 1);  // the path xy
  CHECK(free_dim(*sc, 2, 1, 2) == 0);

  auto sq = make_signature(
      2, {{"p", 1, 1}, {"q", 1, 2}, {"r", 2, 1}, {"s", 2, 2}});
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(free_dim(*sq, 2, i, j) == 2);
}

TEST_CASE("free_dim equals brute-force enumeration") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 25; ++iter) {
    auto sig = testutil::random_signature(rng);
    for (int d = 0; d <= 5; ++d)
      for (int i = 1; i <= sig->points(); ++i)
        for (int j = 1; j <= sig->points(); ++j) {
          auto paths = testutil::enumerate_paths(*sig, d, i, j);
          CHECK(free_dim(*sig, d, i, j) == (long long)paths.size());
        }
  }
}

TEST_CASE("signature mismatch is rejected") {
  auto s1 = two_loops();
  auto s2 = two_cycle();
  Poly a = Poly::generator(s1, 0);
  Poly x = Poly::generator(s2, 0);
  CHECK_THROWS_AS(a * x, SignatureMismatch);
  CHECK_THROWS_AS(a + x, SignatureMismatch);

  // structurally equal signatures are interchangeable
  auto s1b = make_signature(1, {{"a", 1, 1}, {"b", 1, 1}});
  Poly a2 = Poly::generator(s1b, 0);
  CHECK(a * a2 == a2 * a);
}

TEST_CASE("coefficient lookup") {
  auto sig = two_loops();
  Poly a = Poly::generator(sig, 0), b = Poly::generator(sig, 1);
  Poly f = Rational(2, 3) * (a * b) - b;
  CHECK(f.coeff((a * b).leading().first) == Rational(2, 3));
  CHECK(f.coeff(b.leading().first) == Rational(-1));
  CHECK(f.coeff(a.leading().first).is_zero());
}

TEST_CASE("poly over prime field") {
  using F = Fp<101>;
  auto sig = two_loops();
  NCPoly<F> a = NCPoly<F>::generator(sig, 0);
  NCPoly<F> b = NCPoly<F>::generator(sig, 1);
  NCPoly<F> f = a * b - b * a;
  CHECK(f.term_count() == 2);
  NCPoly<F> g = F(101) * f;
  CHECK(g.is_zero());
}
