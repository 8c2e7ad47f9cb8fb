#include "doctest.h"

#include <random>

#include "ncdeform/bigint.hpp"
#include "ncdeform/scalar.hpp"

using ncdeform::BigInt;
using ncdeform::Rational;

namespace {

BigInt from128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 m = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  BigInt out;
  BigInt base(1);
  while (m) {
    out += BigInt((long long)(m & 0xffffffffULL)) * base;
    base *= BigInt(1LL << 32);
    m >>= 32;
  }
  return neg ? -out : out;
}

}  // namespace

TEST_CASE("bigint small values and strings") {
  CHECK(BigInt(0).str() == "0");
  CHECK(BigInt(-1).str() == "-1");
  CHECK(BigInt(123456789012345678LL).str() == "123456789012345678");
  CHECK(BigInt::from_string("-987654321098765432109876543210").str() ==
        "-987654321098765432109876543210");
  CHECK(BigInt::from_string("000123").str() == "123");
  CHECK(BigInt(42).to_int64() == 42);
  CHECK(BigInt(-9223372036854775807LL - 1).to_int64() == -9223372036854775807LL - 1);
}

TEST_CASE("bigint arithmetic matches __int128 oracle") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 4000; ++iter) {
    long long a = (long long)(rng() >> (rng() % 40));
    long long b = (long long)(rng() >> (rng() % 40));
    if (rng() & 1) a = -a;
    if (rng() & 1) b = -b;
    BigInt A(a), B(b);
    CHECK(A + B == from128((__int128)a + b));
    CHECK(A - B == from128((__int128)a - b));
    CHECK(A * B == from128((__int128)a * b));
    if (b != 0) {
      CHECK(A / B == from128((__int128)(a / b)));
      CHECK(A % B == from128((__int128)(a % b)));
    }
  }
}

TEST_CASE("bigint multi-limb division round trip") {
  std::mt19937_64 rng(777);
  auto random_big = [&](int limbs) {
    BigInt out(0);
    for (int i = 0; i < limbs; ++i)
      out = out * BigInt(1LL << 32) + BigInt((long long)(rng() & 0xffffffffULL));
    return (rng() & 1) ? -out : out;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    BigInt a = random_big(1 + (int)(rng() % 6));
    BigInt b = random_big(1 + (int)(rng() % 4));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(abs(r) < abs(b));
    if (!a.is_zero()) {
      CHECK((a * b) / b == a);
      CHECK(((a * b) % b).is_zero());
    }
  }
}

TEST_CASE("bigint division at limb boundaries") {
  // combinatorial sweep over boundary limb patterns; exercises the qhat
  // correction and add-back branches that uniform random inputs never reach
  const std::vector<uint32_t> edge = {0u,          1u,          2u,         0x7fffffffu,
                                      0x80000000u, 0x80000001u, 0xfffffffeu, 0xffffffffu};
  auto build = [](std::initializer_list<uint32_t> limbs) {
    BigInt out(0);
    BigInt base(1);
    for (uint32_t w : limbs) {
      out += BigInt((long long)w) * base;
      base *= BigInt(1LL << 32);
    }
    return out;
  };
  auto check_divmod = [&](const BigInt& a, const BigInt& b) {
    if (b.is_zero()) return;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(abs(r) < abs(b));
  };
  for (uint32_t a0 : edge)
    for (uint32_t a1 : edge)
      for (uint32_t a2 : edge)
        for (uint32_t b0 : edge)
          for (uint32_t b1 : edge) {
            check_divmod(build({a0, a1, a2}), build({b0, b1}));
            if (b1 == edge.back()) check_divmod(build({a0, a1, a2, 1u}), build({b0, b1, 1u}));
          }
}

TEST_CASE("bigint string round trip on big values") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 200; ++iter) {
    std::string s;
    if (rng() & 1) s += '-';
    s += char('1' + rng() % 9);
    int len = 1 + (int)(rng() % 45);
    for (int k = 0; k < len; ++k) s += char('0' + rng() % 10);
    CHECK(BigInt::from_string(s).str() == s);
  }
}

TEST_CASE("bigint gcd") {
  CHECK(gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(gcd(BigInt(0), BigInt(7)) == BigInt(7));
  BigInt a = BigInt::from_string("123456789123456789123456789");
  BigInt b = BigInt::from_string("987654321987654321");
  BigInt g = gcd(a, b);
  CHECK((a % g).is_zero());
  CHECK((b % g).is_zero());
}

TEST_CASE("rational canonical form and field ops") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational::parse("-7/3").str() == "-7/3");
  CHECK(Rational::parse("5").str() == "5");

  Rational a(3, 7), b(-2, 5);
  CHECK(a + b == Rational(1, 35));
  CHECK(a * b == Rational(-6, 35));
  CHECK(a / b == Rational(-15, 14));
  CHECK((a - a).is_zero());
  CHECK((a / a).is_one());
  CHECK(a + Rational(0) == a);

  // exact field axioms on randoms
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 500; ++iter) {
    Rational x((long long)(rng() % 2001) - 1000, 1 + (long long)(rng() % 50));
    Rational y((long long)(rng() % 2001) - 1000, 1 + (long long)(rng() % 50));
    Rational z((long long)(rng() % 2001) - 1000, 1 + (long long)(rng() % 50));
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("prime field") {
  using F = ncdeform::Fp<101>;
  CHECK(F(102) == F(1));
  CHECK(F(-1) == F(100));
  CHECK((F(37) / F(37)).is_one());
  for (int v = 1; v < 101; ++v) CHECK((F(v) * F(v).inverse()).is_one());
}
