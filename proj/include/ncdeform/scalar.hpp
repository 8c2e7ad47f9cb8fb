#pragma once
// Coefficient fields for the kernel. Rational is the default (everything the
// acceptance suite checks runs over Q); Fp<P> is a drop-in prime-field variant
// selected per computation context through the template parameter of the
// algebra types.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncdeform/bigint.hpp"

namespace ncdeform {

// Exact rational number in canonical reduced form: gcd(num,den)=1, den>0.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static Rational parse(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos)
      return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
  BigInt num_, den_;

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

// Prime field Z/P for a compile-time prime P < 2^31.
template <uint32_t P>
class Fp {
  static_assert(P >= 2, "modulus must be at least 2");

public:
  Fp() : v_(0) {}
  Fp(long long n) {
    long long m = n % static_cast<long long>(P);
    if (m < 0) m += P;
    v_ = static_cast<uint32_t>(m);
  }
  Fp(int n) : Fp(static_cast<long long>(n)) {}

  uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + static_cast<uint64_t>(b.v_)) % P); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + static_cast<uint64_t>(P) - b.v_) % P); }
  friend Fp operator*(Fp a, Fp b) { return raw(static_cast<uint64_t>(a.v_) * b.v_ % P); }
  friend Fp operator/(Fp a, Fp b) {
    if (b.is_zero()) throw std::domain_error("Fp: division by zero");
    return a * b.inverse();
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  Fp inverse() const {  // via Fermat; P prime
    Fp base = *this, out = raw(1);
    uint32_t e = P - 2;
    while (e) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  std::string str() const { return std::to_string(v_); }
  size_t hash() const { return v_; }

private:
  uint32_t v_;
  static Fp raw(uint64_t v) {
    Fp out;
    out.v_ = static_cast<uint32_t>(v);
    return out;
  }
};

}  // namespace ncdeform
