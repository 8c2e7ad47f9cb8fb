#pragma once
// Arbitrary-precision signed integers on base-2^32 limbs: ring arithmetic,
// truncated division, gcd, decimal I/O. Enough for an exact rational kernel;
// no floating point anywhere.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncdeform {

class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    limbs_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) limbs_.push_back(static_cast<uint32_t>(m >> 32));
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    // consume in chunks of 9 decimal digits
    while (pos < s.size()) {
      size_t take = std::min<size_t>(9, s.size() - pos);
      uint32_t chunk = 0, scale = 1;
      for (size_t k = 0; k < take; ++k) {
        char c = s[pos + k];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
        scale *= 10;
      }
      out = out * BigInt(static_cast<long long>(scale)) + BigInt(static_cast<long long>(chunk));
      pos += take;
    }
    if (neg) out.sign_ = -out.sign_;
    return out;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

  bool fits_int64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = mag64();
    return sign_ >= 0 ? m <= 0x7fffffffffffffffULL : m <= 0x8000000000000000ULL;
  }
  long long to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    unsigned long long m = mag64();
    return sign_ < 0 ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
  }

  BigInt operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
      out.limbs_ = add_mag(a.limbs_, b.limbs_);
      out.sign_ = a.sign_;
      return out;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.limbs_ = sub_mag(a.limbs_, b.limbs_);
      out.sign_ = a.sign_;
    } else {
      out.limbs_ = sub_mag(b.limbs_, a.limbs_);
      out.sign_ = b.sign_;
    }
    return out;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt out;
    out.limbs_ = mul_mag(a.limbs_, b.limbs_);
    out.sign_ = a.sign_ * b.sign_;
    return out;
  }

  // Truncated toward zero; remainder carries the dividend's sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
      q.limbs_ = std::move(qm);
      q.sign_ = a.sign_ * b.sign_;
    }
    if (!rm.empty()) {
      r.limbs_ = std::move(rm);
      r.sign_ = a.sign_;
    }
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  friend BigInt abs(const BigInt& a) {
    BigInt out = a;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
  }

  friend BigInt gcd(BigInt a, BigInt b) {
    if (a.sign_ < 0) a.sign_ = 1;
    if (b.sign_ < 0) b.sign_ = 1;
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  std::string str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> rest = limbs_;
    std::string out;
    while (!rest.empty()) {
      uint64_t rem = 0;
      for (size_t i = rest.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | rest[i];
        rest[i] = static_cast<uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!rest.empty() && rest.back() == 0) rest.pop_back();
      std::string chunk = std::to_string(rem);
      if (!rest.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      out.insert(0, chunk);
    }
    if (sign_ < 0) out.insert(0, 1, '-');
    return out;
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(sign_ + 2);
    for (uint32_t w : limbs_) h = h * 1000003u ^ w;
    return h;
  }

private:
  int sign_ = 0;
  std::vector<uint32_t> limbs_;  // little-endian, no high zero limb; empty iff zero

  unsigned long long mag64() const {
    unsigned long long m = limbs_.empty() ? 0 : limbs_[0];
    if (limbs_.size() > 1) m |= static_cast<unsigned long long>(limbs_[1]) << 32;
    return m;
  }

  static void trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<uint32_t> out(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
      uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
      out[i] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    out[hi.size()] = static_cast<uint32_t>(carry);
    trim(out);
    return out;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t d = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
      borrow = d < 0 ? 1 : 0;
      if (d < 0) d += (int64_t(1) << 32);
      out[i] = static_cast<uint32_t>(d);
    }
    assert(borrow == 0);
    trim(out);
    return out;
  }

  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
        out[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.size();
      while (carry) {
        uint64_t cur = out[k] + carry;
        out[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    trim(out);
    return out;
  }

  static int leading_zeros(uint32_t x) {
    int n = 0;
    if (!(x & 0xffff0000u)) { n += 16; x <<= 16; }
    if (!(x & 0xff000000u)) { n += 8; x <<= 8; }
    if (!(x & 0xf0000000u)) { n += 4; x <<= 4; }
    if (!(x & 0xc0000000u)) { n += 2; x <<= 2; }
    if (!(x & 0x80000000u)) { n += 1; }
    return n;
  }

  static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<uint32_t> out(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      out[i] |= a[i] << s;
      out[i + 1] = a[i] >> (32 - s);
    }
    trim(out);
    return out;
  }

  // Knuth algorithm D (base 2^32), single-limb fast path.
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
      r = a;
      return;
    }
    if (b.size() == 1) {
      uint64_t d = b[0], rem = 0;
      q.assign(a.size(), 0);
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
      }
      trim(q);
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    int s = leading_zeros(b.back());
    std::vector<uint32_t> v = shl_bits(b, s);
    std::vector<uint32_t> u = shl_bits(a, s);
    const size_t n = v.size();
    u.resize(a.size() + 1, 0);  // one guard limb on top
    const size_t m = u.size() - 1 - n;
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = num / v[n - 1];
      uint64_t rhat = num % v[n - 1];
      if (qhat > 0xffffffffULL) {
        rhat += (qhat - 0xffffffffULL) * v[n - 1];
        qhat = 0xffffffffULL;
      }
      while (rhat <= 0xffffffffULL &&
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
      }
      // multiply and subtract
      uint64_t carry = 0;
      int64_t borrow = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(u[i + j]) -
                    static_cast<int64_t>(p & 0xffffffffULL) - borrow;
        borrow = t < 0 ? 1 : 0;
        if (t < 0) t += (int64_t(1) << 32);
        u[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large: add back
        --qhat;
        uint64_t c = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t s2 = static_cast<uint64_t>(u[i + j]) + v[i] + c;
          u[i + j] = static_cast<uint32_t>(s2);
          c = s2 >> 32;
        }
        t += static_cast<int64_t>(c);
      }
      u[j + n] = static_cast<uint32_t>(t);
      q[j] = static_cast<uint32_t>(qhat);
    }
    trim(q);
    u.resize(n);
    // undo normalization shift
    if (s) {
      for (size_t i = 0; i + 1 < u.size(); ++i)
        u[i] = (u[i] >> s) | (u[i + 1] << (32 - s));
      u.back() >>= s;
    }
    trim(u);
    r = std::move(u);
  }
};

}  // namespace ncdeform
