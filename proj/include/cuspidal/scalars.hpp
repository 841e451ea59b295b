#pragma once

// Exact field scalars: rationals (GMP-backed) and prime fields.  All linear
// algebra in the project is templated on one of these; there is no floating
// point anywhere.

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <string>

namespace cuspidal {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_((long)n) {}
  Rational(long long n, long long d) : v_((long)n, (long)d) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }
  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    assert(!b.is_zero());
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  Rational inv() const {
    assert(!is_zero());
    return Rational(1 / v_);
  }

  std::string str() const { return v_.get_str(); }

  static const char* field_name() { return "rational"; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Residue field F_p for a runtime prime p (p fits in 32 bits; products are
// taken in 64 bits).
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long n, uint32_t p) : p_(p) {
    long long r = n % (long long)p;
    if (r < 0) r += p;
    v_ = (uint32_t)r;
  }

  bool is_zero() const { return v_ == 0; }
  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    Fp r = a.match(b);
    r.v_ = (uint32_t)(((uint64_t)a.v_ + b.v_) % r.p_);
    return r;
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    Fp r = a.match(b);
    r.v_ = (uint32_t)(((uint64_t)a.v_ + r.p_ - b.v_) % r.p_);
    return r;
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    Fp r = a.match(b);
    r.v_ = (uint32_t)(((uint64_t)a.v_ * b.v_) % r.p_);
    return r;
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp operator-() const {
    Fp r = *this;
    if (v_) r.v_ = p_ - v_;
    return r;
  }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  Fp inv() const {
    assert(v_ != 0);
    // extended Euclid
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
      long long q = a / b;
      long long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    assert(a == 1);
    Fp r = *this;
    r.v_ = (uint32_t)((x0 % (long long)p_ + p_) % p_);
    return r;
  }

  std::string str() const { return std::to_string(v_); }

 private:
  Fp match(const Fp& o) const {
    Fp r = *this;
    if (r.p_ == 0) r.p_ = o.p_;
    assert(o.p_ == 0 || o.p_ == r.p_);
    return r;
  }
  uint32_t v_, p_;
};

// Uniform construction of a scalar from a machine integer; the tag carries
// the prime for Fp (0 means rationals).
struct ScalarSpec {
  uint32_t prime = 0;  // 0 = rational
  bool is_rational() const { return prime == 0; }
  std::string name() const { return prime == 0 ? "rational" : ("gf(" + std::to_string(prime) + ")"); }
};

template <class F>
F make_scalar(long long n, const ScalarSpec&);

template <>
inline Rational make_scalar<Rational>(long long n, const ScalarSpec&) { return Rational(n); }
template <>
inline Fp make_scalar<Fp>(long long n, const ScalarSpec& s) { return Fp(n, s.prime); }

}  // namespace cuspidal
