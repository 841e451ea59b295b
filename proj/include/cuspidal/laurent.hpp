#pragma once

// Laurent polynomials over Z and over Z^pi = Z[pi]/(pi^2-1), plus the
// balanced quantum integers/factorials built from them.

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace cuspidal {

// Integer Laurent polynomial, stored as (lowest exponent, dense coefficient
// vector).  Graded dimensions live in short exponent windows, so dense is
// the right trade-off.
class LaurentZ {
 public:
  LaurentZ() = default;
  LaurentZ(long long c, int exp) {
    if (c != 0) {
      lo_ = exp;
      coef_ = {c};
    }
  }
  static LaurentZ one() { return LaurentZ(1, 0); }

  bool is_zero() const { return coef_.empty(); }
  int lowest() const { assert(!is_zero()); return lo_; }
  int highest() const { assert(!is_zero()); return lo_ + (int)coef_.size() - 1; }

  long long coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp > highest()) return 0;
    return coef_[exp - lo_];
  }

  void add_term(long long c, int exp) {
    if (c == 0) return;
    if (is_zero()) {
      lo_ = exp;
      coef_ = {c};
      return;
    }
    if (exp < lo_) {
      coef_.insert(coef_.begin(), lo_ - exp, 0);
      lo_ = exp;
    } else if (exp > highest()) {
      coef_.resize(exp - lo_ + 1, 0);
    }
    coef_[exp - lo_] += c;
    normalize();
  }

  friend LaurentZ operator+(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ r = a;
    if (!b.is_zero())
      for (int e = b.lo_; e <= b.highest(); ++e) r.add_term(b.coeff(e), e);
    return r;
  }
  friend LaurentZ operator-(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ r = a;
    if (!b.is_zero())
      for (int e = b.lo_; e <= b.highest(); ++e) r.add_term(-b.coeff(e), e);
    return r;
  }
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    LaurentZ r;
    if (a.is_zero() || b.is_zero()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, 0);
    for (size_t i = 0; i < a.coef_.size(); ++i)
      for (size_t j = 0; j < b.coef_.size(); ++j)
        r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    r.normalize();
    return r;
  }
  friend bool operator==(const LaurentZ& a, const LaurentZ& b) {
    return a.lo_ == b.lo_ && a.coef_ == b.coef_;
  }

  LaurentZ bar() const {  // q^n -> q^-n
    LaurentZ r;
    if (is_zero()) return r;
    r.lo_ = -highest();
    r.coef_.assign(coef_.rbegin(), coef_.rend());
    return r;
  }

  LaurentZ shifted(int d) const {
    LaurentZ r = *this;
    if (!r.is_zero()) r.lo_ += d;
    return r;
  }

  long long eval_one() const {  // value at q = 1
    long long s = 0;
    for (long long c : coef_) s += c;
    return s;
  }

  // Exact division; asserts that the remainder vanishes.
  LaurentZ divide_exact(const LaurentZ& d) const {
    assert(!d.is_zero());
    LaurentZ q;
    LaurentZ rem = *this;
    while (!rem.is_zero()) {
      int e = rem.lowest() - d.lowest();
      long long lc = rem.coef_.front();
      long long dc = d.coef_.front();
      assert(lc % dc == 0);
      LaurentZ t(lc / dc, e);
      q = q + t;
      rem = rem - t * d;
      assert(rem.is_zero() || rem.lowest() > e + d.lowest());
    }
    return q;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = highest(); e >= lo_; --e) {
      long long c = coeff(e);
      if (c == 0) continue;
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      long long a = c > 0 ? c : -c;
      if (a != 1 || e == 0) s += std::to_string(a);
      if (e != 0) {
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void normalize() {
    size_t b = 0, e = coef_.size();
    while (b < e && coef_[b] == 0) ++b;
    while (e > b && coef_[e - 1] == 0) --e;
    if (b == e) {
      coef_.clear();
      lo_ = 0;
      return;
    }
    if (b > 0 || e < coef_.size()) {
      coef_ = std::vector<long long>(coef_.begin() + b, coef_.begin() + e);
      lo_ += (int)b;
    }
  }

  int lo_ = 0;
  std::vector<long long> coef_;  // coef_[k] is the coefficient of q^(lo_+k)
};

// Element of Z^pi[q,q^-1], kept as even part + pi * odd part.  pi^2 = 1 is
// built into the representation, so no reduction step exists.
class PiLaurent {
 public:
  PiLaurent() = default;
  PiLaurent(LaurentZ even, LaurentZ odd) : ev_(std::move(even)), od_(std::move(odd)) {}
  PiLaurent(long long c, int qexp, int pi) {
    if (pi & 1) od_ = LaurentZ(c, qexp);
    else ev_ = LaurentZ(c, qexp);
  }
  static PiLaurent one() { return PiLaurent(LaurentZ::one(), LaurentZ()); }
  static PiLaurent q_pow(int n) { return PiLaurent(LaurentZ(1, n), LaurentZ()); }
  static PiLaurent pi() { return PiLaurent(LaurentZ(), LaurentZ::one()); }

  const LaurentZ& even_part() const { return ev_; }
  const LaurentZ& odd_part() const { return od_; }
  bool is_zero() const { return ev_.is_zero() && od_.is_zero(); }

  friend PiLaurent operator+(const PiLaurent& a, const PiLaurent& b) {
    return {a.ev_ + b.ev_, a.od_ + b.od_};
  }
  friend PiLaurent operator-(const PiLaurent& a, const PiLaurent& b) {
    return {a.ev_ - b.ev_, a.od_ - b.od_};
  }
  // (a + pi b)(c + pi d) = (ac + bd) + pi(ad + bc)
  friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
    return {a.ev_ * b.ev_ + a.od_ * b.od_, a.ev_ * b.od_ + a.od_ * b.ev_};
  }
  friend bool operator==(const PiLaurent& a, const PiLaurent& b) {
    return a.ev_ == b.ev_ && a.od_ == b.od_;
  }

  PiLaurent bar() const { return {ev_.bar(), od_.bar()}; }

  PiLaurent shifted(int d) const { return {ev_.shifted(d), od_.shifted(d)}; }

  // Specialization pi -> 1, then q -> 1 (total dimension count).
  long long eval_one() const { return ev_.eval_one() + od_.eval_one(); }

  long long coeff(int qexp, int pi) const {
    return (pi & 1) ? od_.coeff(qexp) : ev_.coeff(qexp);
  }

  int lowest() const {
    assert(!is_zero());
    if (ev_.is_zero()) return od_.lowest();
    if (od_.is_zero()) return ev_.lowest();
    return std::min(ev_.lowest(), od_.lowest());
  }
  int highest() const {
    assert(!is_zero());
    if (ev_.is_zero()) return od_.highest();
    if (od_.is_zero()) return ev_.highest();
    return std::max(ev_.highest(), od_.highest());
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s = ev_.str();
    if (!od_.is_zero()) {
      if (ev_.is_zero()) s.clear();
      else s += " + ";
      s += "pi*(" + od_.str() + ")";
    }
    return s;
  }

 private:
  LaurentZ ev_, od_;
};

// [n]_{q^k} = (q^{kn} - q^{-kn}) / (q^k - q^{-k}), computed as the closed-form
// sum q^{k(n-1)} + q^{k(n-3)} + ... + q^{-k(n-1)}.
inline LaurentZ qint(int n, int k) {
  assert(n >= 0 && k >= 1);
  LaurentZ r;
  for (int e = n - 1; e >= -(n - 1); e -= 2) r.add_term(1, k * e);
  return r;
}

inline LaurentZ qfact(int n, int k) {
  LaurentZ r = LaurentZ::one();
  for (int m = 1; m <= n; ++m) r = r * qint(m, k);
  return r;
}

// Quantum integer [n]_i for the letter i in I = {0,...,ell}: for i = 0 the
// super quantum integer ((q pi)^n - q^-n)/(q pi - q^-1), otherwise [n]_{q_i}
// with q_i = q^2 for 0 < i < ell and q_i = q^4 for i = ell.
inline PiLaurent qint_super(int n, int i, int ell) {
  assert(n >= 0 && 0 <= i && i <= ell);
  if (i != 0) {
    int k = (i == ell) ? 4 : 2;
    return PiLaurent(qint(n, k), LaurentZ());
  }
  // closed form: sum_{t=0}^{n-1} q^{n-1-2t} pi^{n-1-t}
  PiLaurent r;
  for (int t = 0; t < n; ++t)
    r = r + PiLaurent(1, n - 1 - 2 * t, (n - 1 - t) & 1);
  return r;
}

inline PiLaurent qfact_super(int n, int i, int ell) {
  PiLaurent r = PiLaurent::one();
  for (int m = 1; m <= n; ++m) r = r * qint_super(m, i, ell);
  return r;
}

}  // namespace cuspidal
