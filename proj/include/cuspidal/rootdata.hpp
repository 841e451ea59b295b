#pragma once

// Type A_{2l}^(2) root and weight data: Cartan/Gram matrices, the null root
// delta, positive roots with their position relative to delta in the fixed
// convex preorder, cuspidality of words, Gelfand-Graev words and the degree
// and parity shift constants.

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "compositions.hpp"
#include "laurent.hpp"

namespace cuspidal {

// theta in Q_+ as multiplicities of alpha_0..alpha_ell
struct WeightVec {
  std::vector<int> m;

  explicit WeightVec(int ell) : m(ell + 1, 0) {}
  explicit WeightVec(std::vector<int> mm) : m(std::move(mm)) {}

  int height() const {
    int s = 0;
    for (int x : m) s += x;
    return s;
  }
  int parity() const { return m[0] & 1; }  // ||theta|| = m_0 mod 2
  bool is_zero() const {
    for (int x : m)
      if (x) return false;
    return true;
  }
  bool leq(const WeightVec& o) const {
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > o.m[i]) return false;
    return true;
  }
  friend WeightVec operator+(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (size_t i = 0; i < r.m.size(); ++i) r.m[i] += b.m[i];
    return r;
  }
  friend WeightVec operator-(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (size_t i = 0; i < r.m.size(); ++i) r.m[i] -= b.m[i];
    return r;
  }
  friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.m == b.m; }
  friend bool operator<(const WeightVec& a, const WeightVec& b) { return a.m < b.m; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(m[i]);
    }
    return s + ")";
  }
};

enum class RootClass { RealBelowDelta, Imaginary, RealAboveDelta };

inline const char* root_class_name(RootClass c) {
  switch (c) {
    case RootClass::RealBelowDelta: return "real_below_delta";
    case RootClass::Imaginary: return "imaginary";
    default: return "real_above_delta";
  }
}

using Word = std::vector<int>;  // letters in I = {0..ell}

struct DividedWord {
  std::vector<std::pair<int, int>> factors;  // (letter, multiplicity)

  Word expand() const {  // hat-expansion
    Word w;
    for (auto& [i, m] : factors) w.insert(w.end(), m, i);
    return w;
  }
  DividedWord concat(const DividedWord& o) const {
    DividedWord r = *this;
    r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
    return r;
  }
  int height() const {
    int s = 0;
    for (auto& [i, m] : factors) s += m;
    return s;
  }
};

inline std::string word_str(const Word& w) {
  std::string s;
  for (int i : w) s += std::to_string(i);
  return s;
}

// shift and Laurent data attached to a colored composition
struct ShiftData {
  int t = 0;                // t_{mu,j}
  int eps = 0;              // parity shift in Z/2
  PiLaurent m;              // m_{mu,j}
  PiLaurent bang;           // l^{mu,j}! per (divided word factorial)
  int bracket = 0;          // <l^{mu,j}>
  int a = 0;                // a_{mu,j} (single color only; 0 otherwise)
};

class RootSystemCtx {
 public:
  explicit RootSystemCtx(int ell) : ell_(ell) {
    assert(ell >= 1);
    int n = ell + 1;
    cartan_.assign(n, std::vector<int>(n, 0));
    gram_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    if (ell == 1) {
      cartan_[0][1] = -4;
      cartan_[1][0] = -1;
    } else {
      cartan_[0][1] = -2;
      cartan_[1][0] = -1;
      for (int i = 1; i < ell; ++i) {
        cartan_[i][i + 1] = -1;
        cartan_[i + 1][i] = -1;
      }
      cartan_[ell - 1][ell] = -2;
      cartan_[ell][ell - 1] = -1;
    }
    // Gram: (a_i|a_i) = 2, 4, ..., 4, 8; off-diagonal -2 along the chain
    // except (a_{l-1}|a_l) = -4; for ell = 1: [[2,-4],[-4,8]]
    for (int i = 0; i <= ell; ++i) gram_[i][i] = (i == 0) ? 2 : (i == ell ? 8 : 4);
    for (int i = 0; i < ell; ++i) {
      int v = (i == ell - 1) ? -4 : -2;
      gram_[i][i + 1] = v;
      gram_[i + 1][i] = v;
    }
  }

  int ell() const { return ell_; }
  int p() const { return 2 * ell_ + 1; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  int gram(int i, int j) const { return gram_[i][j]; }

  int letter_parity(int i) const { return i == 0 ? 1 : 0; }  // ||i||

  WeightVec delta() const {
    WeightVec d(ell_);
    for (int i = 0; i < ell_; ++i) d.m[i] = 2;
    d.m[ell_] = 1;
    return d;
  }

  WeightVec wt(const Word& w) const {
    WeightVec v(ell_);
    for (int i : w) v.m[i] += 1;
    return v;
  }

  int pairing(const WeightVec& a, const WeightVec& b) const {  // (a|b)
    int s = 0;
    for (int i = 0; i <= ell_; ++i)
      for (int j = 0; j <= ell_; ++j) s += a.m[i] * gram_[i][j] * b.m[j];
    return s;
  }

  // --- positive roots and the fixed convex preorder -----------------------

  // Positive roots of height <= h with their classification; sorted by
  // (height, coordinates) for deterministic output.
  std::vector<std::pair<WeightVec, RootClass>> positive_roots_upto(int h) const {
    std::vector<std::pair<WeightVec, RootClass>> out;
    WeightVec de = delta();
    for (int n = 1; n * p() <= h; ++n) {
      WeightVec v(ell_);
      for (int i = 0; i <= ell_; ++i) v.m[i] = n * de.m[i];
      out.push_back({v, RootClass::Imaginary});
    }
    // Real roots per (EPhiS)-(EPhiL): alpha + k delta for medium alpha,
    // alpha + 2k delta and (alpha + (2k-1) delta)/2 for long alpha.
    int kmax = (h + 2 * finite_height_bound()) / p() + 2;
    auto consider = [&](const WeightVec& v) {
      if (nonneg(v) && !v.is_zero() && height_of(v) <= h)
        out.push_back({v, classify_real(v)});
    };
    for (const auto& alpha : finite_roots()) {
      if (is_long(alpha)) {
        for (int k = 0; k <= kmax; ++k) consider(shift_by_delta(alpha, 2 * k));
        for (int k = 1; k <= kmax; ++k) consider(half_shift(alpha, 2 * k - 1));
      } else {
        for (int k = 0; k <= kmax; ++k) consider(shift_by_delta(alpha, k));
      }
    }
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) {
                int ha = height_of(a.first), hb = height_of(b.first);
                if (ha != hb) return ha < hb;
                return a.first.m < b.first.m;
              });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              out.end());
    return out;
  }

  // classification of a real positive root per (ESharp)
  RootClass classify_real(const WeightVec& beta) const {
    // subtract the maximal delta multiple to land on +-(finite part)
    int b0 = beta.m[0];
    if (b0 % 2 == 0) {
      // beta = alpha + (b0/2) delta with alpha in Phi' (r = 1)
      WeightVec alpha = shift_by_delta(beta, -b0 / 2);
      assert(alpha.m[0] == 0);
      return in_sharp(alpha) ? RootClass::RealAboveDelta : RootClass::RealBelowDelta;
    }
    // r = 1/2: 2 beta = alpha + b0 delta
    WeightVec two(ell_);
    for (int i = 0; i <= ell_; ++i) two.m[i] = 2 * beta.m[i];
    WeightVec alpha = shift_by_delta(two, -b0);
    assert(alpha.m[0] == 0);
    return in_sharp(alpha) ? RootClass::RealAboveDelta : RootClass::RealBelowDelta;
  }

  // --- cuspidality --------------------------------------------------------

  // theta decomposable as an N-combination of positive roots <= delta
  // (resp. >= delta) in the preorder
  bool decomposable(const WeightVec& theta, bool below_delta) const {
    if (!nonneg(theta)) return false;
    auto& memo = below_delta ? memo_below_ : memo_above_;
    auto it = memo.find(theta.m);
    if (it != memo.end()) return it->second;
    bool res = false;
    if (theta.is_zero()) res = true;
    else {
      for (const auto& [root, cls] : coins(theta.height(), below_delta)) {
        (void)cls;
        if (root.leq(theta) && decomposable(theta - root, below_delta)) {
          res = true;
          break;
        }
      }
    }
    memo.emplace(theta.m, res);
    return res;
  }

  // word in I^{d delta} cuspidal: for every proper split i = j k, wt(j) is a
  // sum of roots <= delta and wt(k) a sum of roots >= delta
  bool is_cuspidal_word(const Word& w) const {
    WeightVec total = wt(w);
    assert(is_delta_multiple(total));
    WeightVec pre(ell_);
    for (size_t c = 1; c < w.size(); ++c) {
      pre.m[w[c - 1]] += 1;
      WeightVec suf = total - pre;
      if (!decomposable(pre, true)) return false;
      if (!decomposable(suf, false)) return false;
    }
    return true;
  }

  bool is_delta_multiple(const WeightVec& v) const {
    WeightVec de = delta();
    int n = v.m[ell_];
    for (int i = 0; i <= ell_; ++i)
      if (v.m[i] != n * de.m[i]) return false;
    return true;
  }

  std::vector<Word> all_words(const WeightVec& theta) const {
    Word letters;
    for (int i = 0; i <= ell_; ++i) letters.insert(letters.end(), theta.m[i], i);
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do out.push_back(letters);
    while (std::next_permutation(letters.begin(), letters.end()));
    return out;
  }

  std::vector<Word> cuspidal_words(int d) const {
    WeightVec th = delta();
    for (int i = 0; i <= ell_; ++i) th.m[i] *= d;
    std::vector<Word> out;
    for (auto& w : all_words(th))
      if (is_cuspidal_word(w)) out.push_back(w);
    return out;
  }

  // --- Gelfand-Graev words ------------------------------------------------

  // l^{m,j} = ell^(m) (ell-1)^(2m) ... (j+1)^(2m) j^(m) ... 1^(m) 0^(2m) 1^(m) ... j^(m)
  DividedWord gg_word_single(int m, int j) const {
    assert(0 <= j && j < ell_);
    DividedWord w;
    if (m == 0) return w;
    w.factors.push_back({ell_, m});
    for (int i = ell_ - 1; i > j; --i) w.factors.push_back({i, 2 * m});
    for (int i = j; i >= 1; --i) w.factors.push_back({i, m});
    w.factors.push_back({0, 2 * m});
    for (int i = 1; i <= j; ++i) w.factors.push_back({i, m});
    return w;
  }

  DividedWord gg_word(const ColoredComposition& cc) const {
    DividedWord w;
    for (size_t r = 0; r < cc.length(); ++r)
      w = w.concat(gg_word_single(cc.comp.part(r), cc.colors[r]));
    return w;
  }

  // nu^{d,j} = (d, (2d)^{l-1-j}, d^j, 2d, d^j)
  Composition nu_segments(int d, int j) const {
    std::vector<int> parts;
    parts.push_back(d);
    for (int i = 0; i < ell_ - 1 - j; ++i) parts.push_back(2 * d);
    for (int i = 0; i < j; ++i) parts.push_back(d);
    parts.push_back(2 * d);
    for (int i = 0; i < j; ++i) parts.push_back(d);
    return Composition(parts);
  }

  // --- shift data ---------------------------------------------------------

  // i! and <i> for a divided word per (EHatIPar)
  PiLaurent divided_bang(const DividedWord& w) const {
    PiLaurent r = PiLaurent::one();
    for (auto& [i, m] : w.factors) r = r * qfact_super(m, i, ell_);
    return r;
  }
  int divided_bracket(const DividedWord& w) const {
    int s = 0;
    for (auto& [i, m] : w.factors) s += gram_[i][i] * m * (m - 1) / 4;
    return s;
  }

  // m_{d,j} = [d]!_l [2d]!_0 (prod_{i=j+1}^{l-1}[2d]!_i)(prod_{i=1}^{j}([d]!_i)^2)
  PiLaurent m_dj(int d, int j) const {
    PiLaurent r = qfact_super(d, ell_, ell_) * qfact_super(2 * d, 0, ell_);
    for (int i = j + 1; i <= ell_ - 1; ++i) r = r * qfact_super(2 * d, i, ell_);
    for (int i = 1; i <= j; ++i) {
      PiLaurent f = qfact_super(d, i, ell_);
      r = r * f * f;
    }
    return r;
  }

  ShiftData shift_data(const ColoredComposition& cc) const {
    ShiftData sd;
    int d = cc.d();
    sd.t = d * p();
    sd.eps = 0;
    sd.m = PiLaurent::one();
    for (size_t r = 0; r < cc.length(); ++r) {
      int mu = cc.comp.part(r), j = cc.colors[r];
      sd.t += mu * mu * (2 * j - 4 * ell_);
      sd.eps = (sd.eps + mu * j) & 1;
      sd.m = sd.m * m_dj(mu, j);
    }
    DividedWord w = gg_word(cc);
    sd.bang = divided_bang(w);
    sd.bracket = divided_bracket(w);
    // a_{lambda,j} for single-color pairs
    if (!cc.colors.empty() &&
        std::all_of(cc.colors.begin(), cc.colors.end(), [&](int c) { return c == cc.colors[0]; })) {
      int j = cc.colors[0], sq = 0;
      for (size_t r = 0; r < cc.length(); ++r) sq += cc.comp.part(r) * cc.comp.part(r);
      sd.a = d * (1 + 2 * ell_) + (2 * j - 4 * ell_) * sq;
    }
    return sd;
  }

 private:
  bool nonneg(const WeightVec& v) const {
    for (int x : v.m)
      if (x < 0) return false;
    return true;
  }
  int height_of(const WeightVec& v) const {
    int s = 0;
    for (int x : v.m) s += x;
    return s;
  }
  int finite_height_bound() const { return 2 * ell_; }

  WeightVec shift_by_delta(const WeightVec& v, int k) const {
    WeightVec r = v;
    WeightVec de = delta();
    for (int i = 0; i <= ell_; ++i) r.m[i] += k * de.m[i];
    return r;
  }
  WeightVec half_shift(const WeightVec& alpha, int odd_k) const {
    // (alpha + odd_k * delta) / 2
    WeightVec r(ell_);
    WeightVec de = delta();
    for (int i = 0; i <= ell_; ++i) {
      int num = alpha.m[i] + odd_k * de.m[i];
      assert(num % 2 == 0);
      r.m[i] = num / 2;
    }
    return r;
  }

  // finite root system Phi' of type C_ell on alpha_1..alpha_ell (both signs)
  std::vector<WeightVec> finite_roots() const {
    if (!finite_roots_.empty()) return finite_roots_;
    // positive C_ell roots in terms of simple roots b_1..b_ell
    // (b_i = alpha_i here, alpha_ell long):
    //   e_i - e_j = b_i + ... + b_{j-1}           (1 <= i < j <= ell)
    //   e_i + e_j = b_i + .. + b_{j-1} + 2b_j + .. + 2b_{ell-1} + b_ell (i<j)
    //   2 e_i     = 2b_i + ... + 2b_{ell-1} + b_ell
    std::vector<WeightVec> pos;
    auto mk = [&](const std::vector<int>& c1toell) {
      WeightVec v(ell_);
      for (int i = 1; i <= ell_; ++i) v.m[i] = c1toell[i - 1];
      return v;
    };
    for (int i = 1; i <= ell_; ++i)
      for (int j = i + 1; j <= ell_; ++j) {
        std::vector<int> c(ell_, 0);
        for (int a = i; a < j; ++a) c[a - 1] = 1;
        pos.push_back(mk(c));
      }
    for (int i = 1; i <= ell_; ++i)
      for (int j = i + 1; j <= ell_; ++j) {
        std::vector<int> c(ell_, 0);
        for (int a = i; a < j; ++a) c[a - 1] = 1;
        for (int a = j; a <= ell_ - 1; ++a) c[a - 1] += 2;
        c[ell_ - 1] += 1;
        pos.push_back(mk(c));
      }
    for (int i = 1; i <= ell_; ++i) {
      std::vector<int> c(ell_, 0);
      for (int a = i; a <= ell_ - 1; ++a) c[a - 1] = 2;
      c[ell_ - 1] = 1;
      pos.push_back(mk(c));
    }
    for (auto& v : pos) {
      finite_roots_.push_back(v);
      WeightVec neg(ell_);
      for (int i = 0; i <= ell_; ++i) neg.m[i] = -v.m[i];
      finite_roots_.push_back(neg);
    }
    return finite_roots_;
  }

  bool is_long(const WeightVec& alpha) const {
    int s = 0;
    for (int i = 0; i <= ell_; ++i)
      for (int j = 0; j <= ell_; ++j) s += alpha.m[i] * gram_[i][j] * alpha.m[j];
    return s == 8;
  }

  // Phi'_sharp: elements of the finite root space that are nonnegative
  // combinations of alpha_1..alpha_{ell-1}, -alpha~ (alpha~ the highest root
  // of Phi').  These ell vectors form a basis, so the coordinates are
  // unique: writing r = sum_{i<ell} c_i alpha_i + c_t(-alpha~) gives
  // c_t = -r_ell and c_i = r_i - 2 r_ell.
  bool in_sharp(const WeightVec& alpha) const {
    if (alpha.m[0] != 0) return false;
    int ct = -alpha.m[ell_];
    if (ct < 0) return false;
    for (int i = 1; i <= ell_ - 1; ++i)
      if (alpha.m[i] - 2 * alpha.m[ell_] < 0) return false;
    return true;
  }

  int ell_;
  std::vector<std::vector<int>> cartan_, gram_;
  mutable std::vector<WeightVec> finite_roots_;
  mutable std::map<std::vector<int>, bool> memo_below_, memo_above_;

  // coin sets for the decomposability DP
  const std::vector<std::pair<WeightVec, RootClass>>& coins(int h, bool below) const {
    auto& cache = below ? coins_below_ : coins_above_;
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<WeightVec, RootClass>> cs;
    for (const auto& pr : positive_roots_upto(h)) {
      if (pr.second == RootClass::Imaginary ||
          pr.second == (below ? RootClass::RealBelowDelta : RootClass::RealAboveDelta))
        cs.push_back(pr);
    }
    return cache.emplace(h, std::move(cs)).first->second;
  }
  mutable std::map<int, std::vector<std::pair<WeightVec, RootClass>>> coins_below_, coins_above_;
};

}  // namespace cuspidal
