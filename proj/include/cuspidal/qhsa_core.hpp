#pragma once

// The quiver Hecke superalgebra R_theta of type A_{2l}^(2) as an exact
// rewriting engine.  Elements are kept in the normal form
//     y_1^{k_1} ... y_n^{k_n} psi_w 1_i
// where psi_w uses the lexicographically smallest reduced word of w.
// Products are computed by left-multiplying generators one at a time; the
// defining relations enter through four local rewrites (dot-past-crossing,
// double crossing, distant crossings, braid) plus Matsumoto conversion
// between reduced words.

#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "permutations.hpp"
#include "rootdata.hpp"
#include "scalars.hpp"

namespace cuspidal {

constexpr int kMaxStrands = 16;

struct Bidegree {
  int deg = 0;
  int par = 0;  // Z/2
  friend Bidegree operator+(const Bidegree& a, const Bidegree& b) {
    return {a.deg + b.deg, (a.par + b.par) & 1};
  }
  friend bool operator==(const Bidegree& a, const Bidegree& b) {
    return a.deg == b.deg && a.par == b.par;
  }
  std::string str() const { return "(" + std::to_string(deg) + "," + std::to_string(par) + ")"; }
};

// y_1^{k_1}...y_n^{k_n} psi_w 1_i with i referenced by index into the
// context's word list.  The y exponents are read against the target (top)
// word w.i.
struct BasisMonomial {
  uint32_t word = 0;           // bottom word index
  uint64_t perm = 0;           // packed one-line of w
  std::array<uint8_t, kMaxStrands> k{};

  friend bool operator<(const BasisMonomial& a, const BasisMonomial& b) {
    if (a.word != b.word) return a.word < b.word;
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.k < b.k;
  }
  friend bool operator==(const BasisMonomial& a, const BasisMonomial& b) {
    return a.word == b.word && a.perm == b.perm && a.k == b.k;
  }
};

inline uint64_t pack_perm(const Permutation& w) { return w.code(); }
inline Permutation unpack_perm(uint64_t code, int n) {
  std::vector<int> v(n);
  for (int a = 0; a < n; ++a) {
    v[a] = (int)(code & 0xF);
    code >>= 4;
  }
  return Permutation(std::move(v));
}

// bivariate integer polynomial in (u, v), sparse
struct Poly2 {
  std::vector<std::array<int, 3>> terms;  // (deg_u, deg_v, coeff)
  bool is_zero() const { return terms.empty(); }
};

// Matsumoto rewriting of generator words over a fixed bottom word: applies
// commutation and braid moves, tracking the global super sign and recording
// each braid move's error data for the caller to evaluate (against R7).
struct MatsumotoWalk {
  struct Correction {
    int sign;
    std::vector<int> prefix;
    int rr;       // braid position: the error polynomial is B at strands rr, rr+2
    Word below;   // word directly under the braid triple
    std::vector<int> suffix;
  };

  std::vector<int> word;
  Word bottom;
  int sign = 1;
  std::vector<Correction> corrections;

  MatsumotoWalk(std::vector<int> w, Word b) : word(std::move(w)), bottom(std::move(b)) {}

  static int letter_parity(int i) { return i == 0 ? 1 : 0; }

  Word word_below(size_t p) const {
    Word cur = bottom;
    for (size_t q = word.size(); q > p + 1; --q) std::swap(cur[word[q - 1] - 1], cur[word[q - 1]]);
    return cur;
  }

  void commute(size_t p) {
    Word below = word_below(p + 1);
    int a = word[p], b = word[p + 1];
    int par = letter_parity(below[a - 1]) & letter_parity(below[a]) &
              letter_parity(below[b - 1]) & letter_parity(below[b]);
    if (par) sign = -sign;
    std::swap(word[p], word[p + 1]);
  }

  void braid(size_t p) {
    int a = word[p], b = word[p + 1];
    assert(word[p + 2] == a && std::abs(a - b) == 1);
    Correction c;
    c.rr = std::min(a, b);
    c.below = word_below(p + 2);
    // R7 reads (psi_{r+1} psi_r psi_{r+1} - psi_r psi_{r+1} psi_r) 1 = B 1:
    // replacing (r+1,r,r+1) by (r,r+1,r) emits +B, the reverse emits -B.
    c.sign = (a == c.rr + 1) ? sign : -sign;
    c.prefix.assign(word.begin(), word.begin() + p);
    c.suffix.assign(word.begin() + p + 3, word.end());
    corrections.push_back(std::move(c));
    word[p] = b;
    word[p + 1] = a;
    word[p + 2] = b;
  }

  // Bring letter r to position pos of the reduced segment word[pos:]; r must
  // be a left descent of that segment's permutation.
  void to_front(size_t pos, int r) {
    assert(pos < word.size());
    if (word[pos] == r) return;
    int u0 = word[pos];
    to_front(pos + 1, r);
    if (std::abs(u0 - r) > 1) commute(pos);
    else {
      to_front(pos + 2, u0);
      braid(pos);
    }
  }

  void convert_to(const std::vector<int>& target) {
    assert(target.size() == word.size());
    for (size_t pos = 0; pos < word.size(); ++pos)
      if (word[pos] != target[pos]) to_front(pos, target[pos]);
    assert(word == target);
  }
};

// Combinatorial data shared by all scalar instantiations of the engine.
class QhsaShape {
 public:
  QhsaShape(const RootSystemCtx& rs, WeightVec theta)
      : rs_(rs), theta_(std::move(theta)), n_(theta_.height()) {
    assert(n_ <= kMaxStrands);
    for (auto& w : rs_.all_words(theta_)) {
      word_index_[w] = (uint32_t)words_.size();
      words_.push_back(w);
    }
  }

  const RootSystemCtx& roots() const { return rs_; }
  const WeightVec& theta() const { return theta_; }
  int n() const { return n_; }
  int ell() const { return rs_.ell(); }

  size_t word_count() const { return words_.size(); }
  const Word& word(uint32_t idx) const { return words_[idx]; }
  uint32_t word_index(const Word& w) const {
    auto it = word_index_.find(w);
    assert(it != word_index_.end());
    return it->second;
  }
  bool has_word(const Word& w) const { return word_index_.count(w) > 0; }

  int letter_parity(int i) const { return i == 0 ? 1 : 0; }
  int letter_weight(int i) const { return rs_.gram(i, i); }  // deg of y on letter i

  // w acting on word idx by place permutation
  uint32_t act(uint64_t perm_code, uint32_t idx) const {
    auto key = std::make_pair(perm_code, idx);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
    Permutation w = unpack_perm(perm_code, n_);
    uint32_t out = word_index(w.act(words_[idx]));
    act_cache_.emplace(key, out);
    return out;
  }

  const std::vector<int>& canonical_word(uint64_t perm_code) const {
    auto it = cw_cache_.find(perm_code);
    if (it != cw_cache_.end()) return it->second;
    Permutation w = unpack_perm(perm_code, n_);
    return cw_cache_.emplace(perm_code, w.canonical_word()).first->second;
  }

  Bidegree psi_bidegree(const Permutation& w, const Word& bottom) const {
    Bidegree b;
    for (int a = 1; a <= n_; ++a)
      for (int c = a + 1; c <= n_; ++c)
        if (w.map1(a) > w.map1(c)) {
          b.deg -= rs_.gram(bottom[a - 1], bottom[c - 1]);
          b.par ^= letter_parity(bottom[a - 1]) & letter_parity(bottom[c - 1]);
        }
    return b;
  }

  Bidegree monomial_bidegree(const BasisMonomial& m) const {
    Permutation w = unpack_perm(m.perm, n_);
    const Word& bottom = word(m.word);
    Bidegree b = psi_bidegree(w, bottom);
    const Word& top = word(act(m.perm, m.word));
    for (int s = 0; s < n_; ++s) {
      b.deg += m.k[s] * letter_weight(top[s]);
      b.par ^= (m.k[s] & 1) & letter_parity(top[s]);
    }
    return b;
  }

  // Q_{ij}(u, v) table of the defining relations.  The displayed entries of
  // the table assume i < j; the opposite orientation is forced by the
  // consistency Q_{ij}(u, v) = Q_{ji}(v, u), which puts the higher exponent
  // on the variable carrying the smaller letter.
  Poly2 Q(int i, int j) const {
    int ell = rs_.ell();
    Poly2 p;
    if (i == j) return p;
    if (std::abs(i - j) > 1) {
      p.terms.push_back({0, 0, 1});
      return p;
    }
    int c = j - i;  // +-1
    int a = std::min(i, j), b = std::max(i, j);
    int esmall = 1;
    if (a == 0 && b == 1) esmall = (ell == 1) ? 4 : 2;
    else if (a == ell - 1 && b == ell) esmall = 2;
    int eu = (i < j) ? esmall : 1;
    int ev = (j < i) ? esmall : 1;
    p.terms.push_back({eu, 0, c});
    p.terms.push_back({0, ev, -c});
    return p;
  }

  // B_{ijk}(u, v) braid error polynomial
  Poly2 B(int i, int j, int k) const {
    int ell = rs_.ell();
    Poly2 p;
    if (i != k || std::abs(i - j) != 1) return p;
    if (i == j + 1) {
      p.terms.push_back({0, 0, -1});
    } else {  // i == j - 1
      if (i == 0) {
        if (ell == 1) {
          // (u^2 + v^2)(v - u) = u^2 v - u^3 + v^3 - u v^2
          p.terms.push_back({2, 1, 1});
          p.terms.push_back({3, 0, -1});
          p.terms.push_back({0, 3, 1});
          p.terms.push_back({1, 2, -1});
        } else {
          p.terms.push_back({0, 1, 1});
          p.terms.push_back({1, 0, -1});
        }
      } else if (i == ell - 1 && ell - 1 > 0) {
        p.terms.push_back({1, 0, 1});
        p.terms.push_back({0, 1, 1});
      } else {
        p.terms.push_back({0, 0, 1});
      }
    }
    return p;
  }

 private:
  const RootSystemCtx& rs_;
  WeightVec theta_;
  int n_;
  std::vector<Word> words_;
  std::map<Word, uint32_t> word_index_;
  mutable std::map<std::pair<uint64_t, uint32_t>, uint32_t> act_cache_;
  mutable std::map<uint64_t, std::vector<int>> cw_cache_;
};

template <class F>
class AlgElem {
 public:
  using Terms = std::map<BasisMonomial, F>;

  AlgElem() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const BasisMonomial& m, const F& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_.emplace(m, c);
    else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const AlgElem& o, const F& c) {
    for (auto& [m, v] : o.terms_) add(m, c * v);
  }
  void add(const AlgElem& o) {
    for (auto& [m, v] : o.terms_) add(m, v);
  }
  AlgElem scaled(const F& c) const {
    AlgElem r;
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms_) r.terms_.emplace(m, c * v);
    return r;
  }
  friend AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    AlgElem r = a;
    r.add(b);
    return r;
  }
  friend AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    AlgElem r = a;
    for (auto& [m, v] : b.terms_) r.add(m, F() - v);
    return r;
  }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

template <class F>
class Engine {
 public:
  Engine(const QhsaShape& shape, ScalarSpec spec) : sh_(shape), spec_(spec) {}

  const QhsaShape& shape() const { return sh_; }
  const ScalarSpec& scalar_spec() const { return spec_; }

  F scalar(long long c) const { return make_scalar<F>(c, spec_); }

  AlgElem<F> unit(uint32_t word_idx) const {
    BasisMonomial m;
    m.word = word_idx;
    m.perm = pack_perm(Permutation::identity(sh_.n()));
    AlgElem<F> e;
    e.add(m, scalar(1));
    return e;
  }

  AlgElem<F> idempotent(const Word& w) const { return unit(sh_.word_index(w)); }

  // identity of R_theta: sum of all word idempotents
  AlgElem<F> one() const {
    AlgElem<F> e;
    BasisMonomial m;
    m.perm = pack_perm(Permutation::identity(sh_.n()));
    for (uint32_t i = 0; i < sh_.word_count(); ++i) {
      m.word = i;
      e.add(m, scalar(1));
    }
    return e;
  }

  // --- generator left multiplications -------------------------------------

  AlgElem<F> lmul_y(int s, const AlgElem<F>& e) const {
    AlgElem<F> out;
    for (auto& [m, c] : e.terms()) {
      const Word& top = sh_.word(sh_.act(m.perm, m.word));
      int sign = 1;
      if (sh_.letter_parity(top[s - 1])) {
        int cnt = 0;
        for (int t = 0; t < s - 1; ++t) cnt += m.k[t] * sh_.letter_parity(top[t]);
        if (cnt & 1) sign = -1;
      }
      BasisMonomial m2 = m;
      m2.k[s - 1] += 1;
      out.add(m2, sign > 0 ? c : F() - c);
    }
    return out;
  }

  AlgElem<F> lmul_psi(int r, const AlgElem<F>& e) const {
    AlgElem<F> out;
    for (auto& [m, c] : e.terms()) out.add(lmul_psi_mono(r, m), c);
    return out;
  }

  AlgElem<F> apply_psi_seq(const std::vector<int>& seq, AlgElem<F> e) const {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) e = lmul_psi(*it, e);
    return e;
  }

  // poly(u, v) |-> poly(y_pu, y_pv) * e, with y_pu powers multiplied leftmost
  AlgElem<F> apply_poly2(const Poly2& p, int pu, int pv, const AlgElem<F>& e) const {
    AlgElem<F> out;
    for (auto& [du, dv, coef] : p.terms) {
      AlgElem<F> t = e;
      for (int a = 0; a < dv; ++a) t = lmul_y(pv, t);
      for (int a = 0; a < du; ++a) t = lmul_y(pu, t);
      out.add(t, scalar(coef));
    }
    return out;
  }

  // --- products ------------------------------------------------------------

  AlgElem<F> mul(const AlgElem<F>& a, const AlgElem<F>& b) const {
    AlgElem<F> out;
    for (auto& [ma, ca] : a.terms()) {
      // b-terms whose top word matches ma's bottom word
      AlgElem<F> compat;
      for (auto& [mb, cb] : b.terms())
        if (sh_.act(mb.perm, mb.word) == ma.word) compat.add(mb, cb);
      if (compat.is_zero()) continue;
      AlgElem<F> prod = apply_psi_seq(sh_.canonical_word(ma.perm), compat);
      for (int s = sh_.n(); s >= 1; --s)
        for (int t = 0; t < ma.k[s - 1]; ++t) prod = lmul_y(s, prod);
      out.add(prod, ca);
    }
    return out;
  }

  // anti-automorphism fixing the generators
  AlgElem<F> tau(const AlgElem<F>& e) const {
    AlgElem<F> out;
    for (auto& [m, c] : e.terms()) {
      uint32_t top = sh_.act(m.perm, m.word);
      AlgElem<F> t = unit(top);
      for (int s = 1; s <= sh_.n(); ++s)
        for (int a = 0; a < m.k[s - 1]; ++a) t = lmul_y(s, t);
      const auto& cw = sh_.canonical_word(m.perm);
      for (auto r : cw) t = lmul_psi(r, t);  // forward order = reversed word applied innermost-first
      out.add(t, c);
    }
    return out;
  }

  // parabolic embedding iota: element of R_{theta1} (shape sh1) at strand
  // offset 0 and element of R_{theta2} at offset ht(theta1); computed by
  // embedding monomials and multiplying.
  AlgElem<F> embed_product(const Engine& eng1, const AlgElem<F>& a, const Engine& eng2,
                           const AlgElem<F>& b) const {
    AlgElem<F> ea = embed_one(eng1, a, 0);
    AlgElem<F> eb = embed_one(eng2, b, eng1.shape().n());
    return mul(ea, eb);
  }

  AlgElem<F> embed_one(const Engine& sub, const AlgElem<F>& a, int offset) const {
    // pad with identity strands on the complementary positions of every
    // compatible ambient word
    AlgElem<F> out;
    int nsub = sub.shape().n();
    for (auto& [m, c] : a.terms()) {
      const Word& wsub = sub.shape().word(m.word);
      Permutation psub = unpack_perm(m.perm, nsub);
      for (uint32_t wi = 0; wi < sh_.word_count(); ++wi) {
        const Word& amb = sh_.word(wi);
        bool match = true;
        for (int t = 0; t < nsub && match; ++t)
          if (amb[offset + t] != wsub[t]) match = false;
        if (!match) continue;
        std::vector<int> v(sh_.n());
        for (int t = 0; t < sh_.n(); ++t) v[t] = t;
        for (int t = 0; t < nsub; ++t) v[offset + t] = offset + psub.one_line()[t];
        BasisMonomial mm;
        mm.word = wi;
        mm.perm = pack_perm(Permutation(std::move(v)));
        for (int t = 0; t < nsub; ++t) mm.k[offset + t] = m.k[t];
        out.add(mm, c);
      }
    }
    return out;
  }

  Bidegree bidegree(const BasisMonomial& m) const { return sh_.monomial_bidegree(m); }

  // bidegree of a homogeneous element (asserts homogeneity)
  Bidegree bidegree(const AlgElem<F>& e) const {
    assert(!e.is_zero());
    Bidegree b = sh_.monomial_bidegree(e.terms().begin()->first);
    for (auto& [m, c] : e.terms()) {
      (void)c;
      assert(sh_.monomial_bidegree(m) == b);
    }
    return b;
  }

  bool is_homogeneous(const AlgElem<F>& e) const {
    if (e.is_zero()) return true;
    Bidegree b = sh_.monomial_bidegree(e.terms().begin()->first);
    for (auto& [m, c] : e.terms()) {
      (void)c;
      if (!(sh_.monomial_bidegree(m) == b)) return false;
    }
    return true;
  }

 private:
  // ---- single-monomial left multiplication by psi_r ------------------------

  const AlgElem<F>& lmul_psi_mono(int r, const BasisMonomial& m) const {
    bool has_y = false;
    for (int s = 0; s < sh_.n(); ++s)
      if (m.k[s]) { has_y = true; break; }
    if (!has_y) {
      // memoized crossing-only case
      std::array<uint64_t, 3> key = {(uint64_t)r, m.word, m.perm};
      auto it = psi_cache_.find(key);
      if (it != psi_cache_.end()) return it->second;
      AlgElem<F> val = lmul_psi_pure(r, m);
      return psi_cache_.emplace(key, std::move(val)).first->second;
    }
    scratch_ = lmul_psi_dotted(r, m);
    return scratch_;
  }

  // psi_r * y^k psi_w 1_i with k != 0: peel the smallest dotted strand
  AlgElem<F> lmul_psi_dotted(int r, const BasisMonomial& m) const {
    int s = 0;
    while (m.k[s] == 0) ++s;
    ++s;  // 1-indexed strand
    BasisMonomial rest = m;
    rest.k[s - 1] -= 1;
    const Word& top = sh_.word(sh_.act(m.perm, m.word));
    int pr = sh_.letter_parity(top[r - 1]);
    int pr1 = sh_.letter_parity(top[r]);
    AlgElem<F> restE;
    restE.add(rest, scalar(1));
    AlgElem<F> out;
    if (s != r && s != r + 1) {
      int sign = (pr & pr1 & sh_.letter_parity(top[s - 1])) ? -1 : 1;
      AlgElem<F> t = lmul_y(s, lmul_psi(r, restE));
      out.add(t, scalar(sign));
    } else if (s == r + 1) {
      int sign = (pr & pr1) ? -1 : 1;
      AlgElem<F> t = lmul_y(r, lmul_psi(r, restE));
      out.add(t, scalar(sign));
      if (top[r - 1] == top[r]) out.add(restE, scalar(1));
    } else {  // s == r
      int sign = (pr & pr1) ? -1 : 1;
      AlgElem<F> t = lmul_y(r + 1, lmul_psi(r, restE));
      out.add(t, scalar(sign));
      if (top[r - 1] == top[r]) out.add(restE, scalar(-sign));
    }
    return out;
  }

  AlgElem<F> eval_correction(const MatsumotoWalk::Correction& c, uint32_t bottom_idx) const {
    Poly2 B = sh_.B(c.below[c.rr - 1], c.below[c.rr], c.below[c.rr + 1]);
    if (B.is_zero()) return AlgElem<F>();
    AlgElem<F> t = apply_psi_seq(c.suffix, unit(bottom_idx));
    t = apply_poly2(B, c.rr, c.rr + 2, t);
    t = apply_psi_seq(c.prefix, t);
    return t.scaled(scalar(c.sign));
  }

  // psi_r * psi_w 1_i (no dots)
  AlgElem<F> lmul_psi_pure(int r, const BasisMonomial& m) const {
    Permutation w = unpack_perm(m.perm, sh_.n());
    Permutation sr = Permutation::transposition(sh_.n(), r);
    Permutation v = sr * w;
    const Word& bottom = sh_.word(m.word);
    if (v.length() > w.length()) {
      // ascent: convert (r) + cw(w) to cw(v)
      std::vector<int> u;
      u.push_back(r);
      const auto& cww = sh_.canonical_word(m.perm);
      u.insert(u.end(), cww.begin(), cww.end());
      const auto& target = sh_.canonical_word(pack_perm(v));
      MatsumotoWalk walk(u, bottom);
      walk.convert_to(target);
      BasisMonomial lead;
      lead.word = m.word;
      lead.perm = pack_perm(v);
      AlgElem<F> out;
      for (auto& c : walk.corrections) out.add(eval_correction(c, m.word));
      out.add(lead, scalar(walk.sign));
      return out;
    }
    // descent: convert cw(w) to start with r, then contract psi_r^2
    MatsumotoWalk walk(sh_.canonical_word(m.perm), bottom);
    walk.to_front(0, r);
    // walk.word = (r, rest...), Psi(cw(w)) = sign * Psi(r, rest) + corrections
    std::vector<int> rest(walk.word.begin() + 1, walk.word.end());
    AlgElem<F> restE = apply_psi_seq(rest, unit(m.word));
    // psi_r^2 on restE: per-monomial Q polynomial at the top word
    AlgElem<F> main;
    for (auto& [mm, cc] : restE.terms()) {
      const Word& top = sh_.word(sh_.act(mm.perm, mm.word));
      AlgElem<F> one;
      one.add(mm, cc);
      main.add(apply_poly2(sh_.Q(top[r - 1], top[r]), r, r + 1, one), scalar(1));
    }
    AlgElem<F> out = main.scaled(scalar(walk.sign));
    // corrections still need the pending psi_r on the left
    for (auto& c : walk.corrections) out.add(lmul_psi(r, eval_correction(c, m.word)));
    return out;
  }

  const QhsaShape& sh_;
  ScalarSpec spec_;
  mutable std::map<std::array<uint64_t, 3>, AlgElem<F>> psi_cache_;
  mutable AlgElem<F> scratch_;
};

}  // namespace cuspidal
