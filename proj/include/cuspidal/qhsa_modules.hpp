#pragma once

// Explicit graded supermodules over the imaginary cuspidal algebra.
//
// ColumnModule: a quotient of the column HC_1 f^j at d = 1, either the full
// column (relations = ideal only) or the irreducible hat-L_j (relations also
// kill everything C_1 does not see through the vector v_j).
//
// IndModule: the parabolic induction of a tensor product of d column modules
// to R_{d delta}, carried on the coset basis {psi_x (x in D^{(p^d)})} with
// the action computed by straightening.  Every non-cuspidal word idempotent
// annihilates these modules (verified explicitly by the consumers), so they
// detect linear independence modulo the cuspidal ideal.

#include <functional>
#include <memory>

#include "qhsa_cuspidal.hpp"
#include "qhsa_distinguished.hpp"

namespace cuspidal {

template <class F>
class ColumnModule {
 public:
  struct BasisVec {
    AlgElem<F> rep;  // coset representative in R_delta . f^j
    int deg = 0;
    int par = 0;
    Word top;  // word of the vector
  };

  // kind: full column (irreducible = false) or hat-L_j (irreducible = true).
  // The window [lo, hi] is in the internal grading where the generator f^j
  // sits in bidegree (0, 0); reported vector bidegrees carry the offset
  // (1 + 2j - 2l, j) so that hat-v_j has its standard bidegree.
  ColumnModule(CuspidalAlgebra<F>& alg, int j, bool irreducible, int lo, int hi)
      : alg_(alg), dist_(alg), j_(j), lo_(lo), hi_(hi) {
    assert(alg.d() == 1);
    if (irreducible) {
      deg_off_ = 1 + 2 * j - 2 * alg.shape().ell();
      par_off_ = j & 1;
    }
    fj_ = dist_.f_word_colors({j});
    hat_ = fj_.terms().begin()->first.word;
    if (irreducible) build_k_lifts();
    for (int D = lo_; D <= hi_; ++D) build_degree(D, irreducible);
  }

  const CuspidalAlgebra<F>& alg() const { return alg_; }
  int color() const { return j_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::vector<BasisVec>& basis() const { return basis_; }
  const std::vector<int>& basis_at(int deg) const {
    static const std::vector<int> empty;
    auto it = at_degree_.find(deg);
    return it == at_degree_.end() ? empty : it->second;
  }

  // action of a homogeneous element of R_delta on a basis vector, as
  // coordinates; asserts the image stays inside the window
  std::vector<std::pair<int, F>> act(const AlgElem<F>& op, int vec) const {
    AlgElem<F> img = alg_.engine().mul(op, basis_[vec].rep);
    return express(img);
  }

  std::vector<std::pair<int, F>> express(const AlgElem<F>& img) const {
    if (img.is_zero()) return {};
    Bidegree bd = alg_.engine().bidegree(img);
    auto it = spaces_.find(bd.deg);
    if (it == spaces_.end()) {
      // outside window: must be provably zero, i.e. the window covered the
      // whole module; callers pick windows accordingly
      assert(bd.deg > hi_ || bd.deg < lo_);
      assert(false && "column module window too small");
    }
    auto red = it->second.express(alg_.row_of(img));
    assert(red.residual.empty() && "element escapes the module presentation");
    std::vector<std::pair<int, F>> out;
    for (auto& [bi, c] : red.coords) out.emplace_back(deg_index_.at(bd.deg)[bi], c);
    return out;
  }

 private:
  void build_k_lifts() {
    // K spans the annihilator of v_j inside f_1 HC_1 f^j: all block classes
    // except the span of f^j itself
    int ell = alg_.shape().ell();
    int klo = alg_.lowest_psi_deg(hat_);
    int khi = hi_ - alg_.lowest_psi_deg(hat_);
    for (int e = klo; e <= khi; ++e) {
      QuotientSpace<F> qs(alg_.engine().scalar(1));
      for (auto& [piv, row] : alg_.ideal_echelon(hat_, e).rows()) {
        (void)piv;
        AlgElem<F> rel = alg_.engine().mul(alg_.elem_of_row(row), fj_);
        if (!rel.is_zero()) qs.add_relation(alg_.row_of(rel));
      }
      if (e == 0) qs.add_relation(alg_.row_of(fj_));  // exclude the f^j class
      for (int i = 0; i < ell; ++i) {
        AlgElem<F> fi = dist_.f_word_colors({i});
        uint32_t hati = fi.terms().begin()->first.word;
        for (auto& m : alg_.block_monomials(hati, hat_, e)) {
          AlgElem<F> me;
          me.add(m, alg_.engine().scalar(1));
          AlgElem<F> cand = alg_.engine().mul(alg_.engine().mul(fi, me), fj_);
          if (cand.is_zero()) continue;
          if (qs.add_basis_candidate(alg_.row_of(cand)) >= 0) k_lifts_.push_back({cand, e});
        }
      }
    }
  }

  void build_degree(int D, bool irreducible) {
    QuotientSpace<F> qs(alg_.engine().scalar(1));
    for (auto& [piv, row] : alg_.ideal_echelon(hat_, D).rows()) {
      (void)piv;
      AlgElem<F> rel = alg_.engine().mul(alg_.elem_of_row(row), fj_);
      if (!rel.is_zero()) qs.add_relation(alg_.row_of(rel));
    }
    if (irreducible) {
      for (auto& [k, kdeg] : k_lifts_) {
        uint32_t ktop = k.terms().begin()->first.word;
        ktop = alg_.shape().act(k.terms().begin()->first.perm, ktop);
        for (auto& m : alg_.column_monomials(ktop, D - kdeg)) {
          AlgElem<F> me;
          me.add(m, alg_.engine().scalar(1));
          AlgElem<F> rel = alg_.engine().mul(me, k);
          if (!rel.is_zero()) qs.add_relation(alg_.row_of(rel));
        }
      }
    }
    std::vector<int> idx;
    for (auto& m : alg_.column_monomials(hat_, D)) {
      AlgElem<F> me;
      me.add(m, alg_.engine().scalar(1));
      AlgElem<F> cand = alg_.engine().mul(me, fj_);
      if (cand.is_zero()) continue;
      int bi = qs.add_basis_candidate(alg_.row_of(cand));
      if (bi >= 0) {
        BasisVec v;
        v.rep = cand;
        Bidegree bd = alg_.engine().bidegree(cand);
        v.deg = bd.deg + deg_off_;
        v.par = (bd.par + par_off_) & 1;
        v.top = alg_.shape().word(alg_.shape().act(m.perm, m.word));
        idx.push_back((int)basis_.size());
        at_degree_[D].push_back((int)basis_.size());
        basis_.push_back(std::move(v));
      }
    }
    deg_index_[D] = std::move(idx);
    // map local QuotientSpace basis index -> global; order of insertion equal
    spaces_.emplace(D, std::move(qs));
  }

  CuspidalAlgebra<F>& alg_;
  Distinguished<F> dist_;
  int j_, lo_, hi_;
  int deg_off_ = 0, par_off_ = 0;
  AlgElem<F> fj_;
  uint32_t hat_ = 0;
  std::vector<std::pair<AlgElem<F>, int>> k_lifts_;
  std::vector<BasisVec> basis_;
  std::map<int, std::vector<int>> at_degree_;  // degree -> global indices
  std::map<int, std::vector<int>> deg_index_;  // degree -> local->global map
  std::map<int, QuotientSpace<F>> spaces_;
};

// Parabolic induction of factor_1 x ... x factor_d to R_{d delta}.
template <class F>
class IndModule {
 public:
  struct Key {
    uint64_t coset;                      // packed minimal coset representative
    std::array<uint16_t, 8> part{};     // factor basis indices

    friend bool operator<(const Key& a, const Key& b) {
      if (a.coset != b.coset) return a.coset < b.coset;
      return a.part < b.part;
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.coset == b.coset && a.part == b.part;
    }
  };
  using Vec = std::map<Key, F>;

  IndModule(CuspidalAlgebra<F>& big, std::vector<const ColumnModule<F>*> factors)
      : big_(big), factors_(std::move(factors)) {
    d_ = (int)factors_.size();
    p_ = big_.shape().roots().p();
    assert(big_.d() == d_);
  }

  const CuspidalAlgebra<F>& big() const { return big_; }
  int blocks() const { return d_; }

  Key generator_key() const {
    // identity coset, lowest basis vector of each factor must be chosen by
    // the caller; here: the first basis vector of each factor's f^j class
    Key k;
    k.coset = pack_perm(Permutation::identity(d_ * p_));
    for (int b = 0; b < d_; ++b) k.part[b] = 0;
    return k;
  }

  // word of the basis vector = coset . (concat of factor words)
  Word key_word(const Key& k) const {
    Word w;
    for (int b = 0; b < d_; ++b) {
      const auto& fw = factors_[b]->basis()[k.part[b]].top;
      w.insert(w.end(), fw.begin(), fw.end());
    }
    Permutation x = unpack_perm(k.coset, d_ * p_);
    return x.act(w);
  }

  Bidegree key_bidegree(const Key& k) const {
    Word bottomw;
    Bidegree bd{0, 0};
    for (int b = 0; b < d_; ++b) {
      const auto& v = factors_[b]->basis()[k.part[b]];
      bottomw.insert(bottomw.end(), v.top.begin(), v.top.end());
      bd.deg += v.deg;
      bd.par ^= v.par;
    }
    Permutation x = unpack_perm(k.coset, d_ * p_);
    Bidegree xb = big_.shape().psi_bidegree(x, bottomw);
    return bd + xb;
  }

  // enumerate all basis keys with a fixed total degree
  std::vector<Key> basis_at(int deg) const {
    std::vector<Key> out;
    std::vector<Permutation> cosets = coset_reps_right(
        Composition(std::vector<int>(d_, p_)), d_ * p_);
    std::function<void(int, Key&)> rec = [&](int b, Key& k) {
      if (b == d_) {
        if (key_bidegree(k).deg == deg) out.push_back(k);
        return;
      }
      for (int i = 0; i < (int)factors_[b]->basis().size(); ++i) {
        k.part[b] = (uint16_t)i;
        rec(b + 1, k);
      }
    };
    for (auto& x : cosets) {
      Key k;
      k.coset = pack_perm(x);
      rec(0, k);
    }
    return out;
  }

  // --- action -----------------------------------------------------------

  static void vec_add(Vec& v, const Key& k, const F& c) {
    if (c.is_zero()) return;
    auto it = v.find(k);
    if (it == v.end()) v.emplace(k, c);
    else {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
    }
  }
  static void vec_add(Vec& v, const Vec& o, const F& c) {
    for (auto& [k, cc] : o) vec_add(v, k, c * cc);
  }

  Vec act_elem(const AlgElem<F>& op, const Vec& v) const {
    Vec out;
    for (auto& [m, c] : op.terms()) {
      // monomial acts as y^k . psi_w . 1_i
      Vec cur;
      const Word& bw = big_.shape().word(m.word);
      for (auto& [k, cc] : v)
        if (key_word(k) == bw) vec_add(cur, k, cc);
      if (cur.empty()) continue;
      cur = act_seq(big_.shape().canonical_word(m.perm), cur);
      for (int s = big_.shape().n(); s >= 1; --s)
        for (int t = 0; t < m.k[s - 1]; ++t) cur = act_y(s, cur);
      vec_add(out, cur, c);
    }
    return out;
  }

  Vec act_seq(const std::vector<int>& seq, Vec v) const {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) v = act_psi(*it, v);
    return v;
  }

  Vec act_poly2(const Poly2& poly, int pu, int pv, const Vec& v) const {
    Vec out;
    for (auto& [du, dv, coef] : poly.terms) {
      Vec t = v;
      for (int a = 0; a < dv; ++a) t = act_y(pv, t);
      for (int a = 0; a < du; ++a) t = act_y(pu, t);
      vec_add(out, t, big_.engine().scalar(coef));
    }
    return out;
  }

  Vec act_y(int t, const Vec& v) const {
    Vec out;
    for (auto& [k, c] : v) vec_add(out, act_y_key(t, k), c);
    return out;
  }
  Vec act_psi(int r, const Vec& v) const {
    Vec out;
    for (auto& [k, c] : v) vec_add(out, act_psi_key(r, k), c);
    return out;
  }

  Vec act_y_key(int t, const Key& key) const {
    // move the dot down along its strand through the crossings of x
    Permutation x = unpack_perm(key.coset, d_ * p_);
    const std::vector<int>& cw = big_.shape().canonical_word(key.coset);
    Word bottomw = key_bottom(key);
    Vec out;
    int s = t, sign = 1;
    // word below position q of the psi stack
    for (size_t q = 0; q < cw.size(); ++q) {
      int r = cw[q];
      Word below = word_below(cw, q, bottomw);
      int pr = MatsumotoWalk::letter_parity(below[r - 1]);
      int pr1 = MatsumotoWalk::letter_parity(below[r]);
      if (s != r && s != r + 1) {
        int ps = MatsumotoWalk::letter_parity(below[s - 1]);
        if (pr & pr1 & ps) sign = -sign;
      } else if (s == r) {
        // y_r psi_r 1 = (-1)^{eps} psi_r y_{r+1} 1 - (-1)^{eps} delta 1
        int eps = pr & pr1;
        if (eps) sign = -sign;
        if (below[r - 1] == below[r]) {
          // correction: remaining word with crossing q removed, no dot
          std::vector<int> rest(cw.begin(), cw.end());
          rest.erase(rest.begin() + q);
          Key base = key;
          base.coset = pack_perm(Permutation::identity(d_ * p_));
          Vec corr = act_seq(rest, unit_vec(base));
          vec_add(out, corr, big_.engine().scalar(-sign));
        }
        s = r + 1;
      } else {  // s == r + 1: y_{r+1} psi_r 1 = (-1)^{eps} psi_r y_r 1 + delta 1
        int eps = pr & pr1;
        int old_sign = sign;
        if (eps) sign = -sign;
        if (below[r - 1] == below[r]) {
          std::vector<int> rest(cw.begin(), cw.end());
          rest.erase(rest.begin() + q);
          Key base = key;
          base.coset = pack_perm(Permutation::identity(d_ * p_));
          Vec corr = act_seq(rest, unit_vec(base));
          vec_add(out, corr, big_.engine().scalar(old_sign));
        }
        s = r;
      }
    }
    // dot arrived at parabolic position s = x^{-1}(t); apply to its factor
    assert(s == x.inverse().map1(t));
    int b = (s - 1) / p_;
    int local = s - b * p_;
    vec_add(out, act_local_y(b, local, key), big_.engine().scalar(sign));
    return out;
  }

  // rank of the image of an operator on a fixed total degree of the module
  long long image_rank(const AlgElem<F>& op, int deg) const {
    Echelon<F> ech;
    std::map<Key, uint64_t> ids;
    auto id_of = [&](const Key& k) {
      auto it = ids.find(k);
      if (it != ids.end()) return it->second;
      uint64_t id = ids.size();
      ids.emplace(k, id);
      return id;
    };
    for (auto& k : basis_at(deg)) {
      Vec v;
      v.emplace(k, big_.engine().scalar(1));
      Vec img = act_elem(op, v);
      SparseRow<F> row;
      for (auto& [k2, c] : img) row.terms.emplace_back(id_of(k2), c);
      std::sort(row.terms.begin(), row.terms.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!row.empty()) ech.insert(std::move(row));
    }
    return (long long)ech.rank();
  }

  // total dims of the image of an idempotent across all degrees of a window
  std::map<int, long long> block_dims(const AlgElem<F>& idem, int lo, int hi) const {
    std::map<int, long long> out;
    for (int D = lo; D <= hi; ++D) {
      long long r = image_rank(idem, D);
      if (r) out[D] = r;
    }
    return out;
  }

  Vec act_psi_key(int r, const Key& key) const {
    Permutation x = unpack_perm(key.coset, d_ * p_);
    Permutation sr = Permutation::transposition(d_ * p_, r);
    Permutation z = sr * x;
    Word bottomw = key_bottom(key);
    const std::vector<int>& cwx = big_.shape().canonical_word(key.coset);
    if (z.length() > x.length()) {
      if (is_min_coset(z)) {
        std::vector<int> u;
        u.push_back(r);
        u.insert(u.end(), cwx.begin(), cwx.end());
        MatsumotoWalk walk(u, bottomw);
        walk.convert_to(big_.shape().canonical_word(pack_perm(z)));
        Vec out = eval_corrections(walk, key);
        Key k2 = key;
        k2.coset = pack_perm(z);
        vec_add(out, k2, big_.engine().scalar(walk.sign));
        return out;
      }
      // z = x s_q with q inside a block
      int q = x.inverse().map1(r);
      assert(x.inverse().map1(r + 1) == q + 1);
      std::vector<int> u;
      u.push_back(r);
      u.insert(u.end(), cwx.begin(), cwx.end());
      std::vector<int> target = cwx;
      target.push_back(q);
      MatsumotoWalk walk(u, bottomw);
      walk.convert_to(target);
      Vec out = eval_corrections(walk, key);
      int b = (q - 1) / p_;
      int local = q - b * p_;
      Vec main = act_local_psi(b, local, key);
      vec_add(out, main, big_.engine().scalar(walk.sign));
      return out;
    }
    // descent
    MatsumotoWalk walk(cwx, bottomw);
    walk.to_front(0, r);
    std::vector<int> rest(walk.word.begin() + 1, walk.word.end());
    Key base = key;
    base.coset = pack_perm(Permutation::identity(d_ * p_));
    Vec restv = act_seq(rest, unit_vec(base));
    Vec main;
    for (auto& [k2, c2] : restv) {
      Word top = key_word(k2);
      Vec one;
      one.emplace(k2, c2);
      Vec qq = act_poly2(big_.shape().Q(top[r - 1], top[r]), r, r + 1, one);
      vec_add(main, qq, big_.engine().scalar(1));
    }
    Vec out;
    vec_add(out, main, big_.engine().scalar(walk.sign));
    for (auto& c : walk.corrections) {
      Vec cv = eval_correction(c, key);
      vec_add(out, act_psi(r, cv), big_.engine().scalar(1));
    }
    return out;
  }

 private:
  Word key_bottom(const Key& k) const {
    Word w;
    for (int b = 0; b < d_; ++b) {
      const auto& fw = factors_[b]->basis()[k.part[b]].top;
      w.insert(w.end(), fw.begin(), fw.end());
    }
    return w;
  }

  static Word word_below(const std::vector<int>& word, size_t q, const Word& bottom) {
    Word cur = bottom;
    for (size_t t = word.size(); t > q + 1; --t) std::swap(cur[word[t - 1] - 1], cur[word[t - 1]]);
    return cur;
  }

  Vec unit_vec(const Key& k) const {
    Vec v;
    v.emplace(k, big_.engine().scalar(1));
    return v;
  }

  bool is_min_coset(const Permutation& w) const {
    for (int b = 0; b < d_; ++b)
      if (!w.increasing_on(b * p_ + 1, (b + 1) * p_)) return false;
    return true;
  }

  Vec eval_corrections(const MatsumotoWalk& walk, const Key& key) const {
    Vec out;
    for (auto& c : walk.corrections) vec_add(out, eval_correction(c, key), big_.engine().scalar(1));
    return out;
  }

  Vec eval_correction(const MatsumotoWalk::Correction& c, const Key& key) const {
    Poly2 B = big_.shape().B(c.below[c.rr - 1], c.below[c.rr], c.below[c.rr + 1]);
    if (B.is_zero()) return Vec{};
    Key base = key;
    base.coset = pack_perm(Permutation::identity(d_ * p_));
    Vec t = act_seq(c.suffix, unit_vec(base));
    t = act_poly2(B, c.rr, c.rr + 2, t);
    t = act_seq(c.prefix, t);
    Vec out;
    vec_add(out, t, big_.engine().scalar(c.sign));
    return out;
  }

  // local generator action on factor b with the tensor super sign
  Vec act_local_y(int b, int local, const Key& key) const {
    const auto& fac = *factors_[b];
    const auto& v = fac.basis()[key.part[b]];
    // operator parity: parity of the letter under the dot
    int oppar = MatsumotoWalk::letter_parity(v.top[local - 1]);
    int sign = tensor_sign(b, oppar, key);
    AlgElem<F> img = fac.alg().engine().lmul_y(local, v.rep);
    return lift_local(b, img, key, sign);
  }

  Vec act_local_psi(int b, int local, const Key& key) const {
    const auto& fac = *factors_[b];
    const auto& v = fac.basis()[key.part[b]];
    int oppar = MatsumotoWalk::letter_parity(v.top[local - 1]) &
                MatsumotoWalk::letter_parity(v.top[local]);
    int sign = tensor_sign(b, oppar, key);
    AlgElem<F> img = fac.alg().engine().lmul_psi(local, v.rep);
    return lift_local(b, img, key, sign);
  }

  int tensor_sign(int b, int oppar, const Key& key) const {
    if (!oppar) return 1;
    int par = 0;
    for (int b2 = 0; b2 < b; ++b2) par ^= factors_[b2]->basis()[key.part[b2]].par;
    return par ? -1 : 1;
  }

  Vec lift_local(int b, const AlgElem<F>& img, const Key& key, int sign) const {
    Vec out;
    auto coords = factors_[b]->express(img);
    for (auto& [bi, c] : coords) {
      Key k2 = key;
      k2.part[b] = (uint16_t)bi;
      vec_add(out, k2, sign > 0 ? c : F() - c);
    }
    return out;
  }

  CuspidalAlgebra<F>& big_;
  std::vector<const ColumnModule<F>*> factors_;
  int d_, p_;
};

}  // namespace cuspidal
