#pragma once

// Distinguished elements of R_{d delta} and its cuspidal quotient: divided
// power and Gelfand-Graev idempotents, the elements g_{d,j}, h_{d,j}, the
// zigzag generator images u., z., a., the sigma/s-dot elements and b_w.

#include <map>
#include <memory>
#include <optional>

#include "qhsa_cuspidal.hpp"

namespace cuspidal {

// sign-corrected divided power idempotent 1_{i^(m)} inside its own R_{m a_i};
// returns the dot vector's sign choice: the candidate psi_{w_m} y_2 y_3^2...
// is tested against e^2 = +-e and negated if needed.
template <class F>
int divided_idempotent_sign(const RootSystemCtx& rs, int i, int m, const ScalarSpec& spec) {
  if (m == 1) return 1;
  WeightVec th(rs.ell());
  th.m[i] = m;
  QhsaShape shape(rs, th);
  Engine<F> eng(shape, spec);
  Word w(m, i);
  AlgElem<F> e = eng.idempotent(w);
  for (int s = 2; s <= m; ++s)
    for (int t = 0; t < s - 1; ++t) e = eng.lmul_y(s, e);
  e = eng.apply_psi_seq(Permutation::longest(m).canonical_word(), e);
  AlgElem<F> sq = eng.mul(e, e);
  if (sq == e) return 1;
  AlgElem<F> neg = e.scaled(eng.scalar(-1));
  if (sq == neg) return -1;
  assert(false && "divided power candidate is not quasi-idempotent");
  return 0;
}

// Context bundling a cuspidal algebra with its distinguished elements.
template <class F>
class Distinguished {
 public:
  explicit Distinguished(CuspidalAlgebra<F>& alg) : alg_(alg) {}

  const Engine<F>& eng() const { return alg_.engine(); }
  int p() const { return alg_.shape().roots().p(); }
  int n() const { return alg_.shape().n(); }

  // embedded divided power factor at strand offset: sum over all ambient
  // words matching i^m on the block, dressed with the nil-Hecke dots and the
  // block's longest permutation
  AlgElem<F> divided_factor(int offset, int i, int m) const {
    const QhsaShape& sh = alg_.shape();
    int sign = sign_of(i, m);
    AlgElem<F> e;
    BasisMonomial mm;
    mm.perm = pack_perm(Permutation::identity(sh.n()));
    for (uint32_t wi = 0; wi < sh.word_count(); ++wi) {
      const Word& amb = sh.word(wi);
      bool match = true;
      for (int t = 0; t < m && match; ++t)
        if (amb[offset + t] != i) match = false;
      if (!match) continue;
      mm.word = wi;
      e.add(mm, eng().scalar(1));
    }
    for (int s = 2; s <= m; ++s)
      for (int t = 0; t < s - 1; ++t) e = eng().lmul_y(offset + s, e);
    // longest element of the block, shifted
    std::vector<int> w0;
    for (auto r : Permutation::longest(m).canonical_word()) w0.push_back(offset + r);
    e = eng().apply_psi_seq(w0, e);
    return sign > 0 ? e : e.scaled(eng().scalar(-1));
  }

  // divided power idempotent of a divided word (Gelfand-Graev idempotents are
  // the special case of GG divided words)
  AlgElem<F> divided_idempotent(const DividedWord& dw) const {
    auto it = div_cache_.find(key_of(dw));
    if (it != div_cache_.end()) return it->second;
    AlgElem<F> e = eng().one();
    int offset = 0;
    for (auto& [i, m] : dw.factors) {
      e = eng().mul(e, divided_factor(offset, i, m));
      offset += m;
    }
    return div_cache_.emplace(key_of(dw), std::move(e)).first->second;
  }

  AlgElem<F> gg_idempotent(const ColoredComposition& cc) const {
    return divided_idempotent(alg_.shape().roots().gg_word(cc));
  }

  // f^{j^d}: colors j on omega_d
  AlgElem<F> f_word_colors(const std::vector<int>& colors) const {
    return gg_idempotent(ColoredComposition(Composition::omega((int)colors.size()), colors));
  }

  // f_d = sum over essential colored compositions
  AlgElem<F> f_d() const {
    AlgElem<F> e;
    for (auto& cc : lambda0_col(alg_.d(), alg_.shape().ell())) e.add(gg_idempotent(cc));
    return e;
  }

  // f_{omega_d} = sum over all color vectors on (1^d)
  AlgElem<F> f_omega() const {
    AlgElem<F> e;
    int d = alg_.d(), ell = alg_.shape().ell();
    std::vector<int> col(d, 0);
    while (true) {
      e.add(f_word_colors(col));
      int r = 0;
      while (r < d && col[r] == ell - 1) col[r++] = 0;
      if (r == d) break;
      ++col[r];
    }
    return e;
  }

  // --- the elements g_{d,j} and h_{d,j} -------------------------------------

  // shuffles x in D^{(p^d)} with x . (hat l^j)^d = hat l^{d,j}
  std::vector<Permutation> gamma_fiber(int j) const {
    const RootSystemCtx& rs = alg_.shape().roots();
    int d = alg_.d(), pp = p();
    Word single = rs.gg_word_single(1, j).expand();
    Word target = rs.gg_word_single(d, j).expand();
    std::vector<Permutation> out;
    // assign target positions to blocks; each block consumes its word in order
    std::vector<int> consumed(d, 0);
    std::vector<int> vmap(d * pp);  // vmap[block*p + consumed] = target pos
    std::function<void(int)> rec = [&](int t) {
      if (t == d * pp) {
        std::vector<int> v(d * pp);
        for (int b = 0; b < d; ++b)
          for (int s = 0; s < pp; ++s) v[b * pp + s] = vmap[b * pp + s];
        out.emplace_back(std::move(v));
        return;
      }
      for (int b = 0; b < d; ++b) {
        if (consumed[b] == pp) continue;
        if (single[consumed[b]] != target[t]) continue;
        vmap[b * pp + consumed[b]] = t;
        ++consumed[b];
        rec(t + 1);
        --consumed[b];
      }
    };
    rec(0);
    return out;
  }

  Permutation gamma(int j) const {
    auto fib = gamma_fiber(j);
    assert(!fib.empty());
    Permutation best = fib[0];
    for (auto& x : fib)
      if (x.length() > best.length()) best = x;
    return best;
  }
  Permutation chi(int j) const {
    auto fib = gamma_fiber(j);
    assert(!fib.empty());
    Permutation best = fib[0];
    for (auto& x : fib)
      if (x.length() < best.length()) best = x;
    return best;
  }

  AlgElem<F> g_elem(int j) const {
    std::vector<int> colors(alg_.d(), j);
    return eng().apply_psi_seq(gamma(j).canonical_word(), f_word_colors(colors));
  }
  AlgElem<F> h_elem(int j) const {
    std::vector<int> colors(alg_.d(), j);
    return eng().apply_psi_seq(chi(j).canonical_word(), f_word_colors(colors));
  }

  // g_{lambda,i} as the parabolic tensor of g_{lambda_r, i_r}; computed as
  // f^{lambda,i} g_{d,...} like elements via embedded factors
  AlgElem<F> g_lambda(const ColoredComposition& cc) const {
    // per factor: gamma permutation of the factor embedded at its offset
    const RootSystemCtx& rs = alg_.shape().roots();
    int pp = p();
    std::vector<int> word;  // concatenated psi word
    int offset = 0;
    for (size_t r = 0; r < cc.length(); ++r) {
      int dr = cc.comp.part(r), j = cc.colors[r];
      // local gamma within the sub-block
      CuspidalAlgebra<F> sub(rs, dr, eng().scalar_spec());
      Distinguished<F> dsub(sub);
      for (auto t : dsub.gamma(j).canonical_word()) word.push_back(offset + t);
      offset += dr * pp;
    }
    // right idempotent: f^{i_1^{l_1} ... i_n^{l_n}}
    std::vector<int> colors;
    for (size_t r = 0; r < cc.length(); ++r)
      colors.insert(colors.end(), cc.comp.part(r), cc.colors[r]);
    return eng().apply_psi_seq(word, f_word_colors(colors));
  }

  // --- zigzag generator images (d = 1 elements and their insertions) --------

  // u. = f^0 y_p f^0 (requires d = 1)
  AlgElem<F> u_dot() const {
    AlgElem<F> f0 = f_word_colors({0});
    return eng().mul(f0, eng().lmul_y(p(), f0));
  }
  // z. = sum_j f^j y_{p-j-1} y_{p-j} f^j
  AlgElem<F> z_dot() const {
    AlgElem<F> out;
    for (int j = 0; j < alg_.shape().ell(); ++j) {
      AlgElem<F> fj = f_word_colors({j});
      out.add(eng().mul(fj, eng().lmul_y(p() - j - 1, eng().lmul_y(p() - j, fj))));
    }
    return out;
  }
  // a.^{[j,j-1]} = f^j psi_{p-1} ... psi_{p-2j} f^{j-1}
  AlgElem<F> a_dot_down(int j) const {
    AlgElem<F> f2 = f_word_colors({j - 1});
    std::vector<int> seq;
    for (int r = p() - 1; r >= p() - 2 * j; --r) seq.push_back(r);
    return eng().mul(f_word_colors({j}), eng().apply_psi_seq(seq, f2));
  }
  // a.^{[j-1,j]} = (-1)^j f^{j-1} psi_{p-2j-1} ... psi_{p-1} f^j
  AlgElem<F> a_dot_up(int j) const {
    AlgElem<F> f2 = f_word_colors({j});
    std::vector<int> seq;
    for (int r = p() - 2 * j - 1; r <= p() - 1; ++r) seq.push_back(r);
    AlgElem<F> e = eng().mul(f_word_colors({j - 1}), eng().apply_psi_seq(seq, f2));
    return (j & 1) ? e.scaled(eng().scalar(-1)) : e;
  }

  // sigma = f_{omega_2} psi(p) psi(p-1) ... psi(1) f_{omega_2} (requires d = 2).
  // The product formula is imported from a different normalization of the
  // psi generators; its global sign relative to the relations used here is
  // calibrated once against s.^2 = f_omega (see set_sigma_sign), and the
  // calibration is surfaced in the verification reports.
  AlgElem<F> sigma() const {
    assert(alg_.d() == 2);
    AlgElem<F> fo = f_omega();
    std::vector<int> seq;
    for (int r = p(); r >= 1; --r)
      for (int t = r; t <= r + p() - 1; ++t) seq.push_back(t);
    AlgElem<F> s = eng().mul(fo, eng().apply_psi_seq(seq, fo));
    return sigma_sign_ > 0 ? s : s.scaled(eng().scalar(-1));
  }

  void set_sigma_sign(int s) { sigma_sign_ = s; }
  int sigma_sign() const { return sigma_sign_; }

  // s. with s. f^{ij} = (sigma + (-1)^i delta_{ij}) f^{ij}  (d = 2)
  AlgElem<F> s_dot() const { return s_dot_r(1); }

  // s._r insertion for general d; psi word of rho_d(s_r) dressed by f_omega
  AlgElem<F> sigma_r(int r) const {
    AlgElem<F> fo = f_omega();
    Permutation rho = block_embed(Permutation::transposition(alg_.d(), r), p());
    AlgElem<F> s = eng().mul(fo, eng().apply_psi_seq(rho.canonical_word(), fo));
    return sigma_sign_ > 0 ? s : s.scaled(eng().scalar(-1));
  }

  AlgElem<F> s_dot_r(int r) const {
    // f_1^{(r-1)} otimes s. otimes f_1^{(d-r-1)}: the sigma part plus the
    // (-1)^i diagonal correction on colors at slots r, r+1
    AlgElem<F> out = sigma_r(r);
    int d = alg_.d(), ell = alg_.shape().ell();
    std::vector<int> col(d, 0);
    while (true) {
      if (col[r - 1] == col[r]) {
        AlgElem<F> f = f_word_colors(col);
        out.add(f, eng().scalar((col[r - 1] & 1) ? -1 : 1));
      }
      int t = 0;
      while (t < d && col[t] == ell - 1) col[t++] = 0;
      if (t == d) break;
      ++col[t];
    }
    return out;
  }

  // w. for arbitrary w via a reduced decomposition in the s._r
  AlgElem<F> w_dot(const Permutation& w) const {
    AlgElem<F> out = f_omega();
    for (auto r : w.canonical_word()) out = eng().mul(out, s_dot_r(r));
    return out;
  }

  // b_w = f_d psi_{rho_d(w)} f_d
  AlgElem<F> b_w(const Permutation& w) const {
    AlgElem<F> fd = f_d();
    Permutation rho = block_embed(w, p());
    return eng().mul(fd, eng().apply_psi_seq(rho.canonical_word(), fd));
  }

 private:
  int sign_of(int i, int m) const {
    auto key = std::make_pair(i, m);
    auto it = sign_cache_.find(key);
    if (it != sign_cache_.end()) return it->second;
    int s = divided_idempotent_sign<F>(alg_.shape().roots(), i, m, eng().scalar_spec());
    sign_cache_.emplace(key, s);
    return s;
  }

  static std::vector<int> key_of(const DividedWord& dw) {
    std::vector<int> k;
    for (auto& [i, m] : dw.factors) {
      k.push_back(i);
      k.push_back(m);
    }
    return k;
  }

  CuspidalAlgebra<F>& alg_;
  int sigma_sign_ = 1;
  mutable std::map<std::pair<int, int>, int> sign_cache_;
  mutable std::map<std::vector<int>, AlgElem<F>> div_cache_;
};

}  // namespace cuspidal
