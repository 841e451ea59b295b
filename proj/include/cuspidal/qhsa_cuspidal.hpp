#pragma once

// The imaginary cuspidal quotient of R_{d delta}: per-degree linear algebra
// against the two-sided ideal generated by the non-cuspidal word idempotents.
//
// Two complementary computations are provided.
//  * Exact per-degree echelons of the ideal (complete row family), feasible
//    at d = 1 scale and at very negative degrees for d = 2.
//  * Streamed rank certificates for larger blocks: upper bounds on quotient
//    dimensions come from ideal rows fed into an echelon until a target rank
//    is reached, lower bounds from the action on explicit cuspidal modules
//    (see qhsa_modules.hpp).  Both sides are exact; a result is only
//    reported when the two bounds meet.

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "qhsa_core.hpp"

namespace cuspidal {

// (q, pi)-graded dimension series kept on an explicit degree window
struct PiSeries {
  std::map<int, std::array<long long, 2>> c;  // degree -> (even, odd)

  void add(int deg, int par, long long v) {
    if (v == 0) return;
    c[deg][par ? 1 : 0] += v;
    auto it = c.find(deg);
    if (it->second[0] == 0 && it->second[1] == 0) c.erase(it);
  }
  long long at(int deg) const {
    auto it = c.find(deg);
    return it == c.end() ? 0 : it->second[0] + it->second[1];
  }
  long long at(int deg, int par) const {
    auto it = c.find(deg);
    return it == c.end() ? 0 : it->second[par ? 1 : 0];
  }
  bool empty() const { return c.empty(); }
  int lowest() const { return c.begin()->first; }

  friend PiSeries operator*(const PiSeries& a, const PiLaurent& p) {
    PiSeries r;
    for (auto& [d, ev] : a.c)
      for (int par = 0; par < 2; ++par) {
        long long v = ev[par];
        if (!v) continue;
        if (!p.even_part().is_zero())
          for (int e = p.even_part().lowest(); e <= p.even_part().highest(); ++e)
            r.add(d + e, par, v * p.even_part().coeff(e));
        if (!p.odd_part().is_zero())
          for (int e = p.odd_part().lowest(); e <= p.odd_part().highest(); ++e)
            r.add(d + e, par ^ 1, v * p.odd_part().coeff(e));
      }
    return r;
  }

  // Exact division by a PiLaurent whose lowest term is +-1 times a pure
  // (q, pi)-monomial; valid on [lo, hi - span(p)] given inputs valid on
  // [lo, hi].  The caller supplies the window on which the numerator is
  // complete; coefficients outside the reliable part are dropped.
  PiSeries divide_exact(const PiLaurent& p, int num_lo, int num_hi) const {
    int plo = p.lowest();
    long long lead_even = p.coeff(plo, 0), lead_odd = p.coeff(plo, 1);
    assert((lead_even == 0) != (lead_odd == 0));
    long long lead = lead_even ? lead_even : lead_odd;
    int lead_par = lead_even ? 0 : 1;
    assert(lead == 1 || lead == -1);
    int span = p.highest() - plo;
    int out_hi = num_hi - span;
    PiSeries rem = *this;
    PiSeries quot;
    for (int d = num_lo; d + plo <= out_hi + plo; ++d) {
      for (int par = 0; par < 2; ++par) {
        long long v = rem.at(d + plo, par);
        if (!v) continue;
        long long qc = v * lead;  // lead is +-1
        int qpar = par ^ lead_par;
        quot.add(d, qpar, qc);
        // subtract qc * q^d pi^qpar * p
        for (int e = plo; e <= p.highest(); ++e)
          for (int pp = 0; pp < 2; ++pp) {
            long long pc = p.coeff(e, pp);
            if (pc) rem.add(d + e, qpar ^ pp, -qc * pc);
          }
      }
    }
    return quot;
  }
};

// enumeration of exponent vectors k with given weighted degree
inline void enumerate_k(const std::vector<int>& weights, int target,
                        const std::function<void(const std::vector<int>&)>& emit) {
  int n = (int)weights.size();
  std::vector<int> k(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n) {
      if (rem == 0) emit(k);
      return;
    }
    if (rem < 0) return;
    for (int v = 0; v * weights[pos] <= rem; ++v) {
      k[pos] = v;
      rec(pos + 1, rem - v * weights[pos]);
    }
    k[pos] = 0;
  };
  if (target >= 0) rec(0, target);
}

// permutations mapping word `from` to word `to` by place permutation
inline std::vector<Permutation> word_bijections(const Word& from, const Word& to) {
  int n = (int)from.size();
  std::vector<Permutation> out;
  std::map<int, std::vector<int>> pos_from, pos_to;
  for (int a = 0; a < n; ++a) pos_from[from[a]].push_back(a);
  for (int a = 0; a < n; ++a) pos_to[to[a]].push_back(a);
  for (auto& [l, pf] : pos_from)
    if (pos_to[l].size() != pf.size()) return out;
  // iterate over tuples of bijections per letter
  std::vector<int> letters;
  for (auto& [l, pf] : pos_from) letters.push_back(l);
  std::vector<std::vector<int>> assign(letters.size());
  std::function<void(size_t)> rec = [&](size_t li) {
    if (li == letters.size()) {
      std::vector<int> v(n);
      for (size_t lj = 0; lj < letters.size(); ++lj) {
        auto& pf = pos_from[letters[lj]];
        auto& pt = pos_to[letters[lj]];
        for (size_t a = 0; a < pf.size(); ++a) v[pf[a]] = pt[assign[lj][a]];
      }
      out.emplace_back(std::move(v));
      return;
    }
    auto& pf = pos_from[letters[li]];
    std::vector<int> idx(pf.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
      assign[li] = idx;
      rec(li + 1);
    } while (std::next_permutation(idx.begin(), idx.end()));
  };
  rec(0);
  return out;
}

template <class F>
class CuspidalAlgebra {
 public:
  CuspidalAlgebra(const RootSystemCtx& rs, int d, ScalarSpec spec)
      : rs_(rs), d_(d), shape_(rs, d_delta(rs, d)), eng_(shape_, spec) {
    for (uint32_t i = 0; i < shape_.word_count(); ++i)
      if (!rs.is_cuspidal_word(shape_.word(i))) noncusp_.push_back(i);
  }

  const QhsaShape& shape() const { return shape_; }
  const Engine<F>& engine() const { return eng_; }
  int d() const { return d_; }
  const std::vector<uint32_t>& noncuspidal_words() const { return noncusp_; }
  bool word_cuspidal(uint32_t i) const {
    return std::find(noncusp_.begin(), noncusp_.end(), i) == noncusp_.end();
  }

  static WeightVec d_delta(const RootSystemCtx& rs, int d) {
    WeightVec th = rs.delta();
    for (auto& x : th.m) x *= d;
    return th;
  }

  // --- monomial bookkeeping -------------------------------------------------

  uint64_t mono_id(const BasisMonomial& m) const {
    auto it = ids_.find(m);
    if (it != ids_.end()) return it->second;
    uint64_t id = ids_.size();
    ids_.emplace(m, id);
    return id;
  }

  SparseRow<F> row_of(const AlgElem<F>& e) const {
    SparseRow<F> r;
    for (auto& [m, c] : e.terms()) r.terms.emplace_back(mono_id(m), c);
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

  // all basis monomials with given bottom word and degree (any top)
  std::vector<BasisMonomial> column_monomials(uint32_t bottom, int deg) const {
    std::vector<BasisMonomial> out;
    const Word& b = shape_.word(bottom);
    for (auto& w : all_permutations(shape_.n())) {
      Bidegree base = shape_.psi_bidegree(w, b);
      Word top = w.act(b);
      std::vector<int> wts(shape_.n());
      for (int s = 0; s < shape_.n(); ++s) wts[s] = shape_.letter_weight(top[s]);
      enumerate_k(wts, deg - base.deg, [&](const std::vector<int>& k) {
        BasisMonomial m;
        m.word = bottom;
        m.perm = pack_perm(w);
        for (int s = 0; s < shape_.n(); ++s) m.k[s] = (uint8_t)k[s];
        out.push_back(m);
      });
    }
    return out;
  }

  // basis monomials with given bottom and top words at a degree
  std::vector<BasisMonomial> block_monomials(uint32_t top, uint32_t bottom, int deg) const {
    std::vector<BasisMonomial> out;
    const Word& b = shape_.word(bottom);
    const Word& t = shape_.word(top);
    std::vector<int> wts(shape_.n());
    for (int s = 0; s < shape_.n(); ++s) wts[s] = shape_.letter_weight(t[s]);
    for (auto& w : word_bijections(b, t)) {
      Bidegree base = shape_.psi_bidegree(w, b);
      enumerate_k(wts, deg - base.deg, [&](const std::vector<int>& k) {
        BasisMonomial m;
        m.word = bottom;
        m.perm = pack_perm(w);
        for (int s = 0; s < shape_.n(); ++s) m.k[s] = (uint8_t)k[s];
        out.push_back(m);
      });
    }
    return out;
  }

  // --- graded dimension series (pure counting) ------------------------------

  // dim_{q,pi} 1_top R 1_bottom, complete on degrees <= hi
  PiSeries block_series(uint32_t top, uint32_t bottom, int hi) const {
    PiSeries out;
    const Word& b = shape_.word(bottom);
    const Word& t = shape_.word(top);
    // y-part: product over strands of 1/(1 - q^{wt} pi^{par}) against top word
    PiSeries ys;
    ys.add(0, 0, 1);
    for (int s = 0; s < shape_.n(); ++s) {
      int wt = shape_.letter_weight(t[s]);
      int par = shape_.letter_parity(t[s]);
      PiSeries nxt;
      for (auto& [dg, ev] : ys.c)
        for (int pp = 0; pp < 2; ++pp) {
          long long v = ev[pp];
          if (!v) continue;
          for (int m = 0; dg + m * wt <= hi - lowest_psi_deg(bottom); ++m)
            nxt.add(dg + m * wt, (pp + m * par) & 1, v);
        }
      ys = std::move(nxt);
    }
    for (auto& w : word_bijections(b, t)) {
      Bidegree base = shape_.psi_bidegree(w, b);
      for (auto& [dg, ev] : ys.c)
        for (int pp = 0; pp < 2; ++pp) {
          long long v = ev[pp];
          if (!v) continue;
          if (base.deg + dg <= hi) out.add(base.deg + dg, (pp + base.par) & 1, v);
        }
    }
    return out;
  }

  int lowest_psi_deg(uint32_t bottom) const {
    // minimal possible psi_w degree for this bottom word: invert exactly the
    // pairs with positive Gram pairing
    const Word& b = shape_.word(bottom);
    int s = 0;
    for (int a = 0; a < shape_.n(); ++a)
      for (int c = a + 1; c < shape_.n(); ++c) {
        int g = rs_.gram(b[a], b[c]);
        if (g > 0) s -= g;
      }
    return s;
  }

  // --- complete ideal row family --------------------------------------------
  //
  // I cap (R 1_bottom) is spanned in each degree by the products
  //   nf( mono(nc, k, w1) * mono(bottom, 0, w2) )
  // over non-cuspidal words nc, permutations w2 with w2.bottom = nc, arbitrary
  // w1 and dot vectors k of matching degree.

  struct IdealRowSource {
    const CuspidalAlgebra* alg;
    uint32_t bottom;
    int deg;
    // flattened enumeration state
    std::vector<std::tuple<uint32_t, uint64_t, int>> seeds;  // (nc, w2 code, deg of seed)
    size_t seed_pos = 0;
    std::vector<BasisMonomial> left;  // left factors for current seed
    size_t left_pos = 0;

    bool next(AlgElem<F>& out) {
      while (true) {
        if (left_pos < left.size()) {
          const auto& [nc, w2code, sdeg] = seeds[seed_pos - 1];
          BasisMonomial m2;
          m2.word = bottom;
          m2.perm = w2code;
          AlgElem<F> right;
          right.add(m2, alg->eng_.scalar(1));
          AlgElem<F> l;
          l.add(left[left_pos++], alg->eng_.scalar(1));
          out = alg->eng_.mul(l, right);
          if (out.is_zero()) continue;
          return true;
        }
        if (seed_pos >= seeds.size()) return false;
        const auto& [nc, w2code, sdeg] = seeds[seed_pos++];
        left = alg->column_monomials(nc, deg - sdeg);
        // keep degree-compatible ones only (column_monomials already exact)
        left_pos = 0;
      }
    }
  };

  IdealRowSource ideal_rows(uint32_t bottom, int deg) const {
    IdealRowSource src;
    src.alg = this;
    src.bottom = bottom;
    src.deg = deg;
    const Word& b = shape_.word(bottom);
    for (uint32_t nc : noncusp_) {
      for (auto& w2 : word_bijections(b, shape_.word(nc))) {
        Bidegree base = shape_.psi_bidegree(w2, b);
        src.seeds.emplace_back(nc, pack_perm(w2), base.deg);
      }
    }
    // process seeds with higher degree first: their left factors are simpler
    std::sort(src.seeds.begin(), src.seeds.end(),
              [](const auto& a, const auto& b2) { return std::get<2>(a) > std::get<2>(b2); });
    return src;
  }

  // full echelon of the ideal column at a degree (complete enumeration)
  const Echelon<F>& ideal_echelon(uint32_t bottom, int deg) const {
    auto key = std::make_pair(bottom, deg);
    auto it = ideal_ech_.find(key);
    if (it != ideal_ech_.end()) return it->second;
    Echelon<F> ech;
    auto src = ideal_rows(bottom, deg);
    AlgElem<F> row;
    while (src.next(row)) ech.insert(row_of(row));
    return ideal_ech_.emplace(key, std::move(ech)).first->second;
  }

  // reduce an element (contained in one column) modulo the ideal
  AlgElem<F> reduce_mod_ideal(const AlgElem<F>& e) const {
    if (e.is_zero()) return e;
    uint32_t bottom = e.terms().begin()->first.word;
    Bidegree bd = eng_.bidegree(e);
    const Echelon<F>& ech = ideal_echelon(bottom, bd.deg);
    SparseRow<F> r = ech.reduce_full(row_of(e));
    AlgElem<F> out;
    for (auto& [id, c] : r.terms) out.add(id_to_mono(id), c);
    return out;
  }

  bool in_ideal(const AlgElem<F>& e) const {
    if (e.is_zero()) return true;
    // group by bottom word; each column is handled separately
    std::map<uint32_t, AlgElem<F>> cols;
    for (auto& [m, c] : e.terms()) cols[m.word].add(m, c);
    for (auto& [b, col] : cols) {
      Bidegree bd = eng_.bidegree(col);
      const Echelon<F>& ech = ideal_echelon(b, bd.deg);
      if (!ech.contains(row_of(col))) return false;
    }
    return true;
  }

  // dims of 1_top (R/I) 1_bottom at a degree (exact, complete enumeration)
  long long quotient_block_dim_words(uint32_t top, uint32_t bottom, int deg) const {
    auto monos = block_monomials(top, bottom, deg);
    const Echelon<F>& ech = ideal_echelon(bottom, deg);
    // rank of the projection of the ideal onto the top-word block
    Echelon<F> proj;
    for (auto& [piv, row] : ech.rows()) {
      (void)piv;
      SparseRow<F> p;
      for (auto& [id, c] : row.terms) {
        const BasisMonomial& m = id_to_mono(id);
        if (shape_.act(m.perm, m.word) == top) p.terms.emplace_back(id, c);
      }
      if (!p.empty()) proj.insert(std::move(p));
    }
    return (long long)monos.size() - (long long)proj.rank();
  }

  const BasisMonomial& id_to_mono(uint64_t id) const {
    if (rev_.size() != ids_.size()) {
      rev_.clear();
      for (auto& [m, i] : ids_) rev_[i] = m;
    }
    return rev_.at(id);
  }

  AlgElem<F> elem_of_row(const SparseRow<F>& r) const {
    AlgElem<F> out;
    for (auto& [id, c] : r.terms) out.add(id_to_mono(id), c);
    return out;
  }

  // dim e (R/I) f at a degree, for homogeneous idempotents e, f dressed over
  // hat words (exact; complete ideal enumeration, so small contexts only)
  long long quotient_block_dim_dressed(const AlgElem<F>& e, const AlgElem<F>& f, int deg) const {
    assert(!e.is_zero() && !f.is_zero());
    uint32_t tope = e.terms().begin()->first.word;
    uint32_t botf = f.terms().begin()->first.word;
    Echelon<F> amb;
    for (auto& m : block_monomials(tope, botf, deg)) {
      AlgElem<F> me;
      me.add(m, eng_.scalar(1));
      AlgElem<F> dressed = eng_.mul(eng_.mul(e, me), f);
      if (!dressed.is_zero()) amb.insert(row_of(dressed));
    }
    Echelon<F> idl;
    for (auto& [piv, row] : ideal_echelon(botf, deg).rows()) {
      (void)piv;
      AlgElem<F> dressed = eng_.mul(eng_.mul(e, elem_of_row(row)), f);
      if (!dressed.is_zero()) idl.insert(row_of(dressed));
    }
    return (long long)amb.rank() - (long long)idl.rank();
  }

 private:
  const RootSystemCtx& rs_;
  int d_;
  QhsaShape shape_;
  Engine<F> eng_;
  std::vector<uint32_t> noncusp_;
  mutable std::map<BasisMonomial, uint64_t> ids_;
  mutable std::map<uint64_t, BasisMonomial> rev_;
  mutable std::map<std::pair<uint32_t, int>, Echelon<F>> ideal_ech_;
};

// Augmented echelon for presenting quotient spaces V / W with explicit coset
// bases and coordinates: relation rows carry empty augmentation, basis rows
// carry unit vectors.
template <class F>
class QuotientSpace {
 public:
  explicit QuotientSpace(F one) : one_(std::move(one)) {}

  struct Reduced {
    SparseRow<F> residual;                 // ambient residual (should be empty)
    std::vector<std::pair<int, F>> coords; // basis coordinates
  };

  void add_relation(SparseRow<F> r) { insert(std::move(r), -1); }

  // returns basis index if the row extends the space, -1 otherwise
  int add_basis_candidate(SparseRow<F> r) {
    int idx = (int)basis_count_;
    if (insert(std::move(r), idx)) {
      ++basis_count_;
      return idx;
    }
    return -1;
  }

  size_t basis_count() const { return basis_count_; }

  // express an ambient row in quotient coordinates; residual nonempty means
  // the row is outside the span of relations + basis
  Reduced express(SparseRow<F> r) const {
    std::map<int, F> coords;
    while (!r.empty()) {
      auto it = rows_.find(r.lead());
      if (it == rows_.end()) break;
      F c = r.lead_coeff();
      // subtract c * row
      r.axpy(F() - c, it->second.first);
      for (auto& [bi, bc] : it->second.second) {
        auto jt = coords.find(bi);
        if (jt == coords.end()) coords.emplace(bi, c * bc);
        else {
          jt->second += c * bc;
          if (jt->second.is_zero()) coords.erase(jt);
        }
      }
    }
    Reduced out;
    out.residual = std::move(r);
    for (auto& [bi, bc] : coords) out.coords.emplace_back(bi, bc);
    return out;
  }

 private:
  bool insert(SparseRow<F> r, int basis_idx) {
    std::vector<std::pair<int, F>> aug;
    if (basis_idx >= 0) aug.emplace_back(basis_idx, one_);
    while (!r.empty()) {
      auto it = rows_.find(r.lead());
      if (it == rows_.end()) break;
      F c = F() - r.lead_coeff();
      r.axpy(c, it->second.first);
      merge_aug(aug, it->second.second, c);
    }
    if (r.empty()) return false;
    F inv = r.lead_coeff().inv();
    r.scale(inv);
    for (auto& [bi, bc] : aug) bc = bc * inv;
    uint64_t piv = r.lead();
    rows_.emplace(piv, std::make_pair(std::move(r), std::move(aug)));
    return true;
  }

  static void merge_aug(std::vector<std::pair<int, F>>& a,
                        const std::vector<std::pair<int, F>>& b, const F& c) {
    for (auto& [bi, bc] : b) {
      bool found = false;
      for (auto& [ai, ac] : a)
        if (ai == bi) {
          ac += c * bc;
          found = true;
          break;
        }
      if (!found) a.emplace_back(bi, c * bc);
    }
    a.erase(std::remove_if(a.begin(), a.end(), [](auto& p) { return p.second.is_zero(); }),
            a.end());
  }

  F one_;
  size_t basis_count_ = 0;
  std::map<uint64_t, std::pair<SparseRow<F>, std::vector<std::pair<int, F>>>> rows_;
};

}  // namespace cuspidal
