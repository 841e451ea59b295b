#pragma once

// Group algebra of the symmetric group, permutation and sign permutation
// modules on their coset bases, and the classical Schur algebra S(n, d) with
// structure constants computed through explicit endomorphism matrices.

#include <map>
#include <set>
#include <optional>

#include "compositions.hpp"
#include "linalg.hpp"
#include "permutations.hpp"
#include "scalars.hpp"

namespace cuspidal {

template <class F>
using GroupAlgElem = std::map<Permutation, F>;

template <class F>
void ga_add(GroupAlgElem<F>& e, const Permutation& w, const F& c) {
  if (c.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) e.emplace(w, c);
  else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

template <class F>
GroupAlgElem<F> ga_mul(const GroupAlgElem<F>& a, const GroupAlgElem<F>& b) {
  GroupAlgElem<F> out;
  for (auto& [w1, c1] : a)
    for (auto& [w2, c2] : b) ga_add(out, w1 * w2, c1 * c2);
  return out;
}

// x_lambda / y_lambda: (signed) sums over the standard parabolic
template <class F>
GroupAlgElem<F> x_lambda(const Composition& lam, int d, const ScalarSpec& spec, bool sign) {
  GroupAlgElem<F> out;
  for (auto& w : parabolic_elements(lam, d))
    ga_add(out, w, make_scalar<F>(sign ? w.sign() : 1, spec));
  return out;
}

// X^g_{mu,lambda} resp. Y^g: sums over S_mu g S_lambda cap {}^mu D
template <class F>
GroupAlgElem<F> coset_sum(const Composition& mu, const Composition& lam, const Permutation& g,
                          int d, const ScalarSpec& spec, bool sign) {
  GroupAlgElem<F> out;
  std::set<Permutation> coset;
  for (auto& a : parabolic_elements(mu, d))
    for (auto& b : parabolic_elements(lam, d)) coset.insert(a * g * b);
  for (auto& w : coset_reps_left(mu, d))
    if (coset.count(w)) ga_add(out, w, make_scalar<F>(sign ? w.sign() : 1, spec));
  return out;
}

// permutation module M^lambda (or sign permutation N^lambda) on its coset
// basis {w m : w in D^lambda}
class PermModule {
 public:
  PermModule(Composition lam, int d, bool sign) : lam_(std::move(lam)), d_(d), sign_(sign) {
    basis_ = coset_reps_right(lam_, d_);
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = (int)i;
  }

  int dim() const { return (int)basis_.size(); }
  const Composition& lam() const { return lam_; }

  // action of g on basis vector i: returns (index, sign)
  std::pair<int, int> act(const Permutation& g, int i) const {
    Permutation w = g * basis_[i];
    // split w = rep * parab
    auto [rep, par] = split(w);
    return {index_.at(rep), sign_ ? par.sign() : 1};
  }

  std::pair<Permutation, Permutation> split(const Permutation& w) const {
    // w = rep * par with rep in D^lambda, par in S_lambda: rep obtained by
    // sorting the images within each segment
    std::vector<int> v = w.one_line();
    Permutation par = Permutation::identity(d_);
    auto pv = par.one_line();
    int off = 0;
    for (size_t r = 0; r < lam_.length(); ++r) {
      int p = lam_.part(r);
      std::vector<std::pair<int, int>> seg;
      for (int a = 0; a < p; ++a) seg.emplace_back(v[off + a], a);
      std::sort(seg.begin(), seg.end());
      for (int a = 0; a < p; ++a) pv[off + seg[a].second] = off + a;
      off += p;
    }
    Permutation parab(pv);
    Permutation rep = w * parab.inverse();
    return {rep, parab};
  }

 private:
  Composition lam_;
  int d_;
  bool sign_;
  std::vector<Permutation> basis_;
  std::map<Permutation, int> index_;
};

// Classical Schur algebra with double-coset basis xi^g_{lambda,mu}; products
// are computed by composing the endomorphism matrices on the permutation
// modules and re-expanding (the product xi eta means "apply xi, then eta",
// i.e. eta o xi, which makes kappa: g -> xi^g_{omega,omega} multiplicative).
template <class F>
class SchurAlgebra {
 public:
  // Basis element xi^g_{lam,mu}: M^mu -> M^lam, m^mu -> sum over
  // S_mu g S_lam cap D^lam.  The sum is constant on the double cosets
  // S_mu g S_lam, so the basis is indexed by their minimal representatives
  // g in ^mu D^lam (equivalently by N-matrices in M(mu, lam)).
  struct Idx {
    int lam, mu;     // indices into weights()
    Permutation g;   // in ^mu D^lam
    friend bool operator<(const Idx& a, const Idx& b) {
      if (a.lam != b.lam) return a.lam < b.lam;
      if (a.mu != b.mu) return a.mu < b.mu;
      return a.g < b.g;
    }
    friend bool operator==(const Idx& a, const Idx& b) {
      return a.lam == b.lam && a.mu == b.mu && a.g == b.g;
    }
  };
  using Elem = std::map<Idx, F>;

  SchurAlgebra(int n, int d, ScalarSpec spec, bool sign_model = false)
      : n_(n), d_(d), spec_(spec), sign_(sign_model) {
    for (auto& parts : compositions_fixed(n, d)) raw_weights_.push_back(parts);
    for (auto& parts : raw_weights_) {
      weights_.emplace_back(parts);
      modules_.emplace_back(Composition(parts), d, sign_);
    }
    for (int l = 0; l < (int)weights_.size(); ++l)
      for (int m = 0; m < (int)weights_.size(); ++m)
        for (auto& g : min_double_coset_reps(weights_[m], weights_[l], d))
          basis_.push_back({l, m, g});
  }

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Composition>& weights() const { return weights_; }
  const std::vector<Idx>& basis() const { return basis_; }
  long long dim() const { return (long long)basis_.size(); }
  F scalar(long long c) const { return make_scalar<F>(c, spec_); }

  int weight_index(const Composition& lam) const {
    for (int i = 0; i < (int)weights_.size(); ++i)
      if (weights_[i] == lam) return i;
    assert(false);
    return -1;
  }

  Elem unit_elem(const Idx& i) const {
    Elem e;
    e.emplace(i, scalar(1));
    return e;
  }

  // xi_lambda idempotent
  Elem xi_idempotent(int lam) const {
    return unit_elem({lam, lam, Permutation::identity(d_)});
  }
  Elem one() const {
    Elem e;
    for (int l = 0; l < (int)weights_.size(); ++l)
      for (auto& [i, c] : xi_idempotent(l)) e.emplace(i, c);
    return e;
  }

  const std::vector<Permutation>& reps_of(int widx) const {
    auto it = reps_cache_.find(widx);
    if (it != reps_cache_.end()) return it->second;
    return reps_cache_.emplace(widx, coset_reps_right(weights_[widx], d_)).first->second;
  }

  // matrix of xi^g_{lam,mu}: M^mu -> M^lam on coset bases
  std::vector<std::vector<long long>> matrix_of(const Idx& idx) const {
    const PermModule& dst = modules_[idx.lam];
    const auto& src_reps = reps_of(idx.mu);
    const auto& dst_reps = reps_of(idx.lam);
    std::vector<std::vector<long long>> mat(dst_reps.size(),
                                            std::vector<long long>(src_reps.size(), 0));
    // image of the generator: sum over w in S_mu g S_lam cap D^lam of
    // (sgn(w)) w m^lam
    std::set<Permutation> coset;
    for (auto& a : parabolic_elements(weights_[idx.mu], d_))
      for (auto& b : parabolic_elements(weights_[idx.lam], d_)) coset.insert(a * idx.g * b);
    std::vector<std::pair<Permutation, int>> gen_img;
    for (auto& w : dst_reps)
      if (coset.count(w)) gen_img.emplace_back(w, sign_ ? w.sign() : 1);
    for (size_t i = 0; i < src_reps.size(); ++i) {
      const Permutation& h = src_reps[i];
      for (auto& [w0, s0] : gen_img) {
        auto [rep, par] = dst.split(h * w0);
        int coeff = s0 * (sign_ ? par.sign() : 1);
        mat[matindex(idx.lam, rep)][i] += coeff;
      }
    }
    return mat;
  }

  // product: apply a then b (composition b o a on the modules); this order
  // makes kappa: g -> xi^g_{omega,omega} an algebra homomorphism
  Elem mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (auto& [ia, ca] : a)
      for (auto& [ib, cb] : b) {
        if (ib.mu != ia.lam) continue;
        auto key = std::make_tuple(ia.lam, ia.mu, ia.g.code(), ib.lam, ib.g.code());
        auto it = prod_cache_.find(key);
        if (it == prod_cache_.end()) it = prod_cache_.emplace(key, expand_product(ia, ib)).first;
        for (auto& [idx, c] : it->second) {
          auto jt = out.find(idx);
          F v = ca * cb * c;
          if (jt == out.end()) {
            if (!v.is_zero()) out.emplace(idx, v);
          } else {
            jt->second += v;
            if (jt->second.is_zero()) out.erase(jt);
          }
        }
      }
    return out;
  }

  // anti-automorphism xi^g_{lam,mu} -> xi^{g^{-1}}_{mu,lam}
  Elem tau(const Elem& a) const {
    Elem out;
    for (auto& [i, c] : a) {
      Permutation gi = i.g.inverse();
      out.emplace(Idx{i.mu, i.lam, gi}, c);
    }
    return out;
  }

 private:
  int matindex(int widx, const Permutation& rep) const {
    const auto& reps = reps_of(widx);
    for (int i = 0; i < (int)reps.size(); ++i)
      if (reps[i] == rep) return i;
    assert(false);
    return -1;
  }

  // expand the composition (apply ia then ib) in the double coset basis of
  // Hom(M^{ia.mu}, M^{ib.lam})
  Elem expand_product(const Idx& ia, const Idx& ib) const {
    auto mat_a = matrix_of(ia);
    auto mat_b = matrix_of(ib);
    const auto& dst_reps = reps_of(ib.lam);
    std::vector<long long> v(dst_reps.size(), 0);
    for (size_t j = 0; j < mat_a.size(); ++j) {
      if (mat_a[j][0] == 0) continue;
      for (size_t i = 0; i < dst_reps.size(); ++i) v[i] += mat_b[i][j] * mat_a[j][0];
    }
    // peel off the double coset contributions
    Elem out;
    for (auto& g : min_double_coset_reps(weights_[ia.mu], weights_[ib.lam], d_)) {
      std::set<Permutation> coset;
      for (auto& x : parabolic_elements(weights_[ia.mu], d_))
        for (auto& y : parabolic_elements(weights_[ib.lam], d_)) coset.insert(x * g * y);
      std::optional<size_t> pick;
      int picksign = 1;
      for (size_t i = 0; i < dst_reps.size(); ++i)
        if (coset.count(dst_reps[i])) {
          pick = i;
          picksign = sign_ ? dst_reps[i].sign() : 1;
          break;
        }
      assert(pick.has_value());
      long long c = v[*pick] * picksign;
      if (c == 0) continue;
      for (size_t i = 0; i < dst_reps.size(); ++i)
        if (coset.count(dst_reps[i])) v[i] -= c * (sign_ ? dst_reps[i].sign() : 1);
      out.emplace(Idx{ib.lam, ia.mu, g}, scalar(c));
    }
    for (auto x : v) assert(x == 0 && "product escaped the double coset basis");
    return out;
  }

  int n_, d_;
  ScalarSpec spec_;
  bool sign_;
  std::vector<std::vector<int>> raw_weights_;
  std::vector<Composition> weights_;
  std::vector<PermModule> modules_;
  std::vector<Idx> basis_;
  mutable std::map<std::tuple<int, int, uint64_t, int, uint64_t>, Elem> prod_cache_;
  mutable std::map<int, std::vector<Permutation>> reps_cache_;
};

// dim Hom_{kS_d}(M^mu, M^lambda) by solving the intertwiner system
template <class F>
long long hom_dim(const Composition& mu, const Composition& lam, int d, const ScalarSpec& spec,
                  bool sign) {
  PermModule src(mu, d, sign), dst(lam, d, sign);
  // unknowns T[i][j] (dst.dim x src.dim); constraints act(s_r) T = T act(s_r)
  int rows = dst.dim(), cols = src.dim();
  Echelon<F> ech;
  for (int r = 1; r < d; ++r) {
    Permutation sr = Permutation::transposition(d, r);
    // precompute actions
    std::vector<std::pair<int, int>> asrc(cols), adst(rows);
    for (int j = 0; j < cols; ++j) asrc[j] = src.act(sr, j);
    for (int i = 0; i < rows; ++i) adst[i] = dst.act(sr, i);
    // constraint for each (i, j): sum over contributions
    // (act_dst T)[i][j] = sgn_i' T[i'][j], (T act_src)[i][j] = T[i][j'] sgn_j
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        SparseRow<F> row;
        auto add = [&](int a, int b, long long c) {
          if (!c) return;
          uint64_t id = (uint64_t)a * cols + b;
          for (auto& [k, vv] : row.terms)
            if (k == id) {
              vv += make_scalar<F>(c, spec);
              return;
            }
          row.terms.emplace_back(id, make_scalar<F>(c, spec));
        };
        // row for constraint: T[adst_i][j]*sgn - T[i][asrc_j]*sgn = 0
        add(adst[i].first, j, adst[i].second);
        add(i, asrc[j].first, -asrc[j].second);
        std::sort(row.terms.begin(), row.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        row.terms.erase(std::remove_if(row.terms.begin(), row.terms.end(),
                                       [](const auto& t) { return t.second.is_zero(); }),
                        row.terms.end());
        if (!row.empty()) ech.insert(std::move(row));
      }
  }
  return (long long)rows * cols - (long long)ech.rank();
}

}  // namespace cuspidal
