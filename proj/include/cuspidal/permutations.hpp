#pragma once

// Symmetric group combinatorics: lengths, canonical reduced words, minimal
// coset and double-coset representatives, block embeddings.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "compositions.hpp"

namespace cuspidal {

// Permutation of {1..d} in one-line notation (0-indexed internally: img_[a]
// is w(a+1)-1).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int d) : img_(d) { std::iota(img_.begin(), img_.end(), 0); }
  explicit Permutation(std::vector<int> one_line_0indexed) : img_(std::move(one_line_0indexed)) {}

  static Permutation identity(int d) { return Permutation(d); }
  static Permutation transposition(int d, int r) {  // s_r = (r, r+1), 1 <= r < d
    Permutation w(d);
    std::swap(w.img_[r - 1], w.img_[r]);
    return w;
  }
  static Permutation longest(int d) {
    std::vector<int> v(d);
    for (int a = 0; a < d; ++a) v[a] = d - 1 - a;
    return Permutation(std::move(v));
  }

  int degree() const { return (int)img_.size(); }
  int map1(int a) const { return img_[a - 1] + 1; }  // 1-indexed image
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const {
    for (int a = 0; a < degree(); ++a)
      if (img_[a] != a) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    // (a*b)(x) = a(b(x))
    assert(a.degree() == b.degree());
    std::vector<int> v(a.degree());
    for (int x = 0; x < a.degree(); ++x) v[x] = a.img_[b.img_[x]];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(degree());
    for (int a = 0; a < degree(); ++a) v[img_[a]] = a;
    return Permutation(std::move(v));
  }

  int length() const {  // inversion count
    int n = 0;
    for (int a = 0; a < degree(); ++a)
      for (int b = a + 1; b < degree(); ++b)
        if (img_[a] > img_[b]) ++n;
    return n;
  }
  int sign() const { return length() % 2 ? -1 : 1; }

  // left descent r: l(s_r w) < l(w), i.e. w^{-1}(r) > w^{-1}(r+1)
  bool has_left_descent(int r) const {
    int pa = -1, pb = -1;
    for (int a = 0; a < degree(); ++a) {
      if (img_[a] == r - 1) pa = a;
      if (img_[a] == r) pb = a;
    }
    return pa > pb;
  }
  int min_left_descent() const {  // 0 if identity
    for (int r = 1; r < degree(); ++r)
      if (has_left_descent(r)) return r;
    return 0;
  }
  bool has_right_descent(int r) const { return img_[r - 1] > img_[r]; }

  // Lexicographically smallest reduced word (greedy minimal left descent).
  std::vector<int> canonical_word() const {
    std::vector<int> word;
    Permutation w = *this;
    for (;;) {
      int r = w.min_left_descent();
      if (r == 0) break;
      word.push_back(r);
      w = transposition(w.degree(), r) * w;
    }
    return word;
  }

  // place permutation on words: (w . v)[w(a)] = v[a]
  template <class T>
  std::vector<T> act(const std::vector<T>& v) const {
    assert((int)v.size() == degree());
    std::vector<T> out(v.size());
    for (int a = 0; a < degree(); ++a) out[img_[a]] = v[a];
    return out;
  }

  // increasing on {a..b} (1-indexed)?
  bool increasing_on(int a, int b) const {
    for (int x = a; x < b; ++x)
      if (map1(x) > map1(x + 1)) return false;
    return true;
  }

  uint64_t code() const {  // packed one-line, degree <= 16
    uint64_t c = 0;
    for (int a = degree() - 1; a >= 0; --a) c = (c << 4) | (uint64_t)img_[a];
    return c;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  std::string str() const {
    std::string s = "[";
    for (int a = 0; a < degree(); ++a) {
      if (a) s += " ";
      s += std::to_string(img_[a] + 1);
    }
    return s + "]";
  }

 private:
  std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// longest element w_lambda of the standard parabolic S_lambda
inline Permutation parabolic_longest(const Composition& lam, int d) {
  Permutation w = Permutation::identity(d);
  auto v = w.one_line();
  int off = 0;
  for (size_t r = 0; r < lam.length(); ++r) {
    int p = lam.part(r);
    for (int a = 0; a < p; ++a) v[off + a] = off + p - 1 - a;
    off += p;
  }
  assert(off <= d);
  return Permutation(v);
}

// elements of the parabolic S_lambda inside S_d
inline std::vector<Permutation> parabolic_elements(const Composition& lam, int d) {
  std::vector<std::vector<Permutation>> factors;
  int off = 0;
  for (size_t r = 0; r < lam.length(); ++r) {
    int p = lam.part(r);
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Permutation> fac;
    do {
      auto v = Permutation::identity(d).one_line();
      for (int a = 0; a < p; ++a) v[off + a] = off + idx[a];
      fac.emplace_back(v);
    } while (std::next_permutation(idx.begin(), idx.end()));
    factors.push_back(std::move(fac));
    off += p;
  }
  std::vector<Permutation> out = {Permutation::identity(d)};
  for (auto& fac : factors) {
    std::vector<Permutation> next;
    for (auto& a : out)
      for (auto& b : fac) next.push_back(a * b);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// minimal length representatives of S_d / S_lambda: increasing on each
// segment P^lambda_r
inline std::vector<Permutation> coset_reps_right(const Composition& lam, int d) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(d)) {
    bool ok = true;
    int off = 1;
    for (size_t r = 0; r < lam.length() && ok; ++r) {
      int p = lam.part(r);
      if (p > 0 && !w.increasing_on(off, off + p - 1)) ok = false;
      off += p;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

// minimal length representatives of S_lambda \ S_d
inline std::vector<Permutation> coset_reps_left(const Composition& lam, int d) {
  auto reps = coset_reps_right(lam, d);
  for (auto& w : reps) w = w.inverse();
  std::sort(reps.begin(), reps.end());
  return reps;
}

// N-matrices with row sums lambda and column sums mu
inline std::vector<std::vector<std::vector<int>>> contingency_matrices(const Composition& lam,
                                                                       const Composition& mu) {
  size_t m = lam.length(), n = mu.length();
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> A(m, std::vector<int>(n, 0));
  std::vector<int> colrem(n);
  for (size_t s = 0; s < n; ++s) colrem[s] = mu.part(s);
  std::function<void(size_t)> recrow = [&](size_t r) {
    if (r == m) {
      for (size_t s = 0; s < n; ++s)
        if (colrem[s] != 0) return;
      out.push_back(A);
      return;
    }
    // fill row r with sum lam[r]
    std::function<void(size_t, int)> reccol = [&](size_t s, int rem) {
      if (s == n) {
        if (rem == 0) recrow(r + 1);
        return;
      }
      int mx = std::min(rem, colrem[s]);
      for (int v = 0; v <= mx; ++v) {
        A[r][s] = v;
        colrem[s] -= v;
        reccol(s + 1, rem - v);
        colrem[s] += v;
      }
      A[r][s] = 0;
    };
    reccol(0, lam.part(r));
  };
  recrow(0);
  return out;
}

// w_A: maps the B-segments (grouped by columns) increasingly onto the
// T-segments (grouped by rows); the image of the N-matrix A under the
// bijection M(lambda,mu) -> минимal double coset reps.
inline Permutation double_coset_rep_of_matrix(const std::vector<std::vector<int>>& A, int d) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  // B-order: (1,1),...,(m,1),(1,2),...,(m,2),...  T-order: (1,1),...,(1,n),(2,1),...
  std::vector<int> tstart(m * n, 0);
  {
    int pos = 1;
    for (size_t r = 0; r < m; ++r)
      for (size_t s = 0; s < n; ++s) {
        tstart[r * n + s] = pos;
        pos += A[r][s];
      }
  }
  std::vector<int> v(d);
  int bpos = 1;
  for (size_t s = 0; s < n; ++s)
    for (size_t r = 0; r < m; ++r) {
      int t = tstart[r * n + s];
      for (int a = 0; a < A[r][s]; ++a) {
        v[bpos - 1 + a] = t - 1 + a;
      }
      bpos += A[r][s];
    }
  return Permutation(std::move(v));
}

// all minimal double coset representatives ^lambda D^mu_d via N-matrices
inline std::vector<Permutation> min_double_coset_reps(const Composition& lam, const Composition& mu,
                                                      int d) {
  assert(lam.sum() == d && mu.sum() == d);
  std::vector<Permutation> out;
  for (auto& A : contingency_matrices(lam, mu)) out.push_back(double_coset_rep_of_matrix(A, d));
  std::sort(out.begin(), out.end());
  return out;
}

// lambda cap w mu and w^{-1} lambda cap mu read off the N-matrix
inline Composition cap_left(const std::vector<std::vector<int>>& A) {  // lambda cap w mu
  std::vector<int> p;
  for (auto& row : A)
    for (int a : row) p.push_back(a);
  return Composition(p);
}
inline Composition cap_right(const std::vector<std::vector<int>>& A) {  // w^{-1} lambda cap mu
  std::vector<int> p;
  if (A.empty()) return Composition(p);
  for (size_t s = 0; s < A[0].size(); ++s)
    for (size_t r = 0; r < A.size(); ++r) p.push_back(A[r][s]);
  return Composition(p);
}

// w_{lambda,sigma}: maps P^lambda_r increasingly onto P^mu_{sigma(r)} where
// mu = sigma-permuted lambda
inline Permutation block_permutation(const Composition& lam, const Permutation& sigma, int d) {
  size_t n = lam.length();
  assert(sigma.degree() >= (int)n);
  std::vector<int> muparts(n);
  for (size_t r = 0; r < n; ++r) muparts[sigma.map1((int)r + 1) - 1] = lam.part(r);
  std::vector<int> mustart(n);
  {
    int pos = 0;
    for (size_t r = 0; r < n; ++r) {
      mustart[r] = pos;
      pos += muparts[r];
    }
  }
  std::vector<int> v(d);
  int pos = 0;
  for (size_t r = 0; r < n; ++r) {
    int tgt = mustart[sigma.map1((int)r + 1) - 1];
    for (int a = 0; a < lam.part(r); ++a) v[pos + a] = tgt + a;
    pos += lam.part(r);
  }
  return Permutation(std::move(v));
}

// rho_d: S_d -> S_{dp}, block embedding with block size p
inline Permutation block_embed(const Permutation& w, int p) {
  int d = w.degree();
  std::vector<int> v(d * p);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < p; ++b) v[a * p + b] = (w.one_line()[a]) * p + b;
  return Permutation(std::move(v));
}

// The unique u in ^{lambda'} D^{lambda} with S_{lambda'} cap u S_lambda u^{-1}
// trivial (exhaustive search over double coset reps; raises on failure).
inline Permutation special_u(const Composition& lam, int d) {
  assert(lam.is_partition() && lam.sum() == d);
  Composition lamT = lam.transposed();
  for (auto& A : contingency_matrices(lamT, lam)) {
    bool allsmall = true;
    for (auto& row : A)
      for (int a : row)
        if (a > 1) allsmall = false;
    // S_{lambda'} cap u S_lambda u^{-1} = S_{lambda' cap u lambda}: trivial iff
    // all matrix entries are 0 or 1.
    if (allsmall) return double_coset_rep_of_matrix(A, d);
  }
  assert(false && "special_u: no representative found");
  return Permutation::identity(d);
}

}  // namespace cuspidal
