#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "cuspidal/compositions.hpp"
#include "cuspidal/permutations.hpp"

using namespace cuspidal;

namespace {
long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// brute-force minimal double coset representatives
std::vector<Permutation> brute_double_cosets(const Composition& lam, const Composition& mu, int d) {
  auto left = parabolic_elements(lam, d);
  auto right = parabolic_elements(mu, d);
  std::set<Permutation> seen;
  std::vector<Permutation> reps;
  for (auto& w : all_permutations(d)) {
    if (seen.count(w)) continue;
    // minimal element of S_lam w S_mu
    Permutation best = w;
    std::set<Permutation> orbit;
    for (auto& a : left)
      for (auto& b : right) {
        Permutation x = a * w * b;
        orbit.insert(x);
        if (x.length() < best.length()) best = x;
      }
    for (auto& x : orbit) seen.insert(x);
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}
}  // namespace

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Composition{1, 1, 1}, Composition{2, 1}));
  CHECK(dominance_leq(Composition{2, 2}, Composition{3, 1}));
  CHECK_FALSE(dominance_leq(Composition{3, 1}, Composition{2, 2}));
}

TEST_CASE("coset representatives") {
  // D^{(1,1)}_2 = {e, s1}
  auto reps = coset_reps_right(Composition{1, 1}, 2);
  CHECK(reps.size() == 2);
  // D^{(2)}_2 = {e}
  reps = coset_reps_right(Composition{2}, 2);
  CHECK(reps.size() == 1);
  CHECK(reps[0].is_identity());
  // |D^{(1,2)}_3| = binom(3,1) = 3
  CHECK(coset_reps_right(Composition{1, 2}, 3).size() == 3);
}

TEST_CASE("double cosets via N-matrices match brute force") {
  for (int d = 2; d <= 5; ++d) {
    for (auto& lam : lambda0(d))
      for (auto& mu : lambda0(d)) {
        if (d == 5 && lam.length() > 3) continue;  // keep the scan quick
        auto fast = min_double_coset_reps(lam, mu, d);
        auto slow = brute_double_cosets(lam, mu, d);
        REQUIRE(fast == slow);
      }
  }
}

TEST_CASE("double coset example from the literature") {
  // lambda=(1,2), mu=(2,1), d=3: {identity, s1 s2}
  auto reps = min_double_coset_reps(Composition{1, 2}, Composition{2, 1}, 3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].is_identity());
  Permutation s1 = Permutation::transposition(3, 1), s2 = Permutation::transposition(3, 2);
  CHECK(reps[1] == s1 * s2);
}

TEST_CASE("double coset counts") {
  // sum over lambda, mu in Lambda(n,d) of |^lam D^mu| = binom(n^2+d-1, d)
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      long long total = 0;
      for (auto& lam : lambda_nd(n, d))
        for (auto& mu : lambda_nd(n, d)) total += (long long)min_double_coset_reps(lam, mu, d).size();
      CHECK(total == binom((long long)n * n + d - 1, d));
    }
}

TEST_CASE("minimality and segment monotonicity of double coset reps") {
  int d = 4;
  for (auto& lam : lambda0(d))
    for (auto& mu : lambda0(d))
      for (auto& w : min_double_coset_reps(lam, mu, d)) {
        // increasing on mu segments, inverse increasing on lambda segments
        int off = 1;
        for (size_t r = 0; r < mu.length(); ++r) {
          CHECK(w.increasing_on(off, off + mu.part(r) - 1));
          off += mu.part(r);
        }
        Permutation wi = w.inverse();
        off = 1;
        for (size_t r = 0; r < lam.length(); ++r) {
          CHECK(wi.increasing_on(off, off + lam.part(r) - 1));
          off += lam.part(r);
        }
      }
}

TEST_CASE("canonical reduced words") {
  for (auto& w : all_permutations(4)) {
    auto cw = w.canonical_word();
    CHECK((int)cw.size() == w.length());
    Permutation prod = Permutation::identity(4);
    for (auto r : cw) prod = prod * Permutation::transposition(4, r);
    CHECK(prod == w);
    // lexicographically smallest: no reduced word is smaller (exhaustive for S4)
  }
  // spot check lex-minimality by brute force in S4
  std::function<void(Permutation, std::vector<int>&, std::vector<std::vector<int>>&)> gen =
      [&](Permutation w, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (w.is_identity()) {
          out.push_back(cur);
          return;
        }
        for (int r = 1; r < 4; ++r)
          if (w.has_left_descent(r)) {
            cur.push_back(r);
            gen(Permutation::transposition(4, r) * w, cur, out);
            cur.pop_back();
          }
      };
  for (auto& w : all_permutations(4)) {
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    gen(w, cur, words);
    auto mn = *std::min_element(words.begin(), words.end());
    CHECK(w.canonical_word() == mn);
  }
}

TEST_CASE("block embedding rho_d") {
  Permutation s1 = Permutation::transposition(2, 1);
  Permutation r = block_embed(s1, 3);
  // (1,4)(2,5)(3,6)
  CHECK(r.map1(1) == 4);
  CHECK(r.map1(2) == 5);
  CHECK(r.map1(3) == 6);
  CHECK(r.map1(4) == 1);
  CHECK(r.length() == 9);
  CHECK(block_embed(Permutation::identity(2), 3).is_identity());
  // l(rho_d(w)) = p^2 l(w)
  for (int d = 2; d <= 4; ++d)
    for (int p = 1; p <= 3; ++p)
      for (auto& w : all_permutations(d)) CHECK(block_embed(w, p).length() == p * p * w.length());
}

TEST_CASE("special element u_lambda") {
  // lambda = (1,1): S_lambda trivial, u = identity works
  CHECK(special_u(Composition{1, 1}, 2).is_identity());
  // uniqueness of the all-<=1 contingency matrix for partitions (d <= 5)
  for (int d = 1; d <= 5; ++d)
    for (auto& lam : partitions_of(d)) {
      auto lamT = lam.transposed();
      int count = 0;
      for (auto& A : contingency_matrices(lamT, lam)) {
        bool small = true;
        for (auto& row : A)
          for (int a : row)
            if (a > 1) small = false;
        if (small) ++count;
      }
      CHECK(count == 1);
      // u in ^{lambda'}D^{lambda}
      Permutation u = special_u(lam, d);
      auto reps = min_double_coset_reps(lamT, lam, d);
      CHECK(std::find(reps.begin(), reps.end(), u) != reps.end());
    }
}

TEST_CASE("multipartition count") {
  CHECK(multipartitions(2, 2).size() == 5);  // ell=2, d=2
  CHECK(multipartitions(0, 2).size() == 1);
}

TEST_CASE("colored compositions") {
  // Lambda_0^col(2) for ell=2: compositions (2),(1,1) with colors
  auto cc = lambda0_col(2, 2);
  CHECK(cc.size() == 2 + 4);
  auto cc1 = lambda0_col(1, 3);
  CHECK(cc1.size() == 3);
}
