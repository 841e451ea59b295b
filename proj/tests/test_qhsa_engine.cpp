#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "cuspidal/qhsa_core.hpp"
#include "cuspidal/scalars.hpp"

using namespace cuspidal;

namespace {
using Elem = AlgElem<Rational>;

struct Ctx {
  RootSystemCtx rs;
  QhsaShape shape;
  Engine<Rational> eng;
  Ctx(int ell, WeightVec theta) : rs(ell), shape(rs, theta), eng(shape, ScalarSpec{}) {}
};

Elem psi(const Ctx& c, int r, const Elem& e) { return c.eng.lmul_psi(r, e); }
Elem y(const Ctx& c, int s, const Elem& e) { return c.eng.lmul_y(s, e); }

Elem random_homog_monomial(const Ctx& c, std::mt19937_64& rng, int max_dots) {
  std::uniform_int_distribution<int> wd(0, (int)c.shape.word_count() - 1);
  int n = c.shape.n();
  auto perms = all_permutations(n);
  std::uniform_int_distribution<int> pd(0, (int)perms.size() - 1);
  std::uniform_int_distribution<int> kd(0, max_dots);
  BasisMonomial m;
  m.word = (uint32_t)wd(rng);
  m.perm = pack_perm(perms[pd(rng)]);
  for (int s = 0; s < n; ++s) m.k[s] = (uint8_t)kd(rng);
  Elem e;
  e.add(m, Rational(1));
  return e;
}
}  // namespace

TEST_CASE("defining relation instances at ell=1") {
  RootSystemCtx rs(1);
  {
    // psi_1^2 1_{11} = 0 in R_{2 alpha_1}
    Ctx c(1, WeightVec(std::vector<int>{0, 2}));
    Elem e = c.eng.idempotent({1, 1});
    CHECK(psi(c, 1, psi(c, 1, e)).is_zero());
  }
  {
    // psi_1^2 1_{01} = (y_1^4 - y_2) 1_{01} in R_{a0+a1}
    Ctx c(1, WeightVec(std::vector<int>{1, 1}));
    Elem e = c.eng.idempotent({0, 1});
    Elem lhs = psi(c, 1, psi(c, 1, e));
    Elem rhs = y(c, 1, y(c, 1, y(c, 1, y(c, 1, e)))) - y(c, 2, e);
    CHECK(lhs == rhs);
  }
  {
    // y_2 1_{00} . y_1 1_{00} = -y_1 y_2 1_{00}
    Ctx c(1, WeightVec(std::vector<int>{2, 0}));
    Elem e = c.eng.idempotent({0, 0});
    Elem a = y(c, 2, e), b = y(c, 1, e);
    Elem prod = c.eng.mul(a, b);
    Elem expect = (y(c, 1, y(c, 2, e))).scaled(Rational(-1));
    CHECK(prod == expect);
  }
}

TEST_CASE("bidegrees of generators") {
  RootSystemCtx rs(1);
  Ctx c(1, WeightVec(std::vector<int>{2, 1}));  // R_delta at ell=1
  // deg(y_1 1_0..) = (a0|a0) = 2 with odd parity
  Elem e = c.eng.idempotent({0, 1, 0});
  Elem ye = y(c, 1, e);
  CHECK(c.eng.bidegree(ye) == Bidegree{2, 1});
  // deg(psi_1 1_{01...}) = -(a0|a1) = 4
  Elem pe = psi(c, 1, e);
  CHECK(c.eng.bidegree(pe) == Bidegree{4, 0});
  // psi on 00: deg -2, parity 1
  Elem e2 = c.eng.idempotent({0, 0, 1});
  CHECK(c.eng.bidegree(psi(c, 1, e2)) == Bidegree{-2, 1});
}

TEST_CASE("associativity and homogeneity on random triples") {
  std::mt19937_64 rng(123);
  std::vector<std::unique_ptr<Ctx>> ctxs;
  ctxs.emplace_back(new Ctx(1, WeightVec(std::vector<int>{2, 1})));
  ctxs.emplace_back(new Ctx(1, WeightVec(std::vector<int>{2, 2})));
  ctxs.emplace_back(new Ctx(2, WeightVec(std::vector<int>{2, 1, 1})));
  ctxs.emplace_back(new Ctx(2, WeightVec(std::vector<int>{1, 2, 1})));
  for (auto& cp : ctxs) {
    Ctx& c = *cp;
    for (int t = 0; t < 130; ++t) {
      Elem a = random_homog_monomial(c, rng, 2);
      Elem b = random_homog_monomial(c, rng, 2);
      Elem d = random_homog_monomial(c, rng, 2);
      Elem ab = c.eng.mul(a, b);
      CHECK(c.eng.is_homogeneous(ab));
      if (!ab.is_zero() && !b.is_zero() && !a.is_zero()) {
        Bidegree ba = c.eng.bidegree(a), bb = c.eng.bidegree(b);
        CHECK(c.eng.bidegree(ab) == ba + bb);
      }
      Elem l = c.eng.mul(ab, d);
      Elem r = c.eng.mul(a, c.eng.mul(b, d));
      REQUIRE(l == r);
    }
  }
}

TEST_CASE("tau is an anti-automorphism and an involution") {
  std::mt19937_64 rng(99);
  Ctx c(1, WeightVec(std::vector<int>{2, 1}));
  for (int t = 0; t < 100; ++t) {
    Elem a = random_homog_monomial(c, rng, 2);
    Elem b = random_homog_monomial(c, rng, 2);
    CHECK(c.eng.tau(c.eng.tau(a)) == a);
    CHECK(c.eng.tau(c.eng.mul(a, b)) == c.eng.mul(c.eng.tau(b), c.eng.tau(a)));
  }
  // tau fixes idempotents; tau(psi_1 1_{01}) = psi_1 1_{10}
  Ctx c2(1, WeightVec(std::vector<int>{1, 1}));
  Elem e01 = c2.eng.idempotent({0, 1});
  Elem e10 = c2.eng.idempotent({1, 0});
  CHECK(c2.eng.tau(e01) == e01);
  CHECK(c2.eng.tau(psi(c2, 1, e01)) == psi(c2, 1, e10));
}

TEST_CASE("two-strategy confluence") {
  // strategy 2 computes a*b as tau(tau(b) * tau(a)); both must agree
  std::mt19937_64 rng(2024);
  std::vector<std::unique_ptr<Ctx>> ctxs;
  ctxs.emplace_back(new Ctx(1, WeightVec(std::vector<int>{2, 1})));
  ctxs.emplace_back(new Ctx(2, WeightVec(std::vector<int>{2, 1, 1})));
  for (auto& cp : ctxs) {
    Ctx& c = *cp;
    for (int t = 0; t < 100; ++t) {
      Elem a = random_homog_monomial(c, rng, 2);
      Elem b = random_homog_monomial(c, rng, 2);
      Elem p1 = c.eng.mul(a, b);
      Elem p2 = c.eng.tau(c.eng.mul(c.eng.tau(b), c.eng.tau(a)));
      REQUIRE(p1 == p2);
    }
  }
}

TEST_CASE("psi_w0 kills further crossings in nil-Hecke") {
  // psi_{w_m} psi_r 1_{i^m} = 0 in R_{m alpha_i}
  for (int ell = 1; ell <= 2; ++ell) {
    for (int i = 0; i <= ell; ++i) {
      for (int m = 2; m <= 3; ++m) {
        RootSystemCtx rs(ell);
        WeightVec th(ell);
        th.m[i] = m;
        QhsaShape shape(rs, th);
        Engine<Rational> eng(shape, ScalarSpec{});
        Word w(m, i);
        Elem e = eng.idempotent(w);
        for (int r = 1; r < m; ++r) {
          Elem x = eng.lmul_psi(r, e);
          auto cw = Permutation::longest(m).canonical_word();
          x = eng.apply_psi_seq(cw, x);
          CHECK(x.is_zero());
        }
      }
    }
  }
}
