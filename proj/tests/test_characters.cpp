#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "cuspidal/characters.hpp"
#include "cuspidal/qhsa_modules.hpp"

using namespace cuspidal;

namespace {
FormalCharacter word_char(const Word& w) {
  FormalCharacter c;
  c.add(w, PiLaurent::one());
  return c;
}
}  // namespace

TEST_CASE("shuffle examples at ell=1") {
  RootSystemCtx rs(1);
  {
    FormalCharacter c = shuffle(rs, word_char({0}), word_char({1}));
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms.at({0, 1}) == PiLaurent::one());
    CHECK(c.terms.at({1, 0}) == PiLaurent(1, 4, 0));
  }
  {
    FormalCharacter c = shuffle(rs, word_char({0}), word_char({0}));
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms.at({0, 0}) == PiLaurent::one() + PiLaurent(1, -2, 1));
  }
  {
    // empty word is a unit
    FormalCharacter c = shuffle(rs, word_char({}), word_char({0, 1}));
    CHECK(c == word_char({0, 1}));
  }
}

TEST_CASE("shuffle associativity on random characters") {
  std::mt19937_64 rng(2718);
  for (int ell = 1; ell <= 2; ++ell) {
    RootSystemCtx rs(ell);
    auto rnd_word = [&](int len) {
      Word w;
      for (int t = 0; t < len; ++t) w.push_back((int)(rng() % (ell + 1)));
      return w;
    };
    for (int t = 0; t < 30; ++t) {
      FormalCharacter a = word_char(rnd_word(1 + rng() % 2));
      FormalCharacter b = word_char(rnd_word(1 + rng() % 2));
      FormalCharacter c = word_char(rnd_word(1 + rng() % 1));
      CHECK(shuffle(rs, shuffle(rs, a, b), c) == shuffle(rs, a, shuffle(rs, b, c)));
    }
  }
}

TEST_CASE("bar involution on characters") {
  RootSystemCtx rs(1);
  FormalCharacter c = shuffle(rs, word_char({0}), word_char({0, 1}));
  CHECK(c.bar().bar() == c);
}

TEST_CASE("induced module character equals shuffle of factors") {
  // ch(Ind L0 x L0) = ch(L0) o ch(L0) at ell=1, d=2 (with the generator
  // bidegree normalization of the factors)
  RootSystemCtx rs(1);
  CuspidalAlgebra<Rational> alg1(rs, 1, ScalarSpec{});
  ColumnModule<Rational> L0(alg1, 0, true, -6, 12);
  FormalCharacter chL;
  for (auto& v : L0.basis()) chL.add(v.top, PiLaurent(1, v.deg, v.par));

  CuspidalAlgebra<Rational> alg2(rs, 2, ScalarSpec{});
  IndModule<Rational> M(alg2, {&L0, &L0});
  FormalCharacter chM;
  for (int D = -40; D <= 40; ++D)
    for (auto& k : M.basis_at(D)) {
      Bidegree bd = M.key_bidegree(k);
      // key_bidegree sums internal column degrees; convert to normalized ones
      int deg = bd.deg, par = bd.par;
      for (int b = 0; b < 2; ++b) {
        const auto& vb = L0.basis()[k.part[b]];
        (void)vb;
      }
      chM.add(M.key_word(k), PiLaurent(1, deg, par));
    }
  FormalCharacter expect = shuffle(rs, chL, chL);
  CHECK(chM == expect);
}

TEST_CASE("gg character arithmetic") {
  GGCharacter g;
  ColoredComposition a(Composition{2}, {0}), b(Composition{1, 1}, {0, 0});
  g.add(a, 1);
  g.add(b, 2);
  CHECK(g.entries.size() == 2);
  CHECK(g.str() == "2*(1,1):00 + (2):0");
}
