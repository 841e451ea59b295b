#include <catch2/catch_amalgamated.hpp>

#include "cuspidal/rootdata.hpp"

using namespace cuspidal;

TEST_CASE("cartan and gram data") {
  RootSystemCtx r1(1);
  CHECK(r1.cartan(0, 1) == -4);
  CHECK(r1.cartan(1, 0) == -1);
  CHECK(r1.gram(0, 0) == 2);
  CHECK(r1.gram(1, 1) == 8);
  CHECK(r1.gram(0, 1) == -4);
  RootSystemCtx r3(3);
  CHECK(r3.gram(0, 0) == 2);
  CHECK(r3.gram(1, 1) == 4);
  CHECK(r3.gram(3, 3) == 8);
  CHECK(r3.gram(2, 3) == -4);
  CHECK(r3.gram(0, 1) == -2);
  CHECK(r3.delta().height() == 7);
  // q_i = q^{(a_i|a_i)/2}
  CHECK(r3.gram(1, 1) / 2 == 2);
}

TEST_CASE("root classification at ell=1") {
  RootSystemCtx rs(1);
  auto roots = rs.positive_roots_upto(3);
  // heights 1..3: alpha_1, alpha_0, alpha_0+alpha_1, delta=2a0+a1
  REQUIRE(roots.size() == 4);
  auto find = [&](std::vector<int> m) -> RootClass {
    for (auto& [v, c] : roots)
      if (v.m == m) return c;
    FAIL("root not found");
    return RootClass::Imaginary;
  };
  CHECK(find({1, 0}) == RootClass::RealAboveDelta);
  CHECK(find({0, 1}) == RootClass::RealBelowDelta);
  CHECK(find({1, 1}) == RootClass::RealBelowDelta);
  CHECK(find({2, 1}) == RootClass::Imaginary);
}

TEST_CASE("imaginary multiples and decomposability") {
  RootSystemCtx rs(1);
  WeightVec zero(1);
  CHECK(rs.decomposable(zero, true));
  CHECK(rs.decomposable(zero, false));
  WeightVec a0(std::vector<int>{1, 0});
  CHECK_FALSE(rs.decomposable(a0, true));   // alpha_0 > delta
  CHECK(rs.decomposable(a0, false));
  WeightVec a0x2(std::vector<int>{2, 0});
  CHECK(rs.decomposable(a0x2, false));
}

TEST_CASE("cuspidal words at ell=1") {
  RootSystemCtx rs(1);
  auto cus = rs.cuspidal_words(1);
  REQUIRE(cus.size() == 1);
  CHECK(word_str(cus[0]) == "100");
  CHECK(rs.is_cuspidal_word({1, 0, 0}));
  CHECK_FALSE(rs.is_cuspidal_word({0, 1, 0}));
  CHECK_FALSE(rs.is_cuspidal_word({0, 0, 1}));
}

TEST_CASE("gelfand-graev words") {
  RootSystemCtx rs2(2);
  // ell=2, mu=(1), j=0: divided word 2 1^(2) 0^(2), hat 21100
  DividedWord w = rs2.gg_word_single(1, 0);
  CHECK(word_str(w.expand()) == "21100");
  RootSystemCtx rs3(3);
  CHECK(word_str(rs3.gg_word_single(2, 1).expand()) == "33222211000011");
  RootSystemCtx rs1(1);
  ColoredComposition cc(Composition{1, 1}, {0, 0});
  CHECK(word_str(rs1.gg_word(cc).expand()) == "100100");
  // height of l^{m,j} is m*p
  for (int ell = 1; ell <= 3; ++ell) {
    RootSystemCtx rs(ell);
    for (int m = 1; m <= 3; ++m)
      for (int j = 0; j < ell; ++j) CHECK(rs.gg_word_single(m, j).height() == m * rs.p());
  }
}

TEST_CASE("gg hat words are cuspidal") {
  for (int ell = 1; ell <= 2; ++ell) {
    RootSystemCtx rs(ell);
    for (int d = 1; d <= 3; ++d)
      for (auto& cc : lambda0_col(d, ell)) CHECK(rs.is_cuspidal_word(rs.gg_word(cc).expand()));
  }
}

TEST_CASE("gg split lemma by enumeration") {
  // a concatenation of I^{mu_k delta} words is a GG word iff each factor is
  for (int ell = 1; ell <= 2; ++ell) {
    RootSystemCtx rs(ell);
    for (int d = 2; d <= 3; ++d) {
      std::set<Word> gg;
      for (auto& cc : lambda0_col(d, ell)) gg.insert(rs.gg_word(cc).expand());
      std::set<Word> gg1;
      for (auto& cc : lambda0_col(1, ell)) gg1.insert(rs.gg_word(cc).expand());
      std::set<Word> ggrest;
      for (auto& cc : lambda0_col(d - 1, ell)) ggrest.insert(rs.gg_word(cc).expand());
      // factor-wise GG implies concatenation GG
      for (auto& a : gg1)
        for (auto& b : ggrest) {
          Word w = a;
          w.insert(w.end(), b.begin(), b.end());
          CHECK(gg.count(w) == 1);
        }
    }
  }
}

TEST_CASE("segment decomposition sizes") {
  // |X^{d,j}_i| = d or 2d per (ESegDec1)
  for (int ell = 1; ell <= 3; ++ell) {
    RootSystemCtx rs(ell);
    for (int d = 1; d <= 3; ++d)
      for (int j = 0; j < ell; ++j) {
        Word hat = rs.gg_word_single(d, j).expand();
        std::vector<int> cnt(ell + 1, 0);
        for (int i : hat) cnt[i]++;
        CHECK(cnt[ell] == d);
        CHECK(cnt[0] == 2 * d);
        for (int i = 1; i < ell; ++i) CHECK(cnt[i] == 2 * d);
        CHECK(rs.nu_segments(d, j).sum() == d * rs.p());
      }
  }
}

TEST_CASE("shift data") {
  RootSystemCtx rs1(1);
  ShiftData sd = rs1.shift_data(ColoredComposition(Composition{1}, {0}));
  CHECK(sd.t == -1);
  CHECK(sd.eps == 0);
  CHECK(sd.m == PiLaurent(1, 1, 1) + PiLaurent(1, -1, 0));  // pi q + q^-1
  RootSystemCtx rs3(3);
  ShiftData sd3 = rs3.shift_data(ColoredComposition(Composition{2}, {1}));
  CHECK(sd3.t == -26);
  CHECK(sd3.eps == 0);
  // a_{d,j} example: ell=1, d=2, j=0: 2*3 + 4*(0-4) = -10
  ShiftData sda = rs1.shift_data(ColoredComposition(Composition{2}, {0}));
  CHECK(sda.a == -10);
  ShiftData sdb = rs1.shift_data(ColoredComposition(Composition{1, 1}, {0, 0}));
  CHECK(sdb.a == -2);
}

TEST_CASE("LTComp and LMBar") {
  // l^{lambda,i}! = m_{lambda,i} and <l^{lambda,i}> = -t_{lambda,i};
  // bar(m) = pi^d m; all ell <= 3, d <= 4
  for (int ell = 1; ell <= 3; ++ell) {
    RootSystemCtx rs(ell);
    for (int d = 1; d <= 4; ++d)
      for (auto& cc : lambda0_col(d, ell)) {
        ShiftData sd = rs.shift_data(cc);
        CHECK(sd.bang == sd.m);
        CHECK(sd.bracket == -sd.t);
        PiLaurent expect = (d & 1) ? sd.m * PiLaurent::pi() : sd.m;
        CHECK(sd.m.bar() == expect);
      }
  }
}
