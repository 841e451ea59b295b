#include <cstdio>
#include "cuspidal/qhsa_streams.hpp"
using namespace cuspidal;
int main() {
  RootSystemCtx rs(1);
  CuspidalAlgebra<Rational> alg(rs, 2, ScalarSpec{});
  Distinguished<Rational> dist(alg);
  BlockCertifier<Rational> cert(alg, dist);
  auto blocks = lambda0_col(2, 1);
  for (auto& a : blocks)
    for (auto& b : blocks) {
      PiSeries s = cert.dressed_series(a, b, 8);
      AlgElem<Rational> e = dist.gg_idempotent(a), f = dist.gg_idempotent(b);
      uint32_t he = alg.shape().word_index(rs.gg_word(a).expand());
      uint32_t hf = alg.shape().word_index(rs.gg_word(b).expand());
      std::printf("block (%s|%s): series lowest %d\n", a.str().c_str(), b.str().c_str(),
                  s.empty() ? 999 : s.lowest());
      for (int D = (s.empty() ? 0 : s.lowest()) - 4; D <= (s.empty() ? 0 : s.lowest()) + 4; D += 2) {
        Echelon<Rational> amb;
        for (auto& m : alg.block_monomials(he, hf, D)) {
          AlgElem<Rational> me;
          me.add(m, Rational(1));
          AlgElem<Rational> x = alg.engine().mul(alg.engine().mul(e, me), f);
          if (!x.is_zero()) amb.insert(alg.row_of(x));
        }
        long long direct = (long long)amb.rank();
        std::printf("  D=%3d: series=%lld direct=%lld %s\n", D, s.at(D), direct,
                    s.at(D) == direct ? "" : "<<< MISMATCH");
      }
    }
  return 0;
}
