#include <cstdio>
#include "cuspidal/qhsa_streams.hpp"
using namespace cuspidal;
using Elem = AlgElem<Rational>;
int main() {
  RootSystemCtx rs(1);
  CuspidalAlgebra<Rational> alg1(rs, 1, ScalarSpec{});
  CuspidalAlgebra<Rational> alg2(rs, 2, ScalarSpec{});
  Distinguished<Rational> dist1(alg1), dist2(alg2);
  BlockCertifier<Rational> cert(alg2, dist2);
  const auto& eng = alg2.engine();
  const auto& eng1 = alg1.engine();
  Elem sig = dist2.sigma_r(1);
  Elem f00 = dist2.f_word_colors({0, 0});

  // build u.r, z.r insertions
  auto ins = [&](const Elem& x, int r) {
    Elem f1 = dist1.f_word_colors({0});
    Elem a = eng.embed_one(eng1, r == 1 ? x : f1, 0);
    Elem b = eng.embed_one(eng1, r == 2 ? x : f1, 3);
    return eng.mul(a, b);
  };
  Elem u1 = ins(dist1.u_dot(), 1), u2 = ins(dist1.u_dot(), 2);
  Elem z1 = ins(dist1.z_dot(), 1), z2 = ins(dist1.z_dot(), 2);
  Elem c1 = eng.mul(u1, u1), c2 = eng.mul(u2, u2);
  Elem rhs = eng.mul(c1, f00) + eng.mul(c2, f00) + eng.mul(u1, eng.mul(u2, f00));

  for (int sgn : {+1, -1}) {
    Elem sdot = sig + (sgn > 0 ? f00 : f00.scaled(Rational(-1)));
    Elem lhs = eng.mul(sdot, z1) - eng.mul(z2, sdot);
    Elem x = lhs - rhs;
    std::printf("sign %+d: (s z1 - z2 s) - rhs in I: %s\n", sgn,
                cert.reduce_to_zero(x, 400000) ? "yes" : "no");
    Elem ss = eng.mul(sdot, sdot);
    std::printf("sign %+d: s^2 - f00 in I: %s\n", sgn,
                cert.reduce_to_zero(ss - f00, 400000) ? "yes" : "no");
    // wreath: s u1 - u2 s in I
    Elem w = eng.mul(sdot, u1) - eng.mul(u2, sdot);
    std::printf("sign %+d: s u1 - u2 s in I: %s\n", sgn,
                cert.reduce_to_zero(w, 400000) ? "yes" : "no");
  }
  return 0;
}
