#include <cstdio>
#include "cuspidal/qhsa_streams.hpp"
using namespace cuspidal;
using Elem = AlgElem<Rational>;
int main() {
  RootSystemCtx rs(1);
  CuspidalAlgebra<Rational> alg2(rs, 2, ScalarSpec{});
  Distinguished<Rational> dist2(alg2);
  BlockCertifier<Rational> cert(alg2, dist2);
  const auto& eng = alg2.engine();
  Elem sig = dist2.sigma_r(1);
  Elem s2 = eng.mul(sig, sig);
  Elem plus = s2 + sig.scaled(Rational(2));
  Elem minus = s2 - sig.scaled(Rational(2));
  std::printf("sigma^2 + 2 sigma in I: %s\n", cert.reduce_to_zero(plus, 300000) ? "yes" : "no");
  std::printf("sigma^2 - 2 sigma in I: %s\n", cert.reduce_to_zero(minus, 300000) ? "yes" : "no");
  // also check the KL-diagram expectation: sigma should be b_{s_1}-like:
  // compare with psi_{rho(s1)} via canonical word
  Elem fom = dist2.f_omega();
  Permutation rho = block_embed(Permutation::transposition(2, 1), 3);
  Elem b = eng.mul(fom, eng.apply_psi_seq(rho.canonical_word(), fom));
  std::printf("sigma == b_{s1} (canonical word): %s\n", (sig == b) ? "yes" : "no");
  Elem diff = sig - b;
  std::printf("sigma - b_{s1} in I: %s\n", cert.reduce_to_zero(diff, 300000) ? "yes" : "no");
  Elem sum = sig + b;
  std::printf("sigma + b_{s1} in I: %s\n", cert.reduce_to_zero(sum, 300000) ? "yes" : "no");
  return 0;
}
