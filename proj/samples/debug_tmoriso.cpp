#include <chrono>
#include <cstdio>

#include "cuspidal/brauer_iso.hpp"

using namespace cuspidal;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
  int d = argc > 1 ? std::atoi(argv[1]) : 1;
  RootSystemCtx rs(1);
  CuspidalAlgebra<Rational> alg(rs, d, ScalarSpec{});
  Distinguished<Rational> dist(alg);
  BlockCertifier<Rational> cert(alg, dist);

  std::unique_ptr<CuspidalAlgebra<Rational>> alg1;
  std::unique_ptr<ColumnModule<Rational>> L0;
  std::unique_ptr<IndModule<Rational>> M;
  if (d == 2) {
    alg1.reset(new CuspidalAlgebra<Rational>(rs, 1, ScalarSpec{}));
    L0.reset(new ColumnModule<Rational>(*alg1, 0, true, -6, 12));
    M.reset(new IndModule<Rational>(alg, {L0.get(), L0.get()}));
    std::vector<IndModule<Rational>::Key> keys;
    for (int D = -30; D <= 30; ++D)
      for (auto& k : M->basis_at(D)) keys.push_back(k);
    cert.add_probe(*M, keys);
    int sg = calibrate_sigma_sign(dist, cert);
    std::printf("sigma sign: %d\n", sg);
  }

  auto t0 = Clock::now();
  CuspidalIsoChecker<Rational> chk(alg, dist, cert);
  IsoReport rep = chk.run(600000);
  std::printf("TMorIso ell=1 d=%d: %lld relations, %zu failures (%.1fs)\n", d,
              rep.relations_checked, rep.failures.size(),
              std::chrono::duration<double>(Clock::now() - t0).count());
  for (auto& f : rep.failures) std::printf("  FAIL %s\n", f.c_str());
  return rep.ok() ? 0 : 1;
}
