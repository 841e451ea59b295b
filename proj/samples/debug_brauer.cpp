#include <cstdio>

#include "cuspidal/brauer_iso.hpp"

using namespace cuspidal;
using Aff = AffineAlgebra<Rational>;

static void dump(const Aff& H, const char* n, const Aff::Elem& e) {
  std::printf("%s:", n);
  for (auto& [k, c] : e) {
    std::printf("  %s*[w=%llu z=(%d,%d) b=(%s,%s)]", c.str().c_str(),
                (unsigned long long)k.perm, k.zexp[0], k.zexp[1],
                H.zig().info(k.b[0]).name.c_str(),
                H.d() > 1 ? H.zig().info(k.b[1]).name.c_str() : "-");
  }
  std::printf("\n");
}

int main() {
  int ell = 2, d = 1;
  ZigzagAlgebra zigA(ell, ZigFlavor::Plain), zigR(ell, ZigFlavor::Regraded);
  Aff H(zigR, d, ScalarSpec{});
  RegradingIsoChecker<Rational> chk(ell, d, ScalarSpec{});
  auto rep = chk.run();
  std::printf("ell=1 d=1 failures: %zu of %lld\n", rep.failures.size(), rep.relations_checked);
  for (auto& f : rep.failures) std::printf("  %s\n", f.c_str());

  // manual: img_e(1,0) * img_e(1,0)
  auto e0 = chk.img_e(1, 0);
  dump(H, "img_e(1,0)", e0);
  auto prod = H.mul(e0, e0);
  dump(H, "e0*e0", prod);
  auto u = chk.img_u(1);
  dump(H, "img_u(1)", u);
  dump(H, "u*e0", H.mul(u, e0));
  dump(H, "img_c(1,0)", chk.img_c(1, 0));
  dump(H, "img_z(1)", chk.img_z(1));
  return 0;
}
