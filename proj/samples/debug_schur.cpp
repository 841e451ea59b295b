#include <cstdio>

#include "cuspidal/schur.hpp"

using namespace cuspidal;
using S = SchurAlgebra<Rational>;

int main() {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    S s(n, d, ScalarSpec{});
    std::printf("S(%d,%d): dim %lld\n", n, d, s.dim());
    for (auto& a : s.basis())
      for (auto& b : s.basis()) {
        if (b.mu != a.lam) continue;
        std::printf("prod (%d,%d,%s) * (%d,%d,%s)\n", a.lam, a.mu, a.g.str().c_str(), b.lam,
                    b.mu, b.g.str().c_str());
        fflush(stdout);
        auto p = s.mul(s.unit_elem(a), s.unit_elem(b));
        (void)p;
      }
  }
  std::printf("all products expanded\n");
  return 0;
}
