#include <chrono>
#include <cstdio>

#include "cuspidal/qhsa_streams.hpp"

using namespace cuspidal;
using Clock = std::chrono::steady_clock;
static double secs(Clock::time_point a) {
  return std::chrono::duration<double>(Clock::now() - a).count();
}

int main(int argc, char** argv) {
  int mode = argc > 1 ? std::atoi(argv[1]) : 1;
  if (mode == 1) {
    // ell = 1, d <= 2: all blocks vanish in negative regraded degrees
    RootSystemCtx rs(1);
    for (int d = 1; d <= 2; ++d) {
      CuspidalAlgebra<Rational> alg(rs, d, ScalarSpec{});
      Distinguished<Rational> dist(alg);
      BlockCertifier<Rational> cert(alg, dist);
      auto blocks = lambda0_col(d, 1);
      // global lower bound of the regraded algebra
      int lb = 0;
      for (auto& a : blocks)
        for (auto& b : blocks) {
          PiSeries s = cert.dressed_series(a, b, 10);
          if (s.empty()) continue;
          int shift = rs.shift_data(b).t - rs.shift_data(a).t;
          lb = std::min(lb, s.lowest() + shift);
        }
      std::printf("d=%d global regraded lower bound: %d\n", d, lb);
      auto t0 = Clock::now();
      long long checked = 0, nonzero = 0;
      for (auto& a : blocks)
        for (auto& b : blocks) {
          int shift = rs.shift_data(b).t - rs.shift_data(a).t;
          for (int Dreg = lb; Dreg < 0; ++Dreg) {
            int Dorig = Dreg - shift;
            auto c = cert.block_dim(a, b, Dorig, 300000);
            ++checked;
            if (!c.certified() || c.value != 0) {
              ++nonzero;
              std::printf("  block (%s,%s) Dreg=%d: value=%lld upper=%lld\n", a.str().c_str(),
                          b.str().c_str(), Dreg, c.value, c.upper);
            }
          }
        }
      std::printf("d=%d: %lld degree-blocks scanned, %lld bad (%.1fs)\n", d, checked, nonzero,
                  secs(t0));
    }
  } else {
    // ell = 2, d = 2: degree-0 blocks vanish when underline-d differs
    RootSystemCtx rs(2);
    CuspidalAlgebra<Rational> alg(rs, 2, ScalarSpec{});
    Distinguished<Rational> dist(alg);
    BlockCertifier<Rational> cert(alg, dist);
    auto blocks = lambda0_col(2, 2);
    std::printf("ell=2 d=2: %zu blocks, %zu words, noncusp %zu\n", blocks.size(),
                alg.shape().word_count(), alg.noncuspidal_words().size());
    auto t0 = Clock::now();
    for (auto& a : blocks)
      for (auto& b : blocks) {
        if (a.underline_d(2) == b.underline_d(2)) continue;
        int shift = rs.shift_data(b).t - rs.shift_data(a).t;
        int Dorig = -shift;  // regraded degree 0
        auto tj = Clock::now();
        auto c = cert.block_dim(a, b, Dorig, 2000000);
        std::printf("  (%s | %s) Dorig=%d: value=%lld upper=%lld lower=%lld ambient? (%.1fs)\n",
                    a.str().c_str(), b.str().c_str(), Dorig, c.value, c.upper, c.lower, secs(tj));
      }
    std::printf("total %.1fs\n", secs(t0));
  }
  return 0;
}
