#include <cstdio>

#include "cuspidal/qhsa_streams.hpp"

using namespace cuspidal;
using Elem = AlgElem<Rational>;
using VecT = IndModule<Rational>::Vec;

static void dumpv(const IndModule<Rational>& M, const char* n, const VecT& v) {
  std::printf("%s:", n);
  for (auto& [k, c] : v)
    std::printf("  %s*(x=%llu;%d,%d)D%d", c.str().c_str(), (unsigned long long)k.coset,
                (int)k.part[0], (int)k.part[1], M.key_bidegree(k).deg);
  std::printf("\n");
}

int main() {
  RootSystemCtx rs(1);
  CuspidalAlgebra<Rational> alg1(rs, 1, ScalarSpec{});
  ColumnModule<Rational> L0(alg1, 0, true, -6, 12);
  CuspidalAlgebra<Rational> alg2(rs, 2, ScalarSpec{});
  Distinguished<Rational> dist2(alg2);
  IndModule<Rational> M(alg2, {&L0, &L0});

  Elem g = dist2.g_elem(0);
  Elem sdot = dist2.s_dot_r(1);
  Elem sig = dist2.sigma_r(1);
  Elem fom = dist2.f_omega();
  const auto& eng = alg2.engine();

  // sanity: s.^2 = f_omega as action?
  Elem ss = eng.mul(sdot, sdot);
  int bad = 0;
  for (int D = -30; D <= 30; ++D)
    for (auto& k : M.basis_at(D)) {
      VecT v;
      v.emplace(k, Rational(1));
      auto a = M.act_elem(ss, v);
      auto b = M.act_elem(fom, v);
      if (!(a == b)) ++bad;
    }
  std::printf("s.^2 action == f_omega action: %s (%d bad)\n", bad ? "NO" : "yes", bad);

  // the two interesting keys at D=-2
  for (auto& k : M.basis_at(-2)) {
    VecT v;
    v.emplace(k, Rational(1));
    auto gv = M.act_elem(g, v);
    if (gv.empty()) continue;
    dumpv(M, "v", v);
    dumpv(M, "g.v", gv);
    auto sv = M.act_elem(sdot, v);
    dumpv(M, "s.v", sv);
    auto gsv = M.act_elem(eng.mul(g, sdot), v);
    dumpv(M, "(g s).v", gsv);
    auto g_sv = M.act_elem(g, sv);
    dumpv(M, "g.(s.v)", g_sv);
    std::printf("---\n");
  }
  return 0;
}
