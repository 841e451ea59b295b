// scratch harness for hunting engine bugs on minimal cases
#include <cstdio>
#include <random>

#include "cuspidal/qhsa_core.hpp"
#include "cuspidal/scalars.hpp"

using namespace cuspidal;
using Elem = AlgElem<Rational>;

static void dump(const QhsaShape& sh, const char* name, const Elem& e) {
  std::printf("%s =", name);
  if (e.is_zero()) std::printf(" 0");
  for (auto& [m, c] : e.terms()) {
    Permutation w = unpack_perm(m.perm, sh.n());
    std::printf("  %s * y[", c.str().c_str());
    for (int s = 0; s < sh.n(); ++s) std::printf("%d", (int)m.k[s]);
    std::printf("] psi%s 1_%s", w.str().c_str(), word_str(sh.word(m.word)).c_str());
  }
  std::printf("\n");
}

int main() {
  RootSystemCtx rs(1);
  WeightVec th(std::vector<int>{2, 1});
  QhsaShape sh(rs, th);
  Engine<Rational> eng(sh, ScalarSpec{});

  auto perms = all_permutations(3);
  std::vector<BasisMonomial> monos;
  for (uint32_t w = 0; w < sh.word_count(); ++w)
    for (auto& p : perms)
      for (int k1 = 0; k1 <= 1; ++k1)
        for (int k2 = 0; k2 <= 1; ++k2)
          for (int k3 = 0; k3 <= 1; ++k3) {
            BasisMonomial m;
            m.word = w;
            m.perm = pack_perm(p);
            m.k[0] = k1; m.k[1] = k2; m.k[2] = k3;
            monos.push_back(m);
          }
  std::printf("monomials: %zu\n", monos.size());

  // hunt smallest associativity failure, ordered by total complexity
  std::sort(monos.begin(), monos.end(), [&](const BasisMonomial& a, const BasisMonomial& b) {
    int la = unpack_perm(a.perm, 3).length() + a.k[0] + a.k[1] + a.k[2];
    int lb = unpack_perm(b.perm, 3).length() + b.k[0] + b.k[1] + b.k[2];
    return la < lb;
  });

  auto elem = [&](const BasisMonomial& m) {
    Elem e;
    e.add(m, Rational(1));
    return e;
  };

  long long count = 0;
  for (auto& ma : monos)
    for (auto& mb : monos)
      for (auto& mc : monos) {
        // quick compat filters
        if (sh.act(mb.perm, mb.word) != ma.word) continue;
        if (sh.act(mc.perm, mc.word) != mb.word) continue;
        ++count;
        Elem a = elem(ma), b = elem(mb), c = elem(mc);
        Elem l = eng.mul(eng.mul(a, b), c);
        Elem r = eng.mul(a, eng.mul(b, c));
        if (!(l == r)) {
          std::printf("FAIL after %lld triples\n", count);
          dump(sh, "a", a);
          dump(sh, "b", b);
          dump(sh, "c", c);
          dump(sh, "(ab)c", l);
          dump(sh, "a(bc)", r);
          Elem ab = eng.mul(a, b), bc = eng.mul(b, c);
          dump(sh, "ab", ab);
          dump(sh, "bc", bc);
          return 1;
        }
        if (count % 200000 == 0) std::printf("...%lld ok\n", count);
      }
  std::printf("all %lld triples associative\n", count);
  return 0;
}
