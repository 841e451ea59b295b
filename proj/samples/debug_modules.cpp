// scratch harness for the module layer at ell=1
#include <cstdio>
#include <random>

#include "cuspidal/qhsa_modules.hpp"

using namespace cuspidal;
using Elem = AlgElem<Rational>;

int main() {
  RootSystemCtx rs(1);
  CuspidalAlgebra<Rational> alg1(rs, 1, ScalarSpec{});
  ColumnModule<Rational> L0(alg1, 0, true, -6, 12);
  std::printf("L0 basis: %zu\n", L0.basis().size());
  for (auto& v : L0.basis())
    std::printf("  deg %d par %d word %s\n", v.deg, v.par, word_str(v.top).c_str());

  CuspidalAlgebra<Rational> alg2(rs, 2, ScalarSpec{});
  IndModule<Rational> M(alg2, {&L0, &L0});
  // total basis and degree distribution
  std::map<int, int> dims;
  long long total = 0;
  for (int D = -30; D <= 30; ++D) {
    auto b = M.basis_at(D);
    if (!b.empty()) {
      dims[D] = (int)b.size();
      total += (long long)b.size();
      // cuspidality of all words
      for (auto& k : b) {
        Word w = M.key_word(k);
        if (!rs.is_cuspidal_word(w)) {
          std::printf("NON-CUSPIDAL word %s at degree %d!\n", word_str(w).c_str(), D);
          return 1;
        }
      }
    }
  }
  std::printf("M total dim = %lld\n", total);
  for (auto& [D, n] : dims) std::printf("  deg %d: %d\n", D, n);

  // action well-definedness: random products act associatively
  std::mt19937_64 rng(5);
  const auto& sh = alg2.shape();
  auto perms = all_permutations(6);
  auto random_mono = [&](int maxdot) {
    BasisMonomial m;
    m.word = (uint32_t)(rng() % sh.word_count());
    m.perm = pack_perm(perms[rng() % perms.size()]);
    for (int s = 0; s < 6; ++s) m.k[s] = (uint8_t)(rng() % (maxdot + 1));
    Elem e;
    e.add(m, Rational(1));
    return e;
  };
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    Elem x = random_mono(1), y = random_mono(1);
    Elem xy = alg2.engine().mul(x, y);
    // pick a random basis vector
    auto keys = M.basis_at(-2);
    if (keys.empty()) break;
    auto& k = keys[rng() % keys.size()];
    typename IndModule<Rational>::Vec v;
    v.emplace(k, Rational(1));
    auto lhs = M.act_elem(xy, v);
    auto rhs = M.act_elem(x, M.act_elem(y, v));
    if (!(lhs == rhs)) {
      std::printf("ACTION ASSOCIATIVITY FAIL at trial %d\n", t);
      return 1;
    }
    ++checked;
  }
  std::printf("action associativity ok on %d random pairs\n", checked);
  return 0;
}
