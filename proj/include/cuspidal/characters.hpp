#pragma once

// Formal characters with coefficients in the pi-Laurent ring, the quantum
// shuffle product, and Gelfand-Graev characters.

#include <map>

#include "compositions.hpp"
#include "laurent.hpp"
#include "rootdata.hpp"

namespace cuspidal {

// word-indexed graded superdimensions, truncated to a degree window
struct FormalCharacter {
  std::map<Word, PiLaurent> terms;

  void add(const Word& w, const PiLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) terms.emplace(w, c);
    else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  FormalCharacter bar() const {
    FormalCharacter r;
    for (auto& [w, c] : terms) r.terms.emplace(w, c.bar());
    return r;
  }

  FormalCharacter truncated(int lo, int hi) const {
    FormalCharacter r;
    for (auto& [w, c] : terms) {
      PiLaurent t;
      for (int e = lo; e <= hi; ++e) {
        for (int par = 0; par < 2; ++par) {
          long long v = c.coeff(e, par);
          if (v) t = t + PiLaurent(v, e, par);
        }
      }
      r.add(w, t);
    }
    return r;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.terms == b.terms;
  }
};

// quantum shuffle product of two word characters (EShP): each shuffle w
// contributes the factor prod over inverted pairs of pi^{|i||j|} q^{-(a_i|a_j)}
inline FormalCharacter shuffle(const RootSystemCtx& rs, const FormalCharacter& c1,
                               const FormalCharacter& c2) {
  FormalCharacter out;
  for (auto& [w1, a1] : c1.terms)
    for (auto& [w2, a2] : c2.terms) {
      size_t k = w1.size(), l = w2.size();
      // enumerate shuffles: choose the positions of w1 inside the result
      std::vector<int> sel(k + l, 0);
      for (size_t t = 0; t < k; ++t) sel[t] = 1;
      std::sort(sel.begin(), sel.end());
      do {
        Word w;
        PiLaurent coef = PiLaurent::one();
        size_t p1 = 0, p2 = 0;
        // inverted pairs: letters of w2 placed before remaining letters of w1
        for (size_t t = 0; t < k + l; ++t) {
          if (sel[t] == 1) {
            w.push_back(w1[p1++]);
          } else {
            int letter2 = w2[p2++];
            // this w2 letter jumps over all remaining w1 letters
            for (size_t r = p1; r < k; ++r) {
              int letter1 = w1[r];
              int par = rs.letter_parity(letter1) & rs.letter_parity(letter2);
              coef = coef * PiLaurent(1, -rs.gram(letter1, letter2), par);
            }
            w.push_back(letter2);
          }
        }
        out.add(w, coef * a1 * a2);
      } while (std::next_permutation(sel.begin(), sel.end()));
    }
  return out;
}

// Gelfand-Graev character: multiplicities over essential colored compositions
struct GGCharacter {
  std::map<ColoredComposition, long long> entries;

  void add(const ColoredComposition& cc, long long m) {
    if (!m) return;
    entries[cc] += m;
    if (entries[cc] == 0) entries.erase(cc);
  }
  friend bool operator==(const GGCharacter& a, const GGCharacter& b) {
    return a.entries == b.entries;
  }
  std::string str() const {
    std::string s;
    for (auto& [cc, m] : entries) {
      if (!s.empty()) s += " + ";
      if (m != 1) s += std::to_string(m) + "*";
      s += cc.str();
    }
    return s.empty() ? "0" : s;
  }
};

}  // namespace cuspidal
