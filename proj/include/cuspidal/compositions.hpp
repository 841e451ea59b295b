#pragma once

// Compositions, partitions, colored compositions and multipartitions.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace cuspidal {

// A composition is a finite sequence of non-negative parts; trailing zeros
// are normalized away except where a fixed length is requested explicitly.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : parts_(parts) { trim(); }
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { trim(); }

  static Composition omega(int d) { return Composition(std::vector<int>(d, 1)); }  // (1^d)

  const std::vector<int>& parts() const { return parts_; }
  int part(size_t r) const { return r < parts_.size() ? parts_[r] : 0; }
  size_t length() const { return parts_.size(); }
  int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool is_essential() const {  // no internal zeros
    for (int p : parts_)
      if (p == 0) return false;
    return true;
  }
  bool is_partition() const {
    for (size_t r = 1; r < parts_.size(); ++r)
      if (parts_[r] > parts_[r - 1]) return false;
    return true;
  }

  Composition scaled(int k) const {
    std::vector<int> p = parts_;
    for (int& x : p) x *= k;
    return Composition(p);
  }

  Composition concat(const Composition& o) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), o.parts_.begin(), o.parts_.end());
    return Composition(p);
  }

  Composition transposed() const {  // for partitions
    assert(is_partition());
    std::vector<int> t;
    for (int r = 1; r <= (parts_.empty() ? 0 : parts_[0]); ++r) {
      int c = 0;
      for (int p : parts_)
        if (p >= r) ++c;
      t.push_back(c);
    }
    return Composition(t);
  }

  // segment P^lambda_r = [sum_{<r} + 1, sum_{<=r}], 0-indexed r
  std::pair<int, int> segment(size_t r) const {
    int a = 1;
    for (size_t s = 0; s < r; ++s) a += parts_[s];
    return {a, a + parts_[r] - 1};
  }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
  friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

  std::string str() const {
    std::string s = "(";
    for (size_t r = 0; r < parts_.size(); ++r) {
      if (r) s += ",";
      s += std::to_string(parts_[r]);
    }
    return s + ")";
  }

 private:
  void trim() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }
  std::vector<int> parts_;
};

// Dominance: all partial sums of lambda <= those of mu.  Requires |lambda| = |mu|.
inline bool dominance_leq(const Composition& lam, const Composition& mu) {
  assert(lam.sum() == mu.sum());
  int sl = 0, sm = 0;
  size_t n = std::max(lam.length(), mu.length());
  for (size_t r = 0; r < n; ++r) {
    sl += lam.part(r);
    sm += mu.part(r);
    if (sl > sm) return false;
  }
  return true;
}

// All compositions of d with exactly n parts (zeros allowed, fixed length n).
inline std::vector<std::vector<int>> compositions_fixed(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (n >= 1) rec(0, d);
  return out;
}

// Lambda(n,d) as Composition values (trailing zeros trimmed on normalization,
// but enumerated with length <= n).
inline std::vector<Composition> lambda_nd(int n, int d) {
  std::vector<Composition> out;
  for (auto& p : compositions_fixed(n, d)) out.emplace_back(p);
  return out;
}

// essential compositions of d (all parts positive), any length
inline std::vector<Composition> lambda0(int d) {
  std::vector<Composition> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= rem; ++v) {
      cur.push_back(v);
      rec(rem - v);
      cur.pop_back();
    }
  };
  rec(d);
  return out;
}

inline std::vector<Composition> partitions_of(int d) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(rem, maxp); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

// colored composition (mu, j) with colors in J = {0..ell-1}
struct ColoredComposition {
  Composition comp;
  std::vector<int> colors;

  ColoredComposition() = default;
  ColoredComposition(Composition c, std::vector<int> j) : comp(std::move(c)), colors(std::move(j)) {
    assert(comp.length() == colors.size());
  }

  size_t length() const { return colors.size(); }
  int d() const { return comp.sum(); }

  ColoredComposition concat(const ColoredComposition& o) const {
    std::vector<int> j = colors;
    j.insert(j.end(), o.colors.begin(), o.colors.end());
    return {comp.concat(o.comp), j};
  }

  // d_j(lambda, i) for each color j: total size carried by that color
  std::vector<int> underline_d(int ell) const {
    std::vector<int> ud(ell, 0);
    for (size_t r = 0; r < length(); ++r) ud[colors[r]] += comp.part(r);
    return ud;
  }

  friend bool operator==(const ColoredComposition& a, const ColoredComposition& b) {
    return a.comp == b.comp && a.colors == b.colors;
  }
  friend bool operator<(const ColoredComposition& a, const ColoredComposition& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return a.colors < b.colors;
  }

  std::string str() const {
    std::string s = comp.str() + ":";
    for (int c : colors) s += std::to_string(c);
    return s;
  }
};

// essential colored compositions of d, colors in J = {0..ell-1}
inline std::vector<ColoredComposition> lambda0_col(int d, int ell) {
  std::vector<ColoredComposition> out;
  for (const auto& mu : lambda0(d)) {
    size_t n = mu.length();
    std::vector<int> col(n, 0);
    while (true) {
      out.emplace_back(mu, col);
      size_t r = 0;
      while (r < n && col[r] == ell - 1) col[r++] = 0;
      if (r == n) break;
      ++col[r];
    }
    if (n == 0) continue;  // d = 0: single empty entry already pushed
  }
  std::sort(out.begin(), out.end());
  return out;
}

// J-multipartitions of d: tuples of ell partitions with total size d
struct Multipartition {
  std::vector<Composition> components;  // each a partition

  int d() const {
    int s = 0;
    for (auto& c : components) s += c.sum();
    return s;
  }
};

inline std::vector<Multipartition> multipartitions(int d, int ell) {
  std::vector<Multipartition> out;
  std::vector<Composition> cur(ell);
  std::function<void(int, int)> rec = [&](int j, int rem) {
    if (j == ell - 1) {
      for (const auto& p : partitions_of(rem)) {
        cur[j] = p;
        out.push_back({cur});
      }
      return;
    }
    for (int s = 0; s <= rem; ++s)
      for (const auto& p : partitions_of(s)) {
        cur[j] = p;
        rec(j + 1, rem - s);
      }
  };
  if (ell >= 1) rec(0, d);
  return out;
}

// the map a: Lambda^J(n,d) -> Lambda(n*ell, d), reading the components' parts
inline Composition map_a(const std::vector<Composition>& multi, int n) {
  std::vector<int> parts;
  for (const auto& c : multi)
    for (int r = 0; r < n; ++r) parts.push_back(c.part(r));
  return Composition(parts);
}

// the map b: Lambda^J(n,d) -> Lambda^col(n*ell, d), colors k^(n) = 0^n 1^n ...
// Zero parts carry empty Gelfand-Graev words, so they are dropped here to
// keep the pair aligned with its idempotent.
inline ColoredComposition map_b(const std::vector<Composition>& multi, int n) {
  std::vector<int> parts, colors;
  for (size_t j = 0; j < multi.size(); ++j)
    for (int r = 0; r < n; ++r)
      if (multi[j].part(r) > 0) {
        parts.push_back(multi[j].part(r));
        colors.push_back((int)j);
      }
  return {Composition(parts), colors};
}

}  // namespace cuspidal
