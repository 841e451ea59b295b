#pragma once

// Sparse exact row reduction over a templated field.  Columns are abstract
// uint64 keys (monomial codes); rows are sorted sparse vectors.  The echelon
// supports streaming: rows can be fed one at a time and the rank queried
// between feeds, which the ideal-rank machinery relies on.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace cuspidal {

template <class F>
struct SparseRow {
  // sorted by column key, no zero coefficients
  std::vector<std::pair<uint64_t, F>> terms;

  bool empty() const { return terms.empty(); }
  uint64_t lead() const { return terms.front().first; }
  const F& lead_coeff() const { return terms.front().second; }

  void axpy(const F& c, const SparseRow& o) {  // *this += c * o
    std::vector<std::pair<uint64_t, F>> out;
    out.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
      if (terms[i].first < o.terms[j].first) out.push_back(terms[i++]);
      else if (terms[i].first > o.terms[j].first) {
        F v = c * o.terms[j].second;
        if (!v.is_zero()) out.emplace_back(o.terms[j].first, v);
        ++j;
      } else {
        F v = terms[i].second + c * o.terms[j].second;
        if (!v.is_zero()) out.emplace_back(terms[i].first, v);
        ++i; ++j;
      }
    }
    while (i < terms.size()) out.push_back(terms[i++]);
    while (j < o.terms.size()) {
      F v = c * o.terms[j].second;
      if (!v.is_zero()) out.emplace_back(o.terms[j].first, v);
      ++j;
    }
    terms = std::move(out);
  }

  void scale(const F& c) {
    for (auto& t : terms) t.second = t.second * c;
  }
};

template <class F>
class Echelon {
 public:
  size_t rank() const { return rows_.size(); }

  // Reduces r against the current basis in place; returns the residual.
  SparseRow<F> reduce(SparseRow<F> r) const {
    while (!r.empty()) {
      auto it = rows_.find(r.lead());
      if (it == rows_.end()) break;
      F c = F() - r.lead_coeff();
      r.axpy(c, it->second);
    }
    return r;
  }

  // Full reduction (also clears non-lead positions that match pivots).
  SparseRow<F> reduce_full(SparseRow<F> r) const {
    SparseRow<F> out;
    while (!r.empty()) {
      auto it = rows_.find(r.lead());
      if (it == rows_.end()) {
        out.terms.push_back(r.terms.front());
        r.terms.erase(r.terms.begin());
      } else {
        F c = F() - r.lead_coeff();
        r.axpy(c, it->second);
      }
    }
    return out;
  }

  // Returns true if the row increased the rank.
  bool insert(SparseRow<F> r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    F inv = r.lead_coeff().inv();
    r.scale(inv);
    uint64_t piv = r.lead();
    rows_.emplace(piv, std::move(r));
    return true;
  }

  bool contains(const SparseRow<F>& r) const { return reduce(r).empty(); }

  const std::map<uint64_t, SparseRow<F>>& rows() const { return rows_; }

 private:
  std::map<uint64_t, SparseRow<F>> rows_;  // pivot column -> unit-lead row
};

}  // namespace cuspidal
