#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nk/cyc.hpp"
#include "nk/par.hpp"

namespace nk {

/// Sparse vector over Q(zeta): sorted (index, value), values nonzero.
struct SparseVec {
  std::vector<std::pair<int, Cyc>> t;

  bool empty() const { return t.empty(); }
  int lead() const { return t.front().first; }  // smallest index

  void add_term(int i, const Cyc& v) {
    if (v.is_zero()) return;
    auto it = std::lower_bound(t.begin(), t.end(), i,
                               [](const auto& p, int j) { return p.first < j; });
    if (it != t.end() && it->first == i) {
      it->second += v;
      if (it->second.is_zero()) t.erase(it);
    } else {
      t.insert(it, {i, v});
    }
  }

  const Cyc* get(int i) const {
    auto it = std::lower_bound(t.begin(), t.end(), i,
                               [](const auto& p, int j) { return p.first < j; });
    if (it != t.end() && it->first == i) return &it->second;
    return nullptr;
  }

  /// this += c * o (merge)
  void axpy(const Cyc& c, const SparseVec& o) {
    if (c.is_zero() || o.t.empty()) return;
    std::vector<std::pair<int, Cyc>> merged;
    merged.reserve(t.size() + o.t.size());
    size_t i = 0, j = 0;
    while (i < t.size() || j < o.t.size()) {
      if (j == o.t.size() || (i < t.size() && t[i].first < o.t[j].first)) {
        merged.push_back(std::move(t[i++]));
      } else if (i == t.size() || o.t[j].first < t[i].first) {
        Cyc v = c * o.t[j].second;
        if (!v.is_zero()) merged.emplace_back(o.t[j].first, std::move(v));
        ++j;
      } else {
        Cyc v = t[i].second + c * o.t[j].second;
        if (!v.is_zero()) merged.emplace_back(t[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    t = std::move(merged);
  }

  void scale(const Cyc& c) {
    for (auto& [i, v] : t) v *= c;
  }
};

/// Row echelon accumulator with pivot = smallest index; exact arithmetic.
/// Rows are kept pivot-normalized (pivot value 1).
class Echelon {
 public:
  /// Reduces v against the rows. Returns the fully reduced vector.
  SparseVec reduce(SparseVec v) const {
    size_t scan = 0;
    while (scan < v.t.size()) {
      auto it = rows_.find(v.t[scan].first);
      if (it == rows_.end()) {
        ++scan;
        continue;
      }
      Cyc c = -v.t[scan].second;
      v.axpy(c, it->second);
    }
    return v;
  }

  /// Reduce and insert if independent. Returns true when the vector was new.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Cyc inv = v.t.front().second.inverse();
    v.scale(inv);
    rows_.emplace(v.lead(), std::move(v));
    return true;
  }

  size_t rank() const { return rows_.size(); }
  bool is_pivot(int i) const { return rows_.count(i) != 0; }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

/// Rank of a set of sparse vectors; reference implementation.
size_t rank_serial(const std::vector<SparseVec>& vecs);

/// Same result, with the per-pivot elimination of the remaining vectors
/// spread across OpenMP threads. Falls back to the serial path when built
/// without OpenMP.
size_t rank_parallel(std::vector<SparseVec> vecs);

/// Exact dense nullspace: solves A x = 0, A given as rows (length ncols).
/// Returns a basis of the kernel as dense vectors.
std::vector<std::vector<Cyc>> nullspace_dense(const std::vector<std::vector<Cyc>>& rows,
                                              size_t ncols);

}  // namespace nk
