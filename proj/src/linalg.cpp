#include "nk/linalg.hpp"

namespace nk {

size_t rank_serial(const std::vector<SparseVec>& vecs) {
  Echelon e;
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

size_t rank_parallel(std::vector<SparseVec> vecs) {
#ifndef _OPENMP
  return rank_serial(vecs);
#else
  // Classic fan-out elimination: pick the first nonzero vector as a pivot,
  // eliminate its lead from all remaining vectors in parallel, repeat.
  // The arithmetic per vector is identical to the serial order, so the
  // result matches rank_serial exactly.
  size_t rank = 0;
  size_t head = 0;
  while (head < vecs.size()) {
    // find next pivot: smallest lead among remaining, first occurrence
    size_t piv = head;
    bool found = false;
    for (size_t i = head; i < vecs.size(); ++i) {
      if (vecs[i].empty()) continue;
      if (!found || vecs[i].lead() < vecs[piv].lead()) {
        piv = i;
        found = true;
      }
    }
    if (!found) break;
    std::swap(vecs[head], vecs[piv]);
    SparseVec& p = vecs[head];
    Cyc inv = p.t.front().second.inverse();
    p.scale(inv);
    int lead = p.lead();
#pragma omp parallel for schedule(dynamic, 16) num_threads(max_threads())
    for (long long i = (long long)head + 1; i < (long long)vecs.size(); ++i) {
      const Cyc* c = vecs[i].get(lead);
      if (c) vecs[i].axpy(-*c, p);
    }
    ++rank;
    ++head;
  }
  return rank;
#endif
}

std::vector<std::vector<Cyc>> nullspace_dense(const std::vector<std::vector<Cyc>>& rows_in,
                                              size_t ncols) {
  std::vector<std::vector<Cyc>> rows = rows_in;
  std::vector<long long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Cyc inv = rows[r][c].inverse();
    for (size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Cyc f = rows[i][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back((long long)c);
    ++r;
  }
  std::vector<char> is_pivot(ncols, 0);
  for (long long c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Cyc>> basis;
  for (size_t freec = 0; freec < ncols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Cyc> v(ncols);
    v[freec] = Cyc(1);
    for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -rows[k][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nk
