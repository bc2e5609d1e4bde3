#include "toric/rowreduce.hpp"

#include <omp.h>

#include <stdexcept>

namespace toric {

namespace {

// One sweep: pick the pivot for `col` among rows >= next, normalize, eliminate.
// Shared by both implementations so they produce bit-identical output.
template <typename Eliminate>
Echelon rref_impl(RatMat m, Eliminate eliminate) {
  std::size_t next = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols && next < m.rows; ++col) {
    std::size_t sel = m.rows;
    for (std::size_t i = next; i < m.rows; ++i)
      if (m[i][col] != 0) { sel = i; break; }
    if (sel == m.rows) continue;
    std::swap(m.r[sel], m.r[next]);
    RatVec& prow = m.r[next];
    if (prow[col] != 1) {
      Rat inv = prow[col];
      for (std::size_t j = col; j < m.cols; ++j)
        if (prow[j] != 0) prow[j] /= inv;
    }
    eliminate(m, next, col);
    pivots.push_back(col);
    ++next;
  }
  m.r.resize(next);
  m.rows = next;
  return Echelon{std::move(m), std::move(pivots)};
}

void eliminate_row(RatVec& row, const RatVec& prow, std::size_t col, std::size_t cols) {
  Rat f = row[col];
  if (f == 0) return;
  for (std::size_t j = col; j < cols; ++j)
    if (prow[j] != 0) row[j] -= f * prow[j];
}

}  // namespace

Echelon rref_serial(RatMat m) {
  return rref_impl(std::move(m), [](RatMat& a, std::size_t prow, std::size_t col) {
    for (std::size_t i = 0; i < a.rows; ++i)
      if (i != prow) eliminate_row(a.r[i], a.r[prow], col, a.cols);
  });
}

Echelon rref_parallel(RatMat m) {
  return rref_impl(std::move(m), [](RatMat& a, std::size_t prow, std::size_t col) {
    const RatVec& p = a.r[prow];
    std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) != prow)
        eliminate_row(a.r[i], p, col, a.cols);
    }
  });
}

Echelon rref(RatMat m) {
  if (m.rows * m.cols >= 4096 && omp_get_max_threads() > 1)
    return rref_parallel(std::move(m));
  return rref_serial(std::move(m));
}

void reduce_against(const Echelon& e, RatVec& v) {
  if (v.size() != e.m.cols) throw std::invalid_argument("reduce_against: size");
  for (std::size_t i = 0; i < e.m.rows; ++i) {
    std::size_t c = e.pivot_cols[i];
    if (v[c] != 0) eliminate_row(v, e.m[i], c, e.m.cols);
  }
}

}  // namespace toric
