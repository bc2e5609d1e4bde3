#include "toric/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace toric {

namespace {

// Minimize sum of artificial variables for A x = b, x >= 0 (b normalized >= 0).
// Returns true iff the optimum is 0. Bland's rule, so no cycling.
bool phase1(std::vector<RatVec> a, RatVec b) {
  std::size_t m = a.size();
  if (m == 0) return true;
  std::size_t n = a[0].size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  // tableau: columns [x_0..x_{n-1} | artificials | rhs]
  std::size_t total = n + m;
  std::vector<RatVec> t(m, RatVec(total + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][total] = b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // objective row: minimize sum artificials => z = sum_i (b_i - row_i . x)
  RatVec obj(total + 1, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= total; ++j) obj[j] += t[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[n + i] = 0;

  while (true) {
    // entering: smallest index with positive reduced cost
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j)
      if (obj[j] > 0) { enter = j; break; }
    if (enter == total) break;
    // leaving: min ratio, ties by smallest basis index (Bland)
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][total] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase1: unbounded");
    // pivot
    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (std::size_t j = 0; j <= total; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[total] == 0;
}

}  // namespace

bool feasible_eq_nonneg(const std::vector<RatVec>& a, const RatVec& b) {
  return phase1(a, b);
}

bool feasible_ineq_free(const std::vector<RatVec>& rows, const RatVec& rhs) {
  // rows . y >= rhs, y free:  y = y+ - y-, slack s >= 0:
  //   rows.(y+ - y-) - s = rhs
  if (rows.empty()) return true;
  std::size_t n = rows[0].size();
  std::size_t m = rows.size();
  std::vector<RatVec> a(m, RatVec(2 * n + m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = rows[i][j];
      a[i][n + j] = -rows[i][j];
    }
    a[i][2 * n + i] = -1;
  }
  return phase1(a, rhs);
}

bool in_cone(const std::vector<IntVec>& gens, const IntVec& target) {
  std::size_t dim = target.size();
  bool target_zero = true;
  for (const Int& x : target)
    if (x != 0) target_zero = false;
  if (target_zero) return true;
  if (gens.empty()) return false;
  std::vector<RatVec> a(dim, RatVec(gens.size(), Rat(0)));
  RatVec b(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) a[i][g] = Rat(gens[g][i]);
    b[i] = Rat(target[i]);
  }
  return phase1(a, b);
}

}  // namespace toric
