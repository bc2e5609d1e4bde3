#include "toric/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace toric {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rws) {
  IntMat m(rws.size(), rws.empty() ? 0 : rws[0].size());
  for (std::size_t i = 0; i < rws.size(); ++i) {
    if (rws[i].size() != m.cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rws[i][j];
  }
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMat::mul_vec(const IntVec& v) const {
  if (v.size() != cols) throw std::invalid_argument("size mismatch");
  IntVec out(rows, Int(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

void col_swap(IntMat& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

void col_neg(IntMat& m, std::size_t i) {
  for (std::size_t r = 0; r < m.rows; ++r) m(r, i) = -m(r, i);
}

// col_j -= q * col_i
void col_axpy(IntMat& m, std::size_t j, std::size_t i, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows; ++r) m(r, j) -= q * m(r, i);
}

void row_swap(IntMat& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

void row_neg(IntMat& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
}

void row_axpy(IntMat& m, std::size_t j, std::size_t i, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols; ++c) m(j, c) -= q * m(i, c);
}

}  // namespace

HermiteResult hermite_columns(const IntMat& m) {
  HermiteResult res{m, IntMat::identity(m.cols), 0};
  IntMat& h = res.h;
  IntMat& u = res.u;
  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < m.rows && pivot_col < m.cols; ++row) {
    // gcd-reduce the row segment [pivot_col, cols) via column ops
    while (true) {
      std::size_t best = m.cols;
      for (std::size_t c = pivot_col; c < m.cols; ++c) {
        if (h(row, c) != 0 &&
            (best == m.cols || abs(h(row, c)) < abs(h(row, best))))
          best = c;
      }
      if (best == m.cols) break;  // all zero in this row
      if (best != pivot_col) {
        col_swap(h, pivot_col, best);
        col_swap(u, pivot_col, best);
      }
      if (h(row, pivot_col) < 0) {
        col_neg(h, pivot_col);
        col_neg(u, pivot_col);
      }
      bool cleared = true;
      for (std::size_t c = pivot_col + 1; c < m.cols; ++c) {
        if (h(row, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(row, c).get_mpz_t(), h(row, pivot_col).get_mpz_t());
        col_axpy(h, c, pivot_col, q);
        col_axpy(u, c, pivot_col, q);
        if (h(row, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(row, pivot_col) != 0) {
      // reduce earlier columns against this pivot
      for (std::size_t c = 0; c < pivot_col; ++c) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(row, c).get_mpz_t(), h(row, pivot_col).get_mpz_t());
        col_axpy(h, c, pivot_col, q);
        col_axpy(u, c, pivot_col, q);
      }
      ++pivot_col;
    }
  }
  res.rank = pivot_col;
  return res;
}

SmithResult smith_normal_form(const IntMat& m) {
  SmithResult res{m, IntMat::identity(m.rows), IntMat::identity(m.cols), 0};
  IntMat& d = res.d;
  std::size_t n = std::min(m.rows, m.cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    bool have = false;
    for (std::size_t i = t; i < d.rows && !have; ++i)
      for (std::size_t j = t; j < d.cols && !have; ++j)
        if (d(i, j) != 0) have = true;
    if (!have) break;
    while (true) {
      // move a min-abs nonzero entry of the submatrix to (t,t)
      std::size_t pi = d.rows, pj = d.cols;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j)
          if (d(i, j) != 0 && (pi == d.rows || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi != t) { row_swap(d, pi, t); row_swap(res.left, pi, t); }
      if (pj != t) { col_swap(d, pj, t); col_swap(res.right, pj, t); }
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(res.left, i, t, q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(res.right, j, t, q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the rest of the submatrix
      std::size_t bi = d.rows;
      for (std::size_t i = t + 1; i < d.rows && bi == d.rows; ++i)
        for (std::size_t j = t + 1; j < d.cols; ++j)
          if (d(i, j) % d(t, t) != 0) { bi = i; break; }
      if (bi == d.rows) break;
      row_axpy(d, t, bi, Int(-1));  // row_t += row_bi, then repeat
      row_axpy(res.left, t, bi, Int(-1));
    }
    if (d(t, t) < 0) { row_neg(d, t); row_neg(res.left, t); }
  }
  res.rank = t;
  return res;
}

std::size_t rank_rational(const IntMat& m) {
  return hermite_columns(m).rank;
}

std::vector<IntVec> integer_kernel(const IntMat& m) {
  HermiteResult hr = hermite_columns(m);
  std::vector<IntVec> basis;
  for (std::size_t c = hr.rank; c < m.cols; ++c) {
    IntVec v(m.cols);
    for (std::size_t r = 0; r < m.cols; ++r) v[r] = hr.u(r, c);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  // canonicalize the basis via HNF of the stacked rows
  IntMat b = IntMat::from_rows(basis).transposed();
  HermiteResult canon = hermite_columns(b);
  std::vector<IntVec> out;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    IntVec v(m.cols);
    for (std::size_t r = 0; r < m.cols; ++r) v[r] = canon.h(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
  // m x = b: column Hermite h = m u, solve h y = b by forward substitution.
  HermiteResult hr = hermite_columns(m);
  IntVec y(m.cols, Int(0));
  IntVec r = b;
  for (std::size_t c = 0; c < hr.rank; ++c) {
    std::size_t p = 0;
    while (p < m.rows && hr.h(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (r[p] % hr.h(p, c) != 0) return std::nullopt;
    Int q = r[p] / hr.h(p, c);
    y[c] = q;
    if (q != 0)
      for (std::size_t i = p; i < m.rows; ++i) r[i] -= q * hr.h(i, c);
  }
  for (std::size_t row = 0; row < m.rows; ++row)
    if (r[row] != 0) return std::nullopt;
  IntVec x(m.cols, Int(0));
  for (std::size_t i = 0; i < m.cols; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) x[i] += hr.u(i, j) * y[j];
  return x;
}

std::optional<RatVec> solve_rational(const IntMat& m, const IntVec& b) {
  // Gaussian elimination on the augmented rational system.
  std::size_t R = m.rows, C = m.cols;
  std::vector<RatVec> aug(R, RatVec(C + 1));
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug[i][j] = Rat(m(i, j));
    aug[i][C] = Rat(b[i]);
  }
  std::vector<std::size_t> pivot_of_col(C, R);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < C && prow < R; ++col) {
    std::size_t sel = R;
    for (std::size_t i = prow; i < R; ++i)
      if (aug[i][col] != 0) { sel = i; break; }
    if (sel == R) continue;
    std::swap(aug[sel], aug[prow]);
    Rat inv = aug[prow][col];
    for (std::size_t j = col; j <= C; ++j) aug[prow][j] /= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == prow || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (std::size_t j = col; j <= C; ++j) aug[i][j] -= f * aug[prow][j];
    }
    pivot_of_col[col] = prow;
    ++prow;
  }
  for (std::size_t i = prow; i < R; ++i)
    if (aug[i][C] != 0) return std::nullopt;
  RatVec x(C, Rat(0));
  std::size_t row = 0;
  for (std::size_t col = 0; col < C; ++col) {
    if (pivot_of_col[col] != R) x[col] = aug[pivot_of_col[col]][C], ++row;
  }
  return x;
}

Int det(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { s = i; break; }
      if (s == n) return 0;
      row_swap(a, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace toric
