#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Dense matrix of exact integers, row-major.
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rws);
  IntMat transposed() const;
  IntVec mul_vec(const IntVec& v) const;
  bool operator==(const IntMat&) const = default;
};

struct SmithResult {
  IntMat d;       // diagonal form, d(i,i) | d(i+1,i+1)
  IntMat left;    // unimodular, left * m * right == d
  IntMat right;   // unimodular
  std::size_t rank = 0;
};

/// Column-style Hermite form: returns h = m * u with u unimodular,
/// h in column echelon form (pivot rows strictly increasing, zero columns last).
struct HermiteResult {
  IntMat h;
  IntMat u;
  std::size_t rank = 0;
};

HermiteResult hermite_columns(const IntMat& m);
SmithResult smith_normal_form(const IntMat& m);

std::size_t rank_rational(const IntMat& m);

/// Basis of the saturated lattice { v : m v = 0 }, one vector per basis element.
/// Canonical: columns of the Hermite transform, HNF-reduced for determinism.
std::vector<IntVec> integer_kernel(const IntMat& m);

/// One integer solution x of m x = b, if any (solution over Z).
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b);

/// Unique rational solution of m x = b when columns of m are independent.
std::optional<RatVec> solve_rational(const IntMat& m, const IntVec& b);

Int det(const IntMat& m);

}  // namespace toric
