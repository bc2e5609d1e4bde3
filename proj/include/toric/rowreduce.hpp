#pragma once
#include <cstddef>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Dense rational matrix as a flat row-major vector of rows.
struct RatMat {
  std::size_t rows = 0, cols = 0;
  std::vector<RatVec> r;

  RatMat() = default;
  RatMat(std::size_t rr, std::size_t cc) : rows(rr), cols(cc), r(rr, RatVec(cc, Rat(0))) {}
  RatVec& operator[](std::size_t i) { return r[i]; }
  const RatVec& operator[](std::size_t i) const { return r[i]; }
};

struct Echelon {
  RatMat m;                      // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form, serial reference implementation.
Echelon rref_serial(RatMat m);

/// Same result as rref_serial; eliminations within a pivot step run under OpenMP.
Echelon rref_parallel(RatMat m);

/// Dispatches on matrix size: small matrices stay serial.
Echelon rref(RatMat m);

/// Reduce v against an echelon form in place; v becomes its residue
/// (coordinates on pivot columns eliminated).
void reduce_against(const Echelon& e, RatVec& v);

}  // namespace toric
