#pragma once
#include <map>
#include <utility>

#include "toric/rational.hpp"

namespace toric {

/// Schubert calculus of Gr(2,e), the Grassmannian of lines in P^{e-1}.
/// Classes live over partitions (a,b) with e-2 >= a >= b >= 0.
struct SchubertClass {
  int e = 0;
  std::map<std::pair<int, int>, Rat> coeff;

  bool is_zero() const;
  bool nonnegative() const;
};

SchubertClass schubert_unit(int e);
/// Pieri step: multiply by sigma_1.
SchubertClass mul_sigma1(const SchubertClass& c);
/// Multiply by sigma_{1,1}.
SchubertClass mul_sigma11(const SchubertClass& c);

/// Expansion of the monomial sigma_1^a sigma_{1,1}^b on Gr(2,e).
SchubertClass sigma_monomial(int e, int a, int b);

/// Integral of sigma_1^a sigma_{1,1}^b, zero unless a + 2b = 2(e-2).
Int schubert_integral(int e, int a, int b);

/// Integral of a class, zero unless concentrated in degree 2(e-2).
Rat integral(const SchubertClass& c);

}  // namespace toric
