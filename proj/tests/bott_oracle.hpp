#pragma once
// Test-only oracle: fixed-point localization for integrals of the top Chern
// class of Sym^d(S*) (x) L on Gr(2, E) over a toric base with split E.
// Entirely independent of the Chow-ring normal-form machinery.
#include <vector>

#include "toric/rational.hpp"

namespace bott {

using toric::Int;
using toric::Rat;

struct FixedPoint {
  std::vector<Rat> tangent_weights;  // of the base at this point
  Rat h;                             // weight of O_B(1) at this point
};

// E = (+) O_B(k_i); M = Sym^d(S*) (x) O_B(ell).
inline Rat top_chern_integral(const std::vector<FixedPoint>& base,
                              const std::vector<Rat>& gamma,
                              const std::vector<long>& twists, int d, long ell) {
  std::size_t e = gamma.size();
  Rat total(0);
  for (const auto& pt : base) {
    std::vector<Rat> w(e);
    for (std::size_t i = 0; i < e; ++i) w[i] = gamma[i] + Rat(twists[i]) * pt.h;
    for (std::size_t t1 = 0; t1 < e; ++t1)
      for (std::size_t t2 = t1 + 1; t2 < e; ++t2) {
        // numerator: weights of Sym^d(S*) (x) L at S = <f_t1, f_t2>
        Rat num(1);
        for (int a = 0; a <= d; ++a) {
          Rat wt = -(Rat(a) * w[t1] + Rat(d - a) * w[t2]) + Rat(ell) * pt.h;
          num *= wt;
        }
        // denominator: tangent weights of the base and of the fiber
        Rat den(1);
        for (const Rat& tw : pt.tangent_weights) den *= tw;
        for (std::size_t u = 0; u < e; ++u) {
          if (u == t1 || u == t2) continue;
          den *= (w[u] - w[t1]) * (w[u] - w[t2]);
        }
        total += num / den;
      }
  }
  return total;
}

// generic weights chosen once; any sufficiently generic choice gives the same
// integer, which the tests double-check with a second choice.
// P^n = P(C_{v_0} (+) ... (+) C_{v_n}); at the i-th fixed point the tangent
// weights are v_j - v_i and O(1) carries weight -v_i.
inline std::vector<FixedPoint> point_base() { return {FixedPoint{{}, Rat(0)}}; }

inline std::vector<FixedPoint> p1_base(const Rat& lambda) {
  return {FixedPoint{{lambda}, Rat(0)}, FixedPoint{{-lambda}, -lambda}};
}

inline std::vector<FixedPoint> p2_base(const Rat& a, const Rat& b) {
  return {FixedPoint{{a, b}, Rat(0)},
          FixedPoint{{-a, b - a}, -a},
          FixedPoint{{-b, a - b}, -b}};
}

}  // namespace bott
