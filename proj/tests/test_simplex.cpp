#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/simplex.hpp"

using namespace toric;

TEST_CASE("equality feasibility") {
  // x + y = 2, x - y = 0 has the nonnegative solution (1,1)
  std::vector<RatVec> a{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  CHECK(feasible_eq_nonneg(a, {Rat(2), Rat(0)}));
  // x + y = -1 has no nonnegative solution
  std::vector<RatVec> b{{Rat(1), Rat(1)}};
  CHECK_FALSE(feasible_eq_nonneg(b, {Rat(-1)}));
}

TEST_CASE("strict inequality systems with free variables") {
  // y >= 1 and -y >= 1 is infeasible
  std::vector<RatVec> rows{{Rat(1)}, {Rat(-1)}};
  CHECK_FALSE(feasible_ineq_free(rows, {Rat(1), Rat(1)}));
  // y1 - y2 >= 1, y2 >= 1 is feasible (free variables)
  std::vector<RatVec> rows2{{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}};
  CHECK(feasible_ineq_free(rows2, {Rat(1), Rat(1)}));
}

TEST_CASE("cone membership") {
  std::vector<IntVec> gens{int_vec({1, 0}), int_vec({1, 1})};
  CHECK(in_cone(gens, int_vec({3, 1})));
  CHECK(in_cone(gens, int_vec({1, 1})));
  CHECK(in_cone(gens, int_vec({0, 0})));
  CHECK_FALSE(in_cone(gens, int_vec({0, 1})));   // above the cone
  CHECK_FALSE(in_cone(gens, int_vec({-1, 0})));
  CHECK_FALSE(in_cone({}, int_vec({1, 0})));
}
