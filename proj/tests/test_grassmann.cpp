#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "toric/corpus.hpp"
#include "toric/grassmann.hpp"

using namespace toric;

namespace {

std::shared_ptr<ToricChowRing> point_ring() {
  Fan pt;
  pt.rank = 0;
  pt.max_cones = {{}};
  return std::make_shared<ToricChowRing>(pt);
}

std::vector<ChowElt> trivial_chern(const std::shared_ptr<ToricChowRing>& base, int e) {
  return std::vector<ChowElt>(e, base->zero());
}

}  // namespace

TEST_CASE("Pieri oracle: classical Schubert numbers on Gr(2,e)") {
  CHECK(schubert_integral(4, 4, 0) == 2);    // lines meeting four lines in P3
  CHECK(schubert_integral(5, 6, 0) == 5);    // Catalan number C_3
  CHECK(schubert_integral(6, 8, 0) == 14);   // Catalan number C_4
  CHECK(schubert_integral(7, 10, 0) == 42);  // Catalan number C_5
  CHECK(schubert_integral(5, 4, 1) == 2);
  CHECK(schubert_integral(5, 2, 2) == 1);
  CHECK(schubert_integral(5, 0, 3) == 1);
  CHECK(schubert_integral(3, 1, 0) == 0);    // degree mismatch
  CHECK(schubert_integral(3, 0, 1) == 1);    // point of Gr(2,3)
}

TEST_CASE("Gr(2,5) over a point: rank ten with the classical Betti numbers") {
  auto base = point_ring();
  GrassmannBundleRing g(base, 5, trivial_chern(base, 5));
  CHECK(g.dim() == 6);
  int expected[] = {1, 1, 2, 2, 2, 1, 1};
  int total = 0;
  for (int k = 0; k <= 6; ++k) {
    CHECK(g.piece_dim(k) == expected[k]);
    total += g.piece_dim(k);
  }
  CHECK(total == 10);
  // sigma1^6 = 5 via the ring, matching the Pieri oracle
  GrElt s = g.s1();
  GrElt p = g.one();
  for (int i = 0; i < 6; ++i) p = p * s;
  CHECK(g.degree_map(p) == 5);
}

TEST_CASE("Whitney identity (1 - s1 + s2) c(Q) = c(E) holds after normal form") {
  auto base = std::make_shared<ToricChowRing>(projective_space(2));
  ChowElt h = base->ray_divisor(0);
  std::vector<ChowElt> c{h * Rat(-1), base->zero(), base->zero()};
  GrassmannBundleRing g(base, 3, c);
  // c(S) = 1 - s1 + s2, c(Q) = 1 + q1 with q1 = c1 + s1
  GrElt cS = g.one() - g.s1() + g.s2();
  GrElt q1 = g.pullback(c[0]) + g.s1();
  GrElt cQ = g.one() + q1;
  GrElt cE = g.one() + g.pullback(c[0]);
  CHECK((cS * cQ) == cE);
}

TEST_CASE("fiber integration on Gr(2,3) and Gr(2,4)") {
  auto base = point_ring();
  GrassmannBundleRing g3(base, 3, trivial_chern(base, 3));
  // s2 = sigma_{1,1} is the point class of the two-dimensional Gr(2,3)
  CHECK(base->degree_map(g3.fiber_integrate(g3.s2())) == 1);
  CHECK(base->degree_map(g3.fiber_integrate(g3.s1() * g3.s1())) == 1);
  // degree overflow integrates to zero
  CHECK(g3.fiber_integrate(g3.s1() * g3.s2()).is_zero());
  CHECK(g3.fiber_integrate(g3.one()).is_zero());

  GrassmannBundleRing g4(base, 4, trivial_chern(base, 4));
  GrElt s1_4 = g4.s1() * g4.s1() * g4.s1() * g4.s1();
  CHECK(base->degree_map(g4.fiber_integrate(s1_4)) == 2);
}

TEST_CASE("projection formula on random instances") {
  auto base = std::make_shared<ToricChowRing>(projective_space(2));
  ChowElt h = base->ray_divisor(0);
  std::vector<ChowElt> c{h, h * h, base->zero()};
  GrassmannBundleRing g(base, 3, c);
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    // x random fiber class, beta random base class
    GrElt x = g.s1() * Rat(d(rng)) + g.s2() * Rat(d(rng)) + g.s1() * g.s2() * Rat(d(rng));
    ChowElt beta = base->one() * Rat(d(rng)) + h * Rat(d(rng));
    ChowElt lhs = g.fiber_integrate(g.pullback(beta) * x);
    ChowElt rhs = beta * g.fiber_integrate(x);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rank-2 bundles collapse to the base ring") {
  auto base = std::make_shared<ToricChowRing>(projective_space(2));
  ChowElt h = base->ray_divisor(0);
  std::vector<ChowElt> c{h, h * h};
  GrassmannBundleRing g(base, 2, c);
  CHECK(g.dim() == 2);
  // s1 = -c1, s2 = c2 in the collapsed ring
  GrElt s1 = g.s1();
  CHECK(s1 == g.pullback(h * Rat(-1)));
  CHECK(g.s2() == g.pullback(h * h));
}

TEST_CASE("rejects rank below two and malformed chern data") {
  auto base = point_ring();
  CHECK_THROWS_AS(GrassmannBundleRing(base, 1, trivial_chern(base, 1)), StructuralError);
  std::vector<ChowElt> wrong{base->one()};  // c_1 must have degree 1
  CHECK_THROWS_AS(GrassmannBundleRing(base, 3, {wrong[0], base->zero(), base->zero()}),
                  StructuralError);
}

TEST_CASE("restriction to the fiber reproduces Schubert calculus") {
  auto base = std::make_shared<ToricChowRing>(projective_space(1));
  ChowElt w = base->ray_divisor(0);
  std::vector<ChowElt> c{w * Rat(2), base->zero(), base->zero(), base->zero()};
  GrassmannBundleRing g(base, 4, c);
  GrElt x = g.s1() * g.s1();
  SchubertClass sc = g.fiber_schubert(x);
  // sigma_1^2 = sigma_2 + sigma_{1,1}
  CHECK(sc.coeff[{2, 0}] == 1);
  CHECK(sc.coeff[{1, 1}] == 1);
}
