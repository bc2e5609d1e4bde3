#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/matrix.hpp"

using namespace toric;

namespace {

IntMat rand_mat(std::mt19937_64& rng, int r, int c, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("kernel of the P2 ray matrix is the single relation (1,1,1)") {
  // columns are the rays e1, e2, -e1-e2
  IntMat m = IntMat::from_rows({int_vec({1, 0, -1}), int_vec({0, 1, -1})});
  auto k = integer_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == int_vec({1, 1, 1}));
}

TEST_CASE("kernel of the identity is empty") {
  auto k = integer_kernel(IntMat::identity(2));
  CHECK(k.empty());
}

TEST_CASE("kernel of the P1xP1 ray matrix has rank two") {
  IntMat m = IntMat::from_rows({int_vec({1, -1, 0, 0}), int_vec({0, 0, 1, -1})});
  auto k = integer_kernel(m);
  REQUIRE(k.size() == 2);
  // up to unimodular change: both (1,1,0,0) and (0,0,1,1) lie in the lattice
  IntMat kb(4, 2);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) kb(i, j) = k[j][i];
  CHECK(solve_integer(kb, int_vec({1, 1, 0, 0})).has_value());
  CHECK(solve_integer(kb, int_vec({0, 0, 1, 1})).has_value());
}

TEST_CASE("kernel vectors are annihilated and the lattice is saturated") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 5);
    IntMat m = rand_mat(rng, r, c);
    auto basis = integer_kernel(m);
    for (const auto& v : basis) {
      for (const Int& x : m.mul_vec(v)) CHECK(x == 0);
      // primitive part of v is already in the lattice: gcd of coords in the
      // basis must be representable, i.e. v/g solves too when v = g*w
      Int g = vec_gcd(v);
      if (g > 1) {
        IntVec w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
        IntMat kb(c, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
          for (int i = 0; i < c; ++i) kb(i, j) = basis[j][i];
        CHECK(solve_integer(kb, w).has_value());
      }
    }
    // rank-nullity over Q
    CHECK(rank_rational(m) + basis.size() == static_cast<std::size_t>(c));
  }
}

TEST_CASE("hermite transform is unimodular and reproduces the matrix") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat m = rand_mat(rng, r, c);
    HermiteResult hr = hermite_columns(m);
    Int ud = det(hr.u);
    CHECK((ud == 1 || ud == -1));
    // m * u == h
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        Int s = 0;
        for (int t = 0; t < c; ++t) s += m(i, t) * hr.u(t, j);
        CHECK(s == hr.h(i, j));
      }
  }
}

TEST_CASE("smith normal form: unimodular transforms and divisibility chain") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat m = rand_mat(rng, r, c);
    SmithResult s = smith_normal_form(m);
    Int dl = det(s.left), dr = det(s.right);
    CHECK((dl == 1 || dl == -1));
    CHECK((dr == 1 || dr == -1));
    // left * m * right == d
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        Int acc = 0;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < c; ++b) acc += s.left(i, a) * m(a, b) * s.right(b, j);
        CHECK(acc == s.d(i, j));
        if (i != j) CHECK(s.d(i, j) == 0);
      }
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      CHECK(s.d(i, i) > 0);
      CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
  }
}

TEST_CASE("integer solve: exact solutions and unsolvable systems") {
  IntMat m = IntMat::from_rows({int_vec({2, 0}), int_vec({0, 2})});
  CHECK(solve_integer(m, int_vec({4, 6})).has_value());
  CHECK_FALSE(solve_integer(m, int_vec({1, 0})).has_value());
  auto sol = solve_integer(m, int_vec({4, 6}));
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 3);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat m2 = rand_mat(rng, r, c);
    IntVec x(static_cast<std::size_t>(c));
    std::uniform_int_distribution<int> d(-5, 5);
    for (auto& v : x) v = d(rng);
    IntVec b = m2.mul_vec(x);
    auto s = solve_integer(m2, b);
    REQUIRE(s.has_value());
    CHECK(m2.mul_vec(*s) == b);
  }
}

TEST_CASE("determinant via fraction-free elimination") {
  CHECK(det(IntMat::identity(3)) == 1);
  IntMat m = IntMat::from_rows({int_vec({1, 2}), int_vec({3, 4})});
  CHECK(det(m) == -2);
  IntMat sing = IntMat::from_rows({int_vec({1, 2}), int_vec({2, 4})});
  CHECK(det(sing) == 0);
}
