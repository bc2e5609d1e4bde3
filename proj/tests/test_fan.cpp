#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "toric/corpus.hpp"
#include "toric/fan.hpp"

using namespace toric;

TEST_CASE("P3 is smooth, complete and projective") {
  FanValidation v = validate_fan(projective_space(3));
  CHECK(v.structurally_valid);
  CHECK(v.smooth);
  CHECK(v.complete);
  CHECK(v.projective);
}

TEST_CASE("P2 with a cone deleted is not complete") {
  Fan f = projective_space(2);
  f.max_cones.pop_back();
  FanValidation v = validate_fan(f);
  CHECK(v.structurally_valid);
  CHECK(v.smooth);
  CHECK_FALSE(v.complete);
}

TEST_CASE("structural errors: non-primitive ray and bad index") {
  Fan f = projective_space(2);
  f.rays[0] = int_vec({2, 0});
  CHECK_FALSE(validate_fan(f).structurally_valid);

  Fan g = projective_space(2);
  g.max_cones[0] = {0, 7};
  CHECK_FALSE(validate_fan(g).structurally_valid);
}

TEST_CASE("a singular cone is flagged as non-smooth") {
  Fan f;
  f.rays = {int_vec({1, 0}), int_vec({1, 2}), int_vec({-1, -1})};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  FanValidation v = validate_fan(f);
  CHECK(v.structurally_valid);
  CHECK_FALSE(v.smooth);
}

TEST_CASE("corpus fans all validate") {
  for (const auto& e : corpus()) {
    FanValidation v = validate_fan(e.fan);
    CHECK(v.structurally_valid);
    CHECK(v.smooth);
    CHECK(v.complete);
    CHECK(v.projective);
  }
}

TEST_CASE("P2 wall relations are all (1,1,1)") {
  for (const auto& w : walls_and_relations(projective_space(2)))
    CHECK(w.relation.dots == int_vec({1, 1, 1}));
}

TEST_CASE("P1xP1 has two wall classes with disjoint supports") {
  Fan f = product_fan(projective_space(1), projective_space(1));
  auto classes = wall_classes(f);
  REQUIRE(classes.size() == 2);
  std::set<IntVec> got{classes[0].dots, classes[1].dots};
  CHECK(got.count(int_vec({1, 1, 0, 0})));
  CHECK(got.count(int_vec({0, 0, 1, 1})));
}

TEST_CASE("blow-up of P4 along a line: every wall class is a nonnegative "
          "combination of the extremal classes e and h-e") {
  const CorpusEntry* e = corpus_lookup("BlP4_line");
  REQUIRE(e);
  auto classes = wall_classes(e->fan);
  std::set<IntVec> got;
  for (const auto& c : classes) got.insert(c.dots);
  CHECK(got.count(int_vec({1, 1, 1, 0, 0, -1})));   // e
  CHECK(got.count(int_vec({0, 0, 0, 1, 1, 1})));    // h-e
  // the remaining wall class is h = e + (h-e); nothing outside the span
  for (const auto& c : classes) {
    bool is_e = c.dots == int_vec({1, 1, 1, 0, 0, -1});
    bool is_he = c.dots == int_vec({0, 0, 0, 1, 1, 1});
    bool is_h = c.dots == int_vec({1, 1, 1, 1, 1, 0});
    CHECK((is_e || is_he || is_h));
  }
}

TEST_CASE("wall relation invariants on every corpus fan") {
  for (const auto& e : corpus()) {
    const Fan& fan = e.fan;
    IntMat rt = fan.ray_matrix_cols();
    auto walls = walls_and_relations(fan);
    DivisorClass mk = anticanonical(fan);
    for (const auto& w : walls) {
      // relation lies in the kernel of the ray matrix
      for (const Int& x : rt.mul_vec(w.relation.dots)) CHECK(x == 0);
      // -K_Y degree equals the coefficient sum
      Int s = 0;
      for (const Int& x : w.relation.dots) s += x;
      CHECK(intersect(mk, w.relation) == s);
      // both non-shared rays carry +1
      std::set<int> shared(w.shared.begin(), w.shared.end());
      int plus_ones = 0;
      for (int i = 0; i < fan.ray_count(); ++i)
        if (!shared.count(i) && w.relation.dots[i] != 0) {
          CHECK(w.relation.dots[i] == 1);
          ++plus_ones;
        }
      CHECK(plus_ones == 2);
    }
    // curve lattice rank equals the Picard rank
    CHECK(static_cast<int>(curve_lattice_basis(fan).size()) == fan.picard_rank());
  }
}

TEST_CASE("nef and ample on the corpus") {
  const Fan p3 = projective_space(3);
  CHECK(is_ample(anticanonical(p3), p3));

  const CorpusEntry* bl4 = corpus_lookup("BlP4_line");
  DivisorClass x = parse_divisor_expr(*bl4, "5H-2E");
  CHECK(is_ample(x, bl4->fan));
  CHECK(intersect(x, bl4->curves[1].second) == 2);   // e
  CHECK(intersect(x, bl4->curves[2].second) == 3);   // h-e
  CHECK(same_divisor_class(bl4->fan, x, anticanonical(bl4->fan)));

  const CorpusEntry* bl6 = corpus_lookup("BlP6_P3");
  DivisorClass h = parse_divisor_expr(*bl6, "H");
  CHECK(is_nef(h, bl6->fan));
  CHECK_FALSE(is_ample(h, bl6->fan));
  CurveClass ecl = bl6->curves[1].second;
  CHECK(intersect(h, ecl) == 0);
}

TEST_CASE("ample implies nef; negatives of ample divisors are never nef") {
  std::mt19937_64 rng(41);
  for (const auto& e : corpus()) {
    std::uniform_int_distribution<int> d(-3, 5);
    for (int trial = 0; trial < 8; ++trial) {
      DivisorClass dv;
      dv.coeffs.resize(e.fan.ray_count());
      for (auto& c : dv.coeffs) c = d(rng);
      if (is_ample(dv, e.fan)) {
        CHECK(is_nef(dv, e.fan));
        DivisorClass neg;
        for (const Int& c : dv.coeffs) neg.coeffs.push_back(-c);
        CHECK_FALSE(is_nef(neg, e.fan));
      }
    }
  }
}

TEST_CASE("divisor class equality is linear equivalence") {
  const CorpusEntry* e = corpus_lookup("BlP4_line");
  // D_{e4} ~ D_f (both pull back the hyperplane)
  DivisorClass d4, df;
  d4.coeffs.assign(6, Int(0));
  df.coeffs.assign(6, Int(0));
  d4.coeffs[3] = 1;
  df.coeffs[4] = 1;
  CHECK(same_divisor_class(e->fan, d4, df));
  DivisorClass dy;
  dy.coeffs.assign(6, Int(0));
  dy.coeffs[5] = 1;
  CHECK_FALSE(same_divisor_class(e->fan, d4, dy));
}

TEST_CASE("curve class coordinate round-trip") {
  for (const auto& e : corpus()) {
    for (const auto& [name, c] : e.curves) {
      IntVec coords = curve_class_coordinates(e.fan, c);
      CHECK(curve_class_from_coordinates(e.fan, coords) == c);
    }
  }
}

TEST_CASE("rank-1 lattices are rejected by the public gate") {
  Fan p1 = projective_space(1);
  CHECK_FALSE(validate_fan(p1).structurally_valid);
  FanValidation v = validate_fan(p1, 0);
  CHECK(v.structurally_valid);
  CHECK(v.smooth);
  CHECK(v.complete);
  CHECK(v.projective);
}
