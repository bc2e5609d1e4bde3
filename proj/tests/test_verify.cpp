#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/corpus.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

const ClassReport* report_for(const IHCReport& rep, const IntVec& dots) {
  for (const auto& cr : rep.classes)
    if (cr.candidate.curve_class.dots == dots) return &cr;
  return nullptr;
}

}  // namespace

TEST_CASE("hypotheses on the anticanonical blow-up of P4") {
  const CorpusEntry* e = corpus_lookup("BlP4_line");
  DivisorClass x = parse_divisor_expr(*e, "5H-2E");
  HypothesisReport rep = check_hypotheses(e->fan, {x});
  CHECK(rep.fan.all());
  CHECK(rep.all_ample);
  CHECK(rep.dim_x == 3);
  CHECK(rep.dim_ok);
  CHECK(rep.minus_kx_nef);  // Calabi-Yau: -K_X = 0
  CHECK(rep.nef_violations.empty());
}

TEST_CASE("hypotheses on the general-type example: nef fails with witness h-e") {
  const CorpusEntry* e = corpus_lookup("BlP6_P3");
  DivisorClass x = parse_divisor_expr(*e, "8H-2E");
  HypothesisReport rep = check_hypotheses(e->fan, {x});
  CHECK(rep.fan.all());
  CHECK(rep.all_ample);
  CHECK(rep.dim_x == 5);
  CHECK_FALSE(rep.minus_kx_nef);
  bool witness = false;
  for (const auto& c : rep.nef_violations)
    if (c.dots == int_vec({0, 0, 0, 1, 1, 1, 1, 1})) witness = true;
  CHECK(witness);
}

TEST_CASE("hypotheses on P5 with two quadrics") {
  const CorpusEntry* e = corpus_lookup("P5");
  DivisorClass q = parse_divisor_expr(*e, "2H");
  HypothesisReport rep = check_hypotheses(e->fan, {q, q});
  CHECK(rep.fan.all());
  CHECK(rep.all_ample);
  CHECK(rep.dim_x == 3);
  CHECK(rep.minus_kx_nef);
}

TEST_CASE("quintic threefold: the full pipeline counts 2875 lines") {
  const CorpusEntry* e = corpus_lookup("P4");
  DivisorClass x = parse_divisor_expr(*e, "5");
  IHCReport rep = ihc_verdict(e->fan, {x});
  CHECK(rep.generated);
  REQUIRE(rep.classes.size() == 1);
  const ClassReport& cr = rep.classes[0];
  CHECK(cr.verdict == ChernVerdict::NonzeroCount);
  CHECK(cr.count == 2875);
  CHECK(cr.expected_fano_dim == 0);
  CHECK(cr.inequality1);
  CHECK(cr.rank_m == 6);
  CHECK(cr.dim_gr == 6);
}

TEST_CASE("anticanonical hypersurface on the blow-up of P4: both classes counted") {
  const CorpusEntry* e = corpus_lookup("BlP4_line");
  DivisorClass x = parse_divisor_expr(*e, "5H-2E");
  IHCReport rep = ihc_verdict(e->fan, {x});
  CHECK(rep.generated);
  CHECK(rep.lattice_generated);
  CHECK(rep.semigroup_generated);

  const ClassReport* e_cl = report_for(rep, int_vec({1, 1, 1, 0, 0, -1}));
  REQUIRE(e_cl);
  CHECK(e_cl->verdict == ChernVerdict::NonzeroCount);
  CHECK(e_cl->count == 18);
  CHECK(e_cl->expected_fano_dim == 0);
  CHECK(e_cl->inequality1);

  const ClassReport* he_cl = report_for(rep, int_vec({0, 0, 0, 1, 1, 1}));
  REQUIRE(he_cl);
  CHECK(he_cl->verdict == ChernVerdict::NonzeroCount);
  CHECK(he_cl->count == 186);
  CHECK(he_cl->expected_fano_dim == 0);
  CHECK(he_cl->inequality1);
  // the degree bound holds with equality here: (e-1) + dim E = dim Y + d - 1
  CHECK(2 + he_cl->dim_exc == 4 + 3 - 1);

  // the non-extremal wall class h stays candidate-only and contributes nothing
  const ClassReport* h_cl = report_for(rep, int_vec({1, 1, 1, 1, 1, 0}));
  REQUIRE(h_cl);
  CHECK_FALSE(h_cl->has_structure);
  CHECK(h_cl->verdict == ChernVerdict::NotComputed);
}

TEST_CASE("general-type example: theorem hypotheses fail, containment still certified") {
  const CorpusEntry* e = corpus_lookup("BlP6_P3");
  DivisorClass x = parse_divisor_expr(*e, "8H-2E");
  IHCReport rep = ihc_verdict(e->fan, {x});
  CHECK_FALSE(rep.generated);

  const ClassReport* e_cl = report_for(rep, int_vec({1, 1, 1, 0, 0, 0, 0, -1}));
  REQUIRE(e_cl);
  CHECK(e_cl->cor_hypothesis);  // -K_X . e = 0
  CHECK(e_cl->contained);
  CHECK(e_cl->verdict == ChernVerdict::NonzeroPositiveDim);
  CHECK(e_cl->fiber_schubert_nonneg);

  const ClassReport* he_cl = report_for(rep, int_vec({0, 0, 0, 1, 1, 1, 1, 1}));
  REQUIRE(he_cl);
  CHECK(he_cl->minus_kx_degree == -1);
  CHECK_FALSE(he_cl->cor_hypothesis);
  CHECK(he_cl->degrees[0] == 6);
  CHECK(he_cl->rank_m == 7);
  CHECK(he_cl->dim_gr == 8);
  CHECK(he_cl->expected_fano_dim == 1);
  CHECK(he_cl->contained);
  CHECK(he_cl->verdict == ChernVerdict::NonzeroPositiveDim);
}

TEST_CASE("effective decompositions on the blow-up of P4") {
  const CorpusEntry* entry = corpus_lookup("BlP4_line");
  CurveClass e = entry->curves[1].second;
  CurveClass he = entry->curves[2].second;
  CurveClass h = entry->curves[0].second;
  std::vector<CurveClass> gens{e, he};

  SUBCASE("a generator decomposes as itself") {
    Decomposition d = decompose_effective(entry->fan, e, gens);
    REQUIRE(d.found);
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].first == e);
    CHECK(d.terms[0].second == 1);
  }

  SUBCASE("h = (h-e) + e") {
    Decomposition d = decompose_effective(entry->fan, h, gens);
    REQUIRE(d.found);
    Int ce = 0, che = 0;
    for (const auto& [cls, m] : d.terms) {
      if (cls == e) ce = m;
      if (cls == he) che = m;
    }
    CHECK(ce == 1);
    CHECK(che == 1);
  }

  SUBCASE("2h + 3e = 2(h-e) + 5e") {
    CurveClass target;
    target.dots.assign(6, Int(0));
    for (int i = 0; i < 6; ++i) target.dots[i] = 2 * h.dots[i] + 3 * e.dots[i];
    Decomposition d = decompose_effective(entry->fan, target, gens);
    REQUIRE(d.found);
    Int ce = 0, che = 0;
    for (const auto& [cls, m] : d.terms) {
      if (cls == e) ce = m;
      if (cls == he) che = m;
    }
    CHECK(ce == 5);
    CHECK(che == 2);
  }

  SUBCASE("targets outside the effective cone are reported, not crashed") {
    CurveClass neg;
    neg.dots.assign(6, Int(0));
    for (int i = 0; i < 6; ++i) neg.dots[i] = -h.dots[i];
    Decomposition d = decompose_effective(entry->fan, neg, gens);
    CHECK_FALSE(d.found);
  }

  SUBCASE("vectors outside the curve lattice are an error") {
    CurveClass bogus;
    bogus.dots.assign(6, Int(0));
    bogus.dots[0] = 1;  // not in the kernel of the transposed ray matrix
    CHECK_THROWS_AS(decompose_effective(entry->fan, bogus, gens), StructuralError);
  }
}

TEST_CASE("two-step blow-up: the exceptional cubic surface carries 27 lines") {
  const CorpusEntry* e = corpus_lookup("BlBlP4");
  DivisorClass x = anticanonical(e->fan);
  IHCReport rep = ihc_verdict(e->fan, {x});
  // -K_Y is not ample here, so the headline verdict must stay inconclusive
  CHECK_FALSE(rep.hypotheses.all_ample);
  CHECK_FALSE(rep.generated);
  // ... but the class of a line in the exceptional P3 of the point blow-up
  // restricts -K_Y to a cubic surface, and the count is the classical 27
  const ClassReport* cubic = report_for(rep, int_vec({1, 1, 0, 1, 0, 1, -1}));
  REQUIRE(cubic);
  CHECK(cubic->verdict == ChernVerdict::NonzeroCount);
  CHECK(cubic->count == 27);
  // classes the hypersurface meets nonpositively get no certificate
  const ClassReport* flop = report_for(rep, int_vec({0, 0, 1, -1, 0, -2, 1}));
  REQUIRE(flop);
  CHECK(flop->has_structure);
  CHECK(flop->verdict == ChernVerdict::NotComputed);
  CHECK_FALSE(flop->contained);
}

TEST_CASE("random Fano blow-up generator is deterministic and in-hypothesis") {
  Fan a = random_fano_blowup(4, 2, 99);
  Fan b = random_fano_blowup(4, 2, 99);
  CHECK(a.rays == b.rays);
  CHECK(a.max_cones == b.max_cones);
  CHECK(is_ample(anticanonical(a), a));
  FanValidation v = validate_fan(a);
  CHECK(v.all());
}

TEST_CASE("property suite sample: blown-up Fanos with X = -K_Y") {
  // a small slice of the acceptance-scale suite
  int checked = 0;
  for (unsigned long seed = 1; seed <= 5; ++seed) {
    for (int n = 4; n <= 5; ++n) {
      Fan fan = random_fano_blowup(n, 2, seed);
      DivisorClass x = anticanonical(fan);
      IHCReport rep = ihc_verdict(fan, {x});
      CHECK(rep.hypotheses.core_pass());
      CHECK(rep.hypotheses.minus_kx_nef);
      for (const auto& cr : rep.classes) {
        if (!cr.has_structure) continue;
        CHECK(cr.cor_hypothesis);
        CHECK(cr.inequality1);
        CHECK(cr.expected_fano_dim >= 0);
        CHECK(cr.verdict != ChernVerdict::Zero);
        CHECK(cr.verdict != ChernVerdict::RankOverflow);
        CHECK(cr.contained);
        ++checked;
      }
      CHECK(rep.generated);
    }
  }
  CHECK(checked > 0);
}
