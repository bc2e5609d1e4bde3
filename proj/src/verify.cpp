#include "toric/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "toric/chern.hpp"
#include "toric/corpus.hpp"
#include "toric/simplex.hpp"

namespace toric {

std::string to_string(ChernVerdict v) {
  switch (v) {
    case ChernVerdict::NonzeroCount: return "nonzero-count";
    case ChernVerdict::NonzeroPositiveDim: return "nonzero-positive-dim";
    case ChernVerdict::RankOverflow: return "rank-overflow";
    case ChernVerdict::Zero: return "zero";
    case ChernVerdict::NotComputed: return "not-computed";
  }
  return "?";
}

HypothesisReport check_hypotheses(const Fan& fan,
                                  const std::vector<DivisorClass>& hypersurfaces) {
  HypothesisReport rep;
  rep.fan = validate_fan(fan);
  if (!rep.fan.structurally_valid || !rep.fan.smooth || !rep.fan.complete) return rep;

  rep.all_ample = !hypersurfaces.empty();
  for (const auto& h : hypersurfaces) {
    bool a = is_ample(h, fan);
    rep.ample.push_back(a);
    rep.all_ample = rep.all_ample && a;
  }
  rep.dim_x = fan.dim() - static_cast<int>(hypersurfaces.size());
  rep.dim_ok = rep.dim_x >= 3;

  DivisorClass adjoint = anticanonical(fan);  // -K_Y - sum H_i
  for (const auto& h : hypersurfaces)
    for (int i = 0; i < fan.ray_count(); ++i) adjoint.coeffs[i] -= h.coeffs[i];
  rep.minus_kx_nef = true;
  for (const auto& c : wall_classes(fan)) {
    if (intersect(adjoint, c) < 0) {
      rep.minus_kx_nef = false;
      rep.nef_violations.push_back(c);
    }
  }
  return rep;
}

ClassReport verify_class(const Fan& fan, const std::vector<DivisorClass>& hypersurfaces,
                         const ContractibleCandidate& cand) {
  ClassReport rep;
  rep.candidate = cand;

  DivisorClass adjoint = anticanonical(fan);
  for (const auto& h : hypersurfaces)
    for (int i = 0; i < fan.ray_count(); ++i) adjoint.coeffs[i] -= h.coeffs[i];
  rep.minus_kx_degree = intersect(adjoint, cand.curve_class);
  rep.cor_hypothesis = rep.minus_kx_degree >= 0;

  if (cand.status != CandidateStatus::VerifiedContractible) return rep;
  auto cs = build_contraction(fan, cand);
  if (!cs) throw InternalError("verified candidate failed to rebuild");
  rep.has_structure = true;
  rep.kind = cs->kind;
  rep.dim_exc = cs->dim_exc;
  rep.dim_base = cs->dim_base;

  bool all_ample = !hypersurfaces.empty();
  bool degrees_positive = true;
  Int degree_sum = 0;
  for (const auto& h : hypersurfaces) {
    Int d = intersect(h, cand.curve_class);
    bool ample = is_ample(h, fan);
    all_ample = all_ample && ample;
    if (ample && d < 1) throw InternalError("ample hypersurface with nonpositive degree");
    degrees_positive = degrees_positive && d >= 1;
    rep.degrees.push_back(d);
    degree_sum += d;
  }

  // adjunction identity: -K_X . gamma = e - sum a_i - sum d_i
  Int negsum = 0;
  for (const Int& a : cand.negative_multiplicities) negsum += a;
  if (rep.minus_kx_degree != Int(cand.e) - negsum - degree_sum)
    throw InternalError("adjunction bookkeeping failed");

  // dim F + dim E >= dim Y + sum d_i - 1
  rep.inequality1 =
      Int(cs->fiber_dim) + Int(rep.dim_exc) >= Int(fan.dim()) + degree_sum - 1;

  // the section-bundle argument needs positive relative degrees; hypersurfaces
  // of degree <= 0 on the class (possible only when they are not ample) give
  // no containment certificate at all
  if (!degrees_positive) return rep;

  rep.dim_gr = cs->dim_base + 2 * (cs->e - 2);
  Int rank = degree_sum + Int(hypersurfaces.size());
  rep.rank_m = static_cast<int>(rank.get_si());
  rep.expected_fano_dim = rep.dim_gr - rep.rank_m;
  // under the theorem hypotheses the expected dimension cannot be negative
  if (all_ample && rep.cor_hypothesis &&
      fan.dim() >= static_cast<int>(hypersurfaces.size()) + 3 &&
      (!rep.inequality1 || rep.expected_fano_dim < 0))
    throw InternalError("degree-bound inequality violated under the hypotheses");
  if (rank > rep.dim_gr) {
    rep.verdict = ChernVerdict::RankOverflow;
    return rep;
  }

  auto rd = restriction_data(fan, *cs, hypersurfaces);
  for (std::size_t i = 0; i < rd.size(); ++i) {
    if (rd[i].d != rep.degrees[i])
      throw InternalError("fan-side and Chow-side degrees disagree");
  }

  GrassmannBundleRing ring(cs->base_ring, cs->e, cs->chern_of_e);
  std::vector<BundleSummand> summands;
  for (const auto& datum : rd)
    summands.push_back({static_cast<int>(datum.d.get_si()), datum.ell_class});
  ChernPolynomial m = section_bundle(ring, summands);
  if (m.rank != rep.rank_m) throw InternalError("rank bookkeeping failed");

  TopChernResult top = top_chern_nonzero(ring, m);
  switch (top.status) {
    case TopChernStatus::Zero:
      rep.verdict = ChernVerdict::Zero;
      break;
    case TopChernStatus::RankOverflow:
      rep.verdict = ChernVerdict::RankOverflow;
      break;
    case TopChernStatus::NonzeroCount:
      rep.verdict = ChernVerdict::NonzeroCount;
      rep.count = top.count;
      if (rep.count < 0) throw InternalError("negative line count");
      break;
    case TopChernStatus::NonzeroPositiveDim:
      rep.verdict = ChernVerdict::NonzeroPositiveDim;
      rep.fiber_schubert_nonneg = top.fiber_witness.nonnegative();
      break;
  }
  rep.contained = rep.verdict == ChernVerdict::NonzeroCount ||
                  rep.verdict == ChernVerdict::NonzeroPositiveDim;
  return rep;
}

Decomposition decompose_effective(const Fan& fan, const CurveClass& target,
                                  const std::vector<CurveClass>& generators) {
  Decomposition out;
  IntVec tcoords = curve_class_coordinates(fan, target);  // throws when not a class

  std::vector<IntVec> wall_coords;
  for (const auto& w : wall_classes(fan))
    wall_coords.push_back(curve_class_coordinates(fan, w));
  if (!in_cone(wall_coords, tcoords)) {
    out.note = "target lies outside the effective cone";
    return out;
  }
  if (generators.empty()) {
    out.note = "no generators";
    return out;
  }

  std::vector<IntVec> gcoords;
  for (const auto& g : generators) gcoords.push_back(curve_class_coordinates(fan, g));
  std::size_t dim = tcoords.size();

  // search bound: l-infinity norm of a rational solution, plus slack
  IntMat gm(dim, gcoords.size());
  for (std::size_t j = 0; j < gcoords.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) gm(i, j) = gcoords[j][i];
  long bound = 16;
  if (auto sol = solve_rational(gm, tcoords)) {
    for (const Rat& x : *sol) {
      Rat a = abs(x);
      long ceil_a = static_cast<long>(mpz_class(a.get_num() / a.get_den() + 1).get_si());
      bound = std::max(bound, ceil_a + 16);
    }
  }

  std::vector<Int> coeffs(gcoords.size(), Int(0));
  IntVec residual = tcoords;
  std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
    bool zero = true;
    for (const Int& x : residual)
      if (x != 0) zero = false;
    if (zero) return true;
    if (idx == gcoords.size()) return false;
    // prune: the residual must stay inside the rational cone of the rest
    std::vector<IntVec> rest(gcoords.begin() + idx, gcoords.end());
    if (!in_cone(rest, residual)) return false;
    for (long m = 0; m <= bound; ++m) {
      if (m > 0)
        for (std::size_t i = 0; i < dim; ++i) residual[i] -= gcoords[idx][i];
      if (dfs(idx + 1)) {
        coeffs[idx] = m;
        return true;
      }
    }
    for (std::size_t i = 0; i < dim; ++i) residual[i] += bound * gcoords[idx][i];
    return false;
  };
  if (dfs(0)) {
    out.found = true;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (coeffs[j] != 0) out.terms.emplace_back(generators[j], coeffs[j]);
    // round trip
    IntVec check(dim, Int(0));
    for (std::size_t j = 0; j < generators.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) check[i] += coeffs[j] * gcoords[j][i];
    if (check != tcoords) throw InternalError("decomposition round-trip failed");
  } else {
    out.note = "no decomposition within the search bound";
  }
  return out;
}

IHCReport ihc_verdict(const Fan& fan, const std::vector<DivisorClass>& hypersurfaces) {
  IHCReport rep;
  rep.hypotheses = check_hypotheses(fan, hypersurfaces);
  if (!rep.hypotheses.fan.all()) return rep;

  auto cands = enumerate_candidates(fan);
  rep.classes.resize(cands.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cands.size()); ++i) {
    try {
      rep.classes[i] = verify_class(fan, hypersurfaces, cands[i]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  // generating set: verified classes that the containment result certifies
  std::vector<CurveClass> gen_set;
  for (const auto& cr : rep.classes)
    if (cr.has_structure && cr.contained && cr.cor_hypothesis)
      gen_set.push_back(cr.candidate.curve_class);

  // Smith check that the generating set spans the curve lattice over Z
  rep.lattice_generated = false;
  if (!gen_set.empty()) {
    std::vector<IntVec> coords;
    for (const auto& g : gen_set) coords.push_back(curve_class_coordinates(fan, g));
    IntMat m(coords[0].size(), coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
      for (std::size_t i = 0; i < coords[0].size(); ++i) m(i, j) = coords[j][i];
    SmithResult s = smith_normal_form(m);
    rep.lattice_generated = s.rank == coords[0].size();
    for (std::size_t i = 0; i < s.rank; ++i)
      if (s.d(i, i) != 1) rep.lattice_generated = false;
  }

  rep.generated = rep.hypotheses.core_pass() && rep.lattice_generated;

  // semigroup statement: every wall class decomposes over the generating set
  rep.semigroup_generated = true;
  for (const auto& w : wall_classes(fan)) {
    Decomposition d = decompose_effective(fan, w, gen_set);
    rep.semigroup_generated = rep.semigroup_generated && d.found;
    rep.wall_decompositions.emplace_back(w, std::move(d));
  }
  return rep;
}

Fan random_fano_blowup(int n, int max_blowups, unsigned long seed) {
  std::mt19937_64 rng(seed);
  Fan fan = projective_space(n);
  for (int step = 0; step < max_blowups; ++step) {
    // collect candidate centers: faces of maximal cones of dimension >= 2
    std::vector<std::vector<int>> faces;
    std::set<std::vector<int>> seen;
    for (const auto& mc : fan.max_cones) {
      int sz = static_cast<int>(mc.size());
      for (int mask = 1; mask < (1 << sz); ++mask) {
        std::vector<int> face;
        for (int b = 0; b < sz; ++b)
          if (mask & (1 << b)) face.push_back(mc[b]);
        if (face.size() < 2) continue;
        if (seen.insert(face).second) faces.push_back(face);
      }
    }
    std::shuffle(faces.begin(), faces.end(), rng);
    bool blown = false;
    for (const auto& face : faces) {
      Fan next = star_subdivide(fan, face);
      if (is_ample(anticanonical(next), next)) {
        fan = std::move(next);
        blown = true;
        break;
      }
    }
    if (!blown) break;
  }
  return fan;
}

}  // namespace toric
