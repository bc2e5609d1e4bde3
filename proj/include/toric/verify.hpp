#pragma once
#include <optional>
#include <string>
#include <vector>

#include "toric/contraction.hpp"
#include "toric/fan.hpp"

namespace toric {

struct HypothesisReport {
  FanValidation fan;
  std::vector<bool> ample;          // one flag per hypersurface
  bool all_ample = false;
  int dim_x = 0;
  bool dim_ok = false;              // dim X >= 3
  bool minus_kx_nef = false;        // (-K_Y - sum H_i) nef on Y
  std::vector<CurveClass> nef_violations;

  /// The theorem hypotheses other than nefness (which enters per class).
  bool core_pass() const {
    return fan.all() && all_ample && dim_ok;
  }
};

enum class ChernVerdict { NonzeroCount, NonzeroPositiveDim, RankOverflow, Zero, NotComputed };

std::string to_string(ChernVerdict v);

struct ClassReport {
  ContractibleCandidate candidate;
  bool has_structure = false;
  ContractionKind kind = ContractionKind::FiberType;
  int dim_exc = 0, dim_base = 0;
  std::vector<Int> degrees;     // relative degrees d_i
  Int minus_kx_degree = 0;      // -K_X . gamma
  bool cor_hypothesis = false;  // -K_X . gamma >= 0
  bool inequality1 = false;     // dim F + dim E >= dim Y + sum d_i - 1
  long expected_fano_dim = 0;   // dim Gr(2,E) - rank M
  int rank_m = 0, dim_gr = 0;
  ChernVerdict verdict = ChernVerdict::NotComputed;
  Int count = 0;                // line count when the expected dimension is zero
  bool fiber_schubert_nonneg = false;
  bool contained = false;
};

struct Decomposition {
  bool found = false;
  std::string note;
  std::vector<std::pair<CurveClass, Int>> terms;
};

struct IHCReport {
  HypothesisReport hypotheses;
  std::vector<ClassReport> classes;
  bool lattice_generated = false;   // generating set spans H_2 over Z (Smith check)
  bool semigroup_generated = false; // every wall class decomposes over the generating set
  bool generated = false;           // the headline verdict
  std::vector<std::pair<CurveClass, Decomposition>> wall_decompositions;
};

HypothesisReport check_hypotheses(const Fan& fan,
                                  const std::vector<DivisorClass>& hypersurfaces);

ClassReport verify_class(const Fan& fan, const std::vector<DivisorClass>& hypersurfaces,
                         const ContractibleCandidate& cand);

/// Nonnegative-integer decomposition of `target` over `generators`, found by
/// bounded search; a miss after the bound is only a report outcome.
Decomposition decompose_effective(const Fan& fan, const CurveClass& target,
                                  const std::vector<CurveClass>& generators);

IHCReport ihc_verdict(const Fan& fan, const std::vector<DivisorClass>& hypersurfaces);

/// Deterministic random instances for the property suite: iterated
/// torus-invariant blow-ups of P^n that stay Fano, with X = -K_Y.
Fan random_fano_blowup(int n, int max_blowups, unsigned long seed);

}  // namespace toric
