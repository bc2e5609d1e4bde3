#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/chow.hpp"
#include "toric/fan.hpp"

namespace toric {

enum class CandidateStatus { VerifiedContractible, ExtremalContractible, CandidateOnly };

std::string to_string(CandidateStatus s);

/// Wall-relation class whose positive coefficients are all 1.
struct ContractibleCandidate {
  CurveClass curve_class;
  std::vector<int> positive_rays;       // rays with coefficient +1
  std::vector<int> negative_rays;       // rays with negative coefficient
  IntVec negative_multiplicities;       // a_i >= 1, aligned with negative_rays
  int e = 0;                            // number of positive rays
  int r = 0;                            // number of negative rays
  bool extremal = false;
  CandidateStatus status = CandidateStatus::CandidateOnly;
};

enum class ContractionKind { FiberType, Birational };

/// The bundle data of a contraction: exceptional locus E = P(E) -> B together
/// with zeta (the relative hyperplane class, degree 1 on contracted curves)
/// and the Chern classes of E in the normalization O_{P(E)}(1) = zeta.
struct ContractionStructure {
  ContractionKind kind = ContractionKind::FiberType;
  int e = 0, r = 0;
  Fan exc_fan;   // E; equals the ambient fan when fiber type
  Fan base_fan;  // B

  // ray-level map data
  std::vector<int> sigma_rays;           // ambient rays spanning sigma (empty if fiber type)
  std::vector<int> exc_ray_of_ambient;   // ambient ray -> E ray (-1 if absent)
  std::vector<int> base_ray_of_exc;      // E ray -> B ray (-1 for fiber rays)
  IntMat ambient_to_exc;                 // lattice projection N -> N(sigma)
  IntMat exc_to_base;                    // lattice projection N(sigma) -> N_B

  std::vector<int> fiber_rays;           // E-ray indices, images of the positive rays
  int zeta_ray = -1;                     // E-ray index of the lowest positive ray

  // line-bundle decomposition: D_{v_i} = zeta + q^*(twist_i) on E
  std::vector<DivisorClass> fiber_twists;  // on B, aligned with fiber_rays

  std::shared_ptr<const ToricChowRing> base_ring;
  std::vector<ChowElt> chern_of_e;       // c_1..c_e of E on the base
  int fiber_dim = 0;                     // e - 1
  int dim_exc = 0, dim_base = 0;

  /// Contracted curve class expressed on E (fiber line of E -> B).
  CurveClass curve_on_exc() const;
  DivisorClass zeta() const;
};

struct RestrictionDatum {
  Int d;                 // relative degree
  DivisorClass ell;      // degree-1 class on B with H|_E = d zeta + q^* ell
  ChowElt ell_class;     // same class in the base ring
};

std::vector<ContractibleCandidate> enumerate_candidates(const Fan& fan);

/// Constructive bundle verification; nullopt when the combinatorial
/// P^{e-1}-bundle check fails (candidate stays candidate-only).
std::optional<ContractionStructure> build_contraction(const Fan& fan,
                                                      const ContractibleCandidate& cand);

std::vector<RestrictionDatum> restriction_data(const Fan& fan,
                                               const ContractionStructure& cs,
                                               const std::vector<DivisorClass>& hypersurfaces);

/// Restriction of an ambient divisor class to the exceptional locus, as a
/// divisor class on exc_fan (rays of sigma eliminated by linear equivalence).
DivisorClass restrict_divisor(const Fan& fan, const ContractionStructure& cs,
                              const DivisorClass& d);

/// Divisor b on the base pulled back to E, ray level.
DivisorClass pullback_divisor(const ContractionStructure& cs, const DivisorClass& b);

}  // namespace toric
