#pragma once
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/rational.hpp"

namespace toric {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Torus-invariant divisor class, one coefficient per ray.
struct DivisorClass {
  IntVec coeffs;
  bool operator==(const DivisorClass&) const = default;
};

/// Curve class in the ray-indexed form: entry rho = D_rho . C.
struct CurveClass {
  IntVec dots;
  bool operator==(const CurveClass&) const = default;
  bool operator<(const CurveClass& o) const { return dots < o.dots; }
};

/// Complete smooth simplicial fan: primitive rays plus maximal cones given as
/// sorted ray-index sets of size n. rank = -1 means "infer from the rays";
/// the fan of a point has rank 0, no rays and one empty cone.
struct Fan {
  int rank = -1;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> max_cones;

  int dim() const {
    if (rank >= 0) return rank;
    return rays.empty() ? 0 : static_cast<int>(rays[0].size());
  }
  int ray_count() const { return static_cast<int>(rays.size()); }
  int picard_rank() const { return ray_count() - dim(); }

  /// n x R matrix whose columns are the ray generators.
  IntMat ray_matrix_cols() const;

  /// ray_set must be sorted ascending.
  bool is_cone(const std::vector<int>& ray_set) const;
};

struct Wall {
  int cone_a = -1, cone_b = -1;
  std::vector<int> shared;   // the n-1 common rays
  CurveClass relation;       // normalized: +1 at both non-shared rays
};

struct FanValidation {
  bool structurally_valid = false;
  bool smooth = false;
  bool complete = false;
  bool projective = false;
  std::string error;  // first structural problem, if any

  bool all() const { return structurally_valid && smooth && complete && projective; }
};

/// Structural checks only; throws nothing. Smooth/complete/projective flags are
/// meaningful only when structurally_valid. Lattice ranks below min_rank are a
/// structural error; contraction bases may legitimately have rank 0 or 1.
FanValidation validate_fan(const Fan& fan, int min_rank = 2);

/// All walls with their normalized relations. Requires smooth + complete.
std::vector<Wall> walls_and_relations(const Fan& fan);

/// Distinct wall-relation classes, deterministically ordered.
std::vector<CurveClass> wall_classes(const Fan& fan);

Int intersect(const DivisorClass& d, const CurveClass& c);

DivisorClass anticanonical(const Fan& fan);

bool is_nef(const DivisorClass& d, const Fan& fan);
bool is_ample(const DivisorClass& d, const Fan& fan);

/// Linear equivalence: difference lies in the image of M -> Z^rays.
bool same_divisor_class(const Fan& fan, const DivisorClass& a, const DivisorClass& b);

/// Curve lattice: saturated kernel of the transposed ray matrix, canonical basis.
std::vector<IntVec> curve_lattice_basis(const Fan& fan);

/// Coordinates of a curve class in curve_lattice_basis; error if not in lattice.
IntVec curve_class_coordinates(const Fan& fan, const CurveClass& c);

CurveClass curve_class_from_coordinates(const Fan& fan, const IntVec& coords);

/// Star subdivision at the sum of the generators of `cone_rays` (smooth blow-up
/// of the orbit closure V(cone)).
Fan star_subdivide(const Fan& fan, const std::vector<int>& cone_rays);

}  // namespace toric
