#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/simplex.hpp"

namespace toric {

IntMat Fan::ray_matrix_cols() const {
  IntMat m(dim(), ray_count());
  for (int j = 0; j < ray_count(); ++j)
    for (int i = 0; i < dim(); ++i) m(i, j) = rays[j][i];
  return m;
}

bool Fan::is_cone(const std::vector<int>& ray_set) const {
  for (const auto& mc : max_cones) {
    if (std::includes(mc.begin(), mc.end(), ray_set.begin(), ray_set.end()))
      return true;
  }
  return false;
}

namespace {

std::string validate_structure(const Fan& fan, int min_rank) {
  std::size_t n = static_cast<std::size_t>(fan.dim());
  if (static_cast<int>(n) < min_rank)
    return "lattice rank must be at least " + std::to_string(min_rank);
  if (fan.rays.empty() && n > 0) return "fan has no rays";
  for (const auto& r : fan.rays) {
    if (r.size() != n) return "rays of mixed dimension";
    Int g = vec_gcd(r);
    if (g == 0) return "zero ray";
    if (g != 1) return "non-primitive ray";
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    for (std::size_t j = i + 1; j < fan.rays.size(); ++j)
      if (fan.rays[i] == fan.rays[j]) return "duplicate ray";
  if (fan.max_cones.empty()) return "no maximal cones";
  std::vector<bool> used(fan.rays.size(), false);
  for (const auto& mc : fan.max_cones) {
    if (mc.size() != n) return "maximal cone is not full-dimensional simplicial";
    for (std::size_t k = 0; k < mc.size(); ++k) {
      if (mc[k] < 0 || mc[k] >= fan.ray_count()) return "cone index out of range";
      if (k > 0 && mc[k] <= mc[k - 1]) return "cone indices not strictly increasing";
      used[mc[k]] = true;
    }
  }
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i)
    for (std::size_t j = i + 1; j < fan.max_cones.size(); ++j)
      if (fan.max_cones[i] == fan.max_cones[j]) return "duplicate maximal cone";
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) return "ray not used by any maximal cone";
  return "";
}

Int cone_det(const Fan& fan, const std::vector<int>& mc) {
  std::size_t n = mc.size();
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = fan.rays[mc[i]][j];
  return det(m);
}

// facet -> list of adjacent maximal cones
std::map<std::vector<int>, std::vector<int>> facet_map(const Fan& fan) {
  std::map<std::vector<int>, std::vector<int>> facets;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& mc = fan.max_cones[c];
    for (std::size_t omit = 0; omit < mc.size(); ++omit) {
      std::vector<int> f;
      f.reserve(mc.size() - 1);
      for (std::size_t k = 0; k < mc.size(); ++k)
        if (k != omit) f.push_back(mc[k]);
      facets[f].push_back(static_cast<int>(c));
    }
  }
  return facets;
}

bool check_complete(const Fan& fan) {
  for (const auto& [facet, cones] : facet_map(fan))
    if (cones.size() != 2) return false;
  return true;
}

bool check_smooth(const Fan& fan) {
  for (const auto& mc : fan.max_cones) {
    Int d = cone_det(fan, mc);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

std::vector<Wall> walls_unchecked(const Fan& fan) {
  std::vector<Wall> walls;
  for (const auto& [facet, cones] : facet_map(fan)) {
    if (cones[0] >= cones[1]) throw InternalError("facet map order");
    const auto& ca = fan.max_cones[cones[0]];
    const auto& cb = fan.max_cones[cones[1]];
    int ua = -1, ub = -1;
    for (int r : ca)
      if (!std::binary_search(facet.begin(), facet.end(), r)) ua = r;
    for (int r : cb)
      if (!std::binary_search(facet.begin(), facet.end(), r)) ub = r;
    // unique relation among the n+1 rays of the two cones
    std::vector<int> support = facet;
    support.push_back(ua);
    support.push_back(ub);
    std::sort(support.begin(), support.end());
    std::size_t n = fan.rays[0].size();
    IntMat m(n, support.size());
    for (std::size_t j = 0; j < support.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = fan.rays[support[j]][i];
    auto kernel = integer_kernel(m);
    if (kernel.size() != 1) throw InternalError("wall relation not unique");
    IntVec rel = kernel[0];
    auto idx_of = [&](int ray) {
      return std::lower_bound(support.begin(), support.end(), ray) - support.begin();
    };
    if (rel[idx_of(ua)] < 0)
      for (auto& x : rel) x = -x;
    if (rel[idx_of(ua)] != 1 || rel[idx_of(ub)] != 1)
      throw InternalError("wall relation not +1-normalized on a smooth fan");
    Wall w;
    w.cone_a = cones[0];
    w.cone_b = cones[1];
    w.shared = facet;
    w.relation.dots.assign(fan.ray_count(), Int(0));
    for (std::size_t j = 0; j < support.size(); ++j)
      w.relation.dots[support[j]] = rel[j];
    walls.push_back(std::move(w));
  }
  return walls;
}

bool check_projective(const Fan& fan) {
  // A strictly convex support function exists iff some divisor is positive on
  // every wall relation; scale-invariant, so demand value >= 1.
  std::set<CurveClass> classes;
  for (const auto& w : walls_unchecked(fan)) classes.insert(w.relation);
  std::vector<RatVec> rows;
  RatVec rhs;
  for (const auto& c : classes) {
    RatVec row(c.dots.size());
    for (std::size_t i = 0; i < c.dots.size(); ++i) row[i] = Rat(c.dots[i]);
    rows.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  return feasible_ineq_free(rows, rhs);
}

}  // namespace

FanValidation validate_fan(const Fan& fan, int min_rank) {
  FanValidation v;
  v.error = validate_structure(fan, min_rank);
  v.structurally_valid = v.error.empty();
  if (!v.structurally_valid) return v;
  v.smooth = check_smooth(fan);
  v.complete = check_complete(fan);
  v.projective = (v.smooth && v.complete) ? check_projective(fan) : false;
  return v;
}

std::vector<Wall> walls_and_relations(const Fan& fan) {
  FanValidation v = validate_fan(fan);
  if (!v.structurally_valid) throw StructuralError(v.error);
  if (!v.smooth || !v.complete)
    throw StructuralError("walls require a smooth complete fan");
  return walls_unchecked(fan);
}

std::vector<CurveClass> wall_classes(const Fan& fan) {
  // assumes smooth + complete; callers on untrusted fans validate first
  std::set<CurveClass> seen;
  for (const auto& w : walls_unchecked(fan)) seen.insert(w.relation);
  return {seen.begin(), seen.end()};
}

Int intersect(const DivisorClass& d, const CurveClass& c) {
  if (d.coeffs.size() != c.dots.size())
    throw StructuralError("divisor/curve dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) s += d.coeffs[i] * c.dots[i];
  return s;
}

DivisorClass anticanonical(const Fan& fan) {
  return DivisorClass{IntVec(fan.ray_count(), Int(1))};
}

bool is_nef(const DivisorClass& d, const Fan& fan) {
  for (const auto& c : wall_classes(fan))
    if (intersect(d, c) < 0) return false;
  return true;
}

bool is_ample(const DivisorClass& d, const Fan& fan) {
  for (const auto& c : wall_classes(fan))
    if (intersect(d, c) <= 0) return false;
  return true;
}

bool same_divisor_class(const Fan& fan, const DivisorClass& a, const DivisorClass& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  IntVec diff(a.coeffs.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.coeffs[i] - b.coeffs[i];
  // diff = rays^T m for some m in M
  IntMat rt = fan.ray_matrix_cols().transposed();
  return solve_integer(rt, diff).has_value();
}

std::vector<IntVec> curve_lattice_basis(const Fan& fan) {
  return integer_kernel(fan.ray_matrix_cols());
}

IntVec curve_class_coordinates(const Fan& fan, const CurveClass& c) {
  auto basis = curve_lattice_basis(fan);
  IntMat m(c.dots.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < c.dots.size(); ++i) m(i, j) = basis[j][i];
  auto sol = solve_integer(m, c.dots);
  if (!sol) throw StructuralError("vector is not a curve class of this fan");
  return *sol;
}

CurveClass curve_class_from_coordinates(const Fan& fan, const IntVec& coords) {
  auto basis = curve_lattice_basis(fan);
  if (coords.size() != basis.size()) throw StructuralError("coordinate size");
  CurveClass c;
  c.dots.assign(fan.ray_count(), Int(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < c.dots.size(); ++i)
      c.dots[i] += coords[j] * basis[j][i];
  return c;
}

Fan star_subdivide(const Fan& fan, const std::vector<int>& cone_rays) {
  std::vector<int> tau = cone_rays;
  std::sort(tau.begin(), tau.end());
  if (tau.size() < 2) throw StructuralError("star subdivision needs a cone of dimension >= 2");
  if (!fan.is_cone(tau)) throw StructuralError("not a cone of the fan");
  Fan out;
  out.rank = fan.dim();
  out.rays = fan.rays;
  IntVec y(fan.rays[0].size(), Int(0));
  for (int r : tau)
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += fan.rays[r][i];
  int yi = out.ray_count();
  out.rays.push_back(y);
  for (const auto& mc : fan.max_cones) {
    bool contains = std::includes(mc.begin(), mc.end(), tau.begin(), tau.end());
    if (!contains) {
      out.max_cones.push_back(mc);
      continue;
    }
    for (int omit : tau) {
      std::vector<int> nc;
      for (int r : mc)
        if (r != omit) nc.push_back(r);
      nc.push_back(yi);
      std::sort(nc.begin(), nc.end());
      out.max_cones.push_back(nc);
    }
  }
  std::sort(out.max_cones.begin(), out.max_cones.end());
  return out;
}

}  // namespace toric
