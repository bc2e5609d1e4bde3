#include "toric/contraction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/simplex.hpp"

namespace toric {

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::VerifiedContractible: return "verified-contractible";
    case CandidateStatus::ExtremalContractible: return "extremal-contractible";
    case CandidateStatus::CandidateOnly: return "candidate-only";
  }
  return "?";
}

CurveClass ContractionStructure::curve_on_exc() const {
  CurveClass c;
  c.dots.assign(exc_fan.ray_count(), Int(0));
  for (int v : fiber_rays) c.dots[v] = 1;
  return c;
}

DivisorClass ContractionStructure::zeta() const {
  DivisorClass z;
  z.coeffs.assign(exc_fan.ray_count(), Int(0));
  z.coeffs[zeta_ray] = 1;
  return z;
}

namespace {

/// Projection Z^n -> Z^{n-rho} whose kernel is the saturated span of the
/// given lattice vectors (rho = rank of the span).
IntMat saturated_quotient(const std::vector<IntVec>& span_vecs, int n) {
  IntMat b(n, span_vecs.size());
  for (std::size_t j = 0; j < span_vecs.size(); ++j)
    for (int i = 0; i < n; ++i) b(i, j) = span_vecs[j][i];
  SmithResult s = smith_normal_form(b);
  std::size_t rho = s.rank;
  IntMat p(n - rho, n);
  for (std::size_t i = rho; i < static_cast<std::size_t>(n); ++i)
    for (int j = 0; j < n; ++j) p(i - rho, j) = s.left(i, j);
  return p;
}

bool is_primitive(const IntVec& v) {
  return vec_gcd(v) == 1;
}

/// Solve diff = q^*(b) + div(chi^m) on E; returns the base divisor b.
std::optional<DivisorClass> solve_pullback(const Fan& exc_fan, const Fan& base_fan,
                                           const std::vector<int>& base_ray_of_exc,
                                           const IntVec& diff) {
  int re = exc_fan.ray_count();
  int rb = base_fan.ray_count();
  int ne = exc_fan.dim();
  IntMat m(re, rb + ne);
  for (int rho = 0; rho < re; ++rho) {
    int t = base_ray_of_exc[rho];
    if (t >= 0) m(rho, t) = 1;
    for (int s = 0; s < ne; ++s) m(rho, rb + s) = exc_fan.rays[rho][s];
  }
  auto sol = solve_integer(m, diff);
  if (!sol) return std::nullopt;
  DivisorClass b;
  b.coeffs.assign(sol->begin(), sol->begin() + rb);
  return b;
}

struct BundleParts {
  Fan base_fan;
  std::vector<int> base_ray_of_exc;
  IntMat exc_to_base;
};

/// Combinatorial P^{e-1}-bundle verification over a candidate fiber-ray set.
std::optional<BundleParts> build_bundle(const Fan& exc, const std::vector<int>& fiber) {
  int n = exc.dim();
  int e = static_cast<int>(fiber.size());
  std::set<int> fiber_set(fiber.begin(), fiber.end());

  // the fiber rays must satisfy the single relation "sum = 0" and span rank e-1
  IntVec sum(n, Int(0));
  std::vector<IntVec> span_vecs;
  for (int v : fiber) {
    for (int i = 0; i < n; ++i) sum[i] += exc.rays[v][i];
    span_vecs.push_back(exc.rays[v]);
  }
  for (const Int& x : sum)
    if (x != 0) return std::nullopt;
  IntMat sp(n, e);
  for (int j = 0; j < e; ++j)
    for (int i = 0; i < n; ++i) sp(i, j) = exc.rays[fiber[j]][i];
  if (static_cast<int>(rank_rational(sp)) != e - 1) return std::nullopt;

  IntMat proj = saturated_quotient(span_vecs, n);
  int nb = n - (e - 1);

  // ray images
  std::vector<int> base_ray_of_exc(exc.ray_count(), -1);
  std::vector<IntVec> base_rays;
  std::map<IntVec, int> image_index;
  for (int rho = 0; rho < exc.ray_count(); ++rho) {
    IntVec img = proj.mul_vec(exc.rays[rho]);
    bool zero = true;
    for (const Int& x : img)
      if (x != 0) zero = false;
    if (fiber_set.count(rho)) {
      if (!zero) return std::nullopt;
      continue;
    }
    if (zero || !is_primitive(img)) return std::nullopt;
    if (image_index.count(img)) return std::nullopt;  // two rays over one base ray
    image_index[img] = static_cast<int>(base_rays.size());
    base_ray_of_exc[rho] = static_cast<int>(base_rays.size());
    base_rays.push_back(img);
  }

  // cones: each must contain exactly e-1 fiber rays; the e lifts of a base
  // cone omit each fiber ray once
  std::map<std::vector<int>, std::set<int>> omissions;
  std::set<std::vector<int>> base_cones;
  for (const auto& mc : exc.max_cones) {
    std::vector<int> in_fiber, image;
    for (int rho : mc) {
      if (fiber_set.count(rho)) in_fiber.push_back(rho);
      else image.push_back(base_ray_of_exc[rho]);
    }
    if (static_cast<int>(in_fiber.size()) != e - 1) return std::nullopt;
    int omitted = -1;
    for (int v : fiber)
      if (!std::binary_search(mc.begin(), mc.end(), v)) omitted = v;
    std::sort(image.begin(), image.end());
    if (!omissions[image].insert(omitted).second) return std::nullopt;
    base_cones.insert(image);
  }
  for (const auto& [cone, omitted] : omissions)
    if (static_cast<int>(omitted.size()) != e) return std::nullopt;

  BundleParts parts;
  parts.base_fan.rank = nb;
  parts.base_fan.rays = base_rays;
  parts.base_fan.max_cones.assign(base_cones.begin(), base_cones.end());
  parts.base_ray_of_exc = base_ray_of_exc;
  parts.exc_to_base = proj;
  FanValidation v = validate_fan(parts.base_fan, 0);
  if (!v.structurally_valid || !v.smooth || !v.complete || !v.projective)
    return std::nullopt;
  return parts;
}

}  // namespace

std::vector<ContractibleCandidate> enumerate_candidates(const Fan& fan) {
  FanValidation v = validate_fan(fan, 0);
  if (!v.structurally_valid) throw StructuralError(v.error);
  if (!v.smooth || !v.complete || !v.projective)
    throw StructuralError("candidate enumeration needs a smooth projective fan");

  std::vector<CurveClass> classes = wall_classes(fan);
  std::vector<ContractibleCandidate> out;
  for (const auto& cls : classes) {
    ContractibleCandidate cand;
    cand.curve_class = cls;
    bool positives_ok = true;
    for (int i = 0; i < fan.ray_count(); ++i) {
      const Int& x = cls.dots[i];
      if (x == 0) continue;
      if (x > 0) {
        if (x != 1) { positives_ok = false; break; }
        cand.positive_rays.push_back(i);
      } else {
        cand.negative_rays.push_back(i);
        cand.negative_multiplicities.push_back(-x);
      }
    }
    if (!positives_ok) continue;
    cand.e = static_cast<int>(cand.positive_rays.size());
    cand.r = static_cast<int>(cand.negative_rays.size());

    // extremality in the cone spanned by all wall classes (kernel coordinates)
    std::vector<IntVec> others;
    for (const auto& other : classes) {
      if (other == cls) continue;
      others.push_back(curve_class_coordinates(fan, other));
    }
    cand.extremal = !in_cone(others, curve_class_coordinates(fan, cls));

    if (build_contraction(fan, cand).has_value())
      cand.status = CandidateStatus::VerifiedContractible;
    else if (cand.extremal)
      cand.status = CandidateStatus::ExtremalContractible;
    else
      cand.status = CandidateStatus::CandidateOnly;
    out.push_back(std::move(cand));
  }
  return out;
}

std::optional<ContractionStructure> build_contraction(const Fan& fan,
                                                      const ContractibleCandidate& cand) {
  for (const Int& x : cand.curve_class.dots)
    if (x > 1) throw StructuralError("candidate has a positive coefficient above 1");
  int n = fan.dim();

  ContractionStructure cs;
  cs.e = cand.e;
  cs.r = cand.r;

  if (cand.r == 0) {
    cs.kind = ContractionKind::FiberType;
    cs.exc_fan = fan;
    cs.exc_ray_of_ambient.resize(fan.ray_count());
    for (int i = 0; i < fan.ray_count(); ++i) cs.exc_ray_of_ambient[i] = i;
    cs.ambient_to_exc = IntMat::identity(n);
    cs.fiber_rays = cand.positive_rays;
  } else {
    cs.kind = ContractionKind::Birational;
    std::vector<int> sigma = cand.negative_rays;
    cs.sigma_rays = sigma;
    if (!fan.is_cone(sigma)) return std::nullopt;
    // star fan of sigma
    IntMat proj = saturated_quotient(
        [&] {
          std::vector<IntVec> vs;
          for (int y : sigma) vs.push_back(fan.rays[y]);
          return vs;
        }(),
        n);
    if (static_cast<int>(proj.rows) != n - cand.r) return std::nullopt;
    std::set<int> sigma_set(sigma.begin(), sigma.end());
    std::set<int> star_rays_set;
    std::vector<std::vector<int>> star_cones_ambient;
    for (const auto& mc : fan.max_cones) {
      bool contains = std::includes(mc.begin(), mc.end(), sigma.begin(), sigma.end());
      if (!contains) continue;
      std::vector<int> rest;
      for (int rho : mc)
        if (!sigma_set.count(rho)) rest.push_back(rho);
      star_cones_ambient.push_back(rest);
      for (int rho : rest) star_rays_set.insert(rho);
    }
    if (star_cones_ambient.empty()) return std::nullopt;
    cs.exc_ray_of_ambient.assign(fan.ray_count(), -1);
    std::map<IntVec, int> image_index;
    for (int rho : star_rays_set) {
      IntVec img = proj.mul_vec(fan.rays[rho]);
      if (!is_primitive(img)) return std::nullopt;
      if (image_index.count(img)) return std::nullopt;
      image_index[img] = static_cast<int>(cs.exc_fan.rays.size());
      cs.exc_ray_of_ambient[rho] = static_cast<int>(cs.exc_fan.rays.size());
      cs.exc_fan.rays.push_back(img);
    }
    cs.exc_fan.rank = n - cand.r;
    std::set<std::vector<int>> star_cones;
    for (const auto& rest : star_cones_ambient) {
      std::vector<int> c;
      for (int rho : rest) c.push_back(cs.exc_ray_of_ambient[rho]);
      std::sort(c.begin(), c.end());
      star_cones.insert(c);
    }
    cs.exc_fan.max_cones.assign(star_cones.begin(), star_cones.end());
    cs.ambient_to_exc = proj;
    FanValidation v = validate_fan(cs.exc_fan, 0);
    if (!v.structurally_valid || !v.smooth || !v.complete || !v.projective)
      return std::nullopt;
    for (int p : cand.positive_rays) {
      if (cs.exc_ray_of_ambient[p] < 0) return std::nullopt;
      cs.fiber_rays.push_back(cs.exc_ray_of_ambient[p]);
    }
  }

  auto parts = build_bundle(cs.exc_fan, cs.fiber_rays);
  if (!parts) return std::nullopt;
  cs.base_fan = std::move(parts->base_fan);
  cs.base_ray_of_exc = std::move(parts->base_ray_of_exc);
  cs.exc_to_base = std::move(parts->exc_to_base);
  cs.zeta_ray = cs.fiber_rays[0];  // first listed positive ray (lowest index
                                   // for enumerated candidates)

  cs.fiber_dim = cs.e - 1;
  cs.dim_exc = cs.exc_fan.dim();
  cs.dim_base = cs.base_fan.dim();
  if (cand.r == 0) {
    if (cs.dim_base != n - cs.e + 1) throw InternalError("fiber-type base dimension");
  } else {
    if (cs.dim_exc != n - cs.r || cs.dim_base != n - cs.e - cs.r + 1)
      throw InternalError("birational contraction dimensions");
  }

  // line-bundle decomposition of E: D_{v_i} = zeta + q^*(twist_i)
  cs.base_ring = std::make_shared<ToricChowRing>(cs.base_fan);
  ChowElt total = cs.base_ring->one();
  for (int v : cs.fiber_rays) {
    IntVec diff(cs.exc_fan.ray_count(), Int(0));
    diff[v] += 1;
    diff[cs.zeta_ray] -= 1;
    auto tw = solve_pullback(cs.exc_fan, cs.base_fan, cs.base_ray_of_exc, diff);
    if (!tw) throw InternalError("fiber divisor is not zeta plus a pullback");
    cs.fiber_twists.push_back(*tw);
    total = total * (cs.base_ring->one() + cs.base_ring->divisor(*tw));
  }
  for (int j = 1; j <= cs.e; ++j)
    cs.chern_of_e.push_back(cs.base_ring->component(total, j));
  return cs;
}

DivisorClass restrict_divisor(const Fan& fan, const ContractionStructure& cs,
                              const DivisorClass& d) {
  if (static_cast<int>(d.coeffs.size()) != fan.ray_count())
    throw StructuralError("divisor length mismatch");
  IntVec adj = d.coeffs;
  // move the class off the rays of sigma by subtracting principal divisors
  for (std::size_t j = 0; j < cs.sigma_rays.size(); ++j) {
    int y = cs.sigma_rays[j];
    if (adj[y] == 0) continue;
    IntMat a(cs.sigma_rays.size(), fan.dim());
    for (std::size_t i = 0; i < cs.sigma_rays.size(); ++i)
      for (int t = 0; t < fan.dim(); ++t) a(i, t) = fan.rays[cs.sigma_rays[i]][t];
    IntVec rhs(cs.sigma_rays.size(), Int(0));
    rhs[j] = 1;
    auto m = solve_integer(a, rhs);
    if (!m) throw InternalError("sigma is not a smooth cone");
    Int c = adj[y];
    for (int rho = 0; rho < fan.ray_count(); ++rho) {
      Int pairing = 0;
      for (int t = 0; t < fan.dim(); ++t) pairing += (*m)[t] * fan.rays[rho][t];
      adj[rho] -= c * pairing;
    }
  }
  DivisorClass out;
  out.coeffs.assign(cs.exc_fan.ray_count(), Int(0));
  for (int rho = 0; rho < fan.ray_count(); ++rho) {
    int er = cs.exc_ray_of_ambient[rho];
    if (er >= 0) out.coeffs[er] = adj[rho];
  }
  return out;
}

DivisorClass pullback_divisor(const ContractionStructure& cs, const DivisorClass& b) {
  if (static_cast<int>(b.coeffs.size()) != cs.base_fan.ray_count())
    throw StructuralError("divisor length mismatch");
  DivisorClass out;
  out.coeffs.assign(cs.exc_fan.ray_count(), Int(0));
  for (int rho = 0; rho < cs.exc_fan.ray_count(); ++rho) {
    int t = cs.base_ray_of_exc[rho];
    if (t >= 0) out.coeffs[rho] = b.coeffs[t];
  }
  return out;
}

std::vector<RestrictionDatum> restriction_data(const Fan& fan,
                                               const ContractionStructure& cs,
                                               const std::vector<DivisorClass>& hypersurfaces) {
  std::vector<RestrictionDatum> out;
  for (const auto& h : hypersurfaces) {
    RestrictionDatum rd;
    DivisorClass he = restrict_divisor(fan, cs, h);
    rd.d = intersect(he, cs.curve_on_exc());
    IntVec diff = he.coeffs;
    diff[cs.zeta_ray] -= rd.d;
    auto ell = solve_pullback(cs.exc_fan, cs.base_fan, cs.base_ray_of_exc, diff);
    if (!ell) throw InternalError("restriction is not d*zeta plus a pullback");
    rd.ell = *ell;
    rd.ell_class = cs.base_ring->divisor(rd.ell);
    out.push_back(std::move(rd));
  }
  return out;
}

}  // namespace toric
