#include "toric/chow.hpp"

#include <algorithm>
#include <functional>

namespace toric {

namespace {

void enumerate_cone_monomials(const std::vector<int>& cone, int degree,
                              std::size_t ray_count,
                              std::vector<ToricChowRing::Exponents>& out) {
  // all monomials of `degree` supported on `cone`
  std::vector<int> exps(cone.size(), 0);
  // iterate compositions of degree into cone.size() parts
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == cone.size()) {
      exps[pos] = left;
      ToricChowRing::Exponents e(ray_count, 0);
      for (std::size_t i = 0; i < cone.size(); ++i) e[cone[i]] = exps[i];
      out.push_back(std::move(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      exps[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (!cone.empty()) rec(0, degree);
}

}  // namespace

ToricChowRing::ToricChowRing(Fan fan) : fan_(std::move(fan)), n_(fan_.dim()) {
  FanValidation v = validate_fan(fan_, 0);
  if (!v.structurally_valid) throw StructuralError(v.error);
  if (!v.smooth || !v.complete)
    throw StructuralError("Chow ring requires a smooth complete fan");
  pieces_.resize(n_ + 1);
  for (int k = 0; k <= n_; ++k) build_piece(k);
  // point normalization: the product of the rays of any maximal cone is a
  // point; all cones must agree.
  const Piece& top = pieces_[n_];
  if (top.basis_ids.size() != 1)
    throw InternalError("top graded piece is not one-dimensional");
  Rat scale;
  bool first = true;
  for (const auto& mc : fan_.max_cones) {
    Exponents e(fan_.ray_count(), 0);
    for (int r : mc) e[r] = 1;
    const RatVec& nf = top.nf[top.index.at(e)];
    if (first) {
      scale = nf[0];
      first = false;
    } else if (nf[0] != scale) {
      throw InternalError("point class depends on the chosen maximal cone");
    }
  }
  if (scale == 0) throw InternalError("degenerate point class");
  point_scale_ = 1 / scale;  // integral of the basis monomial
}

void ToricChowRing::build_piece(int k) {
  Piece& p = pieces_[k];
  // face monomials of degree k
  if (k == 0) {
    p.monomials.push_back(Exponents(fan_.ray_count(), 0));
  } else {
    std::vector<Exponents> all;
    for (const auto& mc : fan_.max_cones) enumerate_cone_monomials(mc, k, fan_.ray_count(), all);
    std::sort(all.begin(), all.end(), std::greater<>());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    p.monomials = std::move(all);
  }
  for (std::size_t i = 0; i < p.monomials.size(); ++i) p.index[p.monomials[i]] = static_cast<int>(i);

  if (k == 0) {
    p.basis_ids = {0};
    p.basis_monomials = {p.monomials[0]};
    p.nf = {RatVec{Rat(1)}};
    return;
  }
  // relations: (face monomial of degree k-1) * (linear form), projected
  const Piece& prev = pieces_[k - 1];
  RatMat rel;
  rel.cols = p.monomials.size();
  for (const auto& m : prev.monomials) {
    for (int t = 0; t < n_; ++t) {
      RatVec row(p.monomials.size(), Rat(0));
      bool nonzero = false;
      for (int r = 0; r < fan_.ray_count(); ++r) {
        const Int& c = fan_.rays[r][t];
        if (c == 0) continue;
        Exponents e = m;
        e[r] += 1;
        auto it = p.index.find(e);
        if (it == p.index.end()) continue;  // SR-divisible, zero in the ring
        row[it->second] += Rat(c);
        nonzero = true;
      }
      if (nonzero) rel.r.push_back(std::move(row));
    }
  }
  rel.rows = rel.r.size();
  Echelon ech = rref(std::move(rel));
  std::vector<bool> is_pivot(p.monomials.size(), false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  for (std::size_t i = 0; i < p.monomials.size(); ++i)
    if (!is_pivot[i]) p.basis_ids.push_back(static_cast<int>(i));
  for (int id : p.basis_ids) p.basis_monomials.push_back(p.monomials[id]);
  std::map<int, int> basis_pos;
  for (std::size_t b = 0; b < p.basis_ids.size(); ++b) basis_pos[p.basis_ids[b]] = static_cast<int>(b);
  p.nf.assign(p.monomials.size(), RatVec(p.basis_ids.size(), Rat(0)));
  for (std::size_t i = 0; i < p.monomials.size(); ++i) {
    if (!is_pivot[i]) {
      p.nf[i][basis_pos[static_cast<int>(i)]] = 1;
    }
  }
  for (std::size_t rw = 0; rw < ech.m.rows; ++rw) {
    std::size_t pc = ech.pivot_cols[rw];
    // monomial_pc = -sum_{non-pivot j} row[j] * monomial_j
    RatVec v(p.basis_ids.size(), Rat(0));
    for (std::size_t j = 0; j < p.monomials.size(); ++j) {
      if (j == pc || ech.m[rw][j] == 0) continue;
      v[basis_pos.at(static_cast<int>(j))] -= ech.m[rw][j];
    }
    p.nf[pc] = std::move(v);
  }
}

bool ToricChowRing::monomial_is_face(const Exponents& e) const {
  std::vector<int> support;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw StructuralError("negative exponent");
    if (e[i] > 0) support.push_back(static_cast<int>(i));
  }
  return fan_.is_cone(support);
}

ToricChowRing::Element ToricChowRing::zero() const {
  return Element{this, {}};
}

ToricChowRing::Element ToricChowRing::one() const {
  Element x{this, std::vector<RatVec>(1)};
  x.comp[0] = RatVec{Rat(1)};
  return x;
}

ToricChowRing::Element ToricChowRing::ray_divisor(int ray) const {
  Exponents e(fan_.ray_count(), 0);
  e[ray] = 1;
  return monomial(e);
}

ToricChowRing::Element ToricChowRing::divisor(const DivisorClass& d) const {
  if (static_cast<int>(d.coeffs.size()) != fan_.ray_count())
    throw StructuralError("divisor length mismatch");
  Element acc = zero();
  for (int r = 0; r < fan_.ray_count(); ++r) {
    if (d.coeffs[r] == 0) continue;
    acc = acc + ray_divisor(r) * Rat(d.coeffs[r]);
  }
  return acc;
}

ToricChowRing::Element ToricChowRing::monomial(const Exponents& e) const {
  int k = 0;
  for (int v : e) k += v;
  if (k > n_) return zero();
  if (!monomial_is_face(e)) return zero();
  const Piece& p = pieces_[k];
  return from_monomial_coords(k, p.nf[p.index.at(e)]);
}

ToricChowRing::Element ToricChowRing::from_monomial_coords(int k, const RatVec& coords) const {
  Element x{this, std::vector<RatVec>(k + 1)};
  x.comp[k] = coords;
  return x;
}

int ToricChowRing::basis_size(int degree) const {
  if (degree < 0 || degree > n_) return 0;
  return static_cast<int>(pieces_[degree].basis_ids.size());
}

const std::vector<ToricChowRing::Exponents>& ToricChowRing::basis(int degree) const {
  static const std::vector<Exponents> empty;
  if (degree < 0 || degree > n_) return empty;
  return pieces_[degree].basis_monomials;
}

std::string ToricChowRing::basis_name(int degree, int i) const {
  const auto& e = basis(degree).at(i);
  std::string s;
  for (std::size_t r = 0; r < e.size(); ++r) {
    if (e[r] == 0) continue;
    if (!s.empty()) s += "*";
    s += "D" + std::to_string(r);
    if (e[r] > 1) s += "^" + std::to_string(e[r]);
  }
  return s.empty() ? "1" : s;
}

bool ToricChowRing::Element::is_zero() const {
  for (const auto& c : comp)
    for (const auto& x : c)
      if (x != 0) return false;
  return true;
}

bool ToricChowRing::Element::is_homogeneous(int* degree_out) const {
  int deg = -1;
  for (std::size_t k = 0; k < comp.size(); ++k) {
    for (const auto& x : comp[k])
      if (x != 0) {
        if (deg >= 0 && deg != static_cast<int>(k)) return false;
        deg = static_cast<int>(k);
        break;
      }
  }
  if (degree_out) *degree_out = deg;  // -1 for zero
  return true;
}

ToricChowRing::Element ToricChowRing::Element::operator+(const Element& o) const {
  if (ring != o.ring) throw StructuralError("elements of different rings");
  Element out{ring, {}};
  out.comp.resize(std::max(comp.size(), o.comp.size()));
  for (std::size_t k = 0; k < out.comp.size(); ++k) {
    std::size_t nb = ring->pieces_[k].basis_ids.size();
    const RatVec* a = k < comp.size() && !comp[k].empty() ? &comp[k] : nullptr;
    const RatVec* b = k < o.comp.size() && !o.comp[k].empty() ? &o.comp[k] : nullptr;
    if (!a && !b) continue;
    RatVec v(nb, Rat(0));
    if (a)
      for (std::size_t i = 0; i < nb; ++i) v[i] += (*a)[i];
    if (b)
      for (std::size_t i = 0; i < nb; ++i) v[i] += (*b)[i];
    out.comp[k] = std::move(v);
  }
  return out;
}

ToricChowRing::Element ToricChowRing::Element::operator-() const {
  Element out = *this;
  for (auto& c : out.comp)
    for (auto& x : c) x = -x;
  return out;
}

ToricChowRing::Element ToricChowRing::Element::operator-(const Element& o) const {
  return *this + (-o);
}

ToricChowRing::Element ToricChowRing::Element::operator*(const Rat& c) const {
  Element out = *this;
  for (auto& cc : out.comp)
    for (auto& x : cc) x *= c;
  return out;
}

ToricChowRing::Element ToricChowRing::Element::operator*(const Element& o) const {
  if (ring != o.ring) throw StructuralError("elements of different rings");
  const ToricChowRing& R = *ring;
  Element out{ring, std::vector<RatVec>(R.n_ + 1)};
  for (int ka = 0; ka < static_cast<int>(comp.size()); ++ka) {
    if (comp[ka].empty()) continue;
    for (int kb = 0; kb + ka <= R.n_ && kb < static_cast<int>(o.comp.size()); ++kb) {
      if (o.comp[kb].empty()) continue;
      int k = ka + kb;
      const auto& pa = R.pieces_[ka];
      const auto& pb = R.pieces_[kb];
      const auto& pk = R.pieces_[k];
      RatVec& acc = out.comp[k];
      if (acc.empty()) acc.assign(pk.basis_ids.size(), Rat(0));
      for (std::size_t i = 0; i < comp[ka].size(); ++i) {
        if (comp[ka][i] == 0) continue;
        const Exponents& ma = pa.monomials[pa.basis_ids[i]];
        for (std::size_t j = 0; j < o.comp[kb].size(); ++j) {
          if (o.comp[kb][j] == 0) continue;
          const Exponents& mb = pb.monomials[pb.basis_ids[j]];
          Exponents prod(ma.size());
          for (std::size_t t = 0; t < ma.size(); ++t) prod[t] = ma[t] + mb[t];
          auto it = pk.index.find(prod);
          if (it == pk.index.end()) continue;  // not a face: zero
          Rat c = comp[ka][i] * o.comp[kb][j];
          const RatVec& nf = pk.nf[it->second];
          for (std::size_t t = 0; t < nf.size(); ++t)
            if (nf[t] != 0) acc[t] += c * nf[t];
        }
      }
    }
  }
  return out;
}

bool ToricChowRing::Element::operator==(const Element& o) const {
  return (*this - o).is_zero();
}

Rat ToricChowRing::degree_map(const Element& x) const {
  if (x.ring != this) throw StructuralError("element of another ring");
  int deg;
  if (!x.is_homogeneous(&deg)) throw StructuralError("degree of inhomogeneous element");
  if (deg == -1) return Rat(0);
  if (deg != n_) throw StructuralError("degree map needs a top-degree element");
  return x.comp[n_][0] * point_scale_;
}

ToricChowRing::Element ToricChowRing::component(const Element& x, int k) const {
  Element out{this, {}};
  if (k < 0 || k >= static_cast<int>(x.comp.size()) || x.comp[k].empty()) return out;
  out.comp.resize(k + 1);
  out.comp[k] = x.comp[k];
  return out;
}

}  // namespace toric
