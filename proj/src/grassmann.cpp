#include "toric/grassmann.hpp"

#include <algorithm>

namespace toric {

namespace {

int sdeg(const GrassmannBundleRing::SMono& m) { return m.first + 2 * m.second; }

}  // namespace

GrassmannBundleRing::GrassmannBundleRing(std::shared_ptr<const ToricChowRing> base,
                                         int e, std::vector<ChowElt> chern_of_e)
    : base_(std::move(base)), e_(e), cE_(std::move(chern_of_e)) {
  if (e_ < 2) throw StructuralError("Grassmannian of lines needs rank at least 2");
  if (static_cast<int>(cE_.size()) != e_)
    throw StructuralError("chern_of_e must have e entries");
  for (int j = 0; j < e_; ++j) {
    int deg;
    if (!cE_[j].is_homogeneous(&deg) || (deg != -1 && deg != j + 1))
      throw StructuralError("c_j(E) must be homogeneous of degree j");
  }
  dim_ = base_->dim() + 2 * (e_ - 2);

  // q_j = c_j + s1 q_{j-1} - s2 q_{j-2}; relations are q_{e-1} and q_e
  std::vector<Raw> q(e_ + 1);
  q[0][{0, 0}] = base_->one();
  for (int j = 1; j <= e_; ++j) {
    Raw& qj = q[j];
    ChowElt cj = (j <= static_cast<int>(cE_.size())) ? cE_[j - 1] : base_->zero();
    if (!cj.is_zero()) qj[{0, 0}] = cj;
    for (const auto& [m, elt] : q[j - 1]) {
      SMono up{m.first + 1, m.second};
      auto it = qj.find(up);
      if (it == qj.end()) qj.emplace(up, elt);
      else it->second = it->second + elt;
    }
    if (j >= 2) {
      for (const auto& [m, elt] : q[j - 2]) {
        SMono up{m.first, m.second + 1};
        auto it = qj.find(up);
        if (it == qj.end()) qj.emplace(up, -elt);
        else it->second = it->second - elt;
      }
    }
  }
  q_[0] = std::move(q[e_ - 1]);
  q_[1] = std::move(q[e_]);

  degs_.resize(dim_ + 1);
  for (int k = 0; k <= dim_; ++k) build_degree(k);
}

void GrassmannBundleRing::build_degree(int k) {
  DegreeData& d = degs_[k];
  // columns: s-monomials with matching base degree; non-module-basis first so
  // pivots never land on the free-module basis
  std::vector<SMono> monos;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; 2 * b + a <= k; ++b) {
      SMono m{a, b};
      int bd = k - sdeg(m);
      if (bd > base_->dim()) continue;
      if (base_->basis_size(bd) == 0) continue;
      monos.push_back(m);
    }
  auto mb = [&](const SMono& m) { return in_module_basis(m); };
  std::stable_sort(monos.begin(), monos.end(), [&](const SMono& x, const SMono& y) {
    if (mb(x) != mb(y)) return !mb(x);
    if (x.first + x.second != y.first + y.second)
      return x.first + x.second > y.first + y.second;
    return x > y;
  });
  for (const SMono& m : monos) {
    int bd = k - sdeg(m);
    for (int i = 0; i < base_->basis_size(bd); ++i) {
      d.col_index[{m, i}] = static_cast<int>(d.cols.size());
      d.cols.push_back(Col{m, bd, i});
      if (mb(m)) ++d.module_dim;
    }
  }

  // relation rows: beta * m * q for q in {q_{e-1}, q_e}
  RatMat rel;
  rel.cols = d.cols.size();
  for (int which = 0; which < 2; ++which) {
    int qdeg = e_ - 1 + which;
    if (qdeg > k) continue;
    for (int a = 0; a + qdeg <= k; ++a)
      for (int b = 0; 2 * b + a + qdeg <= k; ++b) {
        SMono m{a, b};
        int bd = k - qdeg - sdeg(m);
        if (bd < 0 || bd > base_->dim()) continue;
        for (int bi = 0; bi < base_->basis_size(bd); ++bi) {
          ChowElt beta = base_->monomial(base_->basis(bd)[bi]);
          Raw prod;
          for (const auto& [m2, elt] : q_[which]) {
            SMono mm{m.first + m2.first, m.second + m2.second};
            ChowElt c = beta * elt;
            if (c.is_zero()) continue;
            auto it = prod.find(mm);
            if (it == prod.end()) prod.emplace(mm, std::move(c));
            else it->second = it->second + c;
          }
          RatVec row = flatten(k, prod);
          bool nonzero = false;
          for (const auto& x : row)
            if (x != 0) { nonzero = true; break; }
          if (nonzero) rel.r.push_back(std::move(row));
        }
      }
  }
  rel.rows = rel.r.size();
  d.rel = rref(std::move(rel));
  // freeness check: pivots must exhaust exactly the non-module-basis columns
  std::size_t expected_pivots = d.cols.size() - d.module_dim;
  if (d.rel.pivot_cols.size() != expected_pivots)
    throw InternalError("Grassmann bundle ring is not free over the base");
  for (std::size_t p : d.rel.pivot_cols)
    if (in_module_basis(d.cols[p].s))
      throw InternalError("relation pivot inside the free module basis");
}

RatVec GrassmannBundleRing::flatten(int k, const Raw& raw) const {
  const DegreeData& d = degs_[k];
  RatVec v(d.cols.size(), Rat(0));
  for (const auto& [m, elt] : raw) {
    int bd = k - sdeg(m);
    if (bd < 0 || bd > base_->dim()) continue;
    if (static_cast<int>(elt.comp.size()) <= bd || elt.comp[bd].empty()) continue;
    for (int i = 0; i < base_->basis_size(bd); ++i) {
      const Rat& c = elt.comp[bd][i];
      if (c == 0) continue;
      auto it = d.col_index.find({m, i});
      if (it == d.col_index.end()) throw InternalError("missing column");
      v[it->second] += c;
    }
  }
  return v;
}

GrassmannBundleRing::Element GrassmannBundleRing::reduce_raw(const Raw& raw) const {
  Element out{this, {}};
  for (int k = 0; k <= dim_; ++k) {
    RatVec v = flatten(k, raw);
    bool nonzero = false;
    for (const auto& x : v)
      if (x != 0) { nonzero = true; break; }
    if (!nonzero) continue;
    const DegreeData& d = degs_[k];
    reduce_against(d.rel, v);
    for (std::size_t c = 0; c < d.cols.size(); ++c) {
      if (v[c] == 0) continue;
      const Col& col = d.cols[c];
      if (!in_module_basis(col.s)) throw InternalError("reduction left a pivot column");
      ChowElt term = base_->monomial(base_->basis(col.base_deg)[col.base_idx]) * v[c];
      auto it = out.coeff.find(col.s);
      if (it == out.coeff.end()) out.coeff.emplace(col.s, std::move(term));
      else it->second = it->second + term;
    }
  }
  return out;
}

GrassmannBundleRing::Element GrassmannBundleRing::zero() const { return Element{this, {}}; }

GrassmannBundleRing::Element GrassmannBundleRing::one() const {
  Element x{this, {}};
  x.coeff[{0, 0}] = base_->one();
  return x;
}

GrassmannBundleRing::Element GrassmannBundleRing::s1() const {
  Raw r;
  r[{1, 0}] = base_->one();
  return reduce_raw(r);
}

GrassmannBundleRing::Element GrassmannBundleRing::s2() const {
  Raw r;
  r[{0, 1}] = base_->one();
  return reduce_raw(r);
}

GrassmannBundleRing::Element GrassmannBundleRing::pullback(const ChowElt& b) const {
  if (b.ring != base_.get()) throw StructuralError("pullback from another ring");
  Element x{this, {}};
  if (!b.is_zero()) x.coeff[{0, 0}] = b;
  return x;
}

bool GrassmannBundleRing::Element::is_zero() const {
  for (const auto& [m, elt] : coeff)
    if (!elt.is_zero()) return false;
  return true;
}

GrassmannBundleRing::Element GrassmannBundleRing::Element::operator+(const Element& o) const {
  if (ring != o.ring) throw StructuralError("elements of different rings");
  Element out = *this;
  for (const auto& [m, elt] : o.coeff) {
    auto it = out.coeff.find(m);
    if (it == out.coeff.end()) out.coeff.emplace(m, elt);
    else it->second = it->second + elt;
  }
  return out;
}

GrassmannBundleRing::Element GrassmannBundleRing::Element::operator-() const {
  Element out = *this;
  for (auto& [m, elt] : out.coeff) elt = -elt;
  return out;
}

GrassmannBundleRing::Element GrassmannBundleRing::Element::operator-(const Element& o) const {
  return *this + (-o);
}

GrassmannBundleRing::Element GrassmannBundleRing::Element::operator*(const Rat& c) const {
  Element out = *this;
  for (auto& [m, elt] : out.coeff) elt = elt * c;
  return out;
}

GrassmannBundleRing::Element GrassmannBundleRing::Element::operator*(const Element& o) const {
  if (ring != o.ring) throw StructuralError("elements of different rings");
  Raw prod;
  for (const auto& [ma, ea] : coeff) {
    if (ea.is_zero()) continue;
    for (const auto& [mb, eb] : o.coeff) {
      if (eb.is_zero()) continue;
      SMono m{ma.first + mb.first, ma.second + mb.second};
      ChowElt c = ea * eb;
      if (c.is_zero()) continue;
      auto it = prod.find(m);
      if (it == prod.end()) prod.emplace(m, std::move(c));
      else it->second = it->second + c;
    }
  }
  return ring->reduce_raw(prod);
}

bool GrassmannBundleRing::Element::operator==(const Element& o) const {
  return (*this - o).is_zero();
}

ChowElt GrassmannBundleRing::fiber_integrate(const Element& x) const {
  if (x.ring != this) throw StructuralError("element of another ring");
  ChowElt out = base_->zero();
  int target = 2 * (e_ - 2);
  for (const auto& [m, elt] : x.coeff) {
    if (sdeg(m) != target) continue;
    Int w = schubert_integral(e_, m.first, m.second);
    if (w == 0) continue;
    out = out + elt * Rat(w);
  }
  return out;
}

Rat GrassmannBundleRing::degree_map(const Element& x) const {
  if (x.ring != this) throw StructuralError("element of another ring");
  if (x.is_zero()) return Rat(0);
  if (!(component(x, dim_) == x))
    throw StructuralError("degree map needs a top-degree element");
  ChowElt pushed = fiber_integrate(x);
  if (pushed.is_zero()) return Rat(0);
  return base_->degree_map(pushed);
}

std::map<GrassmannBundleRing::SMono, Rat> GrassmannBundleRing::restrict_to_fiber(
    const Element& x) const {
  std::map<SMono, Rat> out;
  for (const auto& [m, elt] : x.coeff) {
    if (elt.comp.empty() || elt.comp[0].empty()) continue;
    if (elt.comp[0][0] != 0) out[m] = elt.comp[0][0];
  }
  return out;
}

SchubertClass GrassmannBundleRing::fiber_schubert(const Element& x) const {
  SchubertClass out;
  out.e = e_;
  for (const auto& [m, c] : restrict_to_fiber(x)) {
    SchubertClass mono = sigma_monomial(e_, m.first, m.second);
    for (const auto& [p, v] : mono.coeff) out.coeff[p] += c * v;
  }
  return out;
}

GrassmannBundleRing::Element GrassmannBundleRing::component(const Element& x, int k) const {
  Element out{this, {}};
  for (const auto& [m, elt] : x.coeff) {
    int bd = k - sdeg(m);
    if (bd < 0) continue;
    ChowElt piece = base_->component(elt, bd);
    if (!piece.is_zero()) out.coeff.emplace(m, std::move(piece));
  }
  return out;
}

int GrassmannBundleRing::piece_dim(int k) const {
  if (k < 0 || k > dim_) return 0;
  return degs_[k].module_dim;
}

}  // namespace toric
