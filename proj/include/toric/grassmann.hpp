#pragma once
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "toric/chow.hpp"
#include "toric/schubert.hpp"

namespace toric {

/// Chow ring of the Grassmann bundle Gr(2,E) over a smooth complete toric base.
/// Generators s1, s2 are the Chern classes of the dual tautological subbundle;
/// the two Whitney relations q_{e-1} = q_e = 0 are imposed degree by degree,
/// leaving the free module basis { s1^a s2^b : a+b <= e-2 } over the base ring.
class GrassmannBundleRing {
 public:
  using SMono = std::pair<int, int>;  // exponents (a, b) of s1^a s2^b

  GrassmannBundleRing(std::shared_ptr<const ToricChowRing> base, int e,
                      std::vector<ChowElt> chern_of_e);

  int e() const { return e_; }
  int dim() const { return dim_; }
  const ToricChowRing& base() const { return *base_; }
  std::shared_ptr<const ToricChowRing> base_ptr() const { return base_; }
  const std::vector<ChowElt>& chern_of_e() const { return cE_; }

  struct Element {
    const GrassmannBundleRing* ring = nullptr;
    std::map<SMono, ChowElt> coeff;  // only module-basis monomials appear

    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator*(const Rat& c) const;
    Element operator-() const;
    bool operator==(const Element& o) const;
  };

  Element zero() const;
  Element one() const;
  Element s1() const;
  Element s2() const;
  Element pullback(const ChowElt& b) const;

  /// Pushforward to the base along the bundle map.
  ChowElt fiber_integrate(const Element& x) const;

  /// Integral over the total space (top-degree homogeneous elements).
  Rat degree_map(const Element& x) const;

  /// Set all positive-degree base coefficients to zero; a class on the
  /// abstract fiber Gr(2,e), in the sigma_1/sigma_{1,1} monomials.
  std::map<SMono, Rat> restrict_to_fiber(const Element& x) const;

  SchubertClass fiber_schubert(const Element& x) const;

  bool in_module_basis(const SMono& m) const { return m.first + m.second <= e_ - 2; }

  /// Graded component of total degree k.
  Element component(const Element& x, int k) const;

  int piece_dim(int k) const;

 private:
  friend struct Element;
  std::shared_ptr<const ToricChowRing> base_;
  int e_;
  std::vector<ChowElt> cE_;  // c_1..c_e on the base
  int dim_;

  // raw polynomial in s1, s2 with base coefficients (not reduced)
  using Raw = std::map<SMono, ChowElt>;
  Raw q_[2];  // q_{e-1}, q_e

  struct Col {
    SMono s;
    int base_deg;
    int base_idx;
  };
  struct DegreeData {
    std::vector<Col> cols;
    std::map<std::pair<SMono, int>, int> col_index;  // (smono, base_idx within its degree)
    Echelon rel;
    int module_dim = 0;
  };
  std::vector<DegreeData> degs_;

  void build_degree(int k);
  Element reduce_raw(const Raw& raw) const;
  RatVec flatten(int k, const Raw& raw) const;
};

using GrElt = GrassmannBundleRing::Element;

}  // namespace toric
