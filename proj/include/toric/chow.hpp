#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/rowreduce.hpp"

namespace toric {

/// Chow ring of a smooth complete toric variety, presented by one degree-1
/// generator per ray modulo linear relations and the Stanley-Reisner ideal.
/// Each graded piece carries an explicit monomial basis and a normal-form map
/// computed once by exact row reduction.
class ToricChowRing {
 public:
  using Exponents = std::vector<int>;  // one exponent per ray

  explicit ToricChowRing(Fan fan);

  const Fan& fan() const { return fan_; }
  int dim() const { return fan_.dim(); }

  struct Element {
    const ToricChowRing* ring = nullptr;
    // comp[k] = coordinates over the degree-k basis (may be empty when zero)
    std::vector<RatVec> comp;

    bool is_zero() const;
    bool is_homogeneous(int* degree_out = nullptr) const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator*(const Rat& c) const;
    Element operator-() const;
    bool operator==(const Element& o) const;
  };

  Element zero() const;
  Element one() const;
  Element ray_divisor(int ray) const;
  Element divisor(const DivisorClass& d) const;
  /// Normal form of a monomial in the ray variables.
  Element monomial(const Exponents& e) const;

  int basis_size(int degree) const;
  /// The basis monomial exponents for a graded piece.
  const std::vector<Exponents>& basis(int degree) const;
  std::string basis_name(int degree, int i) const;

  /// Integral over the variety of a homogeneous top-degree element.
  Rat degree_map(const Element& x) const;

  /// Degree-k component as a standalone element.
  Element component(const Element& x, int k) const;

  bool monomial_is_face(const Exponents& e) const;

 private:
  friend struct Element;
  Fan fan_;
  int n_;
  // per degree: monomial list, index, nf table (one RatVec over basis per monomial)
  struct Piece {
    std::vector<Exponents> monomials;      // all face monomials, canonical order
    std::map<Exponents, int> index;
    std::vector<int> basis_ids;            // indices into monomials
    std::vector<Exponents> basis_monomials;
    std::vector<RatVec> nf;                // monomial id -> coords over basis
  };
  std::vector<Piece> pieces_;
  Rat point_scale_;  // integral of the degree-n basis monomial

  void build_piece(int k);
  Element from_monomial_coords(int k, const RatVec& coords) const;
};

using ChowElt = ToricChowRing::Element;

}  // namespace toric
