#pragma once
#include <map>
#include <utility>
#include <vector>

#include "toric/grassmann.hpp"
#include "toric/schubert.hpp"

namespace toric {

/// Polynomial in the Chern classes (c1, c2) of a rank-2 bundle; key (i,j) is
/// the monomial c1^i c2^j of degree i + 2j.
using FormalChern = std::map<std::pair<int, int>, Int>;

int formal_degree(const std::pair<int, int>& m);
FormalChern formal_component(const FormalChern& p, int degree);
FormalChern formal_mul(const FormalChern& a, const FormalChern& b);

/// Total Chern class of Sym^d of a rank-2 bundle, via the paired-product
/// closed form (with the extra linear factor for even d).
FormalChern sym_power_closed_form(int d);

/// The same class expanded from the Chern roots; the independent oracle.
FormalChern sym_power_root_expansion(int d);

/// Chern polynomial c_0..c_rank of a bundle on a Grassmann bundle ring.
struct ChernPolynomial {
  int rank = 0;
  std::vector<GrElt> classes;  // size rank+1, classes[0] = 1

  const GrElt& top() const { return classes.back(); }
};

ChernPolynomial unit_bundle(const GrassmannBundleRing& ring);

/// Chern polynomial of Sym^d(S*) on the given ring.
ChernPolynomial sym_power_bundle(const GrassmannBundleRing& ring, int d);

/// c_j(F (x) L) = sum_m binom(rank-m, j-m) c_m(F) c1(L)^{j-m}.
ChernPolynomial twist(const ChernPolynomial& cp, const GrElt& line_class);

ChernPolynomial direct_sum(const ChernPolynomial& a, const ChernPolynomial& b);

/// (+) Sym^{d_i}(S*) (x) p^*(L_i), rank sum(d_i + 1).
struct BundleSummand {
  int d = 0;
  ChowElt twist_class;  // degree-1 class on the base
};
ChernPolynomial section_bundle(const GrassmannBundleRing& ring,
                               const std::vector<BundleSummand>& summands);

enum class TopChernStatus { Zero, NonzeroCount, NonzeroPositiveDim, RankOverflow };

struct TopChernResult {
  TopChernStatus status = TopChernStatus::Zero;
  Int count = 0;                 // exact integral when rank equals the dimension
  SchubertClass fiber_witness;   // fiber restriction when rank is smaller
};

TopChernResult top_chern_nonzero(const GrassmannBundleRing& ring,
                                 const ChernPolynomial& cp);

/// Terms c1(A)^j c_{r-j}(M) of the perturbed top Chern class, j = 0..min(r, dim B).
/// A diagnostic mirroring the positivity argument; requires A ample on the base.
std::vector<GrElt> perturbation_terms(const GrassmannBundleRing& ring,
                                      const ChernPolynomial& cp,
                                      const DivisorClass& ample_on_base);

/// Evaluate a formal (c1,c2)-polynomial component on the fiber Gr(2,e).
SchubertClass formal_on_fiber(int e, const FormalChern& p, int degree);

Int binomial(int n, int k);

}  // namespace toric
