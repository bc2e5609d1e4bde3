#include "toric/chern.hpp"

#include <algorithm>

#include "toric/fan.hpp"

namespace toric {

int formal_degree(const std::pair<int, int>& m) { return m.first + 2 * m.second; }

FormalChern formal_component(const FormalChern& p, int degree) {
  FormalChern out;
  for (const auto& [m, c] : p)
    if (formal_degree(m) == degree && c != 0) out[m] = c;
  return out;
}

FormalChern formal_mul(const FormalChern& a, const FormalChern& b) {
  FormalChern out;
  for (const auto& [ma, ca] : a) {
    if (ca == 0) continue;
    for (const auto& [mb, cb] : b) {
      if (cb == 0) continue;
      std::pair<int, int> m{ma.first + mb.first, ma.second + mb.second};
      out[m] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

FormalChern sym_power_closed_form(int d) {
  FormalChern acc{{{0, 0}, Int(1)}};
  if (d == 0) return acc;
  for (int i = 0; 2 * i < d; ++i) {
    FormalChern f{{{0, 0}, Int(1)},
                  {{1, 0}, Int(d)},
                  {{2, 0}, Int(i) * (d - i)},
                  {{0, 1}, Int(d - 2 * i) * (d - 2 * i)}};
    for (auto it = f.begin(); it != f.end();)
      it = it->second == 0 ? f.erase(it) : std::next(it);
    acc = formal_mul(acc, f);
  }
  if (d % 2 == 0) {
    FormalChern mid{{{0, 0}, Int(1)}, {{1, 0}, Int(d / 2)}};
    acc = formal_mul(acc, mid);
  }
  return acc;
}

namespace {

// polynomial in the two Chern roots; key (p, q) = alpha^p beta^q
using RootPoly = std::map<std::pair<int, int>, Int>;

RootPoly root_mul(const RootPoly& a, const RootPoly& b) {
  RootPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      out[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// (alpha beta)^q (alpha+beta)^r expanded
RootPoly elementary_product(int r, int q) {
  RootPoly out;
  for (int t = 0; t <= r; ++t) out[{q + t, q + r - t}] = binomial(r, t);
  return out;
}

}  // namespace

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

FormalChern sym_power_root_expansion(int d) {
  RootPoly prod{{{0, 0}, Int(1)}};
  for (int i = 0; i <= d; ++i) {
    RootPoly f{{{0, 0}, Int(1)}};
    if (d - i != 0) f[{1, 0}] = d - i;
    if (i != 0) f[{0, 1}] = i;
    prod = root_mul(prod, f);
  }
  // rewrite the symmetric polynomial in terms of c1 = alpha+beta, c2 = alpha beta
  FormalChern out;
  while (!prod.empty()) {
    // lex-leading monomial with p >= q
    auto lead = prod.end();
    for (auto it = prod.begin(); it != prod.end(); ++it) {
      if (it->first.first < it->first.second) continue;
      if (lead == prod.end() || it->first > lead->first) lead = it;
    }
    if (lead == prod.end()) throw InternalError("asymmetric root polynomial");
    auto [p, q] = lead->first;
    Int c = lead->second;
    out[{p - q, q}] += c;
    RootPoly sub = elementary_product(p - q, q);
    for (const auto& [m, v] : sub) {
      auto it = prod.find(m);
      Int nv = (it == prod.end() ? Int(0) : it->second) - c * v;
      if (nv == 0) {
        if (it != prod.end()) prod.erase(it);
      } else {
        prod[m] = nv;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

ChernPolynomial unit_bundle(const GrassmannBundleRing& ring) {
  return ChernPolynomial{0, {ring.one()}};
}

ChernPolynomial sym_power_bundle(const GrassmannBundleRing& ring, int d) {
  FormalChern total = sym_power_closed_form(d);
  ChernPolynomial cp;
  cp.rank = d + 1;
  // s1^i s2^j evaluated incrementally
  std::map<std::pair<int, int>, GrElt> powers;
  powers[{0, 0}] = ring.one();
  auto value = [&](int i, int j) -> const GrElt& {
    std::pair<int, int> key{i, j};
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    GrElt v = ring.one();
    if (i > 0) v = powers.at({i - 1, j}) * ring.s1();
    else v = powers.at({i, j - 1}) * ring.s2();
    return powers.emplace(key, std::move(v)).first->second;
  };
  // make sure powers are built in increasing order
  for (int k = 0; k <= cp.rank; ++k) {
    GrElt ck = ring.zero();
    for (const auto& [m, c] : formal_component(total, k)) {
      for (int i = 0; i <= m.first; ++i)
        for (int j = 0; j <= m.second; ++j) value(i, j);
      ck = ck + value(m.first, m.second) * Rat(c);
    }
    cp.classes.push_back(std::move(ck));
  }
  return cp;
}

ChernPolynomial twist(const ChernPolynomial& cp, const GrElt& t) {
  ChernPolynomial out;
  out.rank = cp.rank;
  const GrassmannBundleRing& ring = *t.ring;
  std::vector<GrElt> tpow{ring.one()};
  for (int i = 1; i <= cp.rank; ++i) tpow.push_back(tpow.back() * t);
  for (int j = 0; j <= cp.rank; ++j) {
    GrElt cj = ring.zero();
    for (int m = 0; m <= j; ++m) {
      Int b = binomial(cp.rank - m, j - m);
      if (b == 0) continue;
      cj = cj + cp.classes[m] * tpow[j - m] * Rat(b);
    }
    out.classes.push_back(std::move(cj));
  }
  return out;
}

ChernPolynomial direct_sum(const ChernPolynomial& a, const ChernPolynomial& b) {
  ChernPolynomial out;
  out.rank = a.rank + b.rank;
  for (int k = 0; k <= out.rank; ++k) {
    GrElt ck = a.classes[0].ring->zero();
    for (int i = 0; i <= k; ++i) {
      if (i > a.rank || k - i > b.rank) continue;
      ck = ck + a.classes[i] * b.classes[k - i];
    }
    out.classes.push_back(std::move(ck));
  }
  return out;
}

ChernPolynomial section_bundle(const GrassmannBundleRing& ring,
                               const std::vector<BundleSummand>& summands) {
  ChernPolynomial m = unit_bundle(ring);
  for (const auto& s : summands) {
    ChernPolynomial piece = sym_power_bundle(ring, s.d);
    piece = twist(piece, ring.pullback(s.twist_class));
    m = direct_sum(m, piece);
  }
  return m;
}

TopChernResult top_chern_nonzero(const GrassmannBundleRing& ring,
                                 const ChernPolynomial& cp) {
  TopChernResult res;
  if (cp.rank > ring.dim()) {
    res.status = TopChernStatus::RankOverflow;
    return res;
  }
  const GrElt& top = cp.top();
  if (top.is_zero()) return res;
  if (cp.rank == ring.dim()) {
    Rat integral = ring.degree_map(top);
    if (!is_integer(integral)) throw InternalError("top Chern integral is not an integer");
    res.count = rat_num(integral);
    res.status = res.count == 0 ? TopChernStatus::Zero : TopChernStatus::NonzeroCount;
  } else {
    res.status = TopChernStatus::NonzeroPositiveDim;
    res.fiber_witness = ring.fiber_schubert(top);
  }
  return res;
}

std::vector<GrElt> perturbation_terms(const GrassmannBundleRing& ring,
                                      const ChernPolynomial& cp,
                                      const DivisorClass& ample_on_base) {
  if (!is_ample(ample_on_base, ring.base().fan()))
    throw StructuralError("perturbation class must be ample on the base");
  GrElt a = ring.pullback(ring.base().divisor(ample_on_base));
  int jmax = std::min(cp.rank, ring.base().dim());
  std::vector<GrElt> terms;
  GrElt apow = ring.one();
  for (int j = 0; j <= jmax; ++j) {
    terms.push_back(apow * cp.classes[cp.rank - j]);
    apow = apow * a;
  }
  return terms;
}

SchubertClass formal_on_fiber(int e, const FormalChern& p, int degree) {
  SchubertClass out;
  out.e = e;
  for (const auto& [m, c] : formal_component(p, degree)) {
    SchubertClass mono = sigma_monomial(e, m.first, m.second);
    for (const auto& [pt, v] : mono.coeff) out.coeff[pt] += Rat(c) * v;
  }
  return out;
}

}  // namespace toric
