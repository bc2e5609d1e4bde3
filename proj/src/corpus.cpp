#include "toric/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace toric {

Fan projective_space(int n) {
  if (n < 1) throw StructuralError("projective space needs n >= 1");
  Fan f;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(IntVec(n, Int(-1)));
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != omit) c.push_back(i);
    f.max_cones.push_back(c);
  }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
  Fan f;
  int na = a.dim(), nb = b.dim();
  f.rank = na + nb;
  for (const auto& r : a.rays) {
    IntVec v(na + nb, Int(0));
    for (int i = 0; i < na; ++i) v[i] = r[i];
    f.rays.push_back(v);
  }
  for (const auto& r : b.rays) {
    IntVec v(na + nb, Int(0));
    for (int i = 0; i < nb; ++i) v[na + i] = r[i];
    f.rays.push_back(v);
  }
  for (const auto& ca : a.max_cones)
    for (const auto& cb : b.max_cones) {
      std::vector<int> c = ca;
      for (int r : cb) c.push_back(r + a.ray_count());
      std::sort(c.begin(), c.end());
      f.max_cones.push_back(c);
    }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  return f;
}

namespace {

DivisorClass ray_indicator(const Fan& f, int ray) {
  DivisorClass d;
  d.coeffs.assign(f.ray_count(), Int(0));
  d.coeffs[ray] = 1;
  return d;
}

CurveClass curve_from(std::initializer_list<long> xs) {
  CurveClass c;
  for (long x : xs) c.dots.emplace_back(x);
  return c;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;

  for (int n = 2; n <= 6; ++n) {
    CorpusEntry e;
    e.name = "P" + std::to_string(n);
    e.description = "projective " + std::to_string(n) + "-space";
    e.fan = projective_space(n);
    e.divisors = {{"H", ray_indicator(e.fan, 0)}};
    CurveClass line;
    line.dots.assign(n + 1, Int(1));
    e.curves = {{"h", line}};
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "P1xP2";
    e.description = "product of a line and a plane";
    e.fan = product_fan(projective_space(1), projective_space(2));
    e.divisors = {{"H1", ray_indicator(e.fan, 0)}, {"H2", ray_indicator(e.fan, 2)}};
    e.curves = {{"l1", curve_from({1, 1, 0, 0, 0})}, {"l2", curve_from({0, 0, 1, 1, 1})}};
    out.push_back(std::move(e));
  }

  {
    // blow-up of P^4 along the line V(cone(e1,e2,e3))
    CorpusEntry e;
    e.name = "BlP4_line";
    e.description = "P4 blown up along a torus-invariant line";
    e.fan = star_subdivide(projective_space(4), {0, 1, 2});
    e.divisors = {{"H", ray_indicator(e.fan, 4)}, {"E", ray_indicator(e.fan, 5)}};
    e.curves = {{"h", curve_from({1, 1, 1, 1, 1, 0})},
                {"e", curve_from({1, 1, 1, 0, 0, -1})},
                {"h-e", curve_from({0, 0, 0, 1, 1, 1})}};
    out.push_back(std::move(e));
  }

  {
    // blow-up of P^6 along the P3 V(cone(e1,e2,e3))
    CorpusEntry e;
    e.name = "BlP6_P3";
    e.description = "P6 blown up along a torus-invariant P3";
    e.fan = star_subdivide(projective_space(6), {0, 1, 2});
    e.divisors = {{"H", ray_indicator(e.fan, 6)}, {"E", ray_indicator(e.fan, 7)}};
    e.curves = {{"h", curve_from({1, 1, 1, 1, 1, 1, 1, 0})},
                {"e", curve_from({1, 1, 1, 0, 0, 0, 0, -1})},
                {"h-e", curve_from({0, 0, 0, 1, 1, 1, 1, 1})}};
    out.push_back(std::move(e));
  }

  {
    // two-step blow-up: the line, then a torus-fixed point of the result
    CorpusEntry e;
    e.name = "BlBlP4";
    e.description = "P4 blown up along a line and then a point";
    Fan once = star_subdivide(projective_space(4), {0, 1, 2});
    e.fan = star_subdivide(once, {0, 1, 3, 5});
    e.divisors = {{"H", ray_indicator(e.fan, 4)},
                  {"E1", ray_indicator(e.fan, 5)},
                  {"E2", ray_indicator(e.fan, 6)}};
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry* corpus_lookup(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

DivisorClass parse_divisor_expr(const CorpusEntry& entry, const std::string& expr) {
  // signed terms: [+-][k]NAME, or a bare integer when one generator exists
  DivisorClass acc;
  acc.coeffs.assign(entry.fan.ray_count(), Int(0));
  std::size_t i = 0;
  bool any_term = false;
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw StructuralError("empty divisor expression");

  // bare integer form
  bool all_num = true;
  for (std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) all_num = false;
  if (all_num) {
    if (entry.divisors.size() != 1)
      throw StructuralError("bare integer divisor needs a unique named generator");
    Int k(s);
    for (std::size_t t = 0; t < acc.coeffs.size(); ++t)
      acc.coeffs[t] = k * entry.divisors[0].second.coeffs[t];
    return acc;
  }

  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+') { ++i; }
    else if (s[i] == '-') { sign = -1; ++i; }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    Int mult = digits.empty() ? Int(1) : Int(digits);
    if (i < s.size() && s[i] == '*') ++i;
    std::string name;
    while (i < s.size() && s[i] != '+' && s[i] != '-') name += s[i++];
    if (name.empty()) throw StructuralError("malformed divisor expression: " + expr);
    const DivisorClass* gen = nullptr;
    for (const auto& [n, d] : entry.divisors)
      if (n == name) gen = &d;
    if (!gen) throw StructuralError("unknown divisor generator '" + name + "'");
    for (std::size_t t = 0; t < acc.coeffs.size(); ++t)
      acc.coeffs[t] += sign * mult * gen->coeffs[t];
    any_term = true;
  }
  if (!any_term) throw StructuralError("empty divisor expression");
  return acc;
}

}  // namespace toric
