#include "toric/schubert.hpp"

#include "toric/fan.hpp"

namespace toric {

bool SchubertClass::is_zero() const {
  for (const auto& [p, c] : coeff)
    if (c != 0) return false;
  return true;
}

bool SchubertClass::nonnegative() const {
  for (const auto& [p, c] : coeff)
    if (c < 0) return false;
  return true;
}

SchubertClass schubert_unit(int e) {
  SchubertClass c;
  c.e = e;
  c.coeff[{0, 0}] = 1;
  return c;
}

SchubertClass mul_sigma1(const SchubertClass& c) {
  SchubertClass out;
  out.e = c.e;
  int amax = c.e - 2;
  for (const auto& [p, v] : c.coeff) {
    if (v == 0) continue;
    auto [a, b] = p;
    if (a + 1 <= amax) out.coeff[{a + 1, b}] += v;
    if (b + 1 <= a) out.coeff[{a, b + 1}] += v;
  }
  return out;
}

SchubertClass mul_sigma11(const SchubertClass& c) {
  SchubertClass out;
  out.e = c.e;
  int amax = c.e - 2;
  for (const auto& [p, v] : c.coeff) {
    if (v == 0) continue;
    auto [a, b] = p;
    if (a + 1 <= amax) out.coeff[{a + 1, b + 1}] += v;
  }
  return out;
}

SchubertClass sigma_monomial(int e, int a, int b) {
  if (e < 2 || a < 0 || b < 0) throw StructuralError("bad Schubert monomial");
  SchubertClass c = schubert_unit(e);
  for (int i = 0; i < b; ++i) c = mul_sigma11(c);
  for (int i = 0; i < a; ++i) c = mul_sigma1(c);
  return c;
}

Int schubert_integral(int e, int a, int b) {
  if (a + 2 * b != 2 * (e - 2)) return 0;
  SchubertClass c = sigma_monomial(e, a, b);
  auto it = c.coeff.find({e - 2, e - 2});
  if (it == c.coeff.end()) return 0;
  if (!is_integer(it->second)) throw InternalError("non-integral Schubert number");
  return rat_num(it->second);
}

Rat integral(const SchubertClass& c) {
  auto it = c.coeff.find({c.e - 2, c.e - 2});
  return it == c.coeff.end() ? Rat(0) : it->second;
}

}  // namespace toric
