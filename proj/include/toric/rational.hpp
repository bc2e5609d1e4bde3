#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// gcd of a vector, nonnegative; 0 for the zero vector.
inline Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline IntVec int_vec(std::initializer_list<long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace toric
