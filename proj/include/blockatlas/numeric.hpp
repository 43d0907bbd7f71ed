#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockatlas {

using Int = long;  // gmpxx interoperates with long, not long long
using BigInt = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.
inline Rat rat(Int num, Int den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// q^e for integer e of either sign; requires q != 0 when e < 0.
inline Rat rat_pow(const Rat& q, Int e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("negative power of zero");
    Rat inv = Rat(q.get_den()) / Rat(q.get_num());
    return rat_pow(inv, -e);
  }
  Rat out = 1, base = q;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Exact conversion; throws unless q is an integer that fits in long long.
inline Int rat_to_int(const Rat& q) {
  if (q.get_den() != 1) throw std::domain_error("expected integer, got " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + q.get_str());
  return q.get_num().get_si();
}

using IntVec = std::vector<Int>;

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec vec_scale(Int c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline IntVec vec_neg(const IntVec& a) { return vec_scale(-1, a); }

inline bool vec_is_zero(const IntVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace blockatlas
