#ifndef K3LAMBDA_RATIONAL_HPP
#define K3LAMBDA_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <cstdint>

namespace k3 {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// r must be an exact integer fitting in long.
inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("expected integer rational");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
  return r.get_num().get_si();
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    Rat inv = Rat(base.get_den(), base.get_num());
    inv.canonicalize();
    return pow_rat(inv, -e);
  }
  Rat acc = 1, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Rat factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  Rat acc = 1;
  for (long k = 2; k <= n; ++k) acc *= k;
  return acc;
}

} // namespace k3

#endif
