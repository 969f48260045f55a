#pragma once
// Exact rational scalars (GMP-backed) and a few shared helpers.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dk {

using Rat = mpq_class;

// Library-wide error type; all invariant violations throw this.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat ratFromLong(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string coeffString(const Rat& r) { return r.get_str(); }

inline Rat factorial(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rat binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
  r.canonicalize();
  return r;
}

}  // namespace dk
