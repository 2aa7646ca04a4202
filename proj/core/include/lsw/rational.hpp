#pragma once

#include <gmpxx.h>

#include <string>

namespace lsw {

// Exact rational coefficients. Everything in this library is computed over Q;
// there is no floating point anywhere.
using Q = mpq_class;

inline Q q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Q& x) { return sgn(x) == 0; }

// Accepts "3", "-3", "4/7", "-4/7".
Q parse_rational(const std::string& text);

std::string to_string(const Q& x);

}  // namespace lsw
