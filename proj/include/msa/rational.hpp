// Exact rational scalars. All linear algebra in this library is over Q;
// no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace msa {

using Rational = mpq_class;

inline std::string rational_str(const Rational& q) {
  return q.get_str();  // "p" or "p/q", canonical form
}

inline Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  q.canonicalize();
  return q;
}

}  // namespace msa
