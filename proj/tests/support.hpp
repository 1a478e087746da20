#pragma once

#include "doctest.h"

#include "symloop/acceptance.hpp"
#include "symloop/chevalley.hpp"

namespace test {

using namespace symloop;

inline Field Q() { return Field::rationals(); }
inline Field F(std::uint64_t p, unsigned e = 1) { return Field::finite(p, e); }

inline Scalar q(long num, long den = 1) {
  mpq_class v{mpz_class(num), mpz_class(den)};
  v.canonicalize();
  return Q().from_rational(v);
}

inline Poly constant(Ring r, long v) { return Poly(r, v); }

/// Dense k[T] polynomial from integer coefficients c_0, c_1, ...
inline Poly dense(Ring r, std::initializer_list<long> c) {
  std::vector<Scalar> s;
  for (long x : c) s.push_back(r.field().from_int(x));
  return Poly::from_dense(r, s);
}

inline GroupMatrix matrix(Ring r, std::size_t n, std::vector<Poly> e) { return GroupMatrix::from_entries(n, r, std::move(e)); }

}  // namespace test
