#pragma once

// Tame symbols on K_2(Q).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace symloop {

/// v_p(a) for nonzero rational a.
long p_adic_valuation(const mpq_class& a, std::uint64_t p);

/// tau_p{a, b} = (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} mod p, in [1, p).
/// Throws DomainError if a or b is zero or p is not prime.
std::uint64_t tame_symbol(const mpq_class& a, const mpq_class& b, std::uint64_t p);

/// Distinct prime factors of |n| (n != 0), ascending. Trial division, with a
/// primality test on the cofactor; throws DomainError if a cofactor cannot be
/// split within the trial bound.
std::vector<std::uint64_t> prime_factors(const mpz_class& n);

}  // namespace symloop
