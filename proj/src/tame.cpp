#include "symloop/tame.hpp"

#include <algorithm>

#include "symloop/errors.hpp"
#include "symloop/field.hpp"

namespace symloop {

namespace {

long valuation(mpz_class n, std::uint64_t p) {
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

/// Unit part of a modulo p, i.e. a / p^{v_p(a)} reduced mod p.
std::uint64_t unit_part_mod(const mpq_class& a, std::uint64_t p) {
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class pp(static_cast<unsigned long>(p));
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  mpz_class inv;
  mpz_class dmod = den % pp;
  if (dmod < 0) dmod += pp;
  mpz_invert(inv.get_mpz_t(), dmod.get_mpz_t(), pp.get_mpz_t());
  mpz_class r = num * inv % pp;
  if (r < 0) r += pp;
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, long exp, std::uint64_t p) {
  mpz_class b(static_cast<unsigned long>(base)), m(static_cast<unsigned long>(p)), r;
  if (exp < 0) {
    mpz_invert(b.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    exp = -exp;
  }
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp), m.get_mpz_t());
  return r.get_ui();
}

}  // namespace

long p_adic_valuation(const mpq_class& a, std::uint64_t p) {
  if (sgn(a) == 0) throw DomainError("valuation of zero is undefined");
  return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

std::uint64_t tame_symbol(const mpq_class& a, const mpq_class& b, std::uint64_t p) {
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("tame_symbol: arguments must be nonzero");
  if (!is_prime(p)) throw DomainError("tame_symbol: " + std::to_string(p) + " is not prime");
  const long va = p_adic_valuation(a, p);
  const long vb = p_adic_valuation(b, p);
  // a^{vb} b^{-va} = a0^{vb} b0^{-va} since the p-powers cancel.
  std::uint64_t value = pow_mod(unit_part_mod(a, p), vb, p);
  value = static_cast<std::uint64_t>(static_cast<unsigned __int128>(value) * pow_mod(unit_part_mod(b, p), -va, p) % p);
  if ((va * vb) % 2 != 0) value = (p - value) % p;
  return value;
}

std::vector<std::uint64_t> prime_factors(const mpz_class& n) {
  if (n == 0) throw DomainError("prime_factors: zero has no factorization");
  mpz_class m = abs(n);
  std::vector<std::uint64_t> out;
  constexpr std::uint64_t trial_bound = 1'000'000;
  for (std::uint64_t d = 2; d <= trial_bound && m > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
    }
    if (mpz_class(static_cast<unsigned long>(d)) * d > m) break;
  }
  if (m > 1) {
    if (!m.fits_ulong_p() || !is_prime(m.get_ui()))
      throw DomainError("prime_factors: cofactor " + m.get_str() + " is too large to factor");
    out.push_back(m.get_ui());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symloop
