#pragma once

/**
 * Exact scalar fields: the rationals and finite fields F_q.
 *
 * Prime fields F_p are supported for any prime p < 2^62. Proper prime-power
 * fields F_{p^e} (e > 1) are built from a fixed table of Conway polynomials
 * and are limited to q <= 16:
 *
 *   F_4  = F_2[x]/(x^2 + x + 1)
 *   F_8  = F_2[x]/(x^3 + x + 1)
 *   F_9  = F_3[x]/(x^2 + 2x + 2)
 *   F_16 = F_2[x]/(x^4 + x + 1)
 *
 * An element of F_{p^e} is stored as its "code" sum_i c_i p^i, where
 * c_0 + c_1 x + ... + c_{e-1} x^{e-1} is the reduced representative.
 *
 * Field descriptors are interned: two Field handles compare equal iff they
 * describe the same field, and a Field is a cheap pointer-sized value.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symloop {

namespace detail {
struct FieldData;
}

class Scalar;

class Field {
 public:
  enum class Kind : std::uint8_t { rational, finite };

  static Field rationals();
  /// F_{p^e}. Throws DomainError if p is not prime or (e > 1 and p^e is not
  /// in the Conway table).
  static Field finite(std::uint64_t p, unsigned e = 1);
  /// "Q" or "Fq:<p>^<e>" ("Fq:<p>" is accepted as e = 1).
  static Field parse(std::string_view descriptor);

  Kind kind() const;
  bool is_rational() const { return kind() == Kind::rational; }
  bool is_finite() const { return kind() == Kind::finite; }
  /// 0 for Q.
  std::uint64_t characteristic() const;
  /// Extension degree e over the prime field (1 for Q).
  unsigned degree() const;
  /// q = p^e; 0 for Q.
  std::uint64_t order() const;
  /// Field polynomial, coefficients low to high (monic, length e + 1).
  /// Empty for Q.
  const std::vector<std::uint64_t>& modulus() const;
  std::string descriptor() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// Over F_q the denominator must be prime to p.
  Scalar from_rational(const mpq_class& v) const;
  /// F_q element from its code in [0, q).
  Scalar from_code(std::uint64_t code) const;
  /// F_q element from its coefficient vector (length <= e).
  Scalar from_coefficients(const std::vector<std::int64_t>& coeffs) const;
  /// Q: "n" or "n/d". F_q: an integer, read as a code in [0, q) when e > 1
  /// and reduced mod p when e = 1.
  Scalar parse_element(std::string_view text) const;
  /// All nonzero elements of a finite field, ordered by code.
  std::vector<Scalar> units() const;

  friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
  friend class Scalar;
};

/// An exact element of Q or F_q. Immutable value type.
class Scalar {
 public:
  /// Rational zero.
  Scalar();

  Field field() const { return Field(field_); }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws DomainError on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Throws DomainError for zero.
  Scalar inverse() const;
  Scalar pow(std::int64_t exponent) const;

  /// Q only.
  const mpq_class& rational() const;
  /// F_q only.
  std::uint64_t code() const;
  /// F_q only: representative coefficients, low to high, length e.
  std::vector<std::uint64_t> coefficients() const;

  /// Q: "n" or "n/d"; F_q: the code in decimal.
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(const detail::FieldData* f, mpq_class q);
  Scalar(const detail::FieldData* f, std::uint64_t code);
  void require_same_field(const Scalar& o) const;

  const detail::FieldData* field_;
  std::variant<std::uint64_t, mpq_class> value_;
  friend class Field;
};

bool is_prime(std::uint64_t n);

}  // namespace symloop
