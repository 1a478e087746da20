#pragma once

/**
 * Polynomial rings k[X_1, ..., X_m] over a Field, and their elements.
 *
 * A Ring with no variables is the field k itself, so Poly doubles as the
 * generic "ring element" type used by matrices and Steinberg words: a
 * constant Poly over a variable-free Ring is a field element.
 *
 * Terms are kept in a map ordered lexicographically on exponent vectors
 * (variable 0 most significant). Zero coefficients are never stored, so
 * equality is structural.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symloop/field.hpp"

namespace symloop {

namespace detail {
struct RingData;
}

class Ring {
 public:
  /// The field itself (no variables).
  static Ring of(Field field);
  static Ring make(Field field, std::vector<std::string> variables);
  /// "Q", "Fq:<p>^<e>", or "poly:<field>:<v1>,<v2>,...".
  static Ring parse(std::string_view descriptor);

  Field field() const;
  const std::vector<std::string>& variables() const;
  std::size_t num_variables() const { return variables().size(); }
  bool is_field() const { return num_variables() == 0; }
  bool is_univariate() const { return num_variables() == 1; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string descriptor() const;

  friend bool operator==(Ring a, Ring b) { return a.data_ == b.data_; }

 private:
  explicit Ring(const detail::RingData* d) : data_(d) {}
  const detail::RingData* data_;
};

using Monomial = std::vector<std::uint32_t>;

class Poly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  /// Zero polynomial over Q.
  Poly();
  /// Zero polynomial of the given ring.
  explicit Poly(Ring ring);
  Poly(Ring ring, const Scalar& constant);
  Poly(Ring ring, std::int64_t constant);

  static Poly variable(Ring ring, std::string_view name);
  static Poly variable(Ring ring, std::size_t index);
  static Poly monomial(Ring ring, Monomial exponents, const Scalar& coeff);
  /// Takes ownership of the term map; zero coefficients are dropped.
  static Poly from_terms(Ring ring, Terms terms);
  /// Univariate polynomial from dense coefficients c_0, c_1, ...
  static Poly from_dense(Ring ring, const std::vector<Scalar>& coeffs);

  Ring ring() const { return ring_; }
  Field field() const { return ring_.field(); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Throws DomainError if not constant.
  Scalar constant_value() const;
  /// Coefficient of the given monomial (zero if absent).
  Scalar coefficient(const Monomial& m) const;

  /// Univariate only; -1 for the zero polynomial.
  int degree() const;
  int total_degree() const;
  /// Univariate only; throws on zero.
  Scalar leading_coefficient() const;
  /// Univariate only: coefficients c_0 ... c_deg.
  std::vector<Scalar> dense() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(unsigned exponent) const;

  /// Units of k[X] are the nonzero constants.
  bool is_unit() const;
  /// Throws DomainError if not a unit.
  Poly inverse() const;

  /// Ring homomorphism into `target` sending variable i to images[i] and
  /// fixing scalars. Every image must lie in `target`.
  Poly substitute(Ring target, const std::vector<Poly>& images) const;
  /// Substitutes the assigned variables; the result lives in the ring of the
  /// remaining variables (the base field if all are assigned). Assignment
  /// values may be given over any ring whose variables are a subset of the
  /// remaining ones.
  Poly evaluate(const std::map<std::string, Poly>& assignment) const;
  /// Univariate evaluation at a scalar; the result is a constant of the field.
  Scalar evaluate_at(const Scalar& t) const;
  /// Re-express in `target`, matching variables by name. Throws if some
  /// variable occurring in *this is missing from `target`.
  Poly lift_to(Ring target) const;

  /// e.g. "3*T^2 - 1/2*T + 1"; F_q scalars are written by code.
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void require_same_ring(const Poly& o) const;
  Ring ring_;
  Terms terms_;
};

/// Euclidean division in k[T]: f = q*g + r with deg r < deg g.
/// Throws DomainError for g = 0 or non-univariate / mismatched rings.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);

}  // namespace symloop
