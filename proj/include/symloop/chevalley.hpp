#pragma once

/**
 * Split groups of type A_{n-1}: determinant-one matrices over a Ring, with
 * root-group, Weyl and torus elements.
 *
 * Roots are the pairs (i, j), 1 <= i != j <= n, 1-based as in the usual
 * matrix-unit notation e_ij. Matrix accessors are 0-based.
 */

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "symloop/poly.hpp"

namespace symloop {

struct RootA {
  int i = 1;
  int j = 2;

  RootA negated() const { return {j, i}; }
  /// Throws DomainError unless 1 <= i != j <= n.
  void validate(std::size_t n) const;
  std::string to_string() const;
  friend bool operator==(const RootA&, const RootA&) = default;
  friend auto operator<=>(const RootA&, const RootA&) = default;
};

class GroupMatrix {
 public:
  static GroupMatrix identity(std::size_t n, Ring ring);
  /// Row-major entries; throws DomainError unless det = 1 exactly.
  static GroupMatrix from_entries(std::size_t n, Ring ring, std::vector<Poly> entries);

  std::size_t n() const { return n_; }
  Ring ring() const { return ring_; }
  const Poly& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  const std::vector<Poly>& entries() const { return entries_; }

  bool is_identity() const;
  GroupMatrix operator*(const GroupMatrix& o) const;
  /// Adjugate; exact because det = 1.
  GroupMatrix inverse() const;

  /// Applies a ring homomorphism entrywise. Homomorphisms preserve det = 1,
  /// which is re-checked in debug builds only.
  GroupMatrix map_entries(Ring target, const std::function<Poly(const Poly&)>& hom) const;

  friend bool operator==(const GroupMatrix& a, const GroupMatrix& b);

 private:
  GroupMatrix(std::size_t n, Ring ring, std::vector<Poly> entries)
      : n_(n), ring_(ring), entries_(std::move(entries)) {}
  void require_compatible(const GroupMatrix& o) const;
  friend GroupMatrix elem(RootA root, const Poly& a, std::size_t n);

  std::size_t n_;
  Ring ring_;
  std::vector<Poly> entries_;
};

/// Determinant of an arbitrary square row-major matrix over a commutative ring.
Poly determinant(std::size_t n, Ring ring, const std::vector<Poly>& entries);

/// x_alpha(a): identity with a at (i, j). Additive in a.
GroupMatrix elem(RootA root, const Poly& a, std::size_t n);
/// w_alpha(u) = x_alpha(u) x_{-alpha}(-u^{-1}) x_alpha(u).
GroupMatrix w_elem(RootA root, const Poly& u, std::size_t n);
/// h_alpha(u) = w_alpha(u) w_alpha(1)^{-1} = diag(.., u at i, .., u^{-1} at j, ..).
GroupMatrix h_elem(RootA root, const Poly& u, std::size_t n);

/// Entrywise evaluation of a matrix over k[T] at T = t.
GroupMatrix eval_matrix(const GroupMatrix& m, const Scalar& t);

/// Group commutator a b a^{-1} b^{-1}.
GroupMatrix commutator(const GroupMatrix& a, const GroupMatrix& b);

}  // namespace symloop
