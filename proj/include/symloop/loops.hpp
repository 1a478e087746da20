#pragma once

/**
 * Paths and symbol loops in SL_n(k[T]).
 *
 *   X_T(u)    = x_alpha(T u)
 *   W_T(u)    = X^alpha_T(u) X^{-alpha}_T(-u^{-1}) X^alpha_T(u)
 *   H_T(u)    = W_T(u) W_T(1)^{-1}
 *   C_T(a, b) = H_T(a) H_T(b) H_T(ab)^{-1}
 *
 * A path is a matrix over k[T] that evaluates to the identity at T = 0; a
 * loop additionally evaluates to the identity at T = 1.
 */

#include <optional>
#include <vector>

#include "symloop/chevalley.hpp"

namespace symloop {

/// The polynomial ring k[T] used for all paths over k.
Ring path_ring(Field k);

class PathMatrix {
 public:
  /// Throws DomainError unless `m` is over a univariate ring.
  explicit PathMatrix(GroupMatrix m);

  const GroupMatrix& matrix() const { return matrix_; }
  std::size_t n() const { return matrix_.n(); }
  Field field() const { return matrix_.ring().field(); }

  GroupMatrix at(const Scalar& t) const { return eval_matrix(matrix_, t); }
  GroupMatrix start() const;
  GroupMatrix end() const;
  bool is_path() const;
  bool is_loop() const;

  PathMatrix operator*(const PathMatrix& o) const { return PathMatrix(matrix_ * o.matrix_); }
  PathMatrix inverse() const { return PathMatrix(matrix_.inverse()); }
  friend bool operator==(const PathMatrix&, const PathMatrix&) = default;

 private:
  GroupMatrix matrix_;
};

PathMatrix constant_path(std::size_t n, Field k);

PathMatrix x_loop(RootA root, const Scalar& u, std::size_t n);
/// Throws DomainError for u = 0.
PathMatrix w_loop(RootA root, const Scalar& u, std::size_t n);
PathMatrix h_loop(RootA root, const Scalar& u, std::size_t n);
PathMatrix c_loop(RootA root, const Scalar& a, const Scalar& b, std::size_t n);

/// The closed form of C_T(u, v) in SL_2 with x_alpha = e_12:
///   I + T(T^2-1) (1-u)(1-v)/(u^2 v) * D_T(u, v)
/// with D_T the explicit 2x2 matrix of that formula.
PathMatrix sl2_closed_form(const Scalar& u, const Scalar& v);
/// The matrix D_T(u, v) of the closed form, over k[T].
std::vector<Poly> sl2_symbol_matrix(const Scalar& u, const Scalar& v);

struct PathFactor {
  PathMatrix path;
  bool inverted = false;
};

struct EntryDifference {
  std::size_t row = 0;
  std::size_t col = 0;
  Poly lhs;
  Poly rhs;
};

struct IdentityCheck {
  bool holds = false;
  /// First differing entry (row-major) when the identity fails.
  std::optional<EntryDifference> certificate;
};

/// Decides whether two products of paths are equal as polynomial matrices.
/// Throws DomainError on an empty side or size/ring mismatch.
IdentityCheck verify_path_identity(const std::vector<PathFactor>& lhs, const std::vector<PathFactor>& rhs);

}  // namespace symloop
