#pragma once

/**
 * The simplicial ring k[Delta^n] = k[X_0, ..., X_n] / (X_0 + ... + X_n - 1)
 * and the singular resolution n -> SL_m(k[Delta^n]).
 *
 * Elements are stored in canonical coordinates X_1, ..., X_n; X_0 is
 * eliminated through X_0 = 1 - (X_1 + ... + X_n). Face and degeneracy maps
 * act on the full coordinates by
 *
 *   d_i(X_j) = X_j (j < i),  0 (j = i),            X_{j-1} (j > i)
 *   s_i(X_j) = X_j (j < i),  X_i + X_{i+1} (j = i), X_{j+1} (j > i)
 *
 * Level 1 is identified with k[T] through T = X_1, so d_1 is evaluation at
 * T = 0 and d_0 is evaluation at T = 1.
 *
 * Moore complex convention: N_n = intersection of ker d_i for i >= 1, with
 * boundary d_0.
 */

#include <cstddef>

#include "symloop/loops.hpp"

namespace symloop {

/// k[X_1, ..., X_n] (the field itself at level 0).
Ring simplex_ring(Field k, std::size_t level);
/// k[X_0, ..., X_n], the ambient ring before elimination.
Ring full_simplex_ring(Field k, std::size_t level);

class SimplexPoly {
 public:
  /// `poly` must live in simplex_ring(field, level).
  SimplexPoly(std::size_t level, Poly poly);
  /// Eliminates X_0 from a polynomial over full_simplex_ring(k, level).
  static SimplexPoly from_full(std::size_t level, const Poly& full);

  std::size_t level() const { return level_; }
  const Poly& poly() const { return poly_; }
  /// Back to k[X_0, ..., X_n] by the inclusion (X_0 does not occur).
  Poly to_full() const;

  friend bool operator==(const SimplexPoly&, const SimplexPoly&) = default;

 private:
  std::size_t level_;
  Poly poly_;
};

/// Throws DomainError for level 0 or i > level.
SimplexPoly face(std::size_t i, const SimplexPoly& f);
/// Throws DomainError for i > level.
SimplexPoly degeneracy(std::size_t i, const SimplexPoly& f);

class SimplexMatrix {
 public:
  /// `m` must be over simplex_ring(field, level).
  SimplexMatrix(std::size_t level, GroupMatrix m);

  std::size_t level() const { return level_; }
  const GroupMatrix& matrix() const { return matrix_; }

  friend bool operator==(const SimplexMatrix&, const SimplexMatrix&) = default;

 private:
  std::size_t level_;
  GroupMatrix matrix_;
};

SimplexMatrix face(std::size_t i, const SimplexMatrix& m);
SimplexMatrix degeneracy(std::size_t i, const SimplexMatrix& m);

/// Level-1 identification k[T] = k[Delta^1], T = X_1.
SimplexMatrix to_simplex(const PathMatrix& p);
PathMatrix to_path(const SimplexMatrix& m);

/// d_0 g = I and d_1 g = I.
bool moore_is_loop(const SimplexMatrix& g);

struct HomotopyCertificate {
  bool certified = false;
  SimplexMatrix d0;
  SimplexMatrix d1;
  SimplexMatrix d2;
  /// l' * l^{-1}, the required value of d_0 sigma.
  SimplexMatrix expected_boundary;
};

/// Checks that sigma lies in N_2 (d_1 sigma = d_2 sigma = I) and that
/// d_0 sigma = l' * l^{-1}; a positive answer certifies l ~ l'.
/// Throws DomainError unless l and l' are Moore loops of matching size.
HomotopyCertificate verify_homotopy_witness(const SimplexMatrix& sigma, const SimplexMatrix& l,
                                            const SimplexMatrix& l_prime);

}  // namespace symloop
