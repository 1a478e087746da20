#pragma once

/**
 * Sparse integer matrices, Smith normal form and finitely generated abelian
 * group presentations.
 *
 * The elimination is fraction-free over Z: each step takes a pivot of least
 * absolute value (unit pivots first, and among those the sparsest row of the
 * sparsest column), clears its column with row operations and its row with
 * column operations, and restarts on the remainder whenever one appears. The
 * resulting diagonal is normalized to d_1 | d_2 | ... by gcd/lcm exchange.
 * Unless disabled, the rank is cross-checked modulo two seeded random primes
 * larger than every invariant factor.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symloop {

using SparseRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// One sorted, zero-free row per matrix row.
  std::vector<SparseRow> data;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}
  static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& dense);

  /// Appends a row given as (column, value) pairs in any order; duplicate
  /// columns are summed and zeros dropped.
  void push_row(SparseRow entries);
  std::size_t nonzeros() const;
  SparseIntMatrix transposed() const;
  /// Row r of the permuted matrix is row row_perm[r]; column c of the input
  /// becomes column col_perm[c].
  SparseIntMatrix permuted(const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) const;
};

struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0;

  /// Free rank of the cokernel of the matrix viewed as a map Z^cols -> Z^rows.
  std::size_t free_rank() const { return rows - rank; }
  /// Diagonal entries greater than one.
  std::vector<mpz_class> torsion() const;
};

struct SnfOptions {
  bool modular_check = true;
  std::uint64_t seed = 0x5eedu;
};

SmithForm smith_normal_form(const SparseIntMatrix& m, const SnfOptions& options = {});

/// Rank over F_p, by the same sparse elimination.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

/// Reduce a list of positive diagonal entries to invariant-factor form.
std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> d);

/// <generators | relations>, relations as rows over the generator columns.
struct AbelianGroupPresentation {
  std::vector<std::string> generators;
  SparseIntMatrix relations;
  /// Invariant factors >= 2, each dividing the next.
  std::vector<mpz_class> invariant_factors;
  std::size_t free_rank = 0;
  std::string note;

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
};

/// Computes the invariants of <generators | relations>.
AbelianGroupPresentation present(std::vector<std::string> generators, SparseIntMatrix relations,
                                 const SnfOptions& options = {});

}  // namespace symloop
