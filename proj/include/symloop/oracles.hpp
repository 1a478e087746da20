#pragma once

// Brute-force oracles over finite fields: Milnor K_2 presentations and Schur
// multipliers of small matrix groups. Both are validation devices only; the
// loop/symbol correspondence is about infinite fields.

#include <cstdint>
#include <vector>

#include "symloop/chevalley.hpp"
#include "symloop/snf.hpp"

namespace symloop {

/// <{u,v} : u, v in F_q^*> modulo bilinearity in each slot and the Steinberg
/// relations {u, 1-u} (u != 0, 1). Generator {u,v} is named "{a,b}" with a, b
/// the element codes. Throws DomainError unless q <= 16 is a prime power.
AbelianGroupPresentation milnor_k2_finite_field(std::uint64_t q, const SnfOptions& options = {});

/// A finite matrix group with its multiplication table. Element 0 is the
/// identity; the rest are in breadth-first order from the generators.
struct FiniteMatrixGroup {
  std::size_t n = 0;
  Field field = Field::rationals();
  /// Row-major matrix entries of each element.
  std::vector<std::vector<Scalar>> elements;
  /// mul[a][b] = index of elements[a] * elements[b].
  std::vector<std::vector<std::uint32_t>> mul;

  std::size_t order() const { return elements.size(); }
};

/// Breadth-first closure of the generators under right multiplication.
/// Throws DomainError if the generators are not square matrices of one size
/// over one finite field, or (naming the partial count) if more than
/// `order_bound` elements are found.
FiniteMatrixGroup enumerate_group(const std::vector<GroupMatrix>& gens, std::size_t order_bound);

/// Boundary matrices of the normalized bar complex in degrees 2 and 3.
/// Tuples containing the identity are dropped; the nonidentity elements
/// g_1..g_m index C_1, and (g, h) has index (g-1) m + (h-1) in C_2, etc.
/// Rows are source cells:
///   d2 (g,h)   = (h) - (gh) + (g)
///   d3 (g,h,k) = (h,k) - (gh,k) + (g,hk) - (g,h)
struct BarComplex {
  SparseIntMatrix d2;
  SparseIntMatrix d3;
};
BarComplex bar_complex(const FiniteMatrixGroup& g);

/// Exact check that every row of d3, pushed through d2, vanishes.
bool boundary_squares_to_zero(const BarComplex& bar);

struct SchurMultiplier {
  std::size_t order = 0;
  bool boundary_checked = false;
  /// Relations: the rows of d3 over the generators C_2; invariant factors and
  /// free rank are those of H_2 = ker d2 / im d3.
  AbelianGroupPresentation h2;
};

/// H_2(G, Z) of the group generated by `gens`. Throws DomainError on an
/// order-bound overflow, and std::logic_error if d2 d3 != 0.
SchurMultiplier schur_multiplier(const std::vector<GroupMatrix>& gens, std::size_t order_bound = 200,
                                 const SnfOptions& options = {});

}  // namespace symloop
