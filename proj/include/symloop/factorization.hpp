#pragma once

// Elementary factorization over Euclidean rings and the translation between
// Steinberg words and paths.

#include <vector>

#include "symloop/loops.hpp"
#include "symloop/steinberg.hpp"

namespace symloop {

struct ElementaryFactor {
  RootA root;
  Poly param;
};

/// Writes M = prod_k x_{root_k}(param_k) for M in SL_n(k) or SL_n(k[T]).
///
/// Row reduction with the Euclidean algorithm down each column (pivot: the
/// entry of least degree, lowest row on ties) leaves an upper triangular
/// matrix with unit diagonal; back-substitution leaves diag(d_1, ..., d_n),
/// which is written as prod_i h_{i,i+1}(d_1 ... d_i), each h expanded into
/// the six factors of w(u) w(1)^{-1}. Factors with parameter 0 are omitted,
/// and the list is not minimized.
///
/// Throws DomainError unless det M = 1 and M is over a field or k[T].
std::vector<ElementaryFactor> factor_elementary(const GroupMatrix& m);

/// prod_k x_{root_k}(param_k), the identity for an empty list.
GroupMatrix multiply_factors(std::size_t n, Ring ring, const std::vector<ElementaryFactor>& factors);

/// prod_i x_{alpha_i}(T u_i) for a word over a field k.
PathMatrix word_to_path(const SteinbergWord& w);

/// Factors y = prod_i x_{alpha_i}(f_i(T)) and returns prod_i x~_{alpha_i}(f_i(1)).
/// Throws DomainError if y(0) != I.
SteinbergWord path_to_steinberg(const PathMatrix& y);

}  // namespace symloop
