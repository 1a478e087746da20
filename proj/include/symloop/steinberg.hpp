#pragma once

/**
 * Words in the Steinberg group St(A_{n-1}, R).
 *
 * A word is a sequence of generators x~_alpha(u)^{+-1}. Equality is equality
 * of canonical forms under free reduction plus additivity
 * x~_alpha(u) x~_alpha(v) = x~_alpha(u + v); the word problem in St is not
 * solved. Canonical form:
 *   - every letter has sign +1 (x~_alpha(u)^{-1} is rewritten x~_alpha(-u)),
 *   - no letter has parameter 0,
 *   - no two adjacent letters share a root.
 * Chevalley commutator relations are available only as the explicit rewrite
 * step commute_adjacent(); they are never applied automatically.
 */

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "symloop/chevalley.hpp"

namespace symloop {

struct Letter {
  RootA root;
  Poly param;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class SteinbergWord {
 public:
  /// Empty word.
  SteinbergWord(std::size_t n, Ring ring);
  /// Validates roots and parameter rings, then canonicalizes.
  SteinbergWord(std::size_t n, Ring ring, std::vector<Letter> letters);

  static SteinbergWord generator(RootA root, const Poly& param, std::size_t n);

  std::size_t n() const { return n_; }
  Ring ring() const { return ring_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// False for n = 2: the rank-one Steinberg presentation has different
  /// relations, which are not modeled.
  bool presentation_faithful() const { return n_ >= 3; }

  friend bool operator==(const SteinbergWord&, const SteinbergWord&) = default;

 private:
  std::size_t n_;
  Ring ring_;
  std::vector<Letter> letters_;
};

/// Reduction to canonical form, exposed for testing the rewrite system.
namespace rewrite {

/// Canonical form of an arbitrary letter sequence (stack-based normalizer).
std::vector<Letter> canonicalize(std::vector<Letter> letters);
/// Positions where a single rewrite step applies: sign normalization or
/// zero-parameter deletion at position k, or a merge of letters k, k+1.
std::vector<std::size_t> redexes(const std::vector<Letter>& letters);
/// Applies the first applicable rule at `pos` (see redexes()).
std::vector<Letter> apply_at(std::vector<Letter> letters, std::size_t pos);

}  // namespace rewrite

SteinbergWord st_mul(const SteinbergWord& a, const SteinbergWord& b);
SteinbergWord st_inv(const SteinbergWord& w);

/// Projection St -> E: product of x_alpha(u)^{sign} in order.
GroupMatrix project(const SteinbergWord& w);

/// Letter sequences for w~_alpha(u) and h~_alpha(u) = w~(u) w~(1)^{-1}.
SteinbergWord w_word(RootA root, const Poly& u, std::size_t n);
SteinbergWord h_word(RootA root, const Poly& u, std::size_t n);
/// c~(u, v) = h~(u) h~(v) h~(uv)^{-1}. Throws DomainError for non-units.
SteinbergWord symbol_word(RootA root, const Poly& u, const Poly& v, std::size_t n);

bool in_k2(const SteinbergWord& w);

/// Rewrites letters pos, pos+1 = x~_a(s) x~_b(t) into x~_b(t) x~_a(s)
/// preceded by the Chevalley commutator [x~_a(s), x~_b(t)]:
///   identity          if j != k and i != l,
///   x~_il(st)         if j == k, i != l,
///   x~_kj(-st)        if i == l, j != k,
/// where a = (i, j), b = (k, l). Throws DomainError for b = -a.
SteinbergWord commute_adjacent(const SteinbergWord& w, std::size_t pos);

/// An explicit product of Steinberg symbols {a_i, b_i}^{e_i} over Q.
struct SymbolFactor {
  mpq_class a;
  mpq_class b;
  int exponent = 1;
};

struct SymbolProduct {
  std::vector<SymbolFactor> factors;
};

/// The K_2 word prod_i c~_alpha(a_i, b_i)^{e_i}.
SteinbergWord to_word(const SymbolProduct& s, RootA root, std::size_t n);

/// For every prime p dividing a numerator or denominator of some a_i, b_i,
/// the value prod_i tau_p(a_i, b_i)^{e_i} in F_p^*.
std::map<std::uint64_t, std::uint64_t> tame_invariants(const SymbolProduct& s);

}  // namespace symloop
