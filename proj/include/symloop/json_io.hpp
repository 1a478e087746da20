#pragma once

/**
 * JSON documents for the command-line tool.
 *
 * Scalars: Q elements are decimal strings "n" or "n/d"; F_q elements are
 * coefficient vectors of decimal strings, low degree first ("3" and 3 are
 * also accepted on input, read as in Field::parse_element). Polynomials are
 * lists of [exponent-vector, scalar] pairs in the canonical term order; over
 * a variable-free ring an entry is a bare scalar. On input a bare Q scalar
 * or F_q code also stands for a constant polynomial. Simplex documents may
 * name the bare base field as their ring ("Q" for poly:Q:X1,X2 at level 2).
 *
 * Every document carries a "schema" key naming its kind and version, e.g.
 * "symloop.matrix/1". On input the key is optional, but if present it must
 * match. Malformed documents raise ParseError; well-formed documents that
 * violate a mathematical precondition (det != 1, ...) raise DomainError.
 */

#include <string>
#include <string_view>

#include "json.hpp"

#include "symloop/factorization.hpp"
#include "symloop/oracles.hpp"
#include "symloop/simplicial.hpp"
#include "symloop/steinberg.hpp"

namespace symloop::json_io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kMatrix = "symloop.matrix/1";
inline constexpr std::string_view kPath = "symloop.path/1";
inline constexpr std::string_view kWord = "symloop.word/1";
inline constexpr std::string_view kSymbols = "symloop.symbols/1";
inline constexpr std::string_view kFactors = "symloop.factors/1";
inline constexpr std::string_view kSimplexPoly = "symloop.simplex-poly/1";
inline constexpr std::string_view kSimplexMatrix = "symloop.simplex-matrix/1";
inline constexpr std::string_view kPresentation = "symloop.presentation/1";
inline constexpr std::string_view kGenerators = "symloop.generators/1";
inline constexpr std::string_view kIdentity = "symloop.identity/1";

Json to_json(const Scalar& s);
Scalar scalar_from_json(Field k, const Json& j);
Json to_json(const Poly& p);
Poly poly_from_json(Ring r, const Json& j);

Json matrix_entries(const GroupMatrix& m);
GroupMatrix matrix_from_entries(std::size_t n, Ring r, const Json& entries);

Json matrix_doc(const GroupMatrix& m);
GroupMatrix matrix_from_doc(const Json& doc);
Json path_doc(const PathMatrix& p);
PathMatrix path_from_doc(const Json& doc);
Json word_doc(const SteinbergWord& w);
SteinbergWord word_from_doc(const Json& doc);
Json factors_doc(std::size_t n, Ring r, const std::vector<ElementaryFactor>& factors);
/// {"schema": kSymbols, "n", "root": [i, j], "symbols": [[a, b, exponent], ...]}
SymbolProduct symbols_from_doc(const Json& doc);
Json simplex_poly_doc(const SimplexPoly& f);
SimplexPoly simplex_poly_from_doc(const Json& doc);
Json simplex_matrix_doc(const SimplexMatrix& m);
SimplexMatrix simplex_matrix_from_doc(const Json& doc);
Json presentation_doc(const AbelianGroupPresentation& p);

/// Returns the schema of a document ("" if absent).
std::string schema_of(const Json& doc);
/// Parses text, mapping syntax errors to ParseError.
Json parse(std::string_view text);

}  // namespace symloop::json_io
