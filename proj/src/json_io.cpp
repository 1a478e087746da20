#include "symloop/json_io.hpp"

#include "symloop/errors.hpp"

namespace symloop::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError("malformed document: " + what); }

const Json& field_of(const Json& doc, const char* key) {
  if (!doc.is_object()) malformed("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t size_of(const Json& doc, const char* key) {
  const Json& v = field_of(doc, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    malformed(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_of(const Json& doc, const char* key) {
  const Json& v = field_of(doc, key);
  if (!v.is_string()) malformed(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

int int_of(const Json& v, const char* what) {
  if (!v.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return v.get<int>();
}

void expect_schema(const Json& doc, std::string_view expected) {
  std::string s = schema_of(doc);
  if (!s.empty() && s != expected)
    malformed("schema \"" + s + "\" where \"" + std::string(expected) + "\" was expected");
}

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  malformed("scalar must be a string or an integer, got " + j.dump());
}

Json letters_json(const std::vector<Letter>& letters) {
  Json out = Json::array();
  for (const auto& l : letters) out.push_back(Json::array({l.root.i, l.root.j, to_json(l.param), l.sign}));
  return out;
}

}  // namespace

std::string schema_of(const Json& doc) {
  if (!doc.is_object()) return "";
  auto it = doc.find("schema");
  if (it == doc.end()) return "";
  if (!it->is_string()) malformed("\"schema\" must be a string");
  return it->get<std::string>();
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Json to_json(const Scalar& s) {
  if (s.field().is_rational()) return Json(s.to_string());
  Json out = Json::array();
  for (auto c : s.coefficients()) out.push_back(std::to_string(c));
  return out;
}

Scalar scalar_from_json(Field k, const Json& j) {
  if (j.is_array()) {
    if (k.is_rational()) malformed("coefficient vector given for a rational scalar");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : j) {
      std::string t = scalar_text(c);
      try {
        coeffs.push_back(std::stoll(t));
      } catch (const std::exception&) {
        malformed("coefficient '" + t + "'");
      }
    }
    return k.from_coefficients(coeffs);
  }
  return k.parse_element(scalar_text(j));
}

Json to_json(const Poly& p) {
  if (p.ring().is_field()) return to_json(p.is_zero() ? p.field().zero() : p.constant_value());
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({Json(m), to_json(c)}));
  return out;
}

Poly poly_from_json(Ring r, const Json& j) {
  if (r.is_field() || j.is_string() || j.is_number_integer()) return Poly(r, scalar_from_json(r.field(), j));
  if (!j.is_array()) malformed("polynomial over " + r.descriptor() + " must be a list of [exponents, coefficient] pairs");
  Poly::Terms terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array())
      malformed("polynomial term must be [exponents, coefficient], got " + t.dump());
    Monomial m;
    for (const auto& e : t[0]) {
      if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
        malformed("exponent must be a non-negative integer");
      m.push_back(e.get<std::uint32_t>());
    }
    if (m.size() != r.num_variables())
      malformed("exponent vector of length " + std::to_string(m.size()) + " in ring " + r.descriptor());
    Scalar c = scalar_from_json(r.field(), t[1]);
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) it->second += c;
  }
  return Poly::from_terms(r, std::move(terms));
}

Json matrix_entries(const GroupMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.n(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupMatrix matrix_from_entries(std::size_t n, Ring r, const Json& entries) {
  if (n < 1) malformed("matrix size must be positive");
  if (!entries.is_array() || entries.size() != n) malformed("\"entries\" must be a list of " + std::to_string(n) + " rows");
  std::vector<Poly> flat;
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != n) malformed("every row must have " + std::to_string(n) + " entries");
    for (const auto& e : row) flat.push_back(poly_from_json(r, e));
  }
  return GroupMatrix::from_entries(n, r, std::move(flat));
}

// ---------------------------------------------------------------------------

Json matrix_doc(const GroupMatrix& m) {
  return Json{{"schema", kMatrix}, {"n", m.n()}, {"ring", m.ring().descriptor()}, {"entries", matrix_entries(m)}};
}

GroupMatrix matrix_from_doc(const Json& doc) {
  expect_schema(doc, kMatrix);
  return matrix_from_entries(size_of(doc, "n"), Ring::parse(string_of(doc, "ring")), field_of(doc, "entries"));
}

Json path_doc(const PathMatrix& p) {
  Json j = matrix_doc(p.matrix());
  j["schema"] = kPath;
  return j;
}

PathMatrix path_from_doc(const Json& doc) {
  std::string s = schema_of(doc);
  if (!s.empty() && s != kPath && s != kMatrix) expect_schema(doc, kPath);
  return PathMatrix(matrix_from_entries(size_of(doc, "n"), Ring::parse(string_of(doc, "ring")), field_of(doc, "entries")));
}

Json word_doc(const SteinbergWord& w) {
  Json j{{"schema", kWord}, {"n", w.n()}, {"ring", w.ring().descriptor()}, {"letters", letters_json(w.letters())}};
  if (!w.presentation_faithful()) j["note"] = "rank-1: presentation not modeled";
  return j;
}

SteinbergWord word_from_doc(const Json& doc) {
  expect_schema(doc, kWord);
  const std::size_t n = size_of(doc, "n");
  Ring r = Ring::parse(string_of(doc, "ring"));
  const Json& letters = field_of(doc, "letters");
  if (!letters.is_array()) malformed("\"letters\" must be a list");
  std::vector<Letter> out;
  for (const auto& l : letters) {
    if (!l.is_array() || (l.size() != 3 && l.size() != 4)) malformed("letter must be [i, j, param, sign], got " + l.dump());
    Letter x{RootA{int_of(l[0], "root index"), int_of(l[1], "root index")}, poly_from_json(r, l[2]), 1};
    if (l.size() == 4) {
      x.sign = int_of(l[3], "letter sign");
      if (x.sign != 1 && x.sign != -1) malformed("letter sign must be 1 or -1");
    }
    out.push_back(std::move(x));
  }
  return SteinbergWord(n, r, std::move(out));
}

Json factors_doc(std::size_t n, Ring r, const std::vector<ElementaryFactor>& factors) {
  Json list = Json::array();
  for (const auto& f : factors) list.push_back(Json::array({f.root.i, f.root.j, to_json(f.param)}));
  return Json{{"schema", kFactors}, {"n", n}, {"ring", r.descriptor()}, {"factors", std::move(list)}};
}

SymbolProduct symbols_from_doc(const Json& doc) {
  expect_schema(doc, kSymbols);
  const Json& list = field_of(doc, "symbols");
  if (!list.is_array()) malformed("\"symbols\" must be a list");
  Field q = Field::rationals();
  SymbolProduct s;
  for (const auto& f : list) {
    if (!f.is_array() || (f.size() != 2 && f.size() != 3)) malformed("symbol must be [a, b] or [a, b, exponent]");
    SymbolFactor x{scalar_from_json(q, f[0]).rational(), scalar_from_json(q, f[1]).rational(), 1};
    if (f.size() == 3) x.exponent = int_of(f[2], "symbol exponent");
    s.factors.push_back(std::move(x));
  }
  return s;
}

namespace {

// a bare field descriptor means the coordinate ring of the simplex over it
Ring simplex_ring_of(const Json& doc, std::size_t level) {
  Ring r = Ring::parse(string_of(doc, "ring"));
  return r.is_field() ? simplex_ring(r.field(), level) : r;
}

}  // namespace

Json simplex_poly_doc(const SimplexPoly& f) {
  return Json{{"schema", kSimplexPoly},
              {"level", f.level()},
              {"ring", f.poly().ring().descriptor()},
              {"poly", to_json(f.poly())}};
}

SimplexPoly simplex_poly_from_doc(const Json& doc) {
  expect_schema(doc, kSimplexPoly);
  const std::size_t level = size_of(doc, "level");
  Ring r = simplex_ring_of(doc, level);
  return SimplexPoly(level, poly_from_json(r, field_of(doc, "poly")));
}

Json simplex_matrix_doc(const SimplexMatrix& m) {
  return Json{{"schema", kSimplexMatrix},
              {"level", m.level()},
              {"n", m.matrix().n()},
              {"ring", m.matrix().ring().descriptor()},
              {"entries", matrix_entries(m.matrix())}};
}

SimplexMatrix simplex_matrix_from_doc(const Json& doc) {
  std::string s = schema_of(doc);
  if (s == kPath) return to_simplex(path_from_doc(doc));
  expect_schema(doc, kSimplexMatrix);
  const std::size_t level = size_of(doc, "level");
  Ring r = simplex_ring_of(doc, level);
  return SimplexMatrix(level, matrix_from_entries(size_of(doc, "n"), r, field_of(doc, "entries")));
}

Json presentation_doc(const AbelianGroupPresentation& p) {
  Json inv = Json::array();
  for (const auto& d : p.invariant_factors) inv.push_back(integer_json(d));
  Json j{{"schema", kPresentation},
         {"generators", p.generators.size()},
         {"relations", p.relations.rows},
         {"invariant_factors", std::move(inv)},
         {"free_rank", p.free_rank}};
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

}  // namespace symloop::json_io
