#include "symloop/poly.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>

#include "symloop/errors.hpp"

namespace symloop {

namespace detail {

struct RingData {
  Field field;
  std::vector<std::string> variables;
};

}  // namespace detail

namespace {

struct RingRegistry {
  std::mutex mu;
  std::map<std::pair<std::string, std::vector<std::string>>, std::unique_ptr<detail::RingData>> rings;
};

RingRegistry& ring_registry() {
  static RingRegistry r;
  return r;
}

bool valid_variable_name(std::string_view v) {
  if (v.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_') return false;
  return std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

Ring Ring::of(Field field) { return make(field, {}); }

Ring Ring::make(Field field, std::vector<std::string> variables) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!valid_variable_name(variables[i])) throw DomainError("invalid variable name '" + variables[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (variables[i] == variables[j]) throw DomainError("duplicate variable '" + variables[i] + "'");
  }
  auto& reg = ring_registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.rings[{field.descriptor(), variables}];
  if (!slot) slot = std::make_unique<detail::RingData>(detail::RingData{field, std::move(variables)});
  return Ring(slot.get());
}

Ring Ring::parse(std::string_view s) {
  if (s.substr(0, 5) != "poly:") return of(Field::parse(s));
  auto rest = s.substr(5);
  auto colon = rest.rfind(':');
  if (colon == std::string_view::npos) throw ParseError("ring descriptor '" + std::string(s) + "' has no variable list");
  Field f = Field::parse(rest.substr(0, colon));
  std::vector<std::string> vars;
  auto list = rest.substr(colon + 1);
  while (!list.empty()) {
    auto comma = list.find(',');
    vars.emplace_back(list.substr(0, comma));
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }
  if (vars.empty()) throw ParseError("ring descriptor '" + std::string(s) + "' has an empty variable list");
  for (const auto& v : vars)
    if (!valid_variable_name(v)) throw ParseError("invalid variable name '" + v + "'");
  return make(f, std::move(vars));
}

Field Ring::field() const { return data_->field; }
const std::vector<std::string>& Ring::variables() const { return data_->variables; }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  const auto& v = data_->variables;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return i;
  return std::nullopt;
}

std::string Ring::descriptor() const {
  if (is_field()) return field().descriptor();
  std::string s = "poly:" + field().descriptor() + ":";
  for (std::size_t i = 0; i < variables().size(); ++i) {
    if (i) s += ',';
    s += variables()[i];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly() : Poly(Ring::of(Field::rationals())) {}
Poly::Poly(Ring ring) : ring_(ring) {}

Poly::Poly(Ring ring, const Scalar& constant) : ring_(ring) {
  if (!(constant.field() == ring.field()))
    throw DomainError("scalar from " + constant.field().descriptor() + " used in ring " + ring.descriptor());
  if (!constant.is_zero()) terms_.emplace(Monomial(ring.num_variables(), 0), constant);
}

Poly::Poly(Ring ring, std::int64_t constant) : Poly(ring, ring.field().from_int(constant)) {}

Poly Poly::variable(Ring ring, std::string_view name) {
  auto idx = ring.index_of(name);
  if (!idx) throw DomainError("ring " + ring.descriptor() + " has no variable '" + std::string(name) + "'");
  return variable(ring, *idx);
}

Poly Poly::variable(Ring ring, std::size_t index) {
  if (index >= ring.num_variables()) throw DomainError("variable index out of range");
  Monomial m(ring.num_variables(), 0);
  m[index] = 1;
  return monomial(ring, std::move(m), ring.field().one());
}

Poly Poly::monomial(Ring ring, Monomial exponents, const Scalar& coeff) {
  if (exponents.size() != ring.num_variables()) throw DomainError("monomial arity does not match ring");
  Terms t;
  if (!coeff.is_zero()) t.emplace(std::move(exponents), coeff);
  return from_terms(ring, std::move(t));
}

Poly Poly::from_terms(Ring ring, Terms terms) {
  Poly p(ring);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != ring.num_variables()) throw DomainError("monomial arity does not match ring");
    if (!(it->second.field() == ring.field())) throw DomainError("coefficient field does not match ring");
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::from_dense(Ring ring, const std::vector<Scalar>& coeffs) {
  if (!ring.is_univariate()) throw DomainError("from_dense requires a univariate ring");
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) t.emplace(Monomial{static_cast<std::uint32_t>(i)}, coeffs[i]);
  return from_terms(ring, std::move(t));
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

bool Poly::is_one() const { return is_constant() && !is_zero() && terms_.begin()->second.is_one(); }

Scalar Poly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? field().zero() : terms_.begin()->second;
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field().zero() : it->second;
}

int Poly::degree() const {
  if (ring_.num_variables() > 1) throw DomainError("degree() requires a univariate ring, got " + ring_.descriptor());
  if (terms_.empty()) return -1;
  if (ring_.is_field()) return 0;
  return static_cast<int>(terms_.rbegin()->first[0]);
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto e : m) s += static_cast<int>(e);
    d = std::max(d, s);
  }
  return d;
}

Scalar Poly::leading_coefficient() const {
  if (ring_.num_variables() > 1) throw DomainError("leading_coefficient() requires a univariate ring");
  if (terms_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

std::vector<Scalar> Poly::dense() const {
  int d = degree();
  std::vector<Scalar> c(static_cast<std::size_t>(d + 1), field().zero());
  for (const auto& [m, v] : terms_) c[ring_.is_field() ? 0 : m[0]] = v;
  return c;
}

void Poly::require_same_ring(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw DomainError("ring mismatch: " + ring_.descriptor() + " vs " + o.ring_.descriptor());
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = r.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(o);
  Poly r(ring_);
  const std::size_t nv = ring_.num_variables();
  Monomial m(nv);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nv; ++i) m[i] = ma[i] + mb[i];
      Scalar prod = ca * cb;
      auto [it, inserted] = r.terms_.emplace(m, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::operator*(const Scalar& s) const { return *this * Poly(ring_, s); }

Poly Poly::pow(unsigned exponent) const {
  Poly result(ring_, 1);
  Poly base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

bool Poly::is_unit() const { return is_constant() && !is_zero(); }

Poly Poly::inverse() const {
  if (!is_unit()) throw DomainError(to_string() + " is not a unit in " + ring_.descriptor());
  return Poly(ring_, constant_value().inverse());
}

Poly Poly::substitute(Ring target, const std::vector<Poly>& images) const {
  if (!(target.field() == field())) throw DomainError("substitution must preserve the base field");
  if (images.size() != ring_.num_variables()) throw DomainError("substitution needs one image per variable");
  for (const auto& im : images)
    if (!(im.ring() == target)) throw DomainError("substitution image is not in the target ring");
  // Power caches keyed by exponent, per variable.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Poly(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Poly term(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) term *= power(i, m[i]);
    r += term;
  }
  return r;
}

Poly Poly::evaluate(const std::map<std::string, Poly>& assignment) const {
  for (const auto& [name, value] : assignment)
    if (!ring_.index_of(name)) throw DomainError("ring " + ring_.descriptor() + " has no variable '" + name + "'");
  std::vector<std::string> remaining;
  for (const auto& v : ring_.variables())
    if (!assignment.count(v)) remaining.push_back(v);
  Ring target = Ring::make(field(), remaining);
  std::vector<Poly> images;
  images.reserve(ring_.num_variables());
  for (const auto& v : ring_.variables()) {
    auto it = assignment.find(v);
    images.push_back(it == assignment.end() ? Poly::variable(target, v) : it->second.lift_to(target));
  }
  return substitute(target, images);
}

Scalar Poly::evaluate_at(const Scalar& t) const {
  if (!ring_.is_univariate()) throw DomainError("evaluate_at requires a univariate ring, got " + ring_.descriptor());
  if (!(t.field() == field())) throw DomainError("evaluation point is in the wrong field");
  // Horner over the sparse exponents, highest first.
  Scalar acc = field().zero();
  std::uint32_t prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::uint32_t e = it->first[0];
    if (!first) acc = acc * t.pow(prev - e);
    acc += it->second;
    prev = e;
    first = false;
  }
  if (!first) acc = acc * t.pow(prev);
  return acc;
}

Poly Poly::lift_to(Ring target) const {
  if (ring_ == target) return *this;
  if (!(target.field() == field())) throw DomainError("cannot move a polynomial between different fields");
  std::vector<std::size_t> map(ring_.num_variables());
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto idx = target.index_of(ring_.variables()[i]);
    if (!idx) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
      if (used)
        throw DomainError("variable '" + ring_.variables()[i] + "' does not exist in " + target.descriptor());
      map[i] = static_cast<std::size_t>(-1);
    } else {
      map[i] = *idx;
    }
  }
  Terms t;
  for (const auto& [m, c] : terms_) {
    Monomial nm(target.num_variables(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) nm[map[i]] = m[i];
    t.emplace(std::move(nm), c);
  }
  return from_terms(target, std::move(t));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_.variables()[i];
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty())
      s += coeff;
    else if (coeff == "1")
      s += mono;
    else
      s += coeff + '*' + mono;
  }
  return s;
}

bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  if (!(f.ring() == g.ring()))
    throw DomainError("poly_divmod: ring mismatch " + f.ring().descriptor() + " vs " + g.ring().descriptor());
  Ring ring = f.ring();
  if (ring.num_variables() > 1) throw DomainError("poly_divmod requires a univariate ring, got " + ring.descriptor());
  if (g.is_zero()) throw DomainError("poly_divmod: division by the zero polynomial");
  if (ring.is_field()) return {Poly(ring, f.constant_value() / g.constant_value()), Poly(ring)};

  auto rem = f.dense();
  auto div = g.dense();
  const int dg = g.degree();
  const Scalar lead_inv = div.back().inverse();
  int dr = f.degree();
  std::vector<Scalar> quot(static_cast<std::size_t>(std::max(dr - dg + 1, 0)), ring.field().zero());
  while (dr >= dg) {
    Scalar c = rem[static_cast<std::size_t>(dr)] * lead_inv;
    const auto shift = static_cast<std::size_t>(dr - dg);
    quot[shift] = c;
    for (int i = 0; i <= dg; ++i) rem[shift + static_cast<std::size_t>(i)] -= c * div[static_cast<std::size_t>(i)];
    --dr;
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)].is_zero()) --dr;
  }
  rem.resize(static_cast<std::size_t>(std::max(dr + 1, 0)), ring.field().zero());
  return {Poly::from_dense(ring, quot), Poly::from_dense(ring, rem)};
}

}  // namespace symloop
