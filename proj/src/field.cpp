#include "symloop/field.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "symloop/errors.hpp"

namespace symloop {

namespace detail {

struct FieldData {
  Field::Kind kind = Field::Kind::rational;
  std::uint64_t p = 0;
  unsigned e = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;
  // Lookup tables for proper extensions (q <= 16).
  std::vector<std::uint8_t> add, mul, neg, inv;
};

}  // namespace detail

namespace {

using detail::FieldData;

struct ConwayEntry {
  std::uint64_t p;
  unsigned e;
  std::vector<std::uint64_t> modulus;  // low to high, monic
};

const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {3, 2, {2, 2, 1}},
  };
  return table;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // p is prime and a != 0
  return powmod(a, p - 2, p);
}

std::vector<std::uint64_t> decode(std::uint64_t code, std::uint64_t p, unsigned e) {
  std::vector<std::uint64_t> c(e);
  for (unsigned i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint64_t encode(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

std::uint64_t ext_mul_slow(std::uint64_t a, std::uint64_t b, const FieldData& f) {
  auto ca = decode(a, f.p, f.e);
  auto cb = decode(b, f.p, f.e);
  std::vector<std::uint64_t> prod(2 * f.e - 1, 0);
  for (unsigned i = 0; i < f.e; ++i)
    for (unsigned j = 0; j < f.e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % f.p;
  for (std::size_t d = prod.size(); d-- > f.e;) {
    std::uint64_t lead = prod[d];
    if (!lead) continue;
    for (unsigned k = 0; k <= f.e; ++k) {
      std::size_t idx = d - f.e + k;
      prod[idx] = (prod[idx] + f.p * f.p - lead * f.modulus[k] % f.p) % f.p;
    }
  }
  prod.resize(f.e);
  return encode(prod, f.p);
}

void build_tables(FieldData& f) {
  const auto q = f.q;
  f.add.assign(q * q, 0);
  f.mul.assign(q * q, 0);
  f.neg.assign(q, 0);
  f.inv.assign(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    auto ca = decode(a, f.p, f.e);
    std::vector<std::uint64_t> cn(f.e);
    for (unsigned i = 0; i < f.e; ++i) cn[i] = (f.p - ca[i]) % f.p;
    f.neg[a] = static_cast<std::uint8_t>(encode(cn, f.p));
    for (std::uint64_t b = 0; b < q; ++b) {
      auto cb = decode(b, f.p, f.e);
      std::vector<std::uint64_t> cs(f.e);
      for (unsigned i = 0; i < f.e; ++i) cs[i] = (ca[i] + cb[i]) % f.p;
      f.add[a * q + b] = static_cast<std::uint8_t>(encode(cs, f.p));
      f.mul[a * q + b] = static_cast<std::uint8_t>(ext_mul_slow(a, b, f));
    }
  }
  for (std::uint64_t a = 1; a < q; ++a)
    for (std::uint64_t b = 1; b < q; ++b)
      if (f.mul[a * q + b] == 1) f.inv[a] = static_cast<std::uint8_t>(b);
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

const FieldData* rational_data() {
  static const FieldData d{};
  return &d;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() { return Field(rational_data()); }

Field Field::finite(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw DomainError("field degree must be positive");
  if (p >= (1ull << 62)) throw DomainError("prime too large (must be < 2^62)");
  const ConwayEntry* conway = nullptr;
  if (e > 1) {
    for (const auto& c : conway_table())
      if (c.p == p && c.e == e) conway = &c;
    if (!conway)
      throw DomainError("F_" + std::to_string(p) + "^" + std::to_string(e) +
                        " is not supported (proper extensions only for q <= 16)");
  }
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.fields[{p, e}];
  if (!slot) {
    auto d = std::make_unique<FieldData>();
    d->kind = Kind::finite;
    d->p = p;
    d->e = e;
    d->q = 1;
    for (unsigned i = 0; i < e; ++i) d->q *= p;
    if (conway) {
      d->modulus = conway->modulus;
      build_tables(*d);
    } else {
      d->modulus = {0, 1};
    }
    slot = std::move(d);
  }
  return Field(slot.get());
}

Field Field::parse(std::string_view s) {
  if (s == "Q") return rationals();
  if (s.substr(0, 3) != "Fq:") throw ParseError("unknown field descriptor '" + std::string(s) + "'");
  auto rest = s.substr(3);
  auto caret = rest.find('^');
  std::uint64_t p = parse_u64(rest.substr(0, caret), "field characteristic");
  unsigned e = 1;
  if (caret != std::string_view::npos) e = static_cast<unsigned>(parse_u64(rest.substr(caret + 1), "field degree"));
  return finite(p, e);
}

Field::Kind Field::kind() const { return data_->kind; }
std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->e; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

std::string Field::descriptor() const {
  if (is_rational()) return "Q";
  return "Fq:" + std::to_string(data_->p) + "^" + std::to_string(data_->e);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(data_, mpq_class(v));
  std::int64_t p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Scalar(data_, static_cast<std::uint64_t>(r));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (is_rational()) return Scalar(data_, mpq_class(v));
  return Scalar(data_, static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), data_->p)));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (is_rational()) {
    mpq_class c(v);
    c.canonicalize();
    return Scalar(data_, c);
  }
  Scalar den = from_integer(v.get_den());
  if (den.is_zero())
    throw DomainError("denominator " + v.get_den().get_str() + " is not invertible in " + descriptor());
  return from_integer(v.get_num()) / den;
}

Scalar Field::from_code(std::uint64_t code) const {
  if (is_rational()) throw DomainError("from_code called on Q");
  if (code >= data_->q) throw DomainError("field code " + std::to_string(code) + " out of range for " + descriptor());
  return Scalar(data_, code);
}

Scalar Field::from_coefficients(const std::vector<std::int64_t>& coeffs) const {
  if (is_rational()) throw DomainError("coefficient vectors are only meaningful over F_q");
  if (coeffs.size() > data_->e)
    throw DomainError("coefficient vector longer than field degree for " + descriptor());
  std::vector<std::uint64_t> c(data_->e, 0);
  auto p = static_cast<std::int64_t>(data_->p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % p;
    c[i] = static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
  return Scalar(data_, encode(c, data_->p));
}

Scalar Field::parse_element(std::string_view text) const {
  if (is_rational()) {
    mpq_class v;
    try {
      if (text.empty() || v.set_str(std::string(text), 10) != 0) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    v.canonicalize();
    return Scalar(data_, v);
  }
  mpz_class z;
  try {
    if (text.empty() || z.set_str(std::string(text), 10) != 0) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("malformed field element '" + std::string(text) + "'");
  }
  if (data_->e == 1) return from_integer(z);
  if (z < 0 || z >= static_cast<unsigned long>(data_->q))
    throw ParseError("code '" + std::string(text) + "' out of range for " + descriptor());
  return from_code(z.get_ui());
}

std::vector<Scalar> Field::units() const {
  if (is_rational()) throw DomainError("Q has infinitely many units");
  std::vector<Scalar> out;
  out.reserve(data_->q - 1);
  for (std::uint64_t c = 1; c < data_->q; ++c) out.push_back(Scalar(data_, c));
  return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : field_(rational_data()), value_(mpq_class(0)) {}
Scalar::Scalar(const detail::FieldData* f, mpq_class q) : field_(f), value_(std::move(q)) {}
Scalar::Scalar(const detail::FieldData* f, std::uint64_t code) : field_(f), value_(code) {}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw DomainError("field mismatch: " + field().descriptor() + " vs " + o.field().descriptor());
}

bool Scalar::is_zero() const {
  if (field_->kind == Field::Kind::rational) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_->kind == Field::Kind::rational) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_->kind == Field::Kind::rational)
    return Scalar(field_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
  auto a = std::get<std::uint64_t>(value_), b = std::get<std::uint64_t>(o.value_);
  if (field_->e > 1) return Scalar(field_, std::uint64_t{field_->add[a * field_->q + b]});
  std::uint64_t s = a + b;
  if (s >= field_->p) s -= field_->p;
  return Scalar(field_, s);
}

Scalar Scalar::operator-() const {
  if (field_->kind == Field::Kind::rational) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  auto a = std::get<std::uint64_t>(value_);
  if (field_->e > 1) return Scalar(field_, std::uint64_t{field_->neg[a]});
  return Scalar(field_, a == 0 ? 0 : field_->p - a);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (field_->kind == Field::Kind::rational)
    return Scalar(field_, mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(o.value_)));
  return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_->kind == Field::Kind::rational)
    return Scalar(field_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
  auto a = std::get<std::uint64_t>(value_), b = std::get<std::uint64_t>(o.value_);
  if (field_->e > 1) return Scalar(field_, std::uint64_t{field_->mul[a * field_->q + b]});
  return Scalar(field_, mulmod(a, b, field_->p));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("zero has no multiplicative inverse");
  if (field_->kind == Field::Kind::rational) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  auto a = std::get<std::uint64_t>(value_);
  if (field_->e > 1) return Scalar(field_, std::uint64_t{field_->inv[a]});
  return Scalar(field_, invmod(a, field_->p));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(std::int64_t exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  Scalar result = field().one();
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

const mpq_class& Scalar::rational() const {
  if (field_->kind != Field::Kind::rational) throw DomainError("rational() called on an F_q element");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::code() const {
  if (field_->kind != Field::Kind::finite) throw DomainError("code() called on a rational");
  return std::get<std::uint64_t>(value_);
}

std::vector<std::uint64_t> Scalar::coefficients() const { return decode(code(), field_->p, field_->e); }

std::string Scalar::to_string() const {
  if (field_->kind == Field::Kind::rational) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

}  // namespace symloop
