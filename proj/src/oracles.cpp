#include "symloop/oracles.hpp"

#include <map>
#include <stdexcept>

#include "symloop/errors.hpp"

namespace symloop {

AbelianGroupPresentation milnor_k2_finite_field(std::uint64_t q, const SnfOptions& options) {
  if (q < 2 || q > 16) throw DomainError("k2m-field: q must be a prime power in [2, 16], got " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p) ++p;
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError("k2m-field: " + std::to_string(q) + " is not a prime power");
  Field k = Field::finite(p, e);

  const auto units = k.units();
  const std::size_t m = units.size();
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[units[i].code()] = i;
  auto gen = [&](const Scalar& a, const Scalar& b) { return static_cast<std::uint32_t>(pos.at(a.code()) * m + pos.at(b.code())); };

  std::vector<std::string> names;
  for (const auto& a : units)
    for (const auto& b : units) names.push_back("{" + a.to_string() + "," + b.to_string() + "}");

  SparseIntMatrix rel(0, m * m);
  for (const auto& a : units)
    for (const auto& b : units)
      for (const auto& c : units) {
        rel.push_row({{gen(a * b, c), 1}, {gen(a, c), -1}, {gen(b, c), -1}});
        rel.push_row({{gen(c, a * b), 1}, {gen(c, a), -1}, {gen(c, b), -1}});
      }
  for (const auto& u : units)
    if (!u.is_one()) rel.push_row({{gen(u, k.one() - u), 1}});

  auto out = present(std::move(names), std::move(rel), options);
  out.note = "K_2 of the finite field " + k.descriptor() + "; finite fields serve as oracle validation only";
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Scalar> mat_mul(std::size_t n, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> c(n * n, a.front().field().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& x = a[i * n + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
    }
  return c;
}

std::vector<std::uint64_t> key_of(const std::vector<Scalar>& m) {
  std::vector<std::uint64_t> k;
  k.reserve(m.size());
  for (const auto& s : m) k.push_back(s.code());
  return k;
}

}  // namespace

FiniteMatrixGroup enumerate_group(const std::vector<GroupMatrix>& gens, std::size_t order_bound) {
  if (gens.empty()) throw DomainError("schur: at least one generator is required");
  FiniteMatrixGroup g;
  g.n = gens.front().n();
  Ring r = gens.front().ring();
  if (!r.is_field() || !r.field().is_finite())
    throw DomainError("schur: generators must be matrices over a finite field, got " + r.descriptor());
  g.field = r.field();
  std::vector<std::vector<Scalar>> gen_entries;
  for (const auto& m : gens) {
    if (m.n() != g.n || !(m.ring() == r)) throw DomainError("schur: generators differ in size or ring");
    std::vector<Scalar> e;
    for (const auto& p : m.entries()) e.push_back(p.is_zero() ? g.field.zero() : p.constant_value());
    gen_entries.push_back(std::move(e));
  }

  std::map<std::vector<std::uint64_t>, std::uint32_t> index;
  auto add = [&](std::vector<Scalar> e) {
    auto [it, fresh] = index.emplace(key_of(e), static_cast<std::uint32_t>(g.elements.size()));
    if (fresh) {
      if (g.elements.size() >= order_bound)
        throw DomainError("schur: group order exceeds bound " + std::to_string(order_bound) + " (" +
                          std::to_string(g.elements.size()) + " elements enumerated before stopping)");
      g.elements.push_back(std::move(e));
    }
    return it->second;
  };
  std::vector<Scalar> id(g.n * g.n, g.field.zero());
  for (std::size_t i = 0; i < g.n; ++i) id[i * g.n + i] = g.field.one();
  add(std::move(id));
  for (std::size_t head = 0; head < g.elements.size(); ++head)
    for (const auto& s : gen_entries) add(mat_mul(g.n, g.elements[head], s));

  const std::size_t order = g.elements.size();
  g.mul.assign(order, std::vector<std::uint32_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) g.mul[a][b] = index.at(key_of(mat_mul(g.n, g.elements[a], g.elements[b])));
  return g;
}

BarComplex bar_complex(const FiniteMatrixGroup& g) {
  const std::size_t m = g.order() - 1;
  auto c1 = [](std::size_t a) { return static_cast<std::uint32_t>(a - 1); };
  auto c2 = [m](std::size_t a, std::size_t b) { return static_cast<std::uint32_t>((a - 1) * m + (b - 1)); };
  BarComplex bar{SparseIntMatrix(0, m), SparseIntMatrix(0, m * m)};
  for (std::size_t a = 1; a <= m; ++a)
    for (std::size_t b = 1; b <= m; ++b) {
      SparseRow row{{c1(b), 1}, {c1(a), 1}};
      if (auto ab = g.mul[a][b]; ab != 0) row.emplace_back(c1(ab), -1);
      bar.d2.push_row(std::move(row));
    }
  for (std::size_t a = 1; a <= m; ++a)
    for (std::size_t b = 1; b <= m; ++b) {
      const std::size_t ab = g.mul[a][b];
      for (std::size_t c = 1; c <= m; ++c) {
        const std::size_t bc = g.mul[b][c];
        SparseRow row{{c2(b, c), 1}, {c2(a, b), -1}};
        if (ab != 0) row.emplace_back(c2(ab, c), -1);
        if (bc != 0) row.emplace_back(c2(a, bc), 1);
        bar.d3.push_row(std::move(row));
      }
    }
  return bar;
}

bool boundary_squares_to_zero(const BarComplex& bar) {
  for (const auto& row : bar.d3.data) {
    std::map<std::uint32_t, mpz_class> acc;
    for (const auto& [c, v] : row)
      for (const auto& [c1, w] : bar.d2.data[c]) acc[c1] += v * w;
    for (const auto& [c, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

SchurMultiplier schur_multiplier(const std::vector<GroupMatrix>& gens, std::size_t order_bound,
                                 const SnfOptions& options) {
  FiniteMatrixGroup g = enumerate_group(gens, order_bound);
  SchurMultiplier out;
  out.order = g.order();
  BarComplex bar = bar_complex(g);
  if (!boundary_squares_to_zero(bar)) throw std::logic_error("schur: bar complex boundary does not square to zero");
  out.boundary_checked = true;

  const std::size_t m = g.order() - 1;
  std::vector<std::string> names;
  names.reserve(m * m);
  for (std::size_t a = 1; a <= m; ++a)
    for (std::size_t b = 1; b <= m; ++b) names.push_back("[" + std::to_string(a) + "|" + std::to_string(b) + "]");
  const std::size_t rank_d2 = smith_normal_form(bar.d2, options).rank;
  out.h2 = present(std::move(names), std::move(bar.d3), options);
  // coker d3 = H_2 + im d2, and im d2 is free of rank rank(d2).
  out.h2.free_rank -= rank_d2;
  out.h2.note = "H_2 of a group of order " + std::to_string(out.order) + " over " + g.field.descriptor() +
                "; finite groups serve as oracle validation only";
  return out;
}

}  // namespace symloop
