#include "support.hpp"

#include "symloop/errors.hpp"
#include "symloop/simplicial.hpp"

using namespace test;

namespace {

SimplexPoly random_poly(SeededRng& rng, Field k, std::size_t level) {
  Ring r = simplex_ring(k, level);
  Poly::Terms terms;
  for (std::uint64_t t = 0, count = 1 + rng.below(4); t < count; ++t) {
    Monomial m(level);
    for (auto& e : m) e = static_cast<std::uint32_t>(rng.below(3));
    Scalar c = rng.unit(k);
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) it->second = it->second + c;
  }
  return SimplexPoly(level, Poly::from_terms(r, std::move(terms)));
}

}  // namespace

TEST_CASE("level one faces are the endpoint evaluations") {
  Ring r1 = simplex_ring(Q(), 1);
  SimplexPoly T(1, Poly::variable(r1, 0));
  CHECK(face(1, T).poly().is_zero());
  CHECK(face(0, T).poly().is_one());
  CHECK_THROWS_AS(face(2, T), DomainError);
  CHECK_THROWS_AS(face(0, SimplexPoly(0, Poly(Ring::of(Q()), 1))), DomainError);
  CHECK_THROWS_AS(degeneracy(2, T), DomainError);
}

TEST_CASE("X0 elimination round trip") {
  Field k = Q();
  Ring full = full_simplex_ring(k, 2);
  Poly x0 = Poly::variable(full, 0), x1 = Poly::variable(full, 1), x2 = Poly::variable(full, 2);
  Poly sum = x0 + x1 + x2;
  CHECK(SimplexPoly::from_full(2, sum).poly().is_one());
  SimplexPoly f = SimplexPoly::from_full(2, x0 * x1 - x2 * x2);
  CHECK(SimplexPoly::from_full(2, f.to_full()) == f);
  Ring r2 = simplex_ring(k, 2);
  Poly X1 = Poly::variable(r2, 0), X2 = Poly::variable(r2, 1);
  CHECK(f.poly() == (Poly(r2, 1) - X1 - X2) * X1 - X2 * X2);
}

TEST_CASE("simplicial identities up to level 4") {
  SeededRng rng(1234);
  for (Field k : {Q(), F(5)})
    for (std::size_t n = 1; n <= 4; ++n)
      for (int s = 0; s < 10; ++s) {
        SimplexPoly f = random_poly(rng, k, n);
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (n >= 2) CHECK(face(i, face(j, f)) == face(j - 1, face(i, f)));
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i <= j; ++i) CHECK(degeneracy(i, degeneracy(j, f)) == degeneracy(j + 1, degeneracy(i, f)));
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i <= n + 1; ++i) {
            SimplexPoly lhs = face(i, degeneracy(j, f));
            if (i < j)
              CHECK(lhs == degeneracy(j - 1, face(i, f)));
            else if (i <= j + 1)
              CHECK(lhs == f);
            else
              CHECK(lhs == degeneracy(j, face(i - 1, f)));
          }
      }
}

TEST_CASE("s0 then d0 is the identity at level 2") {
  SeededRng rng(8);
  for (int s = 0; s < 20; ++s) {
    SimplexPoly f = random_poly(rng, Q(), 2);
    CHECK(face(0, degeneracy(0, f)) == f);
  }
}

TEST_CASE("faces and degeneracies are ring homomorphisms on matrices") {
  SeededRng rng(3);
  Field k = Q();
  for (int s = 0; s < 10; ++s) {
    SimplexMatrix a(2, elem({1, 2}, random_poly(rng, k, 2).poly(), 2) * elem({2, 1}, random_poly(rng, k, 2).poly(), 2));
    SimplexMatrix b(2, elem({2, 1}, random_poly(rng, k, 2).poly(), 2));
    SimplexMatrix ab(2, a.matrix() * b.matrix());
    for (std::size_t i = 0; i <= 2; ++i) {
      CHECK(face(i, ab).matrix() == face(i, a).matrix() * face(i, b).matrix());
      CHECK(degeneracy(i, ab).matrix() == degeneracy(i, a).matrix() * degeneracy(i, b).matrix());
    }
  }
}

TEST_CASE("Moore loops") {
  Field k = Q();
  CHECK(moore_is_loop(SimplexMatrix(1, GroupMatrix::identity(2, simplex_ring(k, 1)))));
  CHECK(moore_is_loop(to_simplex(c_loop({1, 2}, q(2), q(5), 3))));
  CHECK_FALSE(moore_is_loop(to_simplex(x_loop({1, 2}, q(2), 2))));
  PathMatrix c = c_loop({2, 1}, q(3), q(-1, 2), 2);
  CHECK(to_path(to_simplex(c)) == c);
}

TEST_CASE("homotopy witnesses") {
  Field k = Q();
  Ring r2 = simplex_ring(k, 2), r1 = simplex_ring(k, 1);
  const Poly X1 = Poly::variable(r2, 0), X2 = Poly::variable(r2, 1), T = Poly::variable(r1, 0);
  SimplexMatrix id1(1, GroupMatrix::identity(2, r1));
  SimplexMatrix id2(2, GroupMatrix::identity(2, r2));

  CHECK(verify_homotopy_witness(id2, id1, id1).certified);

  SimplexMatrix sigma(2, elem({1, 2}, X1 * X2, 2));
  SimplexMatrix loop(1, elem({1, 2}, T - T * T, 2));
  auto c = verify_homotopy_witness(sigma, id1, loop);
  CHECK(c.certified);
  CHECK(c.d1.matrix().is_identity());
  CHECK(c.d2.matrix().is_identity());
  // d0 sigma = e12(X0 X1) with X0 = 1 - T
  CHECK(c.d0.matrix() == elem({1, 2}, (Poly(r1, 1) - T) * T, 2));
  CHECK(moore_is_loop(c.d0));

  auto wrong = verify_homotopy_witness(SimplexMatrix(2, elem({1, 2}, X1, 2)), id1, loop);
  CHECK_FALSE(wrong.certified);
  CHECK_FALSE(wrong.d2.matrix().is_identity());

  CHECK_THROWS_AS(verify_homotopy_witness(sigma, id1, SimplexMatrix(1, elem({1, 2}, T, 2))), DomainError);
}
