#include "support.hpp"

#include "symloop/errors.hpp"

using namespace test;

namespace {

std::vector<RootA> roots_of(int n) {
  std::vector<RootA> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

}  // namespace

TEST_CASE("elem examples") {
  Ring k = Ring::of(Q());
  CHECK(elem({1, 2}, Poly(k), 2).is_identity());
  Poly a(k, q(2)), b(k, q(-5, 3));
  GroupMatrix p = elem({1, 2}, a, 3) * elem({2, 3}, b, 3);
  CHECK(p.at(0, 2) == a * b);
  CHECK_THROWS_AS(elem({1, 1}, a, 3), DomainError);
  CHECK_THROWS_AS(elem({1, 4}, a, 3), DomainError);
}

TEST_CASE("elem is additive") {
  SeededRng rng(3);
  for (Field f : {Q(), F(5)}) {
    Ring k = Ring::of(f);
    for (int s = 0; s < 30; ++s) {
      RootA root = roots_of(3)[rng.below(6)];
      Poly a(k, rng.element(f)), b(k, rng.element(f));
      CHECK(elem(root, a, 3) * elem(root, b, 3) == elem(root, a + b, 3));
    }
  }
}

TEST_CASE("w_elem examples") {
  Ring k = Ring::of(Q());
  Poly one(k, 1), zero(k);
  CHECK(w_elem({1, 2}, one, 2) == matrix(k, 2, {zero, one, -one, zero}));
  Poly u(k, q(3, 2));
  CHECK(w_elem({1, 2}, u, 3) == matrix(k, 3, {zero, u, zero, -u.inverse(), zero, zero, zero, zero, one}));
  CHECK(w_elem({1, 2}, u, 3) * w_elem({1, 2}, -u, 3) == GroupMatrix::identity(3, k));
  CHECK_THROWS_AS(w_elem({1, 2}, zero, 2), DomainError);
}

TEST_CASE("w(u)^-1 = w(-u)") {
  SeededRng rng(8);
  for (Field f : {Q(), F(7), F(2, 3)}) {
    Ring k = Ring::of(f);
    for (RootA root : roots_of(3)) {
      Poly u(k, rng.unit(f));
      CHECK(w_elem(root, u, 3).inverse() == w_elem(root, -u, 3));
    }
  }
}

TEST_CASE("h_elem examples and multiplicativity") {
  Ring k = Ring::of(Q());
  Poly u(k, q(5, 7)), one(k, 1), zero(k);
  CHECK(h_elem({1, 2}, u, 3) == matrix(k, 3, {u, zero, zero, zero, u.inverse(), zero, zero, zero, one}));
  CHECK(h_elem({2, 3}, one, 3).is_identity());
  CHECK_THROWS_AS(h_elem({1, 2}, zero, 2), DomainError);

  Field f11 = F(11);
  Ring k11 = Ring::of(f11);
  SeededRng rng(21);
  for (int s = 0; s < 40; ++s) {
    RootA root = roots_of(3)[rng.below(6)];
    Poly a(k11, rng.unit(f11)), b(k11, rng.unit(f11));
    CHECK(h_elem(root, a, 3) * h_elem(root, b, 3) == h_elem(root, a * b, 3));
  }
}

TEST_CASE("Chevalley commutator relations") {
  SeededRng rng(4);
  for (Field f : {Q(), F(5)}) {
    Ring k = Ring::of(f);
    for (int n = 3; n <= 4; ++n)
      for (RootA x : roots_of(n))
        for (RootA y : roots_of(n)) {
          if (y == x.negated() || y == x) continue;
          Poly a(k, rng.unit(f)), b(k, rng.unit(f));
          GroupMatrix c = commutator(elem(x, a, n), elem(y, b, n));
          const auto N = static_cast<std::size_t>(n);
          if (x.j == y.i && x.i != y.j)
            CHECK(c == elem({x.i, y.j}, a * b, N));
          else if (x.i == y.j && x.j != y.i)
            CHECK(c == elem({y.i, x.j}, -(a * b), N));
          else
            CHECK(c.is_identity());
        }
  }
}

TEST_CASE("determinant one is enforced and preserved") {
  Ring r = Ring::make(Q(), {"T"});
  const Poly T = Poly::variable(r, 0), one(r, 1), zero(r);
  CHECK_NOTHROW(matrix(r, 2, {one + T, T, -T, one - T}));
  CHECK_THROWS_AS(matrix(r, 2, {one + T, T, T, one - T}), DomainError);
  GroupMatrix m = elem({1, 2}, T, 3) * w_elem({2, 3}, Poly(r, 2), 3) * elem({3, 1}, T * T, 3);
  CHECK(determinant(3, r, m.entries()).is_one());
  CHECK(m * m.inverse() == GroupMatrix::identity(3, r));
}

TEST_CASE("eval_matrix") {
  Ring r = Ring::make(Q(), {"T"});
  const Poly T = Poly::variable(r, 0);
  Poly u(r, q(4, 3));
  Ring k = Ring::of(Q());
  CHECK(eval_matrix(elem({1, 2}, T * u, 2), Q().zero()).is_identity());
  CHECK(eval_matrix(elem({1, 2}, T * u, 2), Q().one()) == elem({1, 2}, Poly(k, q(4, 3)), 2));

  SeededRng rng(9);
  for (int s = 0; s < 20; ++s) {
    GroupMatrix a = elem({1, 2}, rng.poly(r, 2), 3) * elem({3, 1}, rng.poly(r, 2), 3);
    GroupMatrix b = elem({2, 3}, rng.poly(r, 2), 3) * elem({2, 1}, rng.poly(r, 1), 3);
    Scalar t = rng.element(Q());
    CHECK(eval_matrix(a * b, t) == eval_matrix(a, t) * eval_matrix(b, t));
  }
}

TEST_CASE("sizes do not mix") {
  Ring k = Ring::of(Q());
  CHECK_THROWS_AS(GroupMatrix::identity(2, k) * GroupMatrix::identity(3, k), DomainError);
  CHECK_THROWS_AS(GroupMatrix::identity(2, k) * GroupMatrix::identity(2, Ring::of(F(3))), DomainError);
}
