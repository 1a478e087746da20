#include "support.hpp"

#include "symloop/errors.hpp"
#include "symloop/factorization.hpp"

using namespace test;

TEST_CASE("an elementary matrix factors as itself") {
  Ring r = path_ring(Q());
  const Poly T = Poly::variable(r, 0);
  auto f = factor_elementary(elem({1, 2}, T, 2));
  REQUIRE(f.size() == 1);
  CHECK(f[0].root == RootA{1, 2});
  CHECK(f[0].param == T);
}

TEST_CASE("diag(2, 3) over F5") {
  Ring k = Ring::of(F(5));
  GroupMatrix d = matrix(k, 2, {Poly(k, 2), Poly(k), Poly(k), Poly(k, 3)});
  auto f = factor_elementary(d);
  CHECK(f.size() == 6);
  CHECK(multiply_factors(2, k, f) == d);
}

TEST_CASE("[[1+T, T], [-T, 1-T]] over Q[T]") {
  Ring r = path_ring(Q());
  const Poly T = Poly::variable(r, 0), one(r, 1);
  GroupMatrix m = matrix(r, 2, {one + T, T, -T, one - T});
  CHECK(multiply_factors(2, r, factor_elementary(m)) == m);
}

TEST_CASE("factorization errors") {
  Ring r = path_ring(Q());
  const Poly T = Poly::variable(r, 0);
  Ring r2 = Ring::make(Q(), {"T", "S"});
  CHECK_THROWS_AS(factor_elementary(elem({1, 2}, Poly::variable(r2, 0), 2)), DomainError);
  CHECK_THROWS_AS(path_to_steinberg(PathMatrix(elem({1, 2}, T + Poly(r, 1), 2))), DomainError);
}

TEST_CASE("random products re-multiply") {
  SeededRng rng(45);
  for (Field k : {F(7), Q(), F(2, 2)}) {
    Ring r = path_ring(k);
    for (int s = 0; s < 30; ++s) {
      GroupMatrix m = GroupMatrix::identity(3, r);
      const auto len = 1 + rng.below(12);
      for (std::uint64_t i = 0; i < len; ++i) {
        int a = static_cast<int>(1 + rng.below(3)), b = static_cast<int>(1 + rng.below(2));
        if (b >= a) ++b;
        m = m * elem({a, b}, rng.poly(r, 2), 3);
      }
      if (s % 5 == 0) m = m * h_elem({1, 3}, Poly(r, rng.unit(k)), 3);
      CHECK(multiply_factors(3, r, factor_elementary(m)) == m);
    }
  }
}

TEST_CASE("word_to_path") {
  Field k = Q();
  Ring base = Ring::of(k);
  Poly u(base, q(5, 2));
  CHECK(word_to_path(SteinbergWord::generator({1, 2}, u, 3)) == x_loop({1, 2}, q(5, 2), 3));
  CHECK(word_to_path(SteinbergWord(3, base)) == constant_path(3, k));
  PathMatrix y = word_to_path(symbol_word({1, 2}, Poly(base, 2), Poly(base, 3), 3));
  CHECK(y.is_loop());
}

TEST_CASE("path_to_steinberg") {
  Field k = Q();
  Ring base = Ring::of(k);
  SteinbergWord w = path_to_steinberg(x_loop({2, 3}, q(4), 3));
  CHECK(w == SteinbergWord::generator({2, 3}, Poly(base, 4), 3));
  CHECK(path_to_steinberg(constant_path(3, k)).empty());

  PathMatrix c = c_loop({1, 2}, q(2), q(3), 3);
  SteinbergWord lifted = path_to_steinberg(c);
  CHECK(in_k2(lifted));
}

TEST_CASE("translation contract and round trip") {
  SeededRng rng(64);
  for (Field k : {Q(), F(7)}) {
    Ring base = Ring::of(k);
    for (int s = 0; s < 20; ++s) {
      std::vector<Letter> letters;
      const auto len = 1 + rng.below(6);
      for (std::uint64_t i = 0; i < len; ++i) {
        int a = static_cast<int>(1 + rng.below(3)), b = static_cast<int>(1 + rng.below(2));
        if (b >= a) ++b;
        letters.push_back({{a, b}, Poly(base, rng.element(k)), 1});
      }
      SteinbergWord w(3, base, letters);
      PathMatrix y = word_to_path(w);
      SteinbergWord back = path_to_steinberg(y);
      CHECK(project(back) == y.end());
      CHECK(project(back) == project(w));
    }
  }
}
