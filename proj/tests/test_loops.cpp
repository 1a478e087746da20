#include "support.hpp"

#include "symloop/errors.hpp"
#include "symloop/loops.hpp"

using namespace test;

TEST_CASE("x_loop") {
  Field k = Q();
  CHECK(x_loop({1, 2}, k.zero(), 2) == constant_path(2, k));
  PathMatrix x = x_loop({1, 2}, q(3), 2);
  CHECK(x.is_path());
  CHECK(x.end() == elem({1, 2}, Poly(Ring::of(k), q(3)), 2));
  CHECK_FALSE(x.is_loop());
}

TEST_CASE("w_loop in SL2 matches the hand expansion") {
  // x(Tu) x_-(-T/u) x(Tu) = [[1 - T^2, Tu(2 - T^2)], [-T/u, 1 - T^2]]
  for (Field k : {Q(), F(7)}) {
    Ring r = path_ring(k);
    const Poly T = Poly::variable(r, 0), one(r, 1), two(r, 2);
    for (Scalar u : {k.from_int(2), k.from_int(-3), k.from_int(5)}) {
      Poly U(r, u);
      PathMatrix w = w_loop({1, 2}, u, 2);
      CHECK(w.matrix() == matrix(r, 2, {one - T * T, T * U * (two - T * T), -(T * U.inverse()), one - T * T}));
    }
  }
}

TEST_CASE("h_loop") {
  Field k = Q();
  CHECK(h_loop({1, 2}, k.one(), 3) == constant_path(3, k));
  PathMatrix h = h_loop({2, 3}, q(2, 5), 3);
  CHECK(h.is_path());
  CHECK_FALSE(h.is_loop());
  CHECK(h.end() == h_elem({2, 3}, Poly(Ring::of(k), q(2, 5)), 3));
  CHECK_THROWS_AS(h_loop({1, 2}, k.zero(), 2), DomainError);
  CHECK_THROWS_AS(w_loop({1, 2}, k.zero(), 2), DomainError);
}

TEST_CASE("c_loop") {
  Field k = Q();
  CHECK(c_loop({1, 2}, k.one(), q(7), 2) == constant_path(2, k));
  CHECK(c_loop({1, 2}, q(7), k.one(), 2) == constant_path(2, k));
  CHECK(c_loop({1, 2}, q(2), q(3), 2).is_loop());
  CHECK_THROWS_AS(c_loop({1, 2}, k.zero(), q(3), 2), DomainError);
}

TEST_CASE("every c_loop is a loop") {
  SeededRng rng(31);
  for (Field k : {Q(), F(7), F(3, 2)})
    for (std::size_t n = 2; n <= 4; ++n)
      for (int i = 1; i <= static_cast<int>(n); ++i)
        for (int j = 1; j <= static_cast<int>(n); ++j) {
          if (i == j) continue;
          CHECK(c_loop({i, j}, rng.unit(k), rng.unit(k), n).is_loop());
        }
}

TEST_CASE("SL2 closed form") {
  Field k = Q();
  PathMatrix closed = sl2_closed_form(q(2), q(3));
  CHECK(closed == c_loop({1, 2}, q(2), q(3), 2));
  for (Scalar t : {k.zero(), k.one(), -k.one()}) CHECK(closed.at(t).is_identity());
  CHECK(sl2_closed_form(k.one(), q(5)) == constant_path(2, k));

  SeededRng rng(77);
  for (Field f : {Q(), F(101), F(13)})
    for (int s = 0; s < 10; ++s) {
      Scalar u = rng.unit(f), v = rng.unit(f);
      CHECK(sl2_closed_form(u, v) == c_loop({1, 2}, u, v, 2));
    }
}

TEST_CASE("path identities") {
  Field k = Q();
  SeededRng rng(2);
  for (int s = 0; s < 10; ++s) {
    Scalar u = rng.unit(k);
    auto c = verify_path_identity({{w_loop({1, 2}, u, 3)}, {w_loop({1, 2}, -u, 3)}}, {{constant_path(3, k)}});
    CHECK(c.holds);
    CHECK_FALSE(c.certificate);
  }
  Scalar a = q(2), b = q(3);
  auto def = verify_path_identity({{c_loop({1, 2}, a, b, 2)}},
                                  {{h_loop({1, 2}, a, 2)}, {h_loop({1, 2}, b, 2)}, {h_loop({1, 2}, a * b, 2), true}});
  CHECK(def.holds);

  auto refuted = verify_path_identity({{h_loop({1, 2}, a, 2)}, {h_loop({1, 2}, b, 2)}},
                                      {{h_loop({1, 2}, b, 2)}, {h_loop({1, 2}, a, 2)}});
  CHECK_FALSE(refuted.holds);
  REQUIRE(refuted.certificate);
  CHECK_FALSE(refuted.certificate->lhs == refuted.certificate->rhs);

  CHECK_THROWS_AS(verify_path_identity({{constant_path(2, k)}}, {{constant_path(3, k)}}), DomainError);
}
