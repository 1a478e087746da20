#include "support.hpp"

#include <algorithm>

#include "symloop/errors.hpp"
#include "symloop/steinberg.hpp"

using namespace test;

namespace {

SteinbergWord x(RootA root, Poly u, std::size_t n = 3) { return SteinbergWord::generator(root, u, n); }

SteinbergWord random_word(SeededRng& rng, Field k, std::size_t n, std::size_t max_len) {
  Ring base = Ring::of(k);
  std::vector<Letter> letters;
  const auto len = rng.below(max_len + 1);
  for (std::uint64_t i = 0; i < len; ++i) {
    int a = static_cast<int>(1 + rng.below(n));
    int b = static_cast<int>(1 + rng.below(n - 1));
    if (b >= a) ++b;
    letters.push_back({{a, b}, Poly(base, rng.element(k)), rng.below(2) ? 1 : -1});
  }
  return SteinbergWord(n, base, std::move(letters));
}

}  // namespace

TEST_CASE("st_mul and st_inv") {
  Ring k = Ring::of(Q());
  Poly u(k, q(3, 4)), v(k, q(-2));
  CHECK(st_mul(x({1, 2}, u), x({1, 2}, -u)).empty());
  SteinbergWord w = st_mul(x({1, 2}, u), x({2, 3}, v));
  SteinbergWord expected = st_mul(x({2, 3}, -v), x({1, 2}, -u));
  CHECK(st_inv(w) == expected);
  CHECK(st_mul(w, st_inv(w)).empty());
  CHECK_THROWS_AS(st_mul(x({1, 2}, u), x({1, 2}, u, 4)), DomainError);
}

TEST_CASE("canonical form") {
  Ring k = Ring::of(Q());
  Poly u(k, q(2)), v(k, q(5));
  SteinbergWord w(3, k, {{{1, 2}, u, 1}, {{1, 2}, v, 1}, {{2, 3}, Poly(k), 1}, {{1, 3}, u, -1}});
  REQUIRE(w.size() == 2);
  CHECK(w.letters()[0] == Letter{{1, 2}, u + v, 1});
  CHECK(w.letters()[1] == Letter{{1, 3}, -u, 1});
}

TEST_CASE("reduction is confluent under random rewrite orders") {
  SeededRng rng(99);
  for (Field f : {Q(), F(3)}) {
    for (int s = 0; s < 100; ++s) {
      SteinbergWord seed_word = random_word(rng, f, 3, 10);
      // raw letter sequence with merge opportunities
      std::vector<Letter> raw;
      for (const auto& l : seed_word.letters()) {
        raw.push_back(l);
        if (rng.below(3) == 0) raw.push_back({l.root, Poly(Ring::of(f), rng.element(f)), rng.below(2) ? 1 : -1});
      }
      if (rng.below(2) && !raw.empty()) raw.push_back({raw.front().root, -raw.front().param, 1});
      auto canonical = rewrite::canonicalize(raw);
      for (int order = 0; order < 5; ++order) {
        auto cur = raw;
        for (auto red = rewrite::redexes(cur); !red.empty(); red = rewrite::redexes(cur))
          cur = rewrite::apply_at(cur, red[rng.below(red.size())]);
        CHECK(cur == canonical);
      }
    }
  }
}

TEST_CASE("project") {
  Ring k = Ring::of(Q());
  CHECK(project(SteinbergWord(3, k)).is_identity());
  SteinbergWord w = st_mul(x({1, 2}, Poly(k, 2)), x({2, 3}, Poly(k, 3)));
  CHECK(project(w).at(0, 2) == Poly(k, 6));

  Poly a(k, q(5)), b(k, q(-1, 3));
  GroupMatrix comm = commutator(elem({1, 2}, a, 3), elem({2, 3}, b, 3));
  CHECK(comm == elem({1, 3}, a * b, 3));
}

TEST_CASE("project is a homomorphism") {
  SeededRng rng(12);
  for (Field f : {F(5), Q()})
    for (int s = 0; s < 100; ++s) {
      SteinbergWord a = random_word(rng, f, 3, 8), b = random_word(rng, f, 3, 8);
      CHECK(project(st_mul(a, b)) == project(a) * project(b));
      CHECK(project(st_inv(a)) == project(a).inverse());
    }
}

TEST_CASE("symbol words") {
  Ring k = Ring::of(Q());
  Poly two(k, 2), three(k, 3), one(k, 1);
  CHECK(symbol_word({1, 2}, one, three, 3).empty());
  SteinbergWord c = symbol_word({1, 2}, two, three, 3);
  CHECK(c.size() <= 18);
  CHECK(in_k2(c));
  CHECK(in_k2(symbol_word({2, 3}, two, two.inverse(), 3)));
  CHECK_FALSE(in_k2(x({1, 2}, two)));
  CHECK_THROWS_AS(symbol_word({1, 2}, Poly(k), three, 3), DomainError);

  SeededRng rng(6);
  for (Field f : {Q(), F(5), F(2, 2)}) {
    Ring base = Ring::of(f);
    for (int s = 0; s < 30; ++s) {
      int i = static_cast<int>(1 + rng.below(3)), j = static_cast<int>(1 + rng.below(2));
      if (j >= i) ++j;
      CHECK(in_k2(symbol_word({i, j}, Poly(base, rng.unit(f)), Poly(base, rng.unit(f)), 3)));
    }
  }
}

TEST_CASE("commutator residue lies in K2") {
  Ring k = Ring::of(Q());
  Poly a(k, q(2, 3)), b(k, q(7));
  SteinbergWord xa = x({1, 2}, a), yb = x({2, 3}, b);
  SteinbergWord comm = st_mul(st_mul(xa, yb), st_mul(st_inv(xa), st_inv(yb)));
  SteinbergWord residue = st_mul(comm, st_inv(x({1, 3}, a * b)));
  CHECK(in_k2(residue));
  CHECK_FALSE(residue.empty());
}

TEST_CASE("commute_adjacent preserves the projection") {
  Ring k = Ring::of(Q());
  Poly s(k, q(3)), t(k, q(-2, 5));
  SteinbergWord w = st_mul(x({1, 2}, s), x({2, 3}, t));
  SteinbergWord swapped = commute_adjacent(w, 0);
  CHECK(project(swapped) == project(w));
  REQUIRE(swapped.size() == 3);
  CHECK(swapped.letters()[0].root == RootA{1, 3});
  CHECK(swapped.letters()[1].root == RootA{2, 3});
  CHECK(swapped.letters()[2].root == RootA{1, 2});

  SteinbergWord w2 = st_mul(x({2, 3}, s), x({1, 2}, t));
  CHECK(project(commute_adjacent(w2, 0)) == project(w2));
  SteinbergWord w3 = st_mul(x({1, 2}, s), x({1, 3}, t));
  CHECK(commute_adjacent(w3, 0).size() == 2);
  CHECK_THROWS_AS(commute_adjacent(st_mul(x({1, 2}, s), x({2, 1}, t)), 0), DomainError);
}

TEST_CASE("rank one is flagged") {
  Ring k = Ring::of(Q());
  CHECK_FALSE(SteinbergWord(2, k).presentation_faithful());
  CHECK(SteinbergWord(3, k).presentation_faithful());
}

TEST_CASE("tame invariants of symbol products") {
  SymbolProduct s23{{SymbolFactor{2, 3, 1}}};
  auto inv = tame_invariants(s23);
  CHECK(inv.at(3) == 2);
  CHECK(inv.at(2) == 1);

  SymbolProduct steinberg{{SymbolFactor{7, -6, 1}}};
  for (const auto& [p, v] : tame_invariants(steinberg)) CHECK(v == 1);

  SymbolProduct cancel{{SymbolFactor{4, 9, 1}, SymbolFactor{4, 9, -1}}};
  for (const auto& [p, v] : tame_invariants(cancel)) CHECK(v == 1);

  CHECK(in_k2(to_word(s23, {1, 2}, 3)));
}
