#include "symloop/steinberg.hpp"

#include <set>

#include "symloop/errors.hpp"
#include "symloop/tame.hpp"

namespace symloop {

namespace rewrite {

std::vector<Letter> canonicalize(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto& l : letters) {
    if (l.sign < 0) {
      l.param = -l.param;
      l.sign = 1;
    }
    if (l.param.is_zero()) continue;
    if (!out.empty() && out.back().root == l.root) {
      out.back().param += l.param;
      if (out.back().param.is_zero()) out.pop_back();
      continue;
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::size_t> redexes(const std::vector<Letter>& letters) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const auto& l = letters[k];
    bool merge = k + 1 < letters.size() && l.sign > 0 && letters[k + 1].sign > 0 && letters[k + 1].root == l.root;
    if (l.sign < 0 || l.param.is_zero() || merge) out.push_back(k);
  }
  return out;
}

std::vector<Letter> apply_at(std::vector<Letter> letters, std::size_t pos) {
  if (pos >= letters.size()) throw DomainError("rewrite position out of range");
  auto& l = letters[pos];
  if (l.sign < 0) {
    l.param = -l.param;
    l.sign = 1;
  } else if (l.param.is_zero()) {
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos));
  } else if (pos + 1 < letters.size() && letters[pos + 1].sign > 0 && letters[pos + 1].root == l.root) {
    l.param += letters[pos + 1].param;
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  } else {
    throw DomainError("no rewrite rule applies at position " + std::to_string(pos));
  }
  return letters;
}

}  // namespace rewrite

// ---------------------------------------------------------------------------

SteinbergWord::SteinbergWord(std::size_t n, Ring ring) : n_(n), ring_(ring) {
  if (n < 2) throw DomainError("Steinberg words need n >= 2");
}

SteinbergWord::SteinbergWord(std::size_t n, Ring ring, std::vector<Letter> letters) : SteinbergWord(n, ring) {
  for (const auto& l : letters) {
    l.root.validate(n);
    if (!(l.param.ring() == ring))
      throw DomainError("letter parameter is in " + l.param.ring().descriptor() + ", word ring is " + ring.descriptor());
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
  letters_ = rewrite::canonicalize(std::move(letters));
}

SteinbergWord SteinbergWord::generator(RootA root, const Poly& param, std::size_t n) {
  return SteinbergWord(n, param.ring(), {Letter{root, param, 1}});
}

namespace {

void require_compatible(const SteinbergWord& a, const SteinbergWord& b) {
  if (a.n() != b.n()) throw DomainError("Steinberg words of different sizes");
  if (!(a.ring() == b.ring()))
    throw DomainError("Steinberg words over different rings: " + a.ring().descriptor() + " vs " + b.ring().descriptor());
}

}  // namespace

SteinbergWord st_mul(const SteinbergWord& a, const SteinbergWord& b) {
  require_compatible(a, b);
  std::vector<Letter> l = a.letters();
  l.insert(l.end(), b.letters().begin(), b.letters().end());
  return SteinbergWord(a.n(), a.ring(), std::move(l));
}

SteinbergWord st_inv(const SteinbergWord& w) {
  std::vector<Letter> l;
  l.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) l.push_back(Letter{it->root, -it->param, 1});
  return SteinbergWord(w.n(), w.ring(), std::move(l));
}

GroupMatrix project(const SteinbergWord& w) {
  GroupMatrix acc = GroupMatrix::identity(w.n(), w.ring());
  for (const auto& l : w.letters()) acc = acc * elem(l.root, l.sign > 0 ? l.param : -l.param, w.n());
  return acc;
}

SteinbergWord w_word(RootA root, const Poly& u, std::size_t n) {
  if (!u.is_unit()) throw DomainError("w~: " + u.to_string() + " is not invertible");
  return SteinbergWord(n, u.ring(), {{root, u, 1}, {root.negated(), -u.inverse(), 1}, {root, u, 1}});
}

SteinbergWord h_word(RootA root, const Poly& u, std::size_t n) {
  return st_mul(w_word(root, u, n), st_inv(w_word(root, Poly(u.ring(), 1), n)));
}

SteinbergWord symbol_word(RootA root, const Poly& u, const Poly& v, std::size_t n) {
  if (!u.is_unit() || !v.is_unit())
    throw DomainError("symbol_word: arguments must be invertible, got " + u.to_string() + ", " + v.to_string());
  return st_mul(st_mul(h_word(root, u, n), h_word(root, v, n)), st_inv(h_word(root, u * v, n)));
}

bool in_k2(const SteinbergWord& w) { return project(w).is_identity(); }

SteinbergWord commute_adjacent(const SteinbergWord& w, std::size_t pos) {
  if (pos + 1 >= w.size()) throw DomainError("commute_adjacent: position " + std::to_string(pos) + " has no successor");
  const Letter& x = w.letters()[pos];
  const Letter& y = w.letters()[pos + 1];
  const int i = x.root.i, j = x.root.j, k = y.root.i, l = y.root.j;
  if (i == l && j == k) throw DomainError("commute_adjacent: roots " + x.root.to_string() + " and " + y.root.to_string() +
                                          " are opposite; no Chevalley commutator formula");
  std::vector<Letter> out(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos));
  const Poly st = x.param * y.param;
  if (j == k)
    out.push_back({{i, l}, st, 1});
  else if (i == l)
    out.push_back({{k, j}, -st, 1});
  out.push_back(y);
  out.push_back(x);
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.letters().end());
  return SteinbergWord(w.n(), w.ring(), std::move(out));
}

// ---------------------------------------------------------------------------

SteinbergWord to_word(const SymbolProduct& s, RootA root, std::size_t n) {
  Field q = Field::rationals();
  Ring r = Ring::of(q);
  SteinbergWord acc(n, r);
  for (const auto& f : s.factors) {
    SteinbergWord c = symbol_word(root, Poly(r, q.from_rational(f.a)), Poly(r, q.from_rational(f.b)), n);
    SteinbergWord ci = st_inv(c);
    for (int e = 0; e < std::abs(f.exponent); ++e) acc = st_mul(acc, f.exponent > 0 ? c : ci);
  }
  return acc;
}

std::map<std::uint64_t, std::uint64_t> tame_invariants(const SymbolProduct& s) {
  std::set<std::uint64_t> primes;
  for (const auto& f : s.factors) {
    if (sgn(f.a) == 0 || sgn(f.b) == 0) throw DomainError("tame_invariants: symbol entries must be nonzero");
    for (const mpz_class* z : {&f.a.get_num(), &f.a.get_den(), &f.b.get_num(), &f.b.get_den()})
      for (auto p : prime_factors(*z)) primes.insert(p);
  }
  std::map<std::uint64_t, std::uint64_t> out;
  for (auto p : primes) {
    mpz_class value = 1;
    const mpz_class pz(static_cast<unsigned long>(p));
    for (const auto& f : s.factors) {
      mpz_class t(static_cast<unsigned long>(tame_symbol(f.a, f.b, p)));
      if (f.exponent < 0) mpz_invert(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      mpz_class te;
      mpz_powm_ui(te.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(std::abs(f.exponent)), pz.get_mpz_t());
      value = value * te % pz;
    }
    out[p] = value.get_ui();
  }
  return out;
}

}  // namespace symloop
