#include "symloop/factorization.hpp"

#include "symloop/errors.hpp"

namespace symloop {

namespace {

/// Working copy of the matrix with a log of the row operations applied to it.
/// Every logged operation is "row r += c * row s", i.e. left multiplication
/// by x_{(r+1, s+1)}(c).
class Reducer {
 public:
  explicit Reducer(const GroupMatrix& m) : n_(m.n()), ring_(m.ring()), a_(m.entries()) {}

  Poly& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  void add_row(std::size_t target, std::size_t source, const Poly& c) {
    if (c.is_zero()) return;
    for (std::size_t col = 0; col < n_; ++col) {
      const Poly& s = at(source, col);
      if (!s.is_zero()) at(target, col) += c * s;
    }
    ops_.push_back({RootA{static_cast<int>(target) + 1, static_cast<int>(source) + 1}, c});
  }

  // E_k ... E_1 M = D, so M = E_1^{-1} ... E_k^{-1} D.
  std::vector<ElementaryFactor> inverse_ops() const {
    std::vector<ElementaryFactor> out;
    out.reserve(ops_.size());
    for (const auto& op : ops_) out.push_back({op.root, -op.param});
    return out;
  }

  std::size_t n() const { return n_; }
  Ring ring() const { return ring_; }

 private:
  std::size_t n_;
  Ring ring_;
  std::vector<Poly> a_;
  std::vector<ElementaryFactor> ops_;
};

void append_h(std::vector<ElementaryFactor>& out, RootA root, const Poly& u) {
  if (u.is_one()) return;
  const Poly one(u.ring(), 1);
  // w(u) = x_a(u) x_-a(-1/u) x_a(u);  w(1)^{-1} = x_a(-1) x_-a(1) x_a(-1)
  out.push_back({root, u});
  out.push_back({root.negated(), -u.inverse()});
  out.push_back({root, u});
  out.push_back({root, -one});
  out.push_back({root.negated(), one});
  out.push_back({root, -one});
}

}  // namespace

std::vector<ElementaryFactor> factor_elementary(const GroupMatrix& m) {
  if (m.ring().num_variables() > 1)
    throw DomainError("factor_elementary: only fields and k[T] are supported, got " + m.ring().descriptor());
  Poly det = determinant(m.n(), m.ring(), m.entries());
  if (!det.is_one()) throw DomainError("factor_elementary: determinant is " + det.to_string() + ", expected 1");

  Reducer red(m);
  const std::size_t n = m.n();
  for (std::size_t col = 0; col < n; ++col) {
    // Euclidean algorithm on rows col..n-1 of this column.
    for (;;) {
      std::size_t pivot = n;
      for (std::size_t r = col; r < n; ++r) {
        const Poly& e = red.at(r, col);
        if (e.is_zero()) continue;
        if (pivot == n || e.degree() < red.at(pivot, col).degree()) pivot = r;
      }
      if (pivot == n) throw DomainError("factor_elementary: singular column (determinant check failed?)");
      bool others = false;
      for (std::size_t r = col; r < n; ++r) {
        if (r == pivot || red.at(r, col).is_zero()) continue;
        auto [q, rem] = poly_divmod(red.at(r, col), red.at(pivot, col));
        red.add_row(r, pivot, -q);
        others = others || !rem.is_zero();
      }
      if (others) continue;
      if (pivot != col) {
        // Move the gcd to the diagonal with two transvections.
        red.add_row(col, pivot, Poly(red.ring(), 1));
        red.add_row(pivot, col, Poly(red.ring(), -1));
      }
      break;
    }
  }
  // Upper triangular with unit diagonal: clear above the diagonal.
  for (std::size_t col = n; col-- > 1;) {
    const Poly d_inv = red.at(col, col).inverse();
    for (std::size_t r = 0; r < col; ++r) {
      if (red.at(r, col).is_zero()) continue;
      red.add_row(r, col, -(red.at(r, col) * d_inv));
    }
  }
  auto factors = red.inverse_ops();
  Poly running(m.ring(), 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    running *= red.at(i, i);
    append_h(factors, RootA{static_cast<int>(i) + 1, static_cast<int>(i) + 2}, running);
  }
  return factors;
}

GroupMatrix multiply_factors(std::size_t n, Ring ring, const std::vector<ElementaryFactor>& factors) {
  GroupMatrix acc = GroupMatrix::identity(n, ring);
  for (const auto& f : factors) acc = acc * elem(f.root, f.param, n);
  return acc;
}

PathMatrix word_to_path(const SteinbergWord& w) {
  if (!w.ring().is_field())
    throw DomainError("word_to_path: word must be over a field, got " + w.ring().descriptor());
  Ring r = path_ring(w.ring().field());
  const Poly T = Poly::variable(r, 0);
  GroupMatrix acc = GroupMatrix::identity(w.n(), r);
  for (const auto& l : w.letters()) {
    Scalar u = l.param.constant_value();
    acc = acc * elem(l.root, T * (l.sign > 0 ? u : -u), w.n());
  }
  return PathMatrix(acc);
}

SteinbergWord path_to_steinberg(const PathMatrix& y) {
  if (!y.is_path()) throw DomainError("path_to_steinberg: y(0) is not the identity");
  Field k = y.field();
  Ring base = Ring::of(k);
  std::vector<Letter> letters;
  for (const auto& f : factor_elementary(y.matrix()))
    letters.push_back({f.root, Poly(base, f.param.evaluate_at(k.one())), 1});
  return SteinbergWord(y.n(), base, std::move(letters));
}

}  // namespace symloop
