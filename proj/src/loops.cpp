#include "symloop/loops.hpp"

#include "symloop/errors.hpp"

namespace symloop {

Ring path_ring(Field k) { return Ring::make(k, {"T"}); }

PathMatrix::PathMatrix(GroupMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.ring().is_univariate())
    throw DomainError("a path must be a matrix over k[T], got " + matrix_.ring().descriptor());
}

GroupMatrix PathMatrix::start() const { return at(field().zero()); }
GroupMatrix PathMatrix::end() const { return at(field().one()); }
bool PathMatrix::is_path() const { return start().is_identity(); }
bool PathMatrix::is_loop() const { return is_path() && end().is_identity(); }

PathMatrix constant_path(std::size_t n, Field k) { return PathMatrix(GroupMatrix::identity(n, path_ring(k))); }

namespace {

Poly t_times(const Scalar& u) {
  Ring r = path_ring(u.field());
  return Poly::variable(r, 0) * u;
}

void require_unit(const Scalar& u, const char* what) {
  if (u.is_zero()) throw DomainError(std::string(what) + ": parameter 0 is not invertible");
}

}  // namespace

PathMatrix x_loop(RootA root, const Scalar& u, std::size_t n) { return PathMatrix(elem(root, t_times(u), n)); }

PathMatrix w_loop(RootA root, const Scalar& u, std::size_t n) {
  require_unit(u, "w_loop");
  return x_loop(root, u, n) * x_loop(root.negated(), -u.inverse(), n) * x_loop(root, u, n);
}

PathMatrix h_loop(RootA root, const Scalar& u, std::size_t n) {
  require_unit(u, "h_loop");
  return w_loop(root, u, n) * w_loop(root, u.field().one(), n).inverse();
}

PathMatrix c_loop(RootA root, const Scalar& a, const Scalar& b, std::size_t n) {
  require_unit(a, "c_loop");
  require_unit(b, "c_loop");
  return h_loop(root, a, n) * h_loop(root, b, n) * h_loop(root, a * b, n).inverse();
}

std::vector<Poly> sl2_symbol_matrix(const Scalar& u, const Scalar& v) {
  require_unit(u, "sl2_closed_form");
  require_unit(v, "sl2_closed_form");
  Ring r = path_ring(u.field());
  const Poly T = Poly::variable(r, 0);
  const Poly one(r, 1);
  const Poly U(r, u), V(r, v);
  const Poly t2m1 = T * T - one;      // T^2 - 1
  const Poly t2m2 = T * T - Poly(r, 2);  // T^2 - 2
  const Poly omu = one - U;           // 1 - u
  const Poly cyc = T * t2m1 * t2m2;   // T(T^2-1)(T^2-2)
  return {
      U * omu * cyc,
      -(V * U * U * (t2m1 * t2m1 * omu + U) * t2m2),
      omu * t2m1 * t2m1 - one,
      -(U * V * omu * cyc),
  };
}

PathMatrix sl2_closed_form(const Scalar& u, const Scalar& v) {
  auto d = sl2_symbol_matrix(u, v);
  Ring r = path_ring(u.field());
  const Poly T = Poly::variable(r, 0);
  const Scalar one = u.field().one();
  const Scalar factor = (one - u) * (one - v) / (u * u * v);
  const Poly prefactor = T * (T * T - Poly(r, 1)) * factor;
  std::vector<Poly> e(4, Poly(r));
  for (std::size_t k = 0; k < 4; ++k) e[k] = prefactor * d[k];
  e[0] += Poly(r, 1);
  e[3] += Poly(r, 1);
  return PathMatrix(GroupMatrix::from_entries(2, r, std::move(e)));
}

namespace {

GroupMatrix product(const std::vector<PathFactor>& side) {
  if (side.empty()) throw DomainError("verify_path_identity: empty product");
  GroupMatrix acc = side.front().inverted ? side.front().path.matrix().inverse() : side.front().path.matrix();
  for (std::size_t k = 1; k < side.size(); ++k) {
    const auto& f = side[k];
    acc = acc * (f.inverted ? f.path.matrix().inverse() : f.path.matrix());
  }
  return acc;
}

}  // namespace

IdentityCheck verify_path_identity(const std::vector<PathFactor>& lhs, const std::vector<PathFactor>& rhs) {
  GroupMatrix l = product(lhs);
  GroupMatrix r = product(rhs);
  if (l.n() != r.n())
    throw DomainError("verify_path_identity: size mismatch " + std::to_string(l.n()) + " vs " + std::to_string(r.n()));
  if (!(l.ring() == r.ring())) throw DomainError("verify_path_identity: ring mismatch");
  IdentityCheck out;
  for (std::size_t i = 0; i < l.n(); ++i)
    for (std::size_t j = 0; j < l.n(); ++j)
      if (!(l.at(i, j) == r.at(i, j))) {
        out.certificate = EntryDifference{i, j, l.at(i, j), r.at(i, j)};
        return out;
      }
  out.holds = true;
  return out;
}

}  // namespace symloop
