#include "symloop/chevalley.hpp"

#include <bit>
#include <cstdint>

#include "symloop/errors.hpp"

namespace symloop {

void RootA::validate(std::size_t n) const {
  const auto in_range = [n](int k) { return k >= 1 && static_cast<std::size_t>(k) <= n; };
  if (i == j) throw DomainError("root " + to_string() + " has i = j");
  if (!in_range(i) || !in_range(j)) throw DomainError("root " + to_string() + " out of range for n = " + std::to_string(n));
}

std::string RootA::to_string() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// ---------------------------------------------------------------------------

Poly determinant(std::size_t n, Ring ring, const std::vector<Poly>& entries) {
  if (entries.size() != n * n) throw DomainError("determinant: entry count does not match size");
  if (n == 0) return Poly(ring, 1);
  if (n > 20) throw DomainError("determinant: size too large for cofactor expansion");
  // minors[S] = det of the first |S| rows restricted to the column set S.
  std::vector<Poly> minors(std::size_t{1} << n, Poly(ring));
  minors[0] = Poly(ring, 1);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const auto row = static_cast<std::size_t>(std::popcount(s)) - 1;
    Poly acc(ring);
    for (std::size_t col = 0; col < n; ++col) {
      if (!(s & (1u << col))) continue;
      const Poly& a = entries[row * n + col];
      const auto& sub = minors[s & ~(1u << col)];
      if (!a.is_zero() && !sub.is_zero()) {
        // sign = (-1)^(number of columns in S to the right of col)
        int right = std::popcount(s >> (col + 1));
        if (right % 2 == 0)
          acc += a * sub;
        else
          acc -= a * sub;
      }
    }
    minors[s] = std::move(acc);
  }
  return minors[(std::size_t{1} << n) - 1];
}

GroupMatrix GroupMatrix::identity(std::size_t n, Ring ring) {
  if (n == 0) throw DomainError("matrix size must be positive");
  std::vector<Poly> e(n * n, Poly(ring));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Poly(ring, 1);
  return GroupMatrix(n, ring, std::move(e));
}

GroupMatrix GroupMatrix::from_entries(std::size_t n, Ring ring, std::vector<Poly> entries) {
  if (n == 0) throw DomainError("matrix size must be positive");
  if (entries.size() != n * n)
    throw DomainError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries.size()));
  for (const auto& e : entries)
    if (!(e.ring() == ring)) throw DomainError("matrix entry is not in ring " + ring.descriptor());
  Poly det = determinant(n, ring, entries);
  if (!det.is_one()) throw DomainError("determinant is " + det.to_string() + ", expected 1");
  return GroupMatrix(n, ring, std::move(entries));
}

bool GroupMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      const Poly& e = at(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

void GroupMatrix::require_compatible(const GroupMatrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix size mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  if (!(ring_ == o.ring_)) throw DomainError("matrix ring mismatch: " + ring_.descriptor() + " vs " + o.ring_.descriptor());
}

GroupMatrix GroupMatrix::operator*(const GroupMatrix& o) const {
  require_compatible(o);
  std::vector<Poly> e(n_ * n_, Poly(ring_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t k = 0; k < n_; ++k) {
      const Poly& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        const Poly& b = o.at(k, c);
        if (!b.is_zero()) e[r * n_ + c] += a * b;
      }
    }
  return GroupMatrix(n_, ring_, std::move(e));
}

GroupMatrix GroupMatrix::inverse() const {
  if (n_ == 1) return *this;
  std::vector<Poly> inv(n_ * n_, Poly(ring_));
  std::vector<Poly> minor((n_ - 1) * (n_ - 1), Poly(ring_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t k = 0;
      for (std::size_t rr = 0; rr < n_; ++rr) {
        if (rr == r) continue;
        for (std::size_t cc = 0; cc < n_; ++cc)
          if (cc != c) minor[k++] = at(rr, cc);
      }
      Poly cof = determinant(n_ - 1, ring_, minor);
      // adj(M)_{c,r} = (-1)^{r+c} det(minor_{r,c})
      inv[c * n_ + r] = (r + c) % 2 == 0 ? cof : -cof;
    }
  return GroupMatrix(n_, ring_, std::move(inv));
}

GroupMatrix GroupMatrix::map_entries(Ring target, const std::function<Poly(const Poly&)>& hom) const {
  std::vector<Poly> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) {
    e.push_back(hom(x));
    if (!(e.back().ring() == target)) throw DomainError("map_entries: image outside the target ring");
  }
#ifndef NDEBUG
  return from_entries(n_, target, std::move(e));
#else
  return GroupMatrix(n_, target, std::move(e));
#endif
}

bool operator==(const GroupMatrix& a, const GroupMatrix& b) {
  return a.n_ == b.n_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------

GroupMatrix elem(RootA root, const Poly& a, std::size_t n) {
  root.validate(n);
  GroupMatrix id = GroupMatrix::identity(n, a.ring());
  std::vector<Poly> e = id.entries();
  e[static_cast<std::size_t>(root.i - 1) * n + static_cast<std::size_t>(root.j - 1)] = a;
  // Unipotent, so det = 1 holds by construction.
  return GroupMatrix(n, a.ring(), std::move(e));
}

GroupMatrix w_elem(RootA root, const Poly& u, std::size_t n) {
  if (!u.is_unit()) throw DomainError("w_elem: " + u.to_string() + " is not invertible");
  return elem(root, u, n) * elem(root.negated(), -u.inverse(), n) * elem(root, u, n);
}

GroupMatrix h_elem(RootA root, const Poly& u, std::size_t n) {
  if (!u.is_unit()) throw DomainError("h_elem: " + u.to_string() + " is not invertible");
  return w_elem(root, u, n) * w_elem(root, Poly(u.ring(), 1), n).inverse();
}

GroupMatrix eval_matrix(const GroupMatrix& m, const Scalar& t) {
  if (!m.ring().is_univariate())
    throw DomainError("eval_matrix requires a matrix over k[T], got " + m.ring().descriptor());
  Ring base = Ring::of(m.ring().field());
  return m.map_entries(base, [&](const Poly& p) { return Poly(base, p.evaluate_at(t)); });
}

GroupMatrix commutator(const GroupMatrix& a, const GroupMatrix& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace symloop
