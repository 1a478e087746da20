#include "symloop/simplicial.hpp"

#include "symloop/errors.hpp"

namespace symloop {

namespace {

std::vector<std::string> coordinate_names(std::size_t first, std::size_t level) {
  std::vector<std::string> v;
  for (std::size_t j = first; j <= level; ++j) v.push_back("X" + std::to_string(j));
  return v;
}

/// Image of the full coordinate X_j of the target level, in canonical form.
Poly canonical_coordinate(Ring target, std::size_t level, std::size_t j) {
  if (j > 0) return Poly::variable(target, j - 1);
  Poly x0(target, 1);
  for (std::size_t k = 0; k < level; ++k) x0 -= Poly::variable(target, k);
  return x0;
}

/// Images of X_1..X_n (source level n) under the given map on full coordinates.
template <class ImageIndex>
std::vector<Poly> images(Ring target, std::size_t target_level, std::size_t source_level, ImageIndex image_of) {
  std::vector<Poly> out;
  for (std::size_t j = 1; j <= source_level; ++j) out.push_back(image_of(j, target, target_level));
  return out;
}

Poly face_poly(std::size_t i, std::size_t level, const Poly& p) {
  if (level == 0) throw DomainError("face maps are undefined at level 0");
  if (i > level) throw DomainError("face index " + std::to_string(i) + " out of range for level " + std::to_string(level));
  Ring target = simplex_ring(p.field(), level - 1);
  auto im = images(target, level - 1, level, [i](std::size_t j, Ring t, std::size_t tl) {
    if (j < i) return canonical_coordinate(t, tl, j);
    if (j == i) return Poly(t);
    return canonical_coordinate(t, tl, j - 1);
  });
  return p.substitute(target, im);
}

Poly degeneracy_poly(std::size_t i, std::size_t level, const Poly& p) {
  if (i > level)
    throw DomainError("degeneracy index " + std::to_string(i) + " out of range for level " + std::to_string(level));
  Ring target = simplex_ring(p.field(), level + 1);
  auto im = images(target, level + 1, level, [i](std::size_t j, Ring t, std::size_t tl) {
    if (j < i) return canonical_coordinate(t, tl, j);
    if (j == i) return canonical_coordinate(t, tl, i) + canonical_coordinate(t, tl, i + 1);
    return canonical_coordinate(t, tl, j + 1);
  });
  return p.substitute(target, im);
}

}  // namespace

Ring simplex_ring(Field k, std::size_t level) { return Ring::make(k, coordinate_names(1, level)); }
Ring full_simplex_ring(Field k, std::size_t level) { return Ring::make(k, coordinate_names(0, level)); }

SimplexPoly::SimplexPoly(std::size_t level, Poly poly) : level_(level), poly_(std::move(poly)) {
  if (!(poly_.ring() == simplex_ring(poly_.field(), level_)))
    throw DomainError("simplex polynomial at level " + std::to_string(level_) + " must be over " +
                      simplex_ring(poly_.field(), level_).descriptor() + ", got " + poly_.ring().descriptor());
}

SimplexPoly SimplexPoly::from_full(std::size_t level, const Poly& full) {
  if (!(full.ring() == full_simplex_ring(full.field(), level)))
    throw DomainError("from_full expects a polynomial over " + full_simplex_ring(full.field(), level).descriptor());
  Ring target = simplex_ring(full.field(), level);
  std::vector<Poly> im;
  for (std::size_t j = 0; j <= level; ++j) im.push_back(canonical_coordinate(target, level, j));
  return SimplexPoly(level, full.substitute(target, im));
}

Poly SimplexPoly::to_full() const { return poly_.lift_to(full_simplex_ring(poly_.field(), level_)); }

SimplexPoly face(std::size_t i, const SimplexPoly& f) {
  Poly image = face_poly(i, f.level(), f.poly());
  return SimplexPoly(f.level() - 1, std::move(image));
}

SimplexPoly degeneracy(std::size_t i, const SimplexPoly& f) {
  return SimplexPoly(f.level() + 1, degeneracy_poly(i, f.level(), f.poly()));
}

// ---------------------------------------------------------------------------

SimplexMatrix::SimplexMatrix(std::size_t level, GroupMatrix m) : level_(level), matrix_(std::move(m)) {
  if (!(matrix_.ring() == simplex_ring(matrix_.ring().field(), level_)))
    throw DomainError("simplex matrix at level " + std::to_string(level_) + " must be over " +
                      simplex_ring(matrix_.ring().field(), level_).descriptor() + ", got " +
                      matrix_.ring().descriptor());
}

SimplexMatrix face(std::size_t i, const SimplexMatrix& m) {
  if (m.level() == 0) throw DomainError("face maps are undefined at level 0");
  Ring target = simplex_ring(m.matrix().ring().field(), m.level() - 1);
  return SimplexMatrix(m.level() - 1, m.matrix().map_entries(target, [&](const Poly& p) {
    return face_poly(i, m.level(), p);
  }));
}

SimplexMatrix degeneracy(std::size_t i, const SimplexMatrix& m) {
  Ring target = simplex_ring(m.matrix().ring().field(), m.level() + 1);
  return SimplexMatrix(m.level() + 1, m.matrix().map_entries(target, [&](const Poly& p) {
    return degeneracy_poly(i, m.level(), p);
  }));
}

SimplexMatrix to_simplex(const PathMatrix& p) {
  Ring target = simplex_ring(p.field(), 1);
  return SimplexMatrix(1, p.matrix().map_entries(target, [&](const Poly& e) {
    return e.substitute(target, {Poly::variable(target, 0)});
  }));
}

PathMatrix to_path(const SimplexMatrix& m) {
  if (m.level() != 1) throw DomainError("only level-1 simplices are paths");
  Ring target = path_ring(m.matrix().ring().field());
  return PathMatrix(m.matrix().map_entries(target, [&](const Poly& e) {
    return e.substitute(target, {Poly::variable(target, 0)});
  }));
}

bool moore_is_loop(const SimplexMatrix& g) {
  if (g.level() != 1) throw DomainError("moore_is_loop expects a level-1 simplex");
  return face(0, g).matrix().is_identity() && face(1, g).matrix().is_identity();
}

HomotopyCertificate verify_homotopy_witness(const SimplexMatrix& sigma, const SimplexMatrix& l,
                                            const SimplexMatrix& l_prime) {
  if (sigma.level() != 2) throw DomainError("homotopy witness must be a level-2 simplex");
  if (!moore_is_loop(l)) throw DomainError("verify_homotopy_witness: source is not a loop");
  if (!moore_is_loop(l_prime)) throw DomainError("verify_homotopy_witness: target is not a loop");
  if (sigma.matrix().n() != l.matrix().n() || l.matrix().n() != l_prime.matrix().n())
    throw DomainError("verify_homotopy_witness: matrix size mismatch");
  SimplexMatrix expected(1, l_prime.matrix() * l.matrix().inverse());
  HomotopyCertificate c{false, face(0, sigma), face(1, sigma), face(2, sigma), expected};
  c.certified = c.d1.matrix().is_identity() && c.d2.matrix().is_identity() && c.d0 == expected;
  return c;
}

}  // namespace symloop
