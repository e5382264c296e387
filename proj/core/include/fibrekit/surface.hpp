#pragma once

#include <compare>
#include <cstddef>

#include "fibrekit/arith.hpp"
#include "fibrekit/matrix.hpp"

namespace fibrekit {

/// Topological type of a compact orientable surface with boundary.
///
/// First homology is given the ordered basis
///   a1, b1, a2, b2, ..., ag, bg, d1, ..., d(boundary-1)
/// where (aj, bj) are symplectic pairs and the dj are boundary-parallel
/// classes. The last boundary component is homologous to minus the sum of
/// the others and gets no basis vector of its own.
class SurfaceSignature {
 public:
  SurfaceSignature(int genus, int boundary);

  int genus() const { return genus_; }
  int boundary() const { return boundary_; }
  int boundary_classes() const { return boundary_ > 1 ? boundary_ - 1 : 0; }
  int b1() const { return 2 * genus_ + boundary_classes(); }
  std::size_t rank() const { return static_cast<std::size_t>(b1()); }

  std::size_t index_of_a(int j) const;
  std::size_t index_of_b(int j) const;
  std::size_t index_of_d(int j) const;

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;

 private:
  int genus_;
  int boundary_;
};

/// Integer class in H_1 of a surface, in the basis of SurfaceSignature.
class HomologyClass {
 public:
  HomologyClass(SurfaceSignature surface, IntVector coords);

  static HomologyClass zero(SurfaceSignature surface);
  static HomologyClass basis(SurfaceSignature surface, std::size_t index);
  static HomologyClass a(SurfaceSignature surface, int j) { return basis(surface, surface.index_of_a(j)); }
  static HomologyClass b(SurfaceSignature surface, int j) { return basis(surface, surface.index_of_b(j)); }
  static HomologyClass d(SurfaceSignature surface, int j) { return basis(surface, surface.index_of_d(j)); }

  const SurfaceSignature& surface() const { return surface_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  HomologyClass operator-() const;
  friend HomologyClass operator+(const HomologyClass& lhs, const HomologyClass& rhs);
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  SurfaceSignature surface_;
  IntVector coords_;
};

/// Intersection pairing matrix J: pair(x, y) = x^T J y.
class IntersectionForm {
 public:
  explicit IntersectionForm(SurfaceSignature surface);

  const SurfaceSignature& surface() const { return surface_; }
  const IntMatrix& matrix() const { return matrix_; }

  Integer pair(const IntVector& x, const IntVector& y) const;

  /// J y, the linear functional x -> pair(x, y) written as a vector.
  IntVector dual(const IntVector& y) const;

  bool is_nondegenerate() const { return surface_.boundary() <= 1; }

 private:
  SurfaceSignature surface_;
  IntMatrix matrix_;
};

IntersectionForm standard_form(SurfaceSignature surface);

/// Algebraic intersection number. Throws PreconditionError when the classes
/// live on different surfaces.
Integer pair(const HomologyClass& x, const HomologyClass& y);

void require_same_surface(const SurfaceSignature& lhs, const SurfaceSignature& rhs);

}  // namespace fibrekit
