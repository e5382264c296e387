#include "fibrekit/surface.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "fibrekit/error.hpp"

namespace fibrekit {

SurfaceSignature::SurfaceSignature(int genus, int boundary) : genus_(genus), boundary_(boundary) {
  if (genus < 0 || boundary < 0) {
    throw PreconditionError("surface genus and boundary count must be non-negative");
  }
}

std::size_t SurfaceSignature::index_of_a(int j) const {
  if (j < 1 || j > genus_) throw PreconditionError("a" + std::to_string(j) + " is not a basis class");
  return static_cast<std::size_t>(2 * (j - 1));
}

std::size_t SurfaceSignature::index_of_b(int j) const {
  if (j < 1 || j > genus_) throw PreconditionError("b" + std::to_string(j) + " is not a basis class");
  return static_cast<std::size_t>(2 * (j - 1) + 1);
}

std::size_t SurfaceSignature::index_of_d(int j) const {
  if (j < 1 || j > boundary_classes()) {
    throw PreconditionError("d" + std::to_string(j) + " is not a basis class");
  }
  return static_cast<std::size_t>(2 * genus_ + (j - 1));
}

void require_same_surface(const SurfaceSignature& lhs, const SurfaceSignature& rhs) {
  if (lhs != rhs) {
    throw PreconditionError("surface mismatch: (" + std::to_string(lhs.genus()) + "," +
                            std::to_string(lhs.boundary()) + ") vs (" + std::to_string(rhs.genus()) +
                            "," + std::to_string(rhs.boundary()) + ")");
  }
}

HomologyClass::HomologyClass(SurfaceSignature surface, IntVector coords)
    : surface_(surface), coords_(std::move(coords)) {
  if (coords_.size() != surface_.rank()) {
    throw PreconditionError("homology class has " + std::to_string(coords_.size()) +
                            " coordinates, surface has b1 = " + std::to_string(surface_.b1()));
  }
}

HomologyClass HomologyClass::zero(SurfaceSignature surface) {
  return HomologyClass(surface, IntVector(surface.rank(), Integer(0)));
}

HomologyClass HomologyClass::basis(SurfaceSignature surface, std::size_t index) {
  IntVector v(surface.rank(), Integer(0));
  if (index >= v.size()) throw PreconditionError("basis index out of range");
  v[index] = 1;
  return HomologyClass(surface, std::move(v));
}

bool HomologyClass::is_zero() const { return fibrekit::is_zero(coords_); }

HomologyClass HomologyClass::operator-() const {
  IntVector v(coords_);
  for (auto& x : v) x = -x;
  return HomologyClass(surface_, std::move(v));
}

HomologyClass operator+(const HomologyClass& lhs, const HomologyClass& rhs) {
  require_same_surface(lhs.surface_, rhs.surface_);
  IntVector v(lhs.coords_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += rhs.coords_[i];
  return HomologyClass(lhs.surface_, std::move(v));
}

IntersectionForm::IntersectionForm(SurfaceSignature surface)
    : surface_(surface), matrix_(surface.rank(), surface.rank()) {
  for (int j = 1; j <= surface.genus(); ++j) {
    const auto a = surface.index_of_a(j);
    const auto b = surface.index_of_b(j);
    matrix_(a, b) = 1;
    matrix_(b, a) = -1;
  }
}

Integer IntersectionForm::pair(const IntVector& x, const IntVector& y) const {
  // Only the symplectic blocks contribute.
  Integer total = 0;
  for (int j = 1; j <= surface_.genus(); ++j) {
    const auto a = surface_.index_of_a(j);
    const auto b = surface_.index_of_b(j);
    total += x[a] * y[b] - x[b] * y[a];
  }
  return total;
}

IntVector IntersectionForm::dual(const IntVector& y) const { return matrix_.apply(y); }

IntersectionForm standard_form(SurfaceSignature surface) { return IntersectionForm(surface); }

Integer pair(const HomologyClass& x, const HomologyClass& y) {
  require_same_surface(x.surface(), y.surface());
  return IntersectionForm(x.surface()).pair(x.coords(), y.coords());
}

}  // namespace fibrekit
