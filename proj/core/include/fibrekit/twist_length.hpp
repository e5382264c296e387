#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fibrekit/arith.hpp"
#include "fibrekit/surface.hpp"
#include "fibrekit/twist.hpp"

namespace fibrekit {

/// Exact basis of the pairing-orthogonal complement of span(classes).
std::vector<RatVector> orthogonal_complement(const SurfaceSignature& surface,
                                             std::span<const HomologyClass> classes);

/// Classes with duplicates removed, where c and -c count as the same twist
/// curve. First occurrence order is kept.
std::vector<HomologyClass> distinct_curves(std::span<const HomologyClass> classes);

/// Witness that a word built from too few twist curves fixes a nonzero
/// homology class, so its characteristic polynomial vanishes at 1 and it
/// cannot be the monodromy of a fibred knot.
struct ObstructionCertificate {
  SurfaceSignature surface;
  int genus;
  std::vector<HomologyClass> classes;
  std::vector<RatVector> complement_basis;
  IntVector witness;

  HomologyClass witness_class() const { return HomologyClass(surface, witness); }
  bool covers(const HomologyClass& curve) const;
};

/// Returns a certificate when fewer than 2g distinct curves are given,
/// std::nullopt otherwise. The surface must have genus g and one boundary
/// component.
std::optional<ObstructionCertificate> knot_monodromy_obstruction(
    int genus, std::span<const HomologyClass> classes);

/// Checks the certificate against a word built from its curves: the
/// witness is fixed and det(id - M) = 0. Throws PreconditionError if a
/// letter twists about a curve the certificate does not cover.
bool verify_certificate(const ObstructionCertificate& cert, const TwistWord& word);

/// Structural checks that do not need a word: witness nonzero, orthogonal
/// to every class, and the complement at least 2g - n dimensional.
bool certificate_is_consistent(const ObstructionCertificate& cert);

/// Minimal twist length of a genus-g fibred knot monodromy: 2g.
int knot_twist_length_lower_bound(int genus);

}  // namespace fibrekit
