#include "fibrekit/twist_length.hpp"

#include <algorithm>
#include <string>

#include "fibrekit/error.hpp"
#include "fibrekit/rational_linalg.hpp"

namespace fibrekit {

namespace {

bool same_curve(const HomologyClass& x, const HomologyClass& y) { return x == y || x == -y; }

// Row i is the functional x -> pair(x, c_i).
std::vector<RatVector> constraint_rows(const SurfaceSignature& surface,
                                       std::span<const HomologyClass> classes) {
  std::vector<RatVector> rows;
  const IntersectionForm form(surface);
  for (const auto& c : classes) {
    require_same_surface(surface, c.surface());
    rows.push_back(to_rational(form.dual(c.coords())));
  }
  return rows;
}

}  // namespace

std::vector<RatVector> orthogonal_complement(const SurfaceSignature& surface,
                                             std::span<const HomologyClass> classes) {
  return nullspace(constraint_rows(surface, classes), surface.rank());
}

std::vector<HomologyClass> distinct_curves(std::span<const HomologyClass> classes) {
  std::vector<HomologyClass> out;
  for (const auto& c : classes) {
    if (std::none_of(out.begin(), out.end(), [&](const auto& seen) { return same_curve(seen, c); })) {
      out.push_back(c);
    }
  }
  return out;
}

bool ObstructionCertificate::covers(const HomologyClass& curve) const {
  return std::any_of(classes.begin(), classes.end(), [&](const auto& c) { return same_curve(c, curve); });
}

std::optional<ObstructionCertificate> knot_monodromy_obstruction(
    int genus, std::span<const HomologyClass> classes) {
  if (genus < 1) throw PreconditionError("genus must be positive");
  const SurfaceSignature surface(genus, 1);
  for (const auto& c : classes) {
    if (c.surface() != surface) {
      throw PreconditionError("knot monodromy obstruction needs classes on the genus-" +
                              std::to_string(genus) + " surface with one boundary component");
    }
  }
  auto curves = distinct_curves(classes);
  if (curves.size() >= static_cast<std::size_t>(2 * genus)) return std::nullopt;

  auto basis = orthogonal_complement(surface, curves);
  if (basis.empty()) {
    // dim V^perp >= 2g - n > 0 for a non-degenerate form.
    throw VerificationError("orthogonal complement unexpectedly trivial");
  }
  IntVector witness = clear_denominators(basis.front());
  return ObstructionCertificate{surface, genus, std::move(curves), std::move(basis), std::move(witness)};
}

bool certificate_is_consistent(const ObstructionCertificate& cert) {
  if (cert.surface.boundary() != 1 || cert.surface.genus() != cert.genus) return false;
  if (cert.witness.size() != cert.surface.rank() || is_zero(cert.witness)) return false;
  const HomologyClass w = cert.witness_class();
  for (const auto& c : cert.classes) {
    if (pair(w, c) != 0) return false;
  }
  const std::size_t n = cert.classes.size();
  const std::size_t required = 2 * static_cast<std::size_t>(cert.genus) > n ? 2 * cert.genus - n : 0;
  if (cert.complement_basis.size() < required || required == 0) return false;

  const IntersectionForm form(cert.surface);
  for (const auto& v : cert.complement_basis) {
    if (v.size() != cert.surface.rank()) return false;
    for (const auto& c : cert.classes) {
      const RatVector functional = to_rational(form.dual(c.coords()));
      Rational dot = 0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += functional[i] * v[i];
      if (dot != 0) return false;
    }
  }
  return true;
}

bool verify_certificate(const ObstructionCertificate& cert, const TwistWord& word) {
  require_same_surface(cert.surface, word.surface());
  for (const auto& letter : word.letters()) {
    if (!cert.covers(letter.curve())) {
      throw PreconditionError("word twists about a curve not listed in the certificate");
    }
  }
  const IntMatrix m = word_action(word);
  if (m.apply(cert.witness) != cert.witness) return false;
  return characteristic_polynomial(m).evaluate(1) == 0;
}

int knot_twist_length_lower_bound(int genus) {
  if (genus < 0) throw PreconditionError("genus must be non-negative");
  return 2 * genus;
}

}  // namespace fibrekit
