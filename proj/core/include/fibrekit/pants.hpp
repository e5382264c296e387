#pragma once

#include <array>
#include <cstdint>

#include "fibrekit/arith.hpp"
#include "fibrekit/polynomial.hpp"
#include "fibrekit/surface.hpp"
#include "fibrekit/twist.hpp"

namespace fibrekit::pants {

/// T_a^p T_b^q T_c^r in the mapping class group of the pair of pants,
/// which is free abelian on the three boundary twists.
struct PantsClass {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;

  PantsClass operator-() const { return {-p, -q, -r}; }
  friend bool operator==(const PantsClass&, const PantsClass&) = default;
};

PantsClass compose(const PantsClass& u, const PantsClass& v);

/// Word length over {T_a, T_b, T_c}^{+-1}: |p| + |q| + |r|.
std::int64_t twist_length(const PantsClass& w);

/// phi_n = T_a T_b^-1 T_c^n.
struct FamilyMember {
  std::int64_t n = 0;

  PantsClass monodromy() const { return {1, -1, n}; }
  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

FamilyMember stallings_twist(const FamilyMember& m, std::int64_t delta);

enum class Arc { Gamma1, Gamma2, Gamma3 };

const char* to_string(Arc arc);

struct ArcCut {
  Arc arc;
  std::int64_t full_twists;
  bool is_hopf;
};

/// Annuli left after cutting Sigma_n along each non-separating arc:
/// gamma1 (a-b), gamma2 (b-c), gamma3 (a-c).
struct CutReport {
  std::array<ArcCut, 3> arcs;
};

CutReport cut_annulus_twists(std::int64_t n);

/// True when no cut leaves a Hopf band, i.e. Sigma_n is not a Hopf plumbing.
bool hopf_deplumbing_obstructed(std::int64_t n);

struct PantsAlexander {
  IntegerPolynomial poly;
  Integer delta_one;
};

/// Boundary twists pair trivially with everything, so the action on the
/// rank-2 homology is the identity and the polynomial is (t - 1)^2.
PantsAlexander pants_alexander(const PantsClass& w);

/// Genus 0, three boundary components.
SurfaceSignature surface();

/// The class as a twist word: a -> d1, b -> d2, c -> -(d1 + d2).
TwistWord to_word(const PantsClass& w);

}  // namespace fibrekit::pants
