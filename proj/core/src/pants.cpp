#include "fibrekit/pants.hpp"

#include <cstdlib>

namespace fibrekit::pants {

PantsClass compose(const PantsClass& u, const PantsClass& v) {
  return {u.p + v.p, u.q + v.q, u.r + v.r};
}

std::int64_t twist_length(const PantsClass& w) {
  return std::llabs(w.p) + std::llabs(w.q) + std::llabs(w.r);
}

FamilyMember stallings_twist(const FamilyMember& m, std::int64_t delta) { return {m.n + delta}; }

const char* to_string(Arc arc) {
  switch (arc) {
    case Arc::Gamma1:
      return "gamma1";
    case Arc::Gamma2:
      return "gamma2";
    case Arc::Gamma3:
      return "gamma3";
  }
  return "?";
}

namespace {

ArcCut cut(Arc arc, std::int64_t twists) { return {arc, twists, twists == 1 || twists == -1}; }

}  // namespace

CutReport cut_annulus_twists(std::int64_t n) {
  return {{cut(Arc::Gamma1, 0), cut(Arc::Gamma2, n + 1), cut(Arc::Gamma3, n - 1)}};
}

bool hopf_deplumbing_obstructed(std::int64_t n) {
  for (const auto& arc : cut_annulus_twists(n).arcs) {
    if (arc.is_hopf) return false;
  }
  return true;
}

PantsAlexander pants_alexander(const PantsClass&) {
  return {IntegerPolynomial{1, -2, 1}, 0};
}

SurfaceSignature surface() { return SurfaceSignature(0, 3); }

TwistWord to_word(const PantsClass& w) {
  const SurfaceSignature s = surface();
  const HomologyClass a = HomologyClass::d(s, 1);
  const HomologyClass b = HomologyClass::d(s, 2);
  const HomologyClass c = -(a + b);
  std::vector<TwistLetter> letters;
  if (w.p != 0) letters.emplace_back(a, w.p);
  if (w.q != 0) letters.emplace_back(b, w.q);
  if (w.r != 0) letters.emplace_back(c, w.r);
  return TwistWord(s, std::move(letters));
}

}  // namespace fibrekit::pants
