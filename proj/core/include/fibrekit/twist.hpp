#pragma once

#include <cstdint>
#include <vector>

#include "fibrekit/matrix.hpp"
#include "fibrekit/polynomial.hpp"
#include "fibrekit/surface.hpp"

namespace fibrekit {

/// One factor T_c^e of a Dehn-twist word. The exponent is never zero.
class TwistLetter {
 public:
  TwistLetter(HomologyClass curve, std::int64_t exponent);

  const HomologyClass& curve() const { return curve_; }
  std::int64_t exponent() const { return exponent_; }

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;

 private:
  HomologyClass curve_;
  std::int64_t exponent_;
};

/// A product of Dehn twists on a fixed surface. The first letter acts
/// first: the homological action of (c1,e1)(c2,e2)...(ck,ek) is
/// M_k ... M_2 M_1.
class TwistWord {
 public:
  explicit TwistWord(SurfaceSignature surface, std::vector<TwistLetter> letters = {});

  const SurfaceSignature& surface() const { return surface_; }
  const std::vector<TwistLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  TwistWord then(const TwistLetter& letter) const;
  /// This word followed by `other` (this acts first).
  TwistWord then(const TwistWord& other) const;
  /// Cyclic rotation moving the first `shift` letters to the end.
  TwistWord rotated(std::size_t shift) const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  SurfaceSignature surface_;
  std::vector<TwistLetter> letters_;
};

/// Matrix of x -> x + exponent * pair(x, c) * c. The zero class and
/// boundary-parallel classes give the identity.
IntMatrix twist_action(const HomologyClass& curve, std::int64_t exponent = 1);

IntMatrix word_action(const TwistWord& word);

/// det(t id - M), computed with the division-free Samuelson-Berkowitz
/// recurrence.
IntegerPolynomial characteristic_polynomial(const IntMatrix& m);

/// Both symplectic invariants of a homological action: M^T J M = J and
/// det M = 1.
bool preserves_form(const IntMatrix& m, const IntersectionForm& form);

enum class AlexanderClass { KnotCompatible, MultiComponentCompatible, Neither };

const char* to_string(AlexanderClass c);

struct AlexanderReport {
  IntegerPolynomial poly;
  Integer delta_one;
  AlexanderClass classification;

  /// poly, negated when delta_one = -1 so that knots evaluate to +1.
  IntegerPolynomial normalized() const;
};

AlexanderReport alexander_report(const TwistWord& word);

}  // namespace fibrekit
