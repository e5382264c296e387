#include "fibrekit/twist.hpp"

#include <algorithm>
#include <utility>

#include "fibrekit/error.hpp"

namespace fibrekit {

TwistLetter::TwistLetter(HomologyClass curve, std::int64_t exponent)
    : curve_(std::move(curve)), exponent_(exponent) {
  if (exponent == 0) throw PreconditionError("twist exponent must be nonzero");
}

TwistWord::TwistWord(SurfaceSignature surface, std::vector<TwistLetter> letters)
    : surface_(surface), letters_(std::move(letters)) {
  for (const auto& letter : letters_) require_same_surface(surface_, letter.curve().surface());
}

TwistWord TwistWord::then(const TwistLetter& letter) const {
  auto letters = letters_;
  letters.push_back(letter);
  return TwistWord(surface_, std::move(letters));
}

TwistWord TwistWord::then(const TwistWord& other) const {
  auto letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return TwistWord(surface_, std::move(letters));
}

TwistWord TwistWord::rotated(std::size_t shift) const {
  auto letters = letters_;
  if (!letters.empty()) {
    std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(shift % letters.size()),
                letters.end());
  }
  return TwistWord(surface_, std::move(letters));
}

namespace {

// m <- T_c^e m, applied column by column: v -> v + e pair(v, c) c.
void left_multiply_transvection(IntMatrix& m, const IntersectionForm& form, const IntVector& c,
                                const Integer& exponent) {
  const IntVector functional = form.dual(c);  // pair(v, c) = functional . v
  const std::size_t n = m.rows();
  Integer coefficient;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    coefficient = 0;
    for (std::size_t i = 0; i < n; ++i) coefficient += functional[i] * m(i, j);
    if (coefficient == 0) continue;
    coefficient *= exponent;
    for (std::size_t i = 0; i < n; ++i) m(i, j) += coefficient * c[i];
  }
}

}  // namespace

IntMatrix twist_action(const HomologyClass& curve, std::int64_t exponent) {
  const auto& surface = curve.surface();
  IntMatrix m = IntMatrix::identity(surface.rank());
  left_multiply_transvection(m, IntersectionForm(surface), curve.coords(), Integer(exponent));
  return m;
}

IntMatrix word_action(const TwistWord& word) {
  const auto& surface = word.surface();
  const IntersectionForm form(surface);
  IntMatrix m = IntMatrix::identity(surface.rank());
  for (const auto& letter : word.letters()) {
    // (T_c)^e = id + e c (Jc)^T because the transvection is unipotent.
    left_multiply_transvection(m, form, letter.curve().coords(), Integer(letter.exponent()));
  }
  return m;
}

IntegerPolynomial characteristic_polynomial(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntegerPolynomial{1};

  // Coefficients of det(t id - A_k), highest degree first, for the trailing
  // principal submatrix A_k starting at row/column k.
  std::vector<Integer> p{Integer(1), -m(n - 1, n - 1)};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t s = n - k - 1;  // size of the trailing block
    // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{s-1} C.
    std::vector<Integer> toeplitz(s + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(k, k);
    IntVector power_c(s);  // A^j C
    for (std::size_t i = 0; i < s; ++i) power_c[i] = m(k + 1 + i, k);
    for (std::size_t j = 0; j < s; ++j) {
      Integer rc = 0;
      for (std::size_t i = 0; i < s; ++i) rc += m(k, k + 1 + i) * power_c[i];
      toeplitz[j + 2] = -rc;
      if (j + 1 < s) {
        IntVector next(s, Integer(0));
        for (std::size_t r = 0; r < s; ++r)
          for (std::size_t c = 0; c < s; ++c) next[r] += m(k + 1 + r, k + 1 + c) * power_c[c];
        power_c = std::move(next);
      }
    }
    std::vector<Integer> next_p(s + 2, Integer(0));
    for (std::size_t i = 0; i < s + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, s); ++j) next_p[i] += toeplitz[i - j] * p[j];
    p = std::move(next_p);
  }
  std::reverse(p.begin(), p.end());
  return IntegerPolynomial(std::move(p));
}

bool preserves_form(const IntMatrix& m, const IntersectionForm& form) {
  const IntMatrix& j = form.matrix();
  if (m.rows() != j.rows() || !m.is_square()) return false;
  return m.transpose() * j * m == j && m.determinant() == 1;
}

const char* to_string(AlexanderClass c) {
  switch (c) {
    case AlexanderClass::KnotCompatible:
      return "knot_compatible";
    case AlexanderClass::MultiComponentCompatible:
      return "multi_component_compatible";
    case AlexanderClass::Neither:
      return "neither";
  }
  return "neither";
}

IntegerPolynomial AlexanderReport::normalized() const { return delta_one == -1 ? -poly : poly; }

AlexanderReport alexander_report(const TwistWord& word) {
  AlexanderReport report{characteristic_polynomial(word_action(word)), 0, AlexanderClass::Neither};
  report.delta_one = report.poly.evaluate(1);
  if (abs(report.delta_one) == 1) {
    report.classification = AlexanderClass::KnotCompatible;
  } else if (report.delta_one == 0) {
    report.classification = AlexanderClass::MultiComponentCompatible;
  }
  return report;
}

}  // namespace fibrekit
