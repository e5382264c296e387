#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fibrekit/arith.hpp"

namespace fibrekit {

/// Univariate polynomial in t with integer coefficients, constant term
/// first. Trailing zero coefficients are always stripped, so the zero
/// polynomial has no coefficients and degree -1.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coefficients);
  IntegerPolynomial(std::initializer_list<long> coefficients);

  /// (t - root)^power
  static IntegerPolynomial linear_power(const Integer& root, unsigned power);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(long k) const;

  Integer evaluate(const Integer& t) const;

  /// True when t^deg p(1/t) = p(t), compared coefficient by coefficient.
  bool is_reciprocal() const;

  IntegerPolynomial operator-() const;
  friend IntegerPolynomial operator+(const IntegerPolynomial& lhs, const IntegerPolynomial& rhs);
  friend IntegerPolynomial operator*(const IntegerPolynomial& lhs, const IntegerPolynomial& rhs);
  friend bool operator==(const IntegerPolynomial& lhs, const IntegerPolynomial& rhs) = default;

  /// Descending-degree text such as "t^2 - t + 1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

}  // namespace fibrekit
