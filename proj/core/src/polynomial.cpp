#include "fibrekit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace fibrekit {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntegerPolynomial IntegerPolynomial::linear_power(const Integer& root, unsigned power) {
  IntegerPolynomial result{1};
  const IntegerPolynomial factor(std::vector<Integer>{-root, Integer(1)});
  for (unsigned i = 0; i < power; ++i) result = result * factor;
  return result;
}

void IntegerPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntegerPolynomial::coefficient(long k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Integer IntegerPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool IntegerPolynomial::is_reciprocal() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  std::vector<Integer> out(coeffs_);
  for (auto& c : out) c = -c;
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator+(const IntegerPolynomial& lhs, const IntegerPolynomial& rhs) {
  std::vector<Integer> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator*(const IntegerPolynomial& lhs, const IntegerPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Integer magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1 || k == 0) os << magnitude.get_str();
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace fibrekit
