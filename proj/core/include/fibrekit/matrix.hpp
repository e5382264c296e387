#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fibrekit/arith.hpp"

namespace fibrekit {

/// Dense row-major matrix over the integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;

  IntVector apply(const IntVector& x) const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Integer determinant() const;

  Integer trace() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace fibrekit
