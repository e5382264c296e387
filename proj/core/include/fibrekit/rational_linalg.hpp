#pragma once

#include <cstddef>
#include <vector>

#include "fibrekit/arith.hpp"

namespace fibrekit {

/// Reduced row echelon form over Q. Pivots are chosen at the lowest
/// available column; `pivots` lists the pivot column of each nonzero row.
struct EchelonForm {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

EchelonForm row_reduce(std::vector<RatVector> rows, std::size_t cols);

/// Basis of {x : r . x = 0 for every row r}, one vector per free column in
/// ascending column order, with a 1 in that free column.
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t cols);

std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols);

}  // namespace fibrekit
