#include "fibrekit/rational_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fibrekit {

EchelonForm row_reduce(std::vector<RatVector> rows, std::size_t cols) {
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("row length does not match column count");
  }
  EchelonForm form;
  form.cols = cols;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < rows.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot]);

    const Rational inverse = 1 / rows[next_row][col];
    for (auto& x : rows[next_row]) x *= inverse;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[next_row][c];
    }
    form.pivots.push_back(col);
    ++next_row;
  }
  rows.resize(next_row);
  form.rows = std::move(rows);
  return form;
}

std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t cols) {
  const EchelonForm form = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : form.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < form.rank(); ++r) v[form.pivots[r]] = -form.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols) {
  return row_reduce(rows, cols).rank();
}

}  // namespace fibrekit
