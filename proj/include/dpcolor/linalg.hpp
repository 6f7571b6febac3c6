#pragma once

#include <cstdint>
#include <vector>

#include "dpcolor/finite_field.hpp"

namespace dpcolor {

/// Dense row-major matrix of field element indices.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  std::uint32_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::uint32_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

struct RowEchelon {
  Matrix reduced;               // reduced row echelon form
  std::vector<int> pivot_cols;  // one per nonzero row, increasing
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/// Gauss-Jordan elimination; the pivot in each column is the first row (in
/// order) with a nonzero entry.
RowEchelon row_reduce(const Field& f, Matrix m);
int matrix_rank(const Field& f, const Matrix& m);
/// Basis of {v : m v = 0}, one vector per non-pivot column.
std::vector<std::vector<std::uint32_t>> kernel_basis(const Field& f, const Matrix& m);

}  // namespace dpcolor
