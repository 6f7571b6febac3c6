#include "dpcolor/linalg.hpp"

namespace dpcolor {

RowEchelon row_reduce(const Field& f, Matrix m) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pivot, c));
    }
    const std::uint32_t scale = f.inv_index(m.at(row, col));
    for (int c = col; c < m.cols; ++c) m.at(row, c) = f.mul_index(m.at(row, c), scale);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint32_t factor = f.neg_index(m.at(r, col));
      for (int c = col; c < m.cols; ++c) {
        if (m.at(row, c) != 0) m.at(r, c) = f.add_index(m.at(r, c), f.mul_index(factor, m.at(row, c)));
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int matrix_rank(const Field& f, const Matrix& m) { return row_reduce(f, m).rank(); }

std::vector<std::vector<std::uint32_t>> kernel_basis(const Field& f, const Matrix& m) {
  const RowEchelon e = row_reduce(f, m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[free] = 1;
    for (int r = 0; r < e.rank(); ++r) v[e.pivot_cols[r]] = f.neg_index(e.reduced.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dpcolor
