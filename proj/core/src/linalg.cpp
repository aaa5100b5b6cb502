#include "qsw/scalars/linalg.hpp"

namespace qsw::lin {

std::size_t laurent_rank_fraction_free(DenseMatrix<Laurent> mat) {
  if (mat.empty() || mat[0].empty()) return 0;
  const std::size_t rows = mat.size(), cols = mat[0].size();
  std::size_t r = 0;
  Laurent prev(1);  // previous pivot; Bareiss divisions by it are exact
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && mat[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(mat[r], mat[sel]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mat[i][j] = (mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j]).div_exact(prev);
      }
      mat[i][c] = Laurent();
    }
    prev = mat[r][c];
    ++r;
  }
  return r;
}

}  // namespace qsw::lin
