#include "covertab/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace covertab {

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

// locate entry with minimal nonzero |value| in mat[t..][t..]; false if all zero
bool find_pivot(const Mat& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
  std::int64_t best = 0;
  bool found = false;
  for (std::size_t i = t; i < m.size(); ++i)
    for (std::size_t j = t; j < m[i].size(); ++j) {
      std::int64_t v = std::llabs(m[i][j]);
      if (v != 0 && (!found || v < best)) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(Mat mat) {
  std::size_t rows = mat.size();
  std::size_t cols = rows ? mat[0].size() : 0;
  std::size_t rank_bound = std::min(rows, cols);
  std::vector<std::int64_t> diag(rank_bound, 0);

  for (std::size_t t = 0; t < rank_bound; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(mat, t, pi, pj)) break;
    std::swap(mat[t], mat[pi]);
    for (auto& row : mat) std::swap(row[t], row[pj]);

    for (;;) {
      // clear column t below the pivot
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (mat[i][t] == 0) continue;
        std::int64_t q = mat[i][t] / mat[t][t];
        for (std::size_t j = t; j < cols; ++j) mat[i][j] -= q * mat[t][j];
        if (mat[i][t] != 0) {  // remainder becomes the smaller new pivot
          std::swap(mat[t], mat[i]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // clear row t right of the pivot
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (mat[t][j] == 0) continue;
        std::int64_t q = mat[t][j] / mat[t][t];
        for (std::size_t i = t; i < rows; ++i) mat[i][j] -= q * mat[i][t];
        if (mat[t][j] != 0) {
          for (auto& row : mat) std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide the rest of the submatrix
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (mat[i][j] % mat[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) mat[t][k] += mat[i][k];
            divides = false;
          }
      if (divides) break;
    }
    diag[t] = std::llabs(mat[t][t]);
  }
  return diag;
}

}  // namespace covertab
