#include "superrep/linalg.hpp"

#include <stdexcept>

namespace superrep {

QMatrix mat_inverse(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix work = a;
  QMatrix inv = identity_matrix<QMatrix>(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat p = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      const Rat f = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int mat_rank(const QMatrix& a) {
  if (a.empty()) return 0;
  QMatrix work = a;
  const std::size_t rows = work.size(), cols = work[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && work[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(work[pivot], work[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (work[i][col] == 0) continue;
      const Rat f = work[i][col] / work[row][col];
      for (std::size_t j = col; j < cols; ++j) work[i][j] -= f * work[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<GaussRat>> nullspace(const GMatrix& a) {
  if (a.empty()) return {};
  GMatrix work = a;
  const std::size_t rows = work.size(), cols = work[0].size();
  std::vector<long long> pivot_of_col(cols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && work[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(work[pivot], work[row]);
    const GaussRat p = work[row][col];
    for (std::size_t j = col; j < cols; ++j) work[row][j] = work[row][j] / p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || work[i][col].is_zero()) continue;
      const GaussRat f = work[i][col];
      for (std::size_t j = col; j < cols; ++j) work[i][j] -= f * work[row][j];
    }
    pivot_of_col[col] = static_cast<long long>(row);
    ++row;
  }
  std::vector<std::vector<GaussRat>> basis;
  for (std::size_t freecol = 0; freecol < cols; ++freecol) {
    if (pivot_of_col[freecol] >= 0) continue;
    std::vector<GaussRat> v(cols);
    v[freecol] = GaussRat(1);
    for (std::size_t col = 0; col < cols; ++col) {
      const long long pr = pivot_of_col[col];
      if (pr >= 0) v[col] = -work[static_cast<std::size_t>(pr)][freecol];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace superrep
