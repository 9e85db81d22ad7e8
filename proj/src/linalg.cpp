#include "kostka/linalg.hpp"

#include <stdexcept>

namespace kostka {

int matrix_rank(Mat m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[rank][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

Mat matrix_inverse(const Mat& m) {
  const size_t n = m.size();
  Mat a = m;
  Mat inv(n, Vec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("matrix_inverse: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
  const size_t n = a.size();
  Mat aug = a;
  for (size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(aug[col], aug[pivot]);
    Rat d = aug[col][col];
    for (size_t j = col; j <= n; ++j) aug[col][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  Vec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace kostka
