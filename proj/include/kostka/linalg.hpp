#pragma once

#include <optional>

#include "kostka/rational.hpp"

namespace kostka {

// Rank of a rational matrix (rows may be of any count, columns equal-sized).
int matrix_rank(Mat m);

// Inverse of a square nonsingular matrix; throws std::invalid_argument if
// singular.
Mat matrix_inverse(const Mat& m);

// Solves A x = b for square A; nullopt if singular.
std::optional<Vec> solve_square(const Mat& a, const Vec& b);

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

}  // namespace kostka
