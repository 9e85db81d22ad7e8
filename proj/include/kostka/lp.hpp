#pragma once

#include "kostka/rational.hpp"

namespace kostka {

// Exact-rational linear program over free variables:
//   maximize objective . x   s.t.   ge_a[i] . x >= ge_b[i],  eq_a[j] . x == eq_b[j]
// Dense two-phase simplex with Bland's rule; intended for the small, bounded
// systems produced by the constraint builders.
struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rat value;
  Vec x;
};

LPResult solve_lp(const Mat& ge_a, const Vec& ge_b, const Mat& eq_a,
                  const Vec& eq_b, const Vec& objective);

}  // namespace kostka
