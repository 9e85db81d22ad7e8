#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kostka/rootsys.hpp"

namespace kostka {

// Triangular interlacing array for types B/C/D. Rows are stored from the
// diagonal: lambda_rows[i] holds lambda_{i+1, i+1..r}; eta_rows[i] holds
// eta_{i+1, i+1..r} (B/C) or eta_{i+1, i+1..r-1} (D). The first lambda row is
// the highest weight in epsilon coordinates.
struct BZPattern {
  Type type = Type::B;
  int rank = 0;
  std::vector<std::vector<Rat>> lambda_rows;
  std::vector<std::vector<Rat>> eta_rows;

  // one-based accessors
  const Rat& lam(int i, int j) const { return lambda_rows[i - 1][j - i]; }
  Rat& lam(int i, int j) { return lambda_rows[i - 1][j - i]; }
  const Rat& eta(int i, int j) const { return eta_rows[i - 1][j - i]; }
  Rat& eta(int i, int j) { return eta_rows[i - 1][j - i]; }
};

// mu_i = |lambda_i| + |lambda_{i+1}| - 2|eta_i|, with empty sums zero.
Vec weight_of_pattern(const BZPattern& p);

// All defining inequalities of the pattern (interlacing, eta_{i,r} >= 0 for
// B/C, the extra type-D rows).
bool pattern_is_valid(const BZPattern& p);

struct LinearRelation {
  enum class Rel { GE, EQ };
  Vec coeffs;
  Rat rhs;
  Rel rel = Rel::GE;
};

// H-description over the named coordinates (the non-first-row lambda_{i,j}
// and all eta_{i,j}; first-row values enter as constants).
struct ConstraintSystem {
  std::vector<std::string> names;  // "L_i_j" / "E_i_j"
  std::vector<LinearRelation> rows;
  int n() const { return static_cast<int>(names.size()); }
};

ConstraintSystem constraint_system_bz(const RootSystem& rs, const Vec& lambda,
                                      const std::optional<Vec>& mu = std::nullopt);

// The pattern's free coordinates in constraint-system order.
Vec pattern_coordinates(const BZPattern& p);
BZPattern pattern_from_coordinates(const RootSystem& rs, const Vec& lambda, const Vec& x);

// Congruence classes of the integral patterns (Z, the lambda-determined
// shared class, or half-integers), per coordinate in constraint-system order.
struct LatticeSpec {
  enum class Cong { Integer, Shared, HalfInteger };
  std::vector<Cong> coords;
  // parity of the doubled coordinates in the shared class (0 or 1), fixed by
  // the integrality of lambda itself
  int shared_parity = 0;
};
LatticeSpec lattice_spec_bz(const RootSystem& rs, const Vec& lambda);

// Number of integral patterns of highest weight lambda and weight mu; equals
// the weight multiplicity. Row-by-row branch-and-prune enumeration on doubled
// coordinates. The optional callback sees every pattern found.
Int count_integral_patterns(const RootSystem& rs, const Vec& lambda, const Vec& mu,
                            const std::function<void(const BZPattern&)>& on_pattern = {});

// A point in the relative interior of the pattern polytope, by the averaging
// construction (with the type-D case distinctions near the fork). delta is
// only consulted in the type-D cases that need it.
BZPattern interior_point_bz(const RootSystem& rs, const Vec& lambda,
                            const std::optional<Rat>& delta = std::nullopt);

// dim = |Phi_+| - |Phi'_+| with Phi' spanned by the simple roots orthogonal
// to lambda.
int dim_bz_lambda(const RootSystem& rs, const Vec& lambda);

struct AffineHull {
  bool feasible = false;
  int dimension = -1;
  Vec point;                       // relative-interior point when feasible
  std::vector<bool> implicit_eq;   // per GE row: tight on the whole polytope
};

// Standard affine-hull algorithm: maximize each inequality's slack with an
// exact LP; zero maximum marks an implicit equality. The returned point is
// the average of the slack maximizers.
AffineHull affine_hull_dimension(const ConstraintSystem& cs);

// mu lies in the convex hull of the Weyl orbit of lambda (lambda dominant).
bool weight_polytope_contains(const RootSystem& rs, const Vec& lambda, const Vec& mu);

}  // namespace kostka
