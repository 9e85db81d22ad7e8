#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kostka/multiplicity.hpp"
#include "kostka/rootsys.hpp"

namespace kostka {

struct NotDominatingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One polynomial per residue class mod period, constant term first. The zero
// function is the canonical all-empty-branch value; its degree is the "ZERO"
// sentinel, never an integer.
struct QuasiPolynomial {
  int period = 1;
  std::vector<std::vector<Rat>> branches;

  bool is_zero() const {
    for (const auto& b : branches)
      if (!b.empty()) return false;
    return true;
  }
  int degree() const;  // requires !is_zero()
  Rat evaluate(long n) const;
};

struct PredictedDegree {
  enum class Kind { Finite, ZeroFunction, NotDominating };
  Kind kind = Kind::NotDominating;
  int degree = 0;  // valid for Finite
  std::vector<Rat> c;  // lambda - mu in the simple-root basis (when solvable)
  std::vector<Rat> d;  // <lambda, alpha_i^vee>
  int phi1_positive = 0;
  int phi1_rank = 0;
  int phi2_positive = 0;
};

// degree = |Phi1_+| - rk(Phi1) - |Phi2_+|, with Phi1 spanned by {alpha_i :
// c_i != 0} and Phi2 by {alpha_i : c_i != 0, d_i = 0}.
PredictedDegree predicted_degree(const RootSystem& rs, const Vec& lambda, const Vec& mu);

// Projection of a dominating pair onto the components of the simple roots
// that actually occur in lambda - mu. Each component pair is primitive.
struct PairComponent {
  DynkinComponent dynkin;
  RootDatum datum;
  Vec lambda, mu;
};
struct PairDecomposition {
  std::vector<PairComponent> components;
  std::vector<int> dropped_simples;  // one-based indices with c_i = 0
};
// Throws NotDominatingError when lambda does not dominate mu.
PairDecomposition factorize_pair(const RootSystem& rs, const Vec& lambda, const Vec& mu);

struct FitFailure {
  int period = 0;
  int residue = 0;
  std::string reason;
};
struct FitResult {
  std::optional<QuasiPolynomial> qp;
  std::vector<FitFailure> failures;
  bool ok() const { return qp.has_value(); }
};

// Per-residue-class exact Lagrange interpolation; the last two samples of
// each class are held out and must be matched exactly. Trial periods are
// attempted in order; the first that validates wins.
FitResult fit_quasi_polynomial(const std::vector<Int>& samples,
                               const std::vector<int>& trial_periods = {1, 2, 3, 4, 6});

enum class Verdict { Match, Mismatch, Skipped };
std::string verdict_str(Verdict v);

struct VerifyOptions {
  int n_max = 0;  // 0: pick 2*(predicted+2)+2
  Method method = Method::Auto;
  bool with_fit = true;
  bool with_geometry = true;  // BZ section dimension; types B/C/D only
  std::vector<int> trial_periods = {1, 2, 3, 4, 6};
  bool auto_raise = true;  // raise n_max once if validation fails
  std::optional<int> expect;  // compare every computed degree against this
};

struct DegreeReport {
  Type type = Type::A;
  int rank = 0;
  Vec lambda, mu;
  PredictedDegree predicted;

  std::vector<Int> samples;
  int n_max_used = 0;
  bool n_max_raised = false;
  Method sampler = Method::Auto;
  std::optional<QuasiPolynomial> fitted;
  std::vector<FitFailure> fit_failures;

  enum class Geometry { NotComputed, Empty, Dim };
  Geometry geometry = Geometry::NotComputed;
  int geometric_dimension = -1;

  Verdict fit_vs_predicted = Verdict::Skipped;
  Verdict geometry_vs_predicted = Verdict::Skipped;
  Verdict geometry_vs_fit = Verdict::Skipped;
  Verdict expected_vs_computed = Verdict::Skipped;

  bool any_mismatch() const {
    return fit_vs_predicted == Verdict::Mismatch ||
           geometry_vs_predicted == Verdict::Mismatch ||
           geometry_vs_fit == Verdict::Mismatch ||
           expected_vs_computed == Verdict::Mismatch;
  }
  bool fit_failed() const {
    return !fitted.has_value() && !fit_failures.empty();
  }
};

DegreeReport verify_pair(const RootSystem& rs, const Vec& lambda, const Vec& mu,
                         const VerifyOptions& opts = {});

}  // namespace kostka
