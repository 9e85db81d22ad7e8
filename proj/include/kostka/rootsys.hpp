#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/rational.hpp"

namespace kostka {

// Root-system conventions, in epsilon coordinates:
//   A_r  (ambient r+1): alpha_i = e_i - e_{i+1}; weights are trace-zero
//                       normalized, so omega_i = e_1+...+e_i minus its mean.
//   B_r  (ambient r):   alpha_i = e_i - e_{i+1}, alpha_r = e_r;
//                       omega_r = (e_1+...+e_r)/2.
//   C_r  (ambient r):   alpha_r = 2 e_r.
//   D_r  (ambient r):   alpha_r = e_{r-1} + e_r; omega_{r-1}, omega_r spin.
//   G2   (ambient 2):   coordinates are the simple-root basis; the inner
//                       product is the symmetrized Cartan matrix
//                       [[2,-3],[-3,6]] (alpha_1 short).
enum class Type { A, B, C, D, G2 };

std::string type_str(Type t);
Type type_from_str(const std::string& s);

inline constexpr int kWeylRankCap = 6;

struct RankCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orthogonal transformation of the ambient space. Entries are integral in
// every supported coordinate system.
struct WeylElement {
  std::vector<std::vector<long>> mat;
  int det = 1;
  Vec apply(const Vec& v) const;
};

enum class DominanceStatus {
  Dominates,            // all c_i nonnegative integers
  NegativeCoefficient,  // some c_i < 0 (mu outside the weight polytope)
  NonIntegral,          // c rational but not integral (not in the root lattice)
  OutsideRootSpan,      // lambda - mu not in the span of the simple roots
};

struct Dominance {
  DominanceStatus status = DominanceStatus::OutsideRootSpan;
  std::vector<Rat> c;  // valid unless OutsideRootSpan
  bool dominates() const { return status == DominanceStatus::Dominates; }
};

// Simple roots + positive roots + inner product: the data every counting
// routine needs. Shared by full root systems and their subsystems.
class RootDatum {
 public:
  RootDatum() = default;
  RootDatum(std::vector<Vec> simples, std::vector<Vec> posroots, Mat gram);

  int rank() const { return static_cast<int>(simples_.size()); }
  int ambient_dim() const { return static_cast<int>(gram_.size()); }
  const std::vector<Vec>& simple_roots() const { return simples_; }
  const std::vector<Vec>& positive_roots() const { return posroots_; }
  const Mat& gram() const { return gram_; }
  const Vec& rho() const { return rho_; }

  Rat inner(const Vec& a, const Vec& b) const;
  // <v, alpha_i^vee>, i zero-based.
  Rat pair_coroot(const Vec& v, int i) const;
  Vec reflect_in_root(const Vec& v, const Vec& root) const;
  Vec simple_reflect(const Vec& v, int i) const;

  struct Coords {
    bool in_span = false;
    std::vector<Rat> c;
  };
  // Coefficients of v in the simple-root basis, with an exact residual check.
  Coords simple_root_coords(const Vec& v) const;

  bool is_dominant(const Vec& w) const;
  // The unique dominant weight in the Weyl orbit, by simple-reflection descent.
  Vec dominant_representative(Vec w) const;

  Dominance dominance(const Vec& lambda, const Vec& mu) const;

  // Full group generated by the simple reflections, built once and cached.
  // Throws RankCapError when rank() > rank_cap.
  const std::vector<WeylElement>& weyl_group(int rank_cap = kWeylRankCap) const;

 private:
  std::vector<Vec> simples_;
  std::vector<Vec> posroots_;
  Mat gram_;
  Mat gram_inv_simples_;  // inverse Gram matrix of the simple roots
  Vec rho_;
  struct WeylCache;
  std::shared_ptr<WeylCache> weyl_;
};

struct DynkinComponent {
  std::string label;          // "A", "B", "C", "D", "G2"
  std::vector<int> simples;   // one-based indices into the parent system
};

struct SubSystem {
  std::vector<int> simples;   // one-based, sorted
  std::vector<DynkinComponent> components;
  RootDatum datum;            // positive roots supported on the subset
};

class RootSystem {
 public:
  static RootSystem build(Type type, int rank);

  Type type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return datum_.ambient_dim(); }
  const RootDatum& datum() const { return datum_; }
  const std::vector<Vec>& simple_roots() const { return datum_.simple_roots(); }
  const std::vector<Vec>& positive_roots() const { return datum_.positive_roots(); }
  const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }
  const std::vector<Vec>& fundamental_weights() const { return fweights_; }
  const Vec& rho() const { return datum_.rho(); }

  Rat inner(const Vec& a, const Vec& b) const { return datum_.inner(a, b); }
  Rat pair_coroot(const Vec& v, int i) const { return datum_.pair_coroot(v, i); }

  // Weight from fundamental-weight coefficients.
  Vec weight_from_fw(const std::vector<Rat>& coeffs) const;
  // Epsilon-coordinate input; applies the type-A trace-zero normalization.
  Vec weight_from_eps(const Vec& coords) const;
  // d_i = <w, alpha_i^vee> for all i.
  std::vector<Rat> fw_coefficients(const Vec& w) const;

  bool is_dominant(const Vec& w) const { return datum_.is_dominant(w); }
  Vec dominant_representative(Vec w) const { return datum_.dominant_representative(std::move(w)); }

  Dominance dominance(const Vec& lambda, const Vec& mu) const {
    return datum_.dominance(lambda, mu);
  }
  // Precondition: lambda dominates mu.
  bool is_primitive(const Vec& lambda, const Vec& mu) const;

  const std::vector<WeylElement>& weyl_group(int rank_cap = kWeylRankCap) const {
    return datum_.weyl_group(rank_cap);
  }

  // Sub-root system generated by a set of simple roots (one-based indices),
  // with its decomposition into Dynkin-diagram components.
  SubSystem subsystem(const std::vector<int>& simple_subset) const;
  // Orthogonal projection onto the rational span of the subset's simple roots.
  Vec project_weight(const std::vector<int>& simple_subset, const Vec& w) const;

 private:
  Type type_ = Type::A;
  int rank_ = 0;
  RootDatum datum_;
  std::vector<std::vector<long>> cartan_;
  std::vector<Vec> fweights_;
};

}  // namespace kostka
