#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kostka/rootsys.hpp"

namespace kostka {

// Counting method for K_{lambda,mu}. Auto picks pattern enumeration for
// B/C/D and the Kostant formula for A and G2.
enum class Method { Auto, BZ, Kostant };

// Memoized Kostant partition function for one root datum. The DP runs over
// the positive roots in their fixed (simple-root lexicographic) order and is
// keyed by (prefix length, target in simple-root coordinates), so only
// integral vectors ever enter the table. Reusable across queries; not
// thread-safe.
class PartitionMemo {
 public:
  explicit PartitionMemo(const RootDatum& datum);

  // Number of ways to write v as a nonnegative integer combination of the
  // positive roots; 0 if v is not in the nonnegative integral root span.
  Int count(const Vec& v);

  // Same, with v already in simple-root coordinates.
  Int count_coords(const std::vector<long>& coords);

  size_t table_size() const { return table_.size(); }
  void clear() { table_.clear(); }

 private:
  struct Key {
    std::array<int16_t, 7> v;  // coords (rank <= 6) + prefix length
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };

  Int count_rec(int prefix, std::array<int16_t, 7>& target);

  const RootDatum* datum_;
  int rank_;
  std::vector<std::vector<long>> root_coords_;  // positive roots, simple basis
  std::unordered_map<Key, Int, KeyHash> table_;
};

Int kostant_partition(const RootDatum& datum, const Vec& v);
inline Int kostant_partition(const RootSystem& rs, const Vec& v) {
  return kostant_partition(rs.datum(), v);
}

// K_{lambda,mu} = sum_w det(w) P(w(lambda+rho) - mu - rho).
Int kostka_kostant(const RootDatum& datum, const Vec& lambda, const Vec& mu,
                   PartitionMemo* memo = nullptr, int rank_cap = kWeylRankCap);
inline Int kostka_kostant(const RootSystem& rs, const Vec& lambda, const Vec& mu,
                          PartitionMemo* memo = nullptr, int rank_cap = kWeylRankCap) {
  return kostka_kostant(rs.datum(), lambda, mu, memo, rank_cap);
}

// Type-A oracle: semistandard tableaux of the given shape and content,
// counted by direct backtracking. shape must be a partition; content any
// composition with the same total.
Int kostka_ssyt(const std::vector<long>& shape, const std::vector<long>& content);

// K_{N lambda, N mu} for N = 1..n_max.
std::vector<Int> stretched_samples(const RootSystem& rs, const Vec& lambda,
                                   const Vec& mu, int n_max,
                                   Method method = Method::Auto);

}  // namespace kostka
