#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kostka {

// Everything in this library is exact: mpq_class for coordinates,
// mpz_class for counts. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;

// Canonical lowest-terms string: "3", "-1/2".
inline std::string rat_str(const Rat& x) { return x.get_str(); }

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Rat& s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace kostka
