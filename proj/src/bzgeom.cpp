#include "kostka/bzgeom.hpp"

#include <algorithm>
#include <stdexcept>

#include "kostka/linalg.hpp"
#include "kostka/lp.hpp"

namespace kostka {

namespace {

bool is_bcd(Type t) { return t == Type::B || t == Type::C || t == Type::D; }

void require_bcd(Type t) {
  if (!is_bcd(t))
    throw std::invalid_argument("pattern operations are defined for types B, C, D");
}

int eta_cols_max(Type t, int r) { return t == Type::D ? r - 1 : r; }

// Coordinate layout of the H-description: stage by stage, the eta row i then
// the lambda row i+1. First-row lambdas are constants, not coordinates.
struct CoordLayout {
  Type type;
  int r;
  std::vector<std::string> names;
  std::vector<std::vector<int>> lam_index;  // [i-1][j-i], -1 for row 1
  std::vector<std::vector<int>> eta_index;

  CoordLayout(Type t, int rank) : type(t), r(rank) {
    lam_index.assign(r, {});
    for (int i = 1; i <= r; ++i) lam_index[i - 1].assign(r - i + 1, -1);
    const int emax = eta_cols_max(t, r);
    eta_index.assign(emax >= 0 ? (t == Type::D ? r - 1 : r) : 0, {});
    for (int i = 1; i <= (t == Type::D ? r - 1 : r); ++i)
      eta_index[i - 1].assign(emax - i + 1, -1);

    for (int i = 1; i <= (t == Type::D ? r - 1 : r); ++i) {
      for (int j = i; j <= emax; ++j) {
        eta_index[i - 1][j - i] = static_cast<int>(names.size());
        names.push_back("E_" + std::to_string(i) + "_" + std::to_string(j));
      }
      if (i + 1 <= r)
        for (int j = i + 1; j <= r; ++j) {
          lam_index[i][j - i - 1] = static_cast<int>(names.size());
          names.push_back("L_" + std::to_string(i + 1) + "_" + std::to_string(j));
        }
    }
  }

  int lam(int i, int j) const { return i == 1 ? -1 : lam_index[i - 1][j - i]; }
  int eta(int i, int j) const { return eta_index[i - 1][j - i]; }
};

}  // namespace

Vec weight_of_pattern(const BZPattern& p) {
  const int r = p.rank;
  Vec mu(r, Rat(0));
  auto row_sum = [](const std::vector<Rat>& row) {
    Rat s = 0;
    for (const auto& x : row) s += x;
    return s;
  };
  for (int i = 1; i <= r; ++i) {
    Rat s = row_sum(p.lambda_rows[i - 1]);
    if (i + 1 <= r) s += row_sum(p.lambda_rows[i]);
    if (i <= static_cast<int>(p.eta_rows.size())) s -= 2 * row_sum(p.eta_rows[i - 1]);
    mu[i - 1] = s;
  }
  return mu;
}

bool pattern_is_valid(const BZPattern& p) {
  require_bcd(p.type);
  const int r = p.rank;
  const int emax = eta_cols_max(p.type, r);
  for (int i = 1; i <= (p.type == Type::D ? r - 1 : r); ++i)
    for (int k = i; k <= emax; ++k) {
      if (p.eta(i, k) > p.lam(i, k)) return false;
      if (i + 1 <= k && p.eta(i, k) > p.lam(i + 1, k)) return false;
      if (k < r) {
        if (p.eta(i, k) < p.lam(i, k + 1)) return false;
        if (p.eta(i, k) < p.lam(i + 1, k + 1)) return false;
      } else {  // B/C only
        if (p.eta(i, r) < 0) return false;
      }
    }
  if (p.type == Type::D) {
    for (int i = 1; i <= r - 1; ++i) {
      Rat lhs = p.lam(i, r) + p.lam(i + 1, r);
      if (lhs + p.lam(i, r - 1) < p.eta(i, r - 1)) return false;
      if (i + 1 <= r - 1 && lhs + p.lam(i + 1, r - 1) < p.eta(i, r - 1)) return false;
    }
  }
  return true;
}

ConstraintSystem constraint_system_bz(const RootSystem& rs, const Vec& lambda,
                                      const std::optional<Vec>& mu) {
  require_bcd(rs.type());
  const int r = rs.rank();
  const Type t = rs.type();
  CoordLayout lay(t, r);

  ConstraintSystem cs;
  cs.names = lay.names;
  const int n = cs.n();

  // term: +coef * lambda_{i,j} or eta_{i,j}; first-row values fold into rhs.
  auto add_lam = [&](LinearRelation& rel, int i, int j, const Rat& coef) {
    int idx = lay.lam(i, j);
    if (idx < 0)
      rel.rhs -= coef * lambda[j - 1];
    else
      rel.coeffs[idx] += coef;
  };
  auto add_eta = [&](LinearRelation& rel, int i, int j, const Rat& coef) {
    rel.coeffs[lay.eta(i, j)] += coef;
  };
  auto fresh = [&](LinearRelation::Rel kind) {
    LinearRelation rel;
    rel.coeffs.assign(n, Rat(0));
    rel.rhs = 0;
    rel.rel = kind;
    return rel;
  };
  auto push = [&](LinearRelation rel) {
    bool all_zero = true;
    for (const auto& c : rel.coeffs)
      if (c != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) throw std::logic_error("degenerate constraint row");
    cs.rows.push_back(std::move(rel));
  };

  const int emax = eta_cols_max(t, r);
  for (int i = 1; i <= (t == Type::D ? r - 1 : r); ++i)
    for (int k = i; k <= emax; ++k) {
      {  // lambda_{i,k} >= eta_{i,k}
        auto rel = fresh(LinearRelation::Rel::GE);
        add_lam(rel, i, k, Rat(1));
        add_eta(rel, i, k, Rat(-1));
        push(std::move(rel));
      }
      if (i + 1 <= k) {  // lambda_{i+1,k} >= eta_{i,k}
        auto rel = fresh(LinearRelation::Rel::GE);
        add_lam(rel, i + 1, k, Rat(1));
        add_eta(rel, i, k, Rat(-1));
        push(std::move(rel));
      }
      if (k < r) {
        {  // eta_{i,k} >= lambda_{i,k+1}
          auto rel = fresh(LinearRelation::Rel::GE);
          add_eta(rel, i, k, Rat(1));
          add_lam(rel, i, k + 1, Rat(-1));
          push(std::move(rel));
        }
        {  // eta_{i,k} >= lambda_{i+1,k+1}
          auto rel = fresh(LinearRelation::Rel::GE);
          add_eta(rel, i, k, Rat(1));
          add_lam(rel, i + 1, k + 1, Rat(-1));
          push(std::move(rel));
        }
      } else {  // B/C: eta_{i,r} >= 0
        auto rel = fresh(LinearRelation::Rel::GE);
        add_eta(rel, i, r, Rat(1));
        push(std::move(rel));
      }
    }

  if (t == Type::D) {
    for (int i = 1; i <= r - 1; ++i) {
      {  // lambda_{i,r} + lambda_{i+1,r} + lambda_{i,r-1} >= eta_{i,r-1}
        auto rel = fresh(LinearRelation::Rel::GE);
        add_lam(rel, i, r, Rat(1));
        add_lam(rel, i + 1, r, Rat(1));
        add_lam(rel, i, r - 1, Rat(1));
        add_eta(rel, i, r - 1, Rat(-1));
        push(std::move(rel));
      }
      if (i + 1 <= r - 1) {  // the other branch of the min
        auto rel = fresh(LinearRelation::Rel::GE);
        add_lam(rel, i, r, Rat(1));
        add_lam(rel, i + 1, r, Rat(1));
        add_lam(rel, i + 1, r - 1, Rat(1));
        add_eta(rel, i, r - 1, Rat(-1));
        push(std::move(rel));
      }
    }
  }

  if (mu) {
    if (static_cast<int>(mu->size()) != r)
      throw std::invalid_argument("mu has wrong dimension");
    for (int i = 1; i <= r; ++i) {
      auto rel = fresh(LinearRelation::Rel::EQ);
      rel.rhs = (*mu)[i - 1];
      for (int j = i; j <= r; ++j) add_lam(rel, i, j, Rat(1));
      if (i + 1 <= r)
        for (int j = i + 1; j <= r; ++j) add_lam(rel, i + 1, j, Rat(1));
      if (i <= (t == Type::D ? r - 1 : r))
        for (int j = i; j <= emax; ++j) add_eta(rel, i, j, Rat(-2));
      push(std::move(rel));
    }
  }
  return cs;
}

Vec pattern_coordinates(const BZPattern& p) {
  CoordLayout lay(p.type, p.rank);
  Vec x(lay.names.size());
  for (int i = 2; i <= p.rank; ++i)
    for (int j = i; j <= p.rank; ++j) x[lay.lam(i, j)] = p.lam(i, j);
  for (int i = 1; i <= (p.type == Type::D ? p.rank - 1 : p.rank); ++i)
    for (int j = i; j <= eta_cols_max(p.type, p.rank); ++j) x[lay.eta(i, j)] = p.eta(i, j);
  return x;
}

BZPattern pattern_from_coordinates(const RootSystem& rs, const Vec& lambda, const Vec& x) {
  require_bcd(rs.type());
  const int r = rs.rank();
  CoordLayout lay(rs.type(), r);
  if (static_cast<int>(x.size()) != static_cast<int>(lay.names.size()))
    throw std::invalid_argument("coordinate vector has wrong length");
  BZPattern p;
  p.type = rs.type();
  p.rank = r;
  p.lambda_rows.assign(r, {});
  for (int i = 1; i <= r; ++i) p.lambda_rows[i - 1].assign(r - i + 1, Rat(0));
  const int erows = rs.type() == Type::D ? r - 1 : r;
  p.eta_rows.assign(erows, {});
  for (int i = 1; i <= erows; ++i)
    p.eta_rows[i - 1].assign(eta_cols_max(rs.type(), r) - i + 1, Rat(0));
  for (int j = 1; j <= r; ++j) p.lam(1, j) = lambda[j - 1];
  for (int i = 2; i <= r; ++i)
    for (int j = i; j <= r; ++j) p.lam(i, j) = x[lay.lam(i, j)];
  for (int i = 1; i <= erows; ++i)
    for (int j = i; j <= eta_cols_max(rs.type(), r); ++j) p.eta(i, j) = x[lay.eta(i, j)];
  return p;
}

LatticeSpec lattice_spec_bz(const RootSystem& rs, const Vec& lambda) {
  require_bcd(rs.type());
  const int r = rs.rank();
  CoordLayout lay(rs.type(), r);
  LatticeSpec spec;
  spec.coords.assign(lay.names.size(), LatticeSpec::Cong::Integer);

  int parity = -1;
  for (int j = 0; j < r; ++j) {
    Rat dbl = Rat(2) * lambda[j];
    if (dbl.get_den() != 1)
      throw std::invalid_argument("lambda is not half-integral");
    int p = static_cast<int>(mpz_class(dbl.get_num() % 2).get_si());
    if (p < 0) p += 2;
    if (parity < 0)
      parity = p;
    else if (parity != p)
      throw std::invalid_argument("lambda is not an integral weight of this type");
  }
  spec.shared_parity = parity;
  if (rs.type() == Type::C) {
    if (parity != 0) throw std::invalid_argument("type C weights have integer coordinates");
    return spec;  // everything in Z
  }
  for (size_t i = 0; i < lay.names.size(); ++i) spec.coords[i] = LatticeSpec::Cong::Shared;
  if (rs.type() == Type::B)
    for (int i = 1; i <= r; ++i) spec.coords[lay.eta(i, r)] = LatticeSpec::Cong::HalfInteger;
  return spec;
}

namespace {

std::vector<long> doubled_coords(const Vec& v, const char* what) {
  std::vector<long> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat d = Rat(2) * v[i];
    if (d.get_den() != 1) throw std::invalid_argument(std::string(what) + " is not half-integral");
    out[i] = static_cast<long>(d.get_num().get_si());
  }
  return out;
}

// Row-by-row enumeration of integral patterns on doubled coordinates.
// Stage i: the eta row i (interval bounds against lambda row i), then the
// lambda row i+1, whose total is pinned by the weight equality for mu_i.
class PatternCounter {
 public:
  PatternCounter(const RootSystem& rs, const Vec& lambda, const Vec& mu,
                 const std::function<void(const BZPattern&)>& cb)
      : rs_(rs), t_(rs.type()), r_(rs.rank()), cb_(cb) {
    L_.assign(r_, {});
    E_.assign(t_ == Type::D ? r_ - 1 : r_, {});
    L_[0] = doubled_coords(lambda, "lambda");
    M_ = doubled_coords(mu, "mu");
    LatticeSpec spec = lattice_spec_bz(rs, lambda);
    parity_ = spec.shared_parity;
  }

  Int run() {
    sumL_.assign(r_ + 1, 0);
    for (long x : L_[0]) sumL_[1] += x;
    stage(1);
    return count_;
  }

 private:
  // doubled-coordinate congruence: even for type C, free for the last eta
  // column in type B, the lambda-determined parity otherwise
  bool parity_ok(int j, long v) const {
    if (t_ == Type::C) return v % 2 == 0;
    if (t_ == Type::B && j == r_) return true;  // any half-integer
    long m = v % 2;
    if (m < 0) m += 2;
    return m == parity_;
  }

  long lam(int i, int j) const { return L_[i - 1][j - i]; }
  long eta(int i, int j) const { return E_[i - 1][j - i]; }

  void stage(int i) {
    const int ecols = (t_ == Type::D ? r_ - 1 : r_) - i + 1;
    E_[i - 1].assign(ecols, 0);
    enum_eta(i, i, 0);
  }

  // eta row i entry j; partial = sum of chosen entries so far
  void enum_eta(int i, int j, long partial) {
    const int emax = t_ == Type::D ? r_ - 1 : r_;
    if (j > emax) {
      finish_eta_row(i, partial);
      return;
    }
    long hi = lam(i, j);
    long lo;
    if (j < r_)
      lo = lam(i, j + 1);
    else
      lo = 0;  // B/C boundary
    if (t_ == Type::B && j == r_) {
      for (long v = lo; v <= hi; ++v) {
        E_[i - 1][j - i] = v;
        enum_eta(i, j + 1, partial + v);
      }
    } else {
      long v0 = lo;
      if (!parity_ok(j, v0)) ++v0;
      for (long v = v0; v <= hi; v += 2) {
        E_[i - 1][j - i] = v;
        enum_eta(i, j + 1, partial + v);
      }
    }
  }

  void finish_eta_row(int i, long sum_eta) {
    if (t_ != Type::D && i == r_) {
      // last stage in B/C: the weight equality for mu_r pins |eta_r|
      long target = sumL_[r_] - M_[r_ - 1];
      if (target % 2 != 0) return;
      if (2 * sum_eta == target) emit();
      return;
    }
    // target for |lambda_{i+1}|
    long s = M_[i - 1] - sumL_[i] + 2 * sum_eta;
    if (t_ == Type::D && i == r_ - 1 && s != M_[r_ - 1]) return;  // mu_r equality
    // cheap sandwich: every lambda_{i+1,j} sits between eta_{i,j} and eta_{i,j-1}
    if (t_ != Type::D) {
      if (s < sum_eta - eta(i, i) || s > sum_eta - eta(i, r_)) return;
    }
    L_[i].assign(r_ - i, 0);
    sumL_[i + 1] = s;
    enum_lam(i + 1, i + 1, s);
  }

  // lambda row i2 = i+1, entries j = i2..r enumerated left to right; the last
  // entry is forced by the remaining sum.
  void enum_lam(int i2, int j, long remaining) {
    const int i = i2 - 1;  // eta row above
    if (j > r_) {
      if (remaining != 0) return;
      if (t_ == Type::D && i2 == r_)
        emit();
      else
        stage(i2);
      return;
    }
    long hi, lo;
    if (t_ == Type::D && j == r_) {
      hi = eta(i, r_ - 1);
      // type-D inequality; both branches of the min must hold
      long m = lam(i, r_ - 1);
      if (i2 <= r_ - 1) m = std::min(m, lam(i2, r_ - 1));
      lo = eta(i, r_ - 1) - lam(i, r_) - m;
    } else {
      hi = eta(i, j - 1);
      lo = eta(i, j);
    }
    if (j == r_) {
      long v = remaining;
      if (v < lo || v > hi || !parity_ok(j, v)) return;
      L_[i2 - 1][j - i2] = v;
      enum_lam(i2, j + 1, 0);
      return;
    }
    long v0 = lo;
    if (!parity_ok(j, v0)) ++v0;
    for (long v = v0; v <= hi; v += 2) {
      long rest = remaining - v;
      if (rest < min_suffix(i2, j + 1) || rest > max_suffix(i2, j + 1)) continue;
      L_[i2 - 1][j - i2] = v;
      enum_lam(i2, j + 1, rest);
    }
  }

  // Loose window for the sum of lambda-row entries jfrom..r, from the eta row
  // above; the type-D last entry gets a conservative lower bound.
  long min_suffix(int i2, int jfrom) const {
    const int i = i2 - 1;
    long s = 0;
    for (int j = jfrom; j <= r_; ++j) {
      if (t_ == Type::D && j == r_) {
        long m = lam(i, r_ - 1);
        if (i2 <= r_ - 1) m = std::min(m, eta(i, r_ - 2));  // hi of lam(i2, r-1)
        s += eta(i, r_ - 1) - lam(i, r_) - m;
      } else {
        s += eta(i, j);
      }
    }
    return s;
  }
  long max_suffix(int i2, int jfrom) const {
    const int i = i2 - 1;
    long s = 0;
    for (int j = jfrom; j <= r_; ++j) s += eta(i, j - 1);
    return s;
  }

  void emit() {
    ++count_;
    if (cb_) {
      BZPattern p;
      p.type = t_;
      p.rank = r_;
      p.lambda_rows.assign(r_, {});
      p.eta_rows.assign(E_.size(), {});
      for (int i = 1; i <= r_; ++i) {
        p.lambda_rows[i - 1].resize(r_ - i + 1);
        for (int j = i; j <= r_; ++j) p.lam(i, j) = Rat(lam(i, j)) / 2;
      }
      for (size_t i = 1; i <= E_.size(); ++i) {
        p.eta_rows[i - 1].resize(E_[i - 1].size());
        for (size_t k = 0; k < E_[i - 1].size(); ++k)
          p.eta_rows[i - 1][k] = Rat(E_[i - 1][k]) / 2;
      }
      cb_(p);
    }
  }

  const RootSystem& rs_;
  Type t_;
  int r_;
  const std::function<void(const BZPattern&)>& cb_;
  std::vector<std::vector<long>> L_, E_;
  std::vector<long> M_;
  std::vector<long> sumL_;
  int parity_ = 0;
  Int count_ = 0;
};

}  // namespace

Int count_integral_patterns(const RootSystem& rs, const Vec& lambda, const Vec& mu,
                            const std::function<void(const BZPattern&)>& on_pattern) {
  require_bcd(rs.type());
  if (!rs.is_dominant(lambda) || !rs.is_dominant(mu))
    throw std::invalid_argument("lambda and mu must be dominant");
  Dominance dom = rs.dominance(lambda, mu);
  if (!dom.dominates()) return 0;  // not in the root lattice or outside the polytope
  PatternCounter counter(rs, lambda, mu, on_pattern);
  return counter.run();
}

BZPattern interior_point_bz(const RootSystem& rs, const Vec& lambda,
                            const std::optional<Rat>& delta_opt) {
  require_bcd(rs.type());
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
  const int r = rs.rank();
  const Type t = rs.type();

  BZPattern p;
  p.type = t;
  p.rank = r;
  p.lambda_rows.assign(r, {});
  for (int i = 1; i <= r; ++i) p.lambda_rows[i - 1].assign(r - i + 1, Rat(0));
  const int erows = t == Type::D ? r - 1 : r;
  p.eta_rows.assign(erows, {});
  for (int i = 1; i <= erows; ++i)
    p.eta_rows[i - 1].assign(eta_cols_max(t, r) - i + 1, Rat(0));
  for (int j = 1; j <= r; ++j) p.lam(1, j) = lambda[j - 1];

  if (t != Type::D) {
    for (int i = 1; i <= r; ++i) {
      for (int k = i; k < r; ++k) p.eta(i, k) = (p.lam(i, k) + p.lam(i, k + 1)) / 2;
      p.eta(i, r) = p.lam(i, r) / 2;
      if (i < r)
        for (int j = i + 1; j <= r; ++j)
          p.lam(i + 1, j) = (p.eta(i, j - 1) + p.eta(i, j)) / 2;
    }
    if (!pattern_is_valid(p)) throw std::logic_error("interior point construction failed");
    return p;
  }

  auto d = rs.fw_coefficients(lambda);
  const Rat d_pen = d[r - 2];  // d_{r-1}
  const Rat d_last = d[r - 1];
  Rat delta = 0;
  int zcase;
  if (d_pen != 0 && d_last != 0)
    zcase = 1;
  else if (d_pen == 0 && d_last != 0)
    zcase = 2;
  else if (d_pen != 0 && d_last == 0)
    zcase = 3;
  else
    zcase = 4;

  int zm = 1;  // case 3: size of the fork component of S'
  if (zcase == 3) {
    int j = r - 2;
    while (j >= 1 && d[j - 1] == 0) --j;
    zm = 1 + (r - 2 - j);
  }

  if (zcase == 1) {
    Rat cap = std::min(d_pen, d_last);
    delta = delta_opt ? *delta_opt : cap / 16;
    if (delta <= 0 || delta >= cap / 8)
      throw std::invalid_argument("delta must lie in (0, min(d_{r-1}, d_r)/8)");
  } else if (zcase == 3 && zm == 1 && r >= 3) {
    Rat cap = std::min(d[r - 3], d_pen);
    delta = delta_opt ? *delta_opt : cap / 16;
    if (delta <= 0 || 2 * delta >= d[r - 3])
      throw std::invalid_argument("delta must lie in (0, d_{r-2}/2)");
  }

  const Rat t_val = p.lam(1, r - 1);
  for (int i = 1; i <= r - 1; ++i) {
    for (int k = i; k <= r - 1; ++k) p.eta(i, k) = (p.lam(i, k) + p.lam(i, k + 1)) / 2;
    if (i == 1 && zcase == 1) p.eta(1, r - 1) = p.lam(1, r - 1) - 2 * delta;
    for (int j = i + 1; j <= r - 1; ++j)
      p.lam(i + 1, j) = (p.eta(i, j - 1) + p.eta(i, j)) / 2;
    p.lam(i + 1, r) = p.eta(i, r - 1) / 2;
    if (i == 1) {
      if (zcase == 1) {
        if (r >= 3) p.lam(2, r - 1) = p.lam(1, r - 1) - delta;
        p.lam(2, r) = p.lam(1, r - 1) - 3 * delta;
      } else if (zcase == 3) {
        if (r >= 3) p.lam(2, r - 1) = zm >= 2 ? t_val : t_val + delta;
        p.lam(2, r) = p.eta(1, r - 1);
      }
    }
  }
  if (!pattern_is_valid(p)) throw std::logic_error("interior point construction failed");
  return p;
}

int dim_bz_lambda(const RootSystem& rs, const Vec& lambda) {
  require_bcd(rs.type());
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
  auto d = rs.fw_coefficients(lambda);
  std::vector<int> zero;
  for (int i = 0; i < rs.rank(); ++i)
    if (d[i] == 0) zero.push_back(i + 1);
  SubSystem sub = rs.subsystem(zero);
  return static_cast<int>(rs.positive_roots().size() - sub.datum.positive_roots().size());
}

AffineHull affine_hull_dimension(const ConstraintSystem& cs) {
  AffineHull out;
  const int n = cs.n();
  Mat ge_a;
  Vec ge_b;
  Mat eq_a;
  Vec eq_b;
  std::vector<int> ge_rows;
  for (size_t k = 0; k < cs.rows.size(); ++k) {
    const auto& row = cs.rows[k];
    if (row.rel == LinearRelation::Rel::EQ) {
      eq_a.push_back(row.coeffs);
      eq_b.push_back(row.rhs);
    } else {
      ge_a.push_back(row.coeffs);
      ge_b.push_back(row.rhs);
      ge_rows.push_back(static_cast<int>(k));
    }
  }

  Vec zero_obj(n, Rat(0));
  LPResult feas = solve_lp(ge_a, ge_b, eq_a, eq_b, zero_obj);
  if (feas.status == LPResult::Status::Infeasible) return out;
  out.feasible = true;
  out.implicit_eq.assign(cs.rows.size(), false);
  for (size_t k = 0; k < cs.rows.size(); ++k)
    if (cs.rows[k].rel == LinearRelation::Rel::EQ) out.implicit_eq[k] = true;

  std::vector<Vec> points{feas.x};
  Mat eq_grow_a = eq_a;
  Vec eq_grow_b = eq_b;

  for (size_t gi = 0; gi < ge_a.size(); ++gi) {
    const Vec& a = ge_a[gi];
    const Rat& b = ge_b[gi];
    bool certified = false;
    for (const auto& pt : points)
      if (dot(a, pt) > b) {
        certified = true;
        break;
      }
    if (certified) continue;
    // maximize the slack, capped at 1 so the LP stays bounded
    Mat cap_a = ge_a;
    Vec cap_b = ge_b;
    cap_a.push_back(vec_scale(Rat(-1), a));
    cap_b.push_back(-(b + 1));
    LPResult res = solve_lp(cap_a, cap_b, eq_grow_a, eq_grow_b, a);
    if (res.status != LPResult::Status::Optimal)
      throw std::logic_error("slack LP failed on a feasible system");
    if (res.value > b) {
      points.push_back(res.x);
    } else {
      out.implicit_eq[ge_rows[gi]] = true;
      eq_grow_a.push_back(a);
      eq_grow_b.push_back(b);
    }
  }

  Mat normals = eq_a;
  for (size_t k = 0; k < cs.rows.size(); ++k)
    if (out.implicit_eq[k] && cs.rows[k].rel == LinearRelation::Rel::GE)
      normals.push_back(cs.rows[k].coeffs);
  out.dimension = n - matrix_rank(std::move(normals));

  Vec avg(n, Rat(0));
  for (const auto& pt : points) avg = vec_add(avg, pt);
  out.point = vec_scale(Rat(1, static_cast<long>(points.size())), avg);
  return out;
}

bool weight_polytope_contains(const RootSystem& rs, const Vec& lambda, const Vec& mu) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("lambda must be dominant");
  Vec mu_dom = rs.dominant_representative(mu);
  auto co = rs.datum().simple_root_coords(vec_sub(lambda, mu_dom));
  if (!co.in_span) return false;
  for (const auto& c : co.c)
    if (c < 0) return false;
  return true;
}

}  // namespace kostka
