#include "kostka/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "kostka/linalg.hpp"

namespace kostka {

std::string type_str(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
    case Type::G2: return "G2";
  }
  return "?";
}

Type type_from_str(const std::string& s) {
  if (s == "A") return Type::A;
  if (s == "B") return Type::B;
  if (s == "C") return Type::C;
  if (s == "D") return Type::D;
  if (s == "G2" || s == "G") return Type::G2;
  throw std::invalid_argument("unknown root-system type: " + s);
}

Vec WeylElement::apply(const Vec& v) const {
  Vec r(mat.size(), Rat(0));
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (mat[i][j] != 0) r[i] += Rat(mat[i][j]) * v[j];
  return r;
}

struct RootDatum::WeylCache {
  std::once_flag flag;
  std::vector<WeylElement> elems;
};

RootDatum::RootDatum(std::vector<Vec> simples, std::vector<Vec> posroots, Mat gram)
    : simples_(std::move(simples)),
      posroots_(std::move(posroots)),
      gram_(std::move(gram)),
      weyl_(std::make_shared<WeylCache>()) {
  const int r = rank();
  if (r > 0) {
    Mat s(r, Vec(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s[i][j] = inner(simples_[i], simples_[j]);
    gram_inv_simples_ = matrix_inverse(s);
  }
  rho_ = Vec(ambient_dim(), Rat(0));
  for (const auto& a : posroots_) rho_ = vec_add(rho_, vec_scale(Rat(1, 2), a));
}

Rat RootDatum::inner(const Vec& a, const Vec& b) const {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (gram_[i][j] != 0 && b[j] != 0) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

Rat RootDatum::pair_coroot(const Vec& v, int i) const {
  const Vec& a = simples_[i];
  return Rat(2) * inner(v, a) / inner(a, a);
}

Vec RootDatum::reflect_in_root(const Vec& v, const Vec& root) const {
  Rat c = Rat(2) * inner(v, root) / inner(root, root);
  return vec_sub(v, vec_scale(c, root));
}

Vec RootDatum::simple_reflect(const Vec& v, int i) const {
  return vec_sub(v, vec_scale(pair_coroot(v, i), simples_[i]));
}

RootDatum::Coords RootDatum::simple_root_coords(const Vec& v) const {
  Coords out;
  const int r = rank();
  out.c.assign(r, Rat(0));
  if (r > 0) {
    Vec b(r);
    for (int i = 0; i < r; ++i) b[i] = inner(v, simples_[i]);
    out.c = mat_vec(gram_inv_simples_, b);
  }
  Vec rec(ambient_dim(), Rat(0));
  for (int i = 0; i < r; ++i) rec = vec_add(rec, vec_scale(out.c[i], simples_[i]));
  out.in_span = vec_is_zero(vec_sub(rec, v));
  return out;
}

bool RootDatum::is_dominant(const Vec& w) const {
  for (int i = 0; i < rank(); ++i)
    if (pair_coroot(w, i) < 0) return false;
  return true;
}

Vec RootDatum::dominant_representative(Vec w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank(); ++i) {
      if (pair_coroot(w, i) < 0) {
        w = simple_reflect(w, i);
        changed = true;
      }
    }
  }
  return w;
}

Dominance RootDatum::dominance(const Vec& lambda, const Vec& mu) const {
  Dominance d;
  Coords co = simple_root_coords(vec_sub(lambda, mu));
  if (!co.in_span) {
    d.status = DominanceStatus::OutsideRootSpan;
    return d;
  }
  d.c = std::move(co.c);
  bool integral = true;
  for (const auto& x : d.c) {
    if (x < 0) {
      d.status = DominanceStatus::NegativeCoefficient;
      return d;
    }
    if (x.get_den() != 1) integral = false;
  }
  d.status = integral ? DominanceStatus::Dominates : DominanceStatus::NonIntegral;
  return d;
}

namespace {

std::vector<long> doubled_long_vec(const Vec& v) {
  std::vector<long> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat x = Rat(2) * v[i];
    if (x.get_den() != 1) throw std::logic_error("expected half-integral vector");
    out[i] = static_cast<long>(x.get_num().get_si());
  }
  return out;
}

std::vector<std::vector<long>> reflection_matrix(const RootDatum& d, const Vec& root) {
  const int n = d.ambient_dim();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  Rat norm = d.inner(root, root);
  for (int b = 0; b < n; ++b) {
    Vec eb(n, Rat(0));
    eb[b] = 1;
    Rat coef = Rat(2) * d.inner(eb, root) / norm;
    for (int a = 0; a < n; ++a) {
      Rat entry = (a == b ? Rat(1) : Rat(0)) - coef * root[a];
      if (entry.get_den() != 1)
        throw std::logic_error("reflection matrix not integral");
      m[a][b] = static_cast<long>(entry.get_num().get_si());
    }
  }
  return m;
}

std::vector<long> apply_long(const std::vector<std::vector<long>>& m,
                             const std::vector<long>& v) {
  std::vector<long> r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

std::vector<std::vector<long>> mul_long(const std::vector<std::vector<long>>& a,
                                        const std::vector<std::vector<long>>& b) {
  const size_t n = a.size();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Closure of a generator set under multiplication, deduplicated by the image
// of a regular vector (2 rho works: w fixes it only for w = id).
std::vector<WeylElement> weyl_closure(const RootDatum& d,
                                      const std::vector<Vec>& generator_roots) {
  const int n = d.ambient_dim();
  std::vector<WeylElement> gens;
  for (const auto& root : generator_roots)
    gens.push_back({reflection_matrix(d, root), -1});

  std::vector<long> key0 = doubled_long_vec(d.rho());
  WeylElement id;
  id.mat.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) id.mat[i][i] = 1;
  id.det = 1;

  std::vector<WeylElement> out{id};
  std::set<std::vector<long>> seen{key0};
  for (size_t head = 0; head < out.size(); ++head) {
    WeylElement cur = out[head];  // copy: out may reallocate
    for (const auto& g : gens) {
      WeylElement nxt;
      nxt.mat = mul_long(cur.mat, g.mat);
      nxt.det = cur.det * g.det;
      std::vector<long> key = apply_long(nxt.mat, key0);
      if (seen.insert(key).second) out.push_back(std::move(nxt));
    }
  }
  return out;
}

}  // namespace

const std::vector<WeylElement>& RootDatum::weyl_group(int rank_cap) const {
  if (!weyl_) throw std::logic_error("weyl_group on an uninitialized datum");
  if (rank() > rank_cap)
    throw RankCapError("Weyl group generation refused: rank " +
                       std::to_string(rank()) + " exceeds cap " +
                       std::to_string(rank_cap));
  std::call_once(weyl_->flag, [this] {
    std::vector<Vec> gen;
    if (rank() > 0) gen.assign(simples_.begin(), simples_.end());
    weyl_->elems = weyl_closure(*this, gen);
  });
  return weyl_->elems;
}

namespace {

Mat identity_gram(int n) {
  Mat g(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

// All roots by reflection closure of the simple roots; returns the positive
// half, sorted by simple-root coordinates.
std::vector<Vec> positive_roots_by_closure(const std::vector<Vec>& simples, const Mat& gram) {
  RootDatum seed(simples, {}, gram);
  std::set<Vec> all(simples.begin(), simples.end());
  std::vector<Vec> queue(simples.begin(), simples.end());
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < simples.size(); ++i) {
      Vec w = seed.simple_reflect(v, static_cast<int>(i));
      if (all.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<std::pair<std::vector<Rat>, Vec>> pos;
  for (const auto& root : all) {
    auto co = seed.simple_root_coords(root);
    if (!co.in_span) throw std::logic_error("root outside simple-root span");
    bool nonneg = true;
    for (const auto& x : co.c) {
      if (x < 0) {
        nonneg = false;
        break;
      }
      if (x.get_den() != 1) throw std::logic_error("root with non-integral coordinates");
    }
    if (nonneg) pos.push_back({co.c, root});
  }
  std::sort(pos.begin(), pos.end());
  std::vector<Vec> out;
  out.reserve(pos.size());
  for (auto& p : pos) out.push_back(std::move(p.second));
  return out;
}

Vec basis_sum(int dim, int upto) {  // e_1 + ... + e_upto
  Vec v(dim, Rat(0));
  for (int i = 0; i < upto; ++i) v[i] = 1;
  return v;
}

}  // namespace

RootSystem RootSystem::build(Type type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if ((type == Type::B || type == Type::C || type == Type::D) && rank < 2)
    throw std::invalid_argument(type_str(type) + " requires rank >= 2");
  if (type == Type::G2 && rank != 2)
    throw std::invalid_argument("G2 has rank 2");

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  const int r = rank;

  std::vector<Vec> simples;
  std::vector<Vec> fweights;
  Mat gram;
  int dim = 0;

  auto chain_simples = [&](int count) {
    for (int i = 0; i < count; ++i) {
      Vec a(dim, Rat(0));
      a[i] = 1;
      a[i + 1] = -1;
      simples.push_back(a);
    }
  };

  switch (type) {
    case Type::A: {
      dim = r + 1;
      gram = identity_gram(dim);
      chain_simples(r);
      for (int i = 1; i <= r; ++i) {
        Vec w = basis_sum(dim, i);
        Rat mean = Rat(i) / dim;
        for (auto& x : w) x -= mean;
        fweights.push_back(w);
      }
      break;
    }
    case Type::B: {
      dim = r;
      gram = identity_gram(dim);
      chain_simples(r - 1);
      Vec last(dim, Rat(0));
      last[r - 1] = 1;
      simples.push_back(last);
      for (int i = 1; i < r; ++i) fweights.push_back(basis_sum(dim, i));
      fweights.push_back(vec_scale(Rat(1, 2), basis_sum(dim, r)));
      break;
    }
    case Type::C: {
      dim = r;
      gram = identity_gram(dim);
      chain_simples(r - 1);
      Vec last(dim, Rat(0));
      last[r - 1] = 2;
      simples.push_back(last);
      for (int i = 1; i <= r; ++i) fweights.push_back(basis_sum(dim, i));
      break;
    }
    case Type::D: {
      dim = r;
      gram = identity_gram(dim);
      chain_simples(r - 1);
      Vec last(dim, Rat(0));
      last[r - 2] = 1;
      last[r - 1] = 1;
      simples.push_back(last);
      for (int i = 1; i <= r - 2; ++i) fweights.push_back(basis_sum(dim, i));
      Vec spin_minus = vec_scale(Rat(1, 2), basis_sum(dim, r));
      spin_minus[r - 1] = Rat(-1, 2);
      fweights.push_back(spin_minus);
      fweights.push_back(vec_scale(Rat(1, 2), basis_sum(dim, r)));
      break;
    }
    case Type::G2: {
      dim = 2;
      gram = {{Rat(2), Rat(-3)}, {Rat(-3), Rat(6)}};
      simples = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
      fweights = {{Rat(2), Rat(1)}, {Rat(3), Rat(2)}};
      break;
    }
  }

  std::vector<Vec> posroots = positive_roots_by_closure(simples, gram);
  rs.datum_ = RootDatum(simples, posroots, gram);
  rs.fweights_ = fweights;

  rs.cartan_.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat a = rs.datum_.pair_coroot(simples[j], i);
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<long>(a.get_num().get_si());
    }

  // Exactness checks on the conventions.
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Rat p = rs.datum_.pair_coroot(fweights[j], i);
      if (p != (i == j ? 1 : 0))
        throw std::logic_error("fundamental weights are not dual to the coroots");
    }
    if (rs.datum_.pair_coroot(rs.datum_.rho(), i) != 1)
      throw std::logic_error("rho pairing check failed");
  }
  return rs;
}

Vec RootSystem::weight_from_fw(const std::vector<Rat>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_)
    throw std::invalid_argument("expected " + std::to_string(rank_) +
                                " fundamental-weight coefficients");
  Vec w(ambient_dim(), Rat(0));
  for (int i = 0; i < rank_; ++i) w = vec_add(w, vec_scale(coeffs[i], fweights_[i]));
  return w;
}

Vec RootSystem::weight_from_eps(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != ambient_dim())
    throw std::invalid_argument("expected " + std::to_string(ambient_dim()) +
                                " coordinates");
  Vec w = coords;
  if (type_ == Type::A) {
    Rat mean = 0;
    for (const auto& x : w) mean += x;
    mean /= ambient_dim();
    for (auto& x : w) x -= mean;
  }
  return w;
}

std::vector<Rat> RootSystem::fw_coefficients(const Vec& w) const {
  std::vector<Rat> d(rank_);
  for (int i = 0; i < rank_; ++i) d[i] = pair_coroot(w, i);
  return d;
}

bool RootSystem::is_primitive(const Vec& lambda, const Vec& mu) const {
  Dominance d = dominance(lambda, mu);
  if (!d.dominates()) return false;
  for (const auto& c : d.c)
    if (c == 0) return false;
  return true;
}

SubSystem RootSystem::subsystem(const std::vector<int>& simple_subset) const {
  SubSystem sub;
  sub.simples = simple_subset;
  std::sort(sub.simples.begin(), sub.simples.end());
  sub.simples.erase(std::unique(sub.simples.begin(), sub.simples.end()), sub.simples.end());
  for (int i : sub.simples)
    if (i < 1 || i > rank_) throw std::invalid_argument("simple index out of range");

  std::vector<bool> in_subset(rank_ + 1, false);
  for (int i : sub.simples) in_subset[i] = true;

  std::vector<Vec> sub_simples;
  for (int i : sub.simples) sub_simples.push_back(simple_roots()[i - 1]);

  // Positive roots whose support lies in the subset.
  std::vector<Vec> sub_pos;
  for (const auto& root : positive_roots()) {
    auto co = datum_.simple_root_coords(root);
    bool ok = true;
    for (int i = 0; i < rank_; ++i)
      if (co.c[i] != 0 && !in_subset[i + 1]) {
        ok = false;
        break;
      }
    if (ok) sub_pos.push_back(root);
  }
  sub.datum = RootDatum(sub_simples, sub_pos, datum_.gram());

  // Connected components of the induced Dynkin diagram.
  const int k = static_cast<int>(sub.simples.size());
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < k; ++v) {
        if (comp[v] >= 0) continue;
        if (datum_.inner(sub_simples[u], sub_simples[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    DynkinComponent dc;
    std::vector<int> local;
    for (int s = 0; s < k; ++s)
      if (comp[s] == c) {
        dc.simples.push_back(sub.simples[s]);
        local.push_back(s);
      }
    // Classify by lengths and diagram shape.
    const int m = static_cast<int>(local.size());
    Rat min_norm, max_norm;
    for (int s : local) {
      Rat n = datum_.inner(sub_simples[s], sub_simples[s]);
      if (s == local[0]) min_norm = max_norm = n;
      min_norm = std::min(min_norm, n);
      max_norm = std::max(max_norm, n);
    }
    if (min_norm == max_norm) {
      bool fork = false;
      for (int u : local) {
        int deg = 0;
        for (int v : local)
          if (v != u && datum_.inner(sub_simples[u], sub_simples[v]) != 0) ++deg;
        if (deg >= 3) fork = true;
      }
      dc.label = fork ? "D" : "A";
    } else if (m == 2 && max_norm == 3 * min_norm) {
      dc.label = "G2";
    } else {
      int shorts = 0, longs = 0, last_short = -1, last_long = -1;
      for (int s : local) {
        Rat n = datum_.inner(sub_simples[s], sub_simples[s]);
        if (n == min_norm) {
          ++shorts;
          last_short = sub.simples[s];
        } else {
          ++longs;
          last_long = sub.simples[s];
        }
      }
      if (shorts == 1 && longs == 1)
        dc.label = last_short > last_long ? "B" : "C";
      else
        dc.label = shorts == 1 ? "B" : "C";
    }
    sub.components.push_back(std::move(dc));
  }
  return sub;
}

Vec RootSystem::project_weight(const std::vector<int>& simple_subset, const Vec& w) const {
  std::vector<int> idx = simple_subset;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const int k = static_cast<int>(idx.size());
  if (k == 0) return Vec(ambient_dim(), Rat(0));
  Mat s(k, Vec(k));
  Vec b(k);
  for (int i = 0; i < k; ++i) {
    const Vec& ai = simple_roots()[idx[i] - 1];
    b[i] = datum_.inner(w, ai);
    for (int j = 0; j < k; ++j) s[i][j] = datum_.inner(ai, simple_roots()[idx[j] - 1]);
  }
  auto c = solve_square(s, b);
  if (!c) throw std::logic_error("simple-root Gram matrix is singular");
  Vec p(ambient_dim(), Rat(0));
  for (int i = 0; i < k; ++i) p = vec_add(p, vec_scale((*c)[i], simple_roots()[idx[i] - 1]));
  return p;
}

}  // namespace kostka
