#include "kostka/stretch.hpp"

#include <algorithm>
#include <stdexcept>

#include "kostka/bzgeom.hpp"

namespace kostka {

int QuasiPolynomial::degree() const {
  int deg = -1;
  for (const auto& b : branches) deg = std::max(deg, static_cast<int>(b.size()) - 1);
  if (deg < 0) throw std::logic_error("degree of the zero function");
  return deg;
}

Rat QuasiPolynomial::evaluate(long n) const {
  int s = static_cast<int>(((n % period) + period) % period);
  const auto& b = branches[s];
  Rat val = 0;
  for (size_t k = b.size(); k-- > 0;) val = val * Rat(n) + b[k];
  return val;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

PredictedDegree predicted_degree(const RootSystem& rs, const Vec& lambda, const Vec& mu) {
  PredictedDegree out;
  out.d = rs.fw_coefficients(lambda);
  Dominance dom = rs.dominance(lambda, mu);
  out.c = dom.c;
  switch (dom.status) {
    case DominanceStatus::OutsideRootSpan:
    case DominanceStatus::NegativeCoefficient:
      // mu is outside the weight polytope of every stretch of lambda
      out.kind = PredictedDegree::Kind::ZeroFunction;
      return out;
    case DominanceStatus::NonIntegral:
      out.kind = PredictedDegree::Kind::NotDominating;
      return out;
    case DominanceStatus::Dominates:
      break;
  }
  std::vector<int> s1, s2;
  for (int i = 0; i < rs.rank(); ++i) {
    if (dom.c[i] != 0) {
      s1.push_back(i + 1);
      if (out.d[i] == 0) s2.push_back(i + 1);
    }
  }
  out.phi1_positive = static_cast<int>(rs.subsystem(s1).datum.positive_roots().size());
  out.phi1_rank = static_cast<int>(s1.size());
  out.phi2_positive = static_cast<int>(rs.subsystem(s2).datum.positive_roots().size());
  out.kind = PredictedDegree::Kind::Finite;
  out.degree = out.phi1_positive - out.phi1_rank - out.phi2_positive;
  return out;
}

PairDecomposition factorize_pair(const RootSystem& rs, const Vec& lambda, const Vec& mu) {
  Dominance dom = rs.dominance(lambda, mu);
  if (!dom.dominates()) throw NotDominatingError("lambda does not dominate mu");
  PairDecomposition out;
  std::vector<int> support;
  for (int i = 0; i < rs.rank(); ++i) {
    if (dom.c[i] != 0)
      support.push_back(i + 1);
    else
      out.dropped_simples.push_back(i + 1);
  }
  SubSystem sub = rs.subsystem(support);
  for (const auto& comp : sub.components) {
    PairComponent pc;
    pc.dynkin = comp;
    SubSystem csub = rs.subsystem(comp.simples);
    pc.datum = csub.datum;
    pc.lambda = rs.project_weight(comp.simples, lambda);
    pc.mu = rs.project_weight(comp.simples, mu);
    out.components.push_back(std::move(pc));
  }
  return out;
}

namespace {

// Monomial coefficients of the interpolating polynomial, by Newton divided
// differences.
std::vector<Rat> lagrange(const std::vector<std::pair<long, Rat>>& pts) {
  const size_t m = pts.size();
  std::vector<Rat> dd(m);
  for (size_t i = 0; i < m; ++i) dd[i] = pts[i].second;
  for (size_t k = 1; k < m; ++k)
    for (size_t i = m - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(pts[i].first - pts[i - k].first);
  std::vector<Rat> coeffs{};
  std::vector<Rat> basis{Rat(1)};  // prod (x - x_j), j < k
  for (size_t k = 0; k < m; ++k) {
    if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), Rat(0));
    for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[k] * basis[j];
    // basis *= (x - x_k)
    basis.insert(basis.begin(), Rat(0));
    for (size_t j = 0; j + 1 < basis.size(); ++j)
      basis[j] -= Rat(pts[k].first) * basis[j + 1];
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

Rat eval_poly(const std::vector<Rat>& coeffs, long n) {
  Rat val = 0;
  for (size_t k = coeffs.size(); k-- > 0;) val = val * Rat(n) + coeffs[k];
  return val;
}

}  // namespace

FitResult fit_quasi_polynomial(const std::vector<Int>& samples,
                               const std::vector<int>& trial_periods) {
  FitResult out;
  const int n = static_cast<int>(samples.size());
  if (n == 0) {
    out.failures.push_back({0, 0, "no samples"});
    return out;
  }
  for (int p : trial_periods) {
    if (p < 1) continue;
    QuasiPolynomial qp;
    qp.period = p;
    qp.branches.assign(p, {});
    bool ok = true;
    for (int s = 0; s < p && ok; ++s) {
      std::vector<std::pair<long, Rat>> pts;
      for (int N = 1; N <= n; ++N)
        if (N % p == s) pts.push_back({N, Rat(samples[N - 1])});
      if (pts.size() < 3) {
        out.failures.push_back({p, s, "fewer than 3 samples in the class"});
        ok = false;
        break;
      }
      std::vector<std::pair<long, Rat>> train(pts.begin(), pts.end() - 2);
      auto poly = lagrange(train);
      for (size_t k = pts.size() - 2; k < pts.size(); ++k) {
        if (eval_poly(poly, pts[k].first) != pts[k].second) {
          out.failures.push_back({p, s, "held-out sample N=" + std::to_string(pts[k].first) +
                                            " not reproduced"});
          ok = false;
          break;
        }
      }
      qp.branches[s] = std::move(poly);
    }
    if (ok) {
      out.qp = std::move(qp);
      return out;
    }
  }
  return out;
}

DegreeReport verify_pair(const RootSystem& rs, const Vec& lambda, const Vec& mu,
                         const VerifyOptions& opts) {
  DegreeReport rep;
  rep.type = rs.type();
  rep.rank = rs.rank();
  rep.lambda = lambda;
  rep.mu = mu;
  rep.predicted = predicted_degree(rs, lambda, mu);

  const bool bcd = rs.type() == Type::B || rs.type() == Type::C || rs.type() == Type::D;
  const bool can_sample = rep.predicted.kind != PredictedDegree::Kind::NotDominating;

  rep.sampler = opts.method;
  if (rep.sampler == Method::Auto)
    rep.sampler = bcd ? Method::BZ : Method::Kostant;

  if (opts.with_fit && can_sample) {
    int n_max = opts.n_max;
    if (n_max <= 0) {
      int pred = rep.predicted.kind == PredictedDegree::Kind::Finite ? rep.predicted.degree : 0;
      n_max = 2 * (pred + 2) + 2;
    }
    rep.samples = stretched_samples(rs, lambda, mu, n_max, rep.sampler);
    rep.n_max_used = n_max;
    FitResult fit = fit_quasi_polynomial(rep.samples, opts.trial_periods);
    if (!fit.ok() && opts.auto_raise) {
      n_max *= 2;
      rep.samples = stretched_samples(rs, lambda, mu, n_max, rep.sampler);
      rep.n_max_used = n_max;
      rep.n_max_raised = true;
      fit = fit_quasi_polynomial(rep.samples, opts.trial_periods);
    }
    rep.fit_failures = std::move(fit.failures);
    if (fit.ok()) {
      rep.fitted = std::move(fit.qp);
      // a successful fit reproduces every sample it was built from
      for (int N = 1; N <= rep.n_max_used; ++N)
        if (rep.fitted->evaluate(N) != Rat(rep.samples[N - 1]))
          throw std::logic_error("fitted quasi-polynomial disagrees with a sample");
    }
  }

  if (opts.with_geometry && bcd && can_sample) {
    ConstraintSystem cs = constraint_system_bz(rs, lambda, mu);
    AffineHull hull = affine_hull_dimension(cs);
    if (!hull.feasible) {
      rep.geometry = DegreeReport::Geometry::Empty;
    } else {
      rep.geometry = DegreeReport::Geometry::Dim;
      rep.geometric_dimension = hull.dimension;
    }
  }

  // verdicts
  auto pred_matches = [&](bool zero, int deg) {
    if (rep.predicted.kind == PredictedDegree::Kind::ZeroFunction) return zero;
    if (rep.predicted.kind == PredictedDegree::Kind::Finite)
      return !zero && deg == rep.predicted.degree;
    return false;
  };
  if (rep.fitted) {
    bool zero = rep.fitted->is_zero();
    int deg = zero ? -1 : rep.fitted->degree();
    rep.fit_vs_predicted = pred_matches(zero, deg) ? Verdict::Match : Verdict::Mismatch;
  }
  if (rep.geometry != DegreeReport::Geometry::NotComputed) {
    bool empty = rep.geometry == DegreeReport::Geometry::Empty;
    rep.geometry_vs_predicted =
        pred_matches(empty, rep.geometric_dimension) ? Verdict::Match : Verdict::Mismatch;
    if (rep.fitted) {
      bool zero = rep.fitted->is_zero();
      bool agree = empty ? zero : (!zero && rep.fitted->degree() == rep.geometric_dimension);
      rep.geometry_vs_fit = agree ? Verdict::Match : Verdict::Mismatch;
    }
  }
  if (opts.expect) {
    bool agree = rep.predicted.kind == PredictedDegree::Kind::Finite &&
                 rep.predicted.degree == *opts.expect;
    if (rep.fitted && !rep.fitted->is_zero())
      agree = agree && rep.fitted->degree() == *opts.expect;
    rep.expected_vs_computed = agree ? Verdict::Match : Verdict::Mismatch;
  }
  return rep;
}

}  // namespace kostka
