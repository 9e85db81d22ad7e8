// Command-line frontend: exact weight multiplicities, pattern polytopes,
// stretched sampling, quasi-polynomial fitting and degree verification.
//
// Exit codes: 0 success (all verdicts match), 1 verification mismatch,
// 2 usage error, 3 infeasible (fit validation failed).
#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kostka/bzgeom.hpp"
#include "kostka/json_io.hpp"
#include "kostka/multiplicity.hpp"
#include "kostka/rootsys.hpp"
#include "kostka/stretch.hpp"

using namespace kostka;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightArgs {
  std::string type;
  int rank = 0;
  std::string lambda_fw, lambda_eps, mu_fw, mu_eps;
  std::string format = "json";

  void add_common(CLI::App* cmd, bool with_mu) {
    cmd->add_option("--type", type, "root-system type: A, B, C, D, G2")->required();
    cmd->add_option("--rank", rank, "rank of the root system")->required();
    cmd->add_option("--lambda-fw", lambda_fw,
                    "lambda as nonnegative integer fundamental-weight coefficients");
    cmd->add_option("--lambda-eps", lambda_eps,
                    "lambda in epsilon coordinates, rationals like 3,1/2");
    if (with_mu) {
      cmd->add_option("--mu-fw", mu_fw, "mu in fundamental-weight coefficients");
      cmd->add_option("--mu-eps", mu_eps, "mu in epsilon coordinates");
    }
    cmd->add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  }

  RootSystem build() const { return RootSystem::build(type_from_str(type), rank); }

  static std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    return parts;
  }

  static Vec parse_fw(const RootSystem& rs, const std::string& s) {
    std::vector<Rat> coeffs;
    for (const auto& p : split(s)) {
      Rat x = parse_rat(p);
      if (x.get_den() != 1 || x < 0)
        throw UsageError("fundamental-weight coefficients must be nonnegative integers");
      coeffs.push_back(x);
    }
    if (static_cast<int>(coeffs.size()) != rs.rank())
      throw UsageError("expected " + std::to_string(rs.rank()) + " coefficients");
    return rs.weight_from_fw(coeffs);
  }

  static Vec parse_eps(const RootSystem& rs, const std::string& s) {
    Vec coords;
    for (const auto& p : split(s)) coords.push_back(parse_rat(p));
    if (static_cast<int>(coords.size()) != rs.ambient_dim())
      throw UsageError("expected " + std::to_string(rs.ambient_dim()) + " coordinates");
    return rs.weight_from_eps(coords);
  }

  // one basis flag governs both weights
  Vec lambda(const RootSystem& rs) const {
    if (!lambda_fw.empty() && lambda_eps.empty()) return parse_fw(rs, lambda_fw);
    if (lambda_fw.empty() && !lambda_eps.empty()) return parse_eps(rs, lambda_eps);
    throw UsageError("give lambda in exactly one basis (--lambda-fw or --lambda-eps)");
  }
  Vec mu(const RootSystem& rs) const {
    bool fw_basis = !lambda_fw.empty();
    if (fw_basis) {
      if (mu_fw.empty() || !mu_eps.empty())
        throw UsageError("one basis flag applies to both weights: expected --mu-fw");
      return parse_fw(rs, mu_fw);
    }
    if (mu_eps.empty() || !mu_fw.empty())
      throw UsageError("one basis flag applies to both weights: expected --mu-eps");
    return parse_eps(rs, mu_eps);
  }
};

void emit(const json& j, const std::string& format) {
  if (format == "text") {
    for (auto it = j.begin(); it != j.end(); ++it)
      std::cout << it.key() << ": " << it.value().dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

bool is_bcd(const RootSystem& rs) {
  return rs.type() == Type::B || rs.type() == Type::C || rs.type() == Type::D;
}

void require_dominant(const RootSystem& rs, const Vec& w, const char* name) {
  if (!rs.is_dominant(w)) throw UsageError(std::string(name) + " must be dominant");
}

Method parse_method(const std::string& s) {
  if (s == "bz") return Method::BZ;
  if (s == "kostant") return Method::Kostant;
  return Method::Auto;
}

std::string method_name(const RootSystem& rs, Method m) {
  if (m == Method::Auto) m = is_bcd(rs) ? Method::BZ : Method::Kostant;
  return m == Method::BZ ? "bz" : "kostant";
}

// tableau data for the type-A cross check; nullopt when the difference is
// outside the root lattice or the shifted content goes negative (count 0)
std::optional<std::pair<std::vector<long>, std::vector<long>>> tableau_data(
    const RootSystem& rs, const Vec& lambda, const Vec& mu) {
  const int r = rs.rank();
  std::vector<long> dl(r), dm(r);
  for (int i = 0; i < r; ++i) {
    Rat a = rs.pair_coroot(lambda, i), b = rs.pair_coroot(mu, i);
    if (a.get_den() != 1 || b.get_den() != 1) return std::nullopt;
    dl[i] = static_cast<long>(a.get_num().get_si());
    dm[i] = static_cast<long>(b.get_num().get_si());
  }
  std::vector<long> shape(r + 1, 0), content(r + 1, 0);
  for (int j = 0; j < r; ++j)
    for (int i = j; i < r; ++i) {
      shape[j] += dl[i];
      content[j] += dm[i];
    }
  long ts = 0, tc = 0;
  for (int j = 0; j <= r; ++j) {
    ts += shape[j];
    tc += content[j];
  }
  if ((ts - tc) % (r + 1) != 0) return std::nullopt;
  long shift = (ts - tc) / (r + 1);
  for (auto& x : content) {
    x += shift;
    if (x < 0) return std::nullopt;
  }
  return std::make_pair(shape, content);
}

int cmd_roots(const WeightArgs& args) {
  emit(root_system_to_json(args.build()), args.format);
  return 0;
}

int cmd_kostka(const WeightArgs& args, const std::string& method_str, bool cross_check) {
  RootSystem rs = args.build();
  Vec l = args.lambda(rs), m = args.mu(rs);
  require_dominant(rs, l, "lambda");
  require_dominant(rs, m, "mu");
  Method method = parse_method(method_str);
  if (method == Method::BZ && !is_bcd(rs))
    throw UsageError("pattern enumeration requires type B, C or D");
  json out;
  if (!rs.dominance(l, m).dominates()) {
    out["kostka"] = "0";
    out["note"] = "not dominated";
    emit(out, args.format);
    return 0;
  }
  int code = 0;
  if (method == Method::Auto) method = is_bcd(rs) ? Method::BZ : Method::Kostant;
  Int k = method == Method::BZ ? count_integral_patterns(rs, l, m) : kostka_kostant(rs, l, m);
  out["kostka"] = k.get_str();
  out["method"] = method == Method::BZ ? "bz" : "kostant";
  if (cross_check) {
    json cc;
    if (is_bcd(rs)) {
      Int bz = count_integral_patterns(rs, l, m);
      Int ko = kostka_kostant(rs, l, m);
      cc["bz"] = bz.get_str();
      cc["kostant"] = ko.get_str();
      cc["agree"] = bz == ko;
      if (bz != ko) code = 1;
    } else if (rs.type() == Type::A) {
      Int ko = kostka_kostant(rs, l, m);
      auto td = tableau_data(rs, l, m);
      Int tab = td ? kostka_ssyt(td->first, td->second) : Int(0);
      cc["kostant"] = ko.get_str();
      cc["tableau"] = tab.get_str();
      cc["agree"] = ko == tab;
      if (ko != tab) code = 1;
    } else {
      throw UsageError("no second method available for G2");
    }
    out["cross_check"] = cc;
  }
  emit(out, args.format);
  return code;
}

int cmd_stretch(const WeightArgs& args, int n_max, const std::string& method_str) {
  RootSystem rs = args.build();
  Vec l = args.lambda(rs), m = args.mu(rs);
  require_dominant(rs, l, "lambda");
  require_dominant(rs, m, "mu");
  if (n_max < 1) throw UsageError("--nmax must be at least 1");
  Method method = parse_method(method_str);
  if (method == Method::BZ && !is_bcd(rs))
    throw UsageError("pattern enumeration requires type B, C or D");
  std::vector<Int> samples;
  if (rs.dominance(l, m).dominates())
    samples = stretched_samples(rs, l, m, n_max, method);
  else
    samples.assign(n_max, Int(0));
  if (args.format == "csv") {
    std::cout << "N,K\n";
    for (int n = 1; n <= n_max; ++n) std::cout << n << "," << samples[n - 1].get_str() << "\n";
    return 0;
  }
  json out;
  json arr = json::array();
  for (const auto& s : samples) arr.push_back(s.get_str());
  out["samples"] = arr;
  out["n_max"] = n_max;
  out["method"] = method_name(rs, method);
  emit(out, args.format);
  return 0;
}

int cmd_degree(const WeightArgs& args) {
  RootSystem rs = args.build();
  Vec l = args.lambda(rs), m = args.mu(rs);
  require_dominant(rs, l, "lambda");
  require_dominant(rs, m, "mu");
  emit(predicted_degree_to_json(predicted_degree(rs, l, m)), args.format);
  return 0;
}

int cmd_verify(const WeightArgs& args, int n_max, const std::string& method_str,
               std::optional<int> expect, const std::string& periods) {
  RootSystem rs = args.build();
  Vec l = args.lambda(rs), m = args.mu(rs);
  require_dominant(rs, l, "lambda");
  require_dominant(rs, m, "mu");
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.expect = expect;
  opts.method = parse_method(method_str);
  if (!periods.empty()) {
    opts.trial_periods.clear();
    for (const auto& p : WeightArgs::split(periods)) opts.trial_periods.push_back(std::stoi(p));
  }
  if (opts.method == Method::BZ && !is_bcd(rs))
    throw UsageError("pattern enumeration requires type B, C or D");
  DegreeReport rep = verify_pair(rs, l, m, opts);
  emit(degree_report_to_json(rep), args.format);
  if (rep.predicted.kind == PredictedDegree::Kind::NotDominating)
    throw UsageError("lambda - mu is not an integral combination of simple roots");
  if (rep.fit_failed()) return 3;
  return rep.any_mismatch() ? 1 : 0;
}

int cmd_dim(const WeightArgs& args) {
  RootSystem rs = args.build();
  if (!is_bcd(rs)) throw UsageError("pattern polytopes exist for types B, C, D");
  Vec l = args.lambda(rs);
  require_dominant(rs, l, "lambda");
  int formula = dim_bz_lambda(rs, l);
  AffineHull hull = affine_hull_dimension(constraint_system_bz(rs, l));
  json out;
  out["formula"] = formula;
  out["oracle"] = hull.feasible ? json(hull.dimension) : json("EMPTY");
  bool match = hull.feasible && hull.dimension == formula;
  out["match"] = match;
  emit(out, args.format);
  return match ? 0 : 1;
}

int cmd_interior(const WeightArgs& args, const std::string& delta_str) {
  RootSystem rs = args.build();
  if (!is_bcd(rs)) throw UsageError("pattern polytopes exist for types B, C, D");
  Vec l = args.lambda(rs);
  require_dominant(rs, l, "lambda");
  std::optional<Rat> delta;
  if (!delta_str.empty()) delta = parse_rat(delta_str);
  emit(pattern_to_json(interior_point_bz(rs, l, delta)), args.format);
  return 0;
}

int cmd_bz_count(const WeightArgs& args) {
  RootSystem rs = args.build();
  if (!is_bcd(rs)) throw UsageError("pattern enumeration requires type B, C or D");
  Vec l = args.lambda(rs), m = args.mu(rs);
  require_dominant(rs, l, "lambda");
  require_dominant(rs, m, "mu");
  json out;
  out["kostka"] = count_integral_patterns(rs, l, m).get_str();
  out["method"] = "bz";
  emit(out, args.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kostka numbers, pattern polytopes and stretched degrees"};
  app.require_subcommand(1);

  WeightArgs roots_args, kostka_args, stretch_args, degree_args, verify_args, dim_args,
      interior_args, count_args;

  auto* roots = app.add_subcommand("roots", "print a root system");
  roots_args.add_common(roots, false);

  auto* kostka = app.add_subcommand("kostka", "weight multiplicity of mu in V_lambda");
  kostka_args.add_common(kostka, true);
  std::string kostka_method = "auto";
  bool cross = false;
  kostka->add_option("--method", kostka_method, "bz, kostant or auto")
      ->check(CLI::IsMember({"bz", "kostant", "auto"}));
  kostka->add_flag("--cross-check", cross, "compute by both methods and compare");

  auto* stretch = app.add_subcommand("stretch", "sample K(N lambda, N mu) for N = 1..n");
  stretch_args.add_common(stretch, true);
  int stretch_n = 0;
  std::string stretch_method = "auto";
  stretch->add_option("--nmax", stretch_n, "largest stretch factor")->required();
  stretch->add_option("--method", stretch_method, "bz, kostant or auto")
      ->check(CLI::IsMember({"bz", "kostant", "auto"}));

  auto* degree = app.add_subcommand("degree", "predicted degree of the stretch function");
  degree_args.add_common(degree, true);

  auto* verify = app.add_subcommand("verify", "predict, fit and cross-check the degree");
  verify_args.add_common(verify, true);
  int verify_n = 0;
  std::string verify_method = "auto", verify_periods;
  verify->add_option("--nmax", verify_n, "sample count (default 2*(degree+2)+2)");
  verify->add_option("--method", verify_method, "bz, kostant or auto")
      ->check(CLI::IsMember({"bz", "kostant", "auto"}));
  verify->add_option("--periods", verify_periods, "trial periods, e.g. 1,2,3,4,6");
  int expect_val = 0;
  auto* expect_opt = verify->add_option("--expect", expect_val, "expected degree");

  auto* dim = app.add_subcommand("dim", "pattern-polytope dimension, formula and oracle");
  dim_args.add_common(dim, false);

  auto* interior = app.add_subcommand("interior", "relative-interior pattern for lambda");
  interior_args.add_common(interior, false);
  std::string delta;
  interior->add_option("--delta", delta, "margin for the type D constructions, e.g. 1/100");

  auto* bz_count = app.add_subcommand("bz-count", "count integral patterns directly");
  count_args.add_common(bz_count, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(roots_args);
    if (kostka->parsed()) return cmd_kostka(kostka_args, kostka_method, cross);
    if (stretch->parsed()) return cmd_stretch(stretch_args, stretch_n, stretch_method);
    if (degree->parsed()) return cmd_degree(degree_args);
    if (verify->parsed())
      return cmd_verify(verify_args, verify_n, verify_method,
                        expect_opt->count() ? std::optional<int>(expect_val) : std::nullopt,
                        verify_periods);
    if (dim->parsed()) return cmd_dim(dim_args);
    if (interior->parsed()) return cmd_interior(interior_args, delta);
    if (bz_count->parsed()) return cmd_bz_count(count_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotDominatingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RankCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
