#include "kostka/json_io.hpp"

#include <stdexcept>

namespace kostka {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = t[0] == '-' || t[0] == '+' ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed rational: " + s);
  Rat x(num + "/" + den);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  x.canonicalize();
  return x;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

json root_system_to_json(const RootSystem& rs) {
  json j;
  j["type"] = type_str(rs.type());
  j["rank"] = rs.rank();
  j["ambient_dim"] = rs.ambient_dim();
  j["simple_roots"] = json::array();
  for (const auto& a : rs.simple_roots()) j["simple_roots"].push_back(vec_to_json(a));
  j["positive_roots"] = json::array();
  for (const auto& a : rs.positive_roots()) j["positive_roots"].push_back(vec_to_json(a));
  j["cartan_matrix"] = rs.cartan_matrix();
  j["fundamental_weights"] = json::array();
  for (const auto& w : rs.fundamental_weights())
    j["fundamental_weights"].push_back(vec_to_json(w));
  return j;
}

json pattern_to_json(const BZPattern& p) {
  json j;
  j["type"] = type_str(p.type);
  j["rank"] = p.rank;
  j["lambda"] = json::array();
  for (const auto& row : p.lambda_rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    j["lambda"].push_back(r);
  }
  j["eta"] = json::array();
  for (const auto& row : p.eta_rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    j["eta"].push_back(r);
  }
  return j;
}

json constraint_system_to_json(const ConstraintSystem& cs) {
  json j;
  j["coordinates"] = cs.names;
  j["rows"] = json::array();
  for (const auto& row : cs.rows) {
    json r;
    r["coeffs"] = vec_to_json(row.coeffs);
    r["rhs"] = rat_str(row.rhs);
    r["rel"] = row.rel == LinearRelation::Rel::GE ? ">=" : "=";
    j["rows"].push_back(r);
  }
  return j;
}

json quasi_polynomial_to_json(const QuasiPolynomial& qp) {
  json j;
  j["period"] = qp.period;
  j["branches"] = json::array();
  for (const auto& b : qp.branches) j["branches"].push_back(vec_to_json(b));
  j["degree"] = qp.is_zero() ? json("ZERO") : json(qp.degree());
  return j;
}

json predicted_degree_to_json(const PredictedDegree& pd) {
  json j;
  j["c"] = vec_to_json(pd.c);
  j["d"] = vec_to_json(pd.d);
  switch (pd.kind) {
    case PredictedDegree::Kind::Finite:
      j["degree"] = pd.degree;
      j["phi1_positive_roots"] = pd.phi1_positive;
      j["phi1_rank"] = pd.phi1_rank;
      j["phi2_positive_roots"] = pd.phi2_positive;
      break;
    case PredictedDegree::Kind::ZeroFunction:
      j["degree"] = "ZERO";
      break;
    case PredictedDegree::Kind::NotDominating:
      j["degree"] = "NOT_DOMINATING";
      break;
  }
  return j;
}

json degree_report_to_json(const DegreeReport& rep) {
  json j;
  j["type"] = type_str(rep.type);
  j["rank"] = rep.rank;
  j["lambda"] = vec_to_json(rep.lambda);
  j["mu"] = vec_to_json(rep.mu);
  j["predicted"] = predicted_degree_to_json(rep.predicted);
  if (!rep.samples.empty()) {
    json s = json::array();
    for (const auto& x : rep.samples) s.push_back(x.get_str());
    j["samples"] = s;
    j["n_max"] = rep.n_max_used;
    j["n_max_raised"] = rep.n_max_raised;
    j["method"] = rep.sampler == Method::BZ ? "bz" : "kostant";
  }
  if (rep.fitted) j["fitted"] = quasi_polynomial_to_json(*rep.fitted);
  if (!rep.fit_failures.empty()) {
    json f = json::array();
    for (const auto& fail : rep.fit_failures)
      f.push_back({{"period", fail.period}, {"residue", fail.residue}, {"reason", fail.reason}});
    j["fit_failures"] = f;
  }
  switch (rep.geometry) {
    case DegreeReport::Geometry::NotComputed:
      break;
    case DegreeReport::Geometry::Empty:
      j["geometric_dimension"] = "EMPTY";
      break;
    case DegreeReport::Geometry::Dim:
      j["geometric_dimension"] = rep.geometric_dimension;
      break;
  }
  j["verdicts"] = {{"fit_vs_predicted", verdict_str(rep.fit_vs_predicted)},
                   {"geometry_vs_predicted", verdict_str(rep.geometry_vs_predicted)},
                   {"geometry_vs_fit", verdict_str(rep.geometry_vs_fit)},
                   {"expected_vs_computed", verdict_str(rep.expected_vs_computed)}};
  return j;
}

json subsystem_to_json(const SubSystem& sub) {
  json j;
  j["simples"] = sub.simples;
  j["positive_root_count"] = sub.datum.positive_roots().size();
  j["components"] = json::array();
  for (const auto& c : sub.components)
    j["components"].push_back({{"label", c.label}, {"simples", c.simples}});
  return j;
}

}  // namespace kostka
