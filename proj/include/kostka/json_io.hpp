#pragma once

#include <json.hpp>

#include "kostka/bzgeom.hpp"
#include "kostka/rootsys.hpp"
#include "kostka/stretch.hpp"

namespace kostka {

using json = nlohmann::json;

json vec_to_json(const Vec& v);

json root_system_to_json(const RootSystem& rs);
json pattern_to_json(const BZPattern& p);
json constraint_system_to_json(const ConstraintSystem& cs);
json quasi_polynomial_to_json(const QuasiPolynomial& qp);
json predicted_degree_to_json(const PredictedDegree& pd);
json degree_report_to_json(const DegreeReport& rep);
json subsystem_to_json(const SubSystem& sub);

}  // namespace kostka
