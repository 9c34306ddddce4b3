#pragma once

// JSON encodings of the library types. Rationals are always strings ("p/q"
// or "p"); objects serialize with sorted keys.

#include <json.hpp>

#include "tropkit/enumeration.hpp"
#include "tropkit/jacobian.hpp"
#include "tropkit/metricgraph.hpp"
#include "tropkit/moduli.hpp"
#include "tropkit/planecurve.hpp"
#include "tropkit/polynomial.hpp"

namespace tropkit::io {

using nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& q);

TropicalPolynomial polynomial_from_json(const json& j);
json to_json(const TropicalPolynomial& f);

PlaneTropicalCurve curve_from_json(const json& j);
json to_json(const PlaneTropicalCurve& c);
json to_json(const IntersectionReport& r);

MetricGraph graph_from_json(const json& j);
json to_json(const MetricGraph& g);
Divisor divisor_from_json(const MetricGraph& g, const json& j);
json to_json(const MetricGraph& g, const Divisor& d);
RationalFunction function_from_json(const MetricGraph& g, const json& j);

json to_json(const RationalMatrix& m);
json to_json(const JacobianPoint& p);

TropicalTree tree_from_json(const json& j);
json to_json(const std::vector<CrossRatio>& ratios);

json to_json(const FloorDiagram& d);

/// Parses a file; InputError on I/O or syntax errors.
json read_json_file(const std::string& path);

}  // namespace tropkit::io
