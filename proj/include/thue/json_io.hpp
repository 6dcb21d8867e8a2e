#pragma once

#include <json.hpp>

#include "thue/matveev.hpp"
#include "thue/solver.hpp"

namespace thue {

using Json = nlohmann::ordered_json;

// Every numeric field is serialized as a decimal string: integers exactly,
// reals to `digits` significant digits.
int real_digits_for(unsigned prec_bits);
std::string real_str(const Real& v, int digits);

Json to_json(const BinaryCubicForm& f);
Json to_json(const QuadraticForm& h);
Json to_json(const UnimodularMap& g);
Json to_json(const PointEvaluation& ev, int digits);
Json to_json(const SolutionPoint& sp, int digits);
Json to_json(const GapReport& rep, int digits);
Json to_json(const LatticeSummary& ls, int digits);
Json to_json(const FormAnalysis& an, int digits);
Json to_json(const ThresholdReport& rep, int digits);

BinaryCubicForm form_from_json(const Json& j);
std::vector<OrderElement> order_elements_from_json(const Json& j);

}  // namespace thue
