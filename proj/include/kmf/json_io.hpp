#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kmf/rrsk.hpp"
#include "kmf/verify.hpp"

namespace kmf {

using Json = nlohmann::ordered_json;

// N x N nested array of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"k", "A", "P", "Q", "B", "C"}
Json params_to_json(const ParamSet& p);
ParamSet params_from_json(const Json& j);

Json to_json(const ConvergenceClass& c);
Json to_json(const EvalResult& r);
Json to_json(const IdentityReport& r);
Json to_json(const std::vector<IdentityReport>& reports);

// id,samples,max_rel_residual,passed
std::string reports_csv(const std::vector<IdentityReport>& reports);

// "a+bi", "a-bi", "a", "bi"; throws InvalidInput.
Complex parse_complex(std::string_view text);

}  // namespace kmf
