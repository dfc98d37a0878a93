// JSON views of weights, labels, regions, reports, representations and operators. Objects keep sorted keys.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "obranch/branching.hpp"
#include "obranch/fences.hpp"
#include "obranch/polynomial.hpp"
#include "obranch/rep.hpp"
#include "obranch/scalars.hpp"
#include "obranch/ue.hpp"

namespace obranch {

using Json = nlohmann::json;

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);
Json to_json(const FDLabel& l);
FDLabel label_from_json(const Json& j);
Json to_json(const MultiSignature& s);
Json to_json(const RegionDescriptor& r);
Json to_json(const StabilityReport& r);
Json to_json(const Polynomial& p, const std::vector<std::string>& names);
Json to_json(const UEElement& e);
Json to_json(const RationalFunctionValue& v);

/// Row-major "p/q" strings.
Json matrix_to_json(const MatQ& m);
MatQ matrix_from_json(const Json& j);

std::string generator_name(const Generator& g);

/// {dim, generators, matrices, phases, G, weights, metadata}; X_g = i^phase * matrices[g].
Json to_json(const MatrixRep& rep);
/// Rebuilds a representation and re-checks brackets.
MatrixRep rep_from_json(const Json& j);

/// Pretty output with a trailing newline.
std::string dump(const Json& j);

}  // namespace obranch
