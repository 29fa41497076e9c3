#pragma once

#include <string>

#include "json.hpp"

#include "baric/algebra.hpp"
#include "baric/groebner.hpp"

namespace baric {

using Json = nlohmann::ordered_json;

// {"name", "basis": [labels], "weight": {label: "p/q"}, "products":
//  [{"left", "right", "value": {label: "p/q"}}]}; zero entries are omitted.
Json algebra_to_json(const AlgebraTable& a);
TablePtr algebra_from_json(const Json& j);
TablePtr load_algebra(const std::string& path);
void save_algebra(const AlgebraTable& a, const std::string& path);

// {"generators": [names], "relations": [[{"coeff": "p/q", "word": "xxy"}, ...], ...]}
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);
Presentation load_presentation(const std::string& path);

Json vector_to_json(const AlgebraTable& a, const Vector& v);
Json poly_to_json(const UnivariatePoly& p);

// Linear combination of basis labels: "e + 2u1 - 1/2 v", "3*x1x2".
// Whitespace is ignored.
Element parse_element(const TablePtr& a, const std::string& spec);

}  // namespace baric
