#pragma once

// JSON forms:
//   double poset   {"n": 3, "rel1": [[3,2]], "rel2": [[1,2],[1,3],[2,3]]}
//                  strict pairs, 1-based
//   module element {"terms": [{"word": "212", "coeff": -1}, ...]}
//   tensor element {"terms": [{"left": "1", "right": "11", "coeff": 2}, ...]}
//   matrix         {"basis": [...], "rows": [[...], ...]} when square on one
//                  basis, else {"row_basis", "col_basis", "rows"}

#include <string_view>

#include "json.hpp"
#include "wpp/linear.hpp"
#include "wpp/matrix.hpp"
#include "wpp/posets.hpp"

namespace wpp {

using Json = nlohmann::ordered_json;

Json to_json(const DoublePoset& p);
// Throws ValidationError naming the offending field.
DoublePoset poset_from_json(const Json& j);
DoublePoset parse_poset(std::string_view text);

Json to_json(const ModuleElement& x);
ModuleElement module_from_json(const Json& j);

Json to_json(const TensorElement& t);
Json to_json(const IntMatrix& m);

}  // namespace wpp
