#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dox/extension.hpp"

namespace dox {

using Json = nlohmann::ordered_json;

// {"re": "p/q", "im": "r/s"}
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
// Array of {"word": [...names], "re", "im"} in lex word order.
Json to_json(const Tensor& t, const Alphabet& alpha);
Tensor tensor_from_json(const Json& j, const Alphabet& alpha, int degree);
Json to_json(const ScalarMatrix& m);
Json to_json(const TensorMatrix& m, const Alphabet& alpha);
Json to_json(const std::vector<Check>& checks);

// Renderers over the JSON documents the pipeline produces.
std::string render_text(const Json& doc);
std::string render_latex(const Json& doc);

}  // namespace dox
