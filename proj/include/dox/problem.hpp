#pragma once

#include <string>

#include "dox/extension.hpp"
#include "dox/qalgebra.hpp"

namespace dox {

struct ProblemSpec {
    Presentation pres;
    ExtensionInput ext;
    std::vector<Tensor> relations;  // as written, before canonicalization
    int degree = -1;                // internal-degree bound; -1 means d + 4
    int randomized = 0;             // randomized quadruples for the invariance checks
};

// Line-oriented problem format:
//   field Q | field Q(i)
//   gens x1 x2 ...
//   rel <sum of coef*name*name>
//   p12 <scalar>
//   p11 <scalar>
//   sigma <gen> = [[e, e], [e, e]]     (e linear in the generators)
//   nu <gen> = [q, q]                   (q quadratic in the generators)
//   degree <D>          (optional)
//   randomized <N>      (optional)
// '#' starts a comment. Coefficients multiply words with '*'; a complex
// coefficient with two parts is written in parentheses, e.g. (1+2*i)*x1*x2.
ProblemSpec parse_problem(const std::string& text);
ProblemSpec parse_problem_file(const std::string& path);

// One expression in the grammar above over an arbitrary alphabet.
Tensor parse_tensor(const std::string& expr, const Alphabet& alpha, Field field, int degree);

// Canonical text form; parse_problem(emit_problem(s)) reproduces s.
std::string emit_problem(const ProblemSpec& spec);

// Linear expression in the tensor grammar above, e.g. "x2*x1 - i*x1*x2".
std::string tensor_expr(const Tensor& t, const Alphabet& alpha);

}  // namespace dox
