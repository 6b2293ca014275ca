#pragma once

#include <string>

#include "dox/pipeline.hpp"

#ifndef DOX_FIXTURE_DIR
#error "DOX_FIXTURE_DIR must be defined"
#endif

inline std::string fixture_path(const std::string& name) { return std::string(DOX_FIXTURE_DIR) + "/" + name; }

inline dox::ProblemSpec load_fixture(const std::string& name) { return dox::parse_problem_file(fixture_path(name)); }

// Every shipped fixture.
inline const std::vector<std::string>& fixtures() {
    static const std::vector<std::string> all{"quantum_plane.dox",      "quantum_plane_trimmed.dox", "trimmed_kx.dox",
                                              "jordan_kx.dox",     "poly3_nu.dox",               "poly3_trimmed.dox"};
    return all;
}

// Tensor from an expression over `alpha` (Q(i) coefficients allowed).
inline dox::Tensor T(const dox::Alphabet& alpha, const std::string& expr, int degree) {
    return dox::parse_tensor(expr, alpha, dox::Field::QI, degree);
}

// Alphabet of B for an n-generator alphabet.
inline dox::Alphabet hat(const dox::Alphabet& a) {
    dox::Alphabet b = a;
    b.names.push_back("y1");
    b.names.push_back("y2");
    return b;
}

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<dox::Tensor> {
    static String convert(const dox::Tensor& t) {
        dox::Alphabet a;
        for (int k = 0; k < 10; ++k) a.names.push_back("#" + std::to_string(k));
        return t.str(a).c_str();
    }
};
}  // namespace doctest
#endif
