#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dox/extension.hpp"

namespace dox {

struct QuadrupleOptions {
    // Build υ_{i,⋆} for i = d as well (W_{d+1} = 0 forces υ_{d,r} = 0, while
    // υ_{d,l} is still constrained); otherwise levels stop at d - 1.
    bool upsilon_through_top = false;
    // When set, every free choice (the R-valued part of the lift of ν and the
    // kernel directions of each solve) receives a pseudo-random element.
    std::optional<std::uint64_t> seed;
};

// Maps are stored on the RREF basis of their domain W_i and must only be
// evaluated on elements of W_i (or on V^{⊗a}⊗W_i⊗V^{⊗b} through tensoring).
struct Quadruple {
    int n = 0;
    int d = 0;
    BlockMap delta;                   // the lift of ν in use, 2×1 on V
    std::vector<BlockMap> delta_r;    // levels 0..d, 2×1, degree i → i+1
    std::vector<BlockMap> delta_l;    // levels 0..d
    std::vector<BlockMap> gamma_r;    // levels 0..d, 1×2, degree i → i+1
    std::vector<BlockMap> gamma_l;    // levels 0..d
    std::vector<LinearMap> upsilon_r; // levels 0..top, degree i → i+2
    std::vector<LinearMap> upsilon_l; // levels 0..top
    std::vector<LinearMap> Delta;     // levels 0..top, degree i → i+2

    int upsilon_top() const { return int(upsilon_r.size()) - 1; }
};

// Cached tensor factors for the slot evaluator.
struct Factors {
    BlockMap sigma;
    BlockMap det;  // 1×1
    BlockMap id;   // 1×1 identity on V
    int n = 0;

    explicit Factors(const ValidatedExtension& ext);
    // k copies of f.
    static std::vector<const BlockMap*> repeat(const BlockMap& f, int k);
};

// Evaluates the box product of the listed factors on t.
TensorMatrix eval(const std::vector<const BlockMap*>& factors, const Tensor& t);
std::vector<const BlockMap*> cat(std::initializer_list<std::vector<const BlockMap*>> parts);

// The degree-2 split of δ on R and of underline δ(J•δ) on V.
struct Split {
    BlockMap delta_r2, delta_l2;
    LinearMap upsilon_r1, upsilon_l1;
};
Split split_degree2(AlgebraCache& a, const ValidatedExtension& ext);

Quadruple build_quadruple(AlgebraCache& a, const ValidatedExtension& ext, int d, const QuadrupleOptions& opt = {});

// Identities the construction must satisfy; every computed level is checked.
std::vector<Check> quadruple_identities(AlgebraCache& a, const ValidatedExtension& ext, const Quadruple& q);

// Two quadruples for the same ν differ in a controlled way: the alternating
// difference Σ_j (-1)^j (δ_{i-j,r} - δ'_{i-j,r}) ⊠ id^j, and its δ_l analogue,
// map W_i into W_{i+1}^{⊕2}. One check per level and side.
std::vector<Check> quadruple_freedom(AlgebraCache& a, const ValidatedExtension& ext, const Quadruple& q1,
                                     const Quadruple& q2);

}  // namespace dox
