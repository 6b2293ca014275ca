#pragma once

#include <array>

#include "dox/nakayama.hpp"

namespace dox {

// ω̂ ∈ V̂^{⊗(d+2)}; y1, y2 are letters n and n+1.
struct Superpotential {
    int n = 0;
    int d = 0;
    std::array<Tensor, 3> parts;
    Tensor omega_hat;
};

// Needs δ_{i,r} through d and υ_{i,r} through d-1.
Superpotential build_omega_hat(const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega);

// ω̂ - (-1)^{d+1} τ^{d+1}_{d+2}(μ_B ⊗ id^{⊗d+1})(ω̂).
Tensor twisted_residual(const Tensor& omega_hat, const ScalarMatrix& muB, int d);

// span{(id⊗id⊗ψ)(ω̂)} over the dual word basis ψ of V̂^{⊗d}.
Subspace derivation_span(const Tensor& omega_hat, int letters);

// t ∈ V̂^{⊗s} ⊗ S ⊗ V̂^{⊗k}, checked slice by slice (S of degree 2).
bool in_padded(const Tensor& t, const Subspace& s, int left);
// t ∈ ⋂_s V̂^{⊗s} ⊗ S ⊗ V̂^{⊗(deg-2-s)}.
bool in_koszul_top(const Tensor& t, const Subspace& s);

struct PotentialReport {
    Superpotential sp;
    Subspace span;
    std::vector<Check> checks;
};

PotentialReport verify_potential(const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega,
                                 const ScalarMatrix& muB, const Presentation& b);

}  // namespace dox
