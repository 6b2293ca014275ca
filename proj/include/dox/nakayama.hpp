#pragma once

#include <vector>

#include "dox/quadruple.hpp"

namespace dox {

// All matrices act on generator columns: f(x_i) = Σ_j M_ij x_j.
struct NakayamaReport {
    int n = 0;
    int d = 0;
    ScalarMatrix L;  // μ_A on V
    ScalarMatrix U;  // det σ on V
    ScalarMatrix H;  // hdet
    std::vector<Tensor> delta_r, delta_l, div;  // columns in V^{⊕2}
    ScalarMatrix muB;                           // (n+2)×(n+2) on (x_1..x_n, y1, y2)
    std::vector<Check> checks;

    bool calabi_yau() const;  // μ_B = id
};

// The unique μ on V with ω = (-1)^{d-1} τ_d^{d-1}(μ ⊗ id^{d-1})(ω).
ScalarMatrix mu_A_solve(const Tensor& omega, int n, int d);
// Residual of the twisted identity for a given μ (zero when μ twists ω).
Tensor twist_residual(const Tensor& omega, const ScalarMatrix& mu, int d);

// σ^{⊠d}(ω) = Hω; throws NotProportional otherwise.
ScalarMatrix hdet(const ValidatedExtension& ext, const Tensor& omega, int d);

// t = ω ⊗ v (right) or v ⊗ ω (left) with v ∈ V; throws FactorizationFailure.
Tensor factor_right(const Tensor& t, const Tensor& omega);
Tensor factor_left(const Tensor& t, const Tensor& omega);

// Applies a generator-column matrix as a linear map on degree-1 tensors.
Tensor apply_matrix(const ScalarMatrix& m, const Tensor& v);

// div = δ_r + μ_A^{⊕2}(σ^{-T}·δ_l), with δ_r, δ_l read off δ_{d,r}(ω), δ_{d,l}(ω).
void divergence(const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega, const ScalarMatrix& L,
                NakayamaReport& out);

ScalarMatrix mu_B_matrix(const ValidatedExtension& ext, const ScalarMatrix& L, const ScalarMatrix& H,
                         const std::vector<Tensor>& div, int n);

// μ_B^{⊗2}(R̂) = R̂ for the presentation of B.
bool preserves_relations(const ScalarMatrix& m, const Subspace& R);

NakayamaReport nakayama(AlgebraCache& a, const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega,
                        const Presentation& b);

}  // namespace dox
