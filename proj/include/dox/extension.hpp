#pragma once

#include <string>
#include <vector>

#include "dox/blockcalc.hpp"
#include "dox/qalgebra.hpp"

namespace dox {

// Raw double Ore data over V (letters 0..n-1): σ is 2×2 of degree 1→1 and
// δ is a 2×1 tensor lift of ν, degree 1→2.
struct ExtensionInput {
    Scalar p12;
    Scalar p11;
    BlockMap sigma;
    BlockMap delta;
};

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ValidatedExtension {
    ExtensionInput input;
    int n = 0;  // number of x-generators
    ScalarMatrix J;
    ScalarMatrix J_inv;
    LinearMap det_sigma;
    LinearMap det_sigma_inv;
    ScalarMatrix U;
    ScalarMatrix U_inv;
    BlockMap sigma_inv_T;
    std::vector<Check> checks;

    const BlockMap& sigma() const { return input.sigma; }
    const BlockMap& delta() const { return input.delta; }
    const Scalar& p12() const { return input.p12; }
    const Scalar& p11() const { return input.p11; }
};

ScalarMatrix j_matrix(const Scalar& p12, const Scalar& p11);
ScalarMatrix mat_inverse(const ScalarMatrix& m);  // throws NotInvertible
ScalarMatrix mat_product(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix mat_transpose(const ScalarMatrix& a);
ScalarMatrix mat_identity(std::size_t n);

// det σ = σ22σ11 − p12 σ12σ21 − p11 σ12σ11 (composition right to left).
LinearMap det_sigma(const BlockMap& sigma, const Scalar& p12, const Scalar& p11);
// Matrix of a degree-1 map on the generator column: f(x_i) = Σ_j M_ij x_j.
ScalarMatrix generator_matrix(const LinearMap& f, int n);
LinearMap map_from_matrix(const ScalarMatrix& m);

// J^{-1} • diag((det σ)^{-1}) • σ^T • J.
BlockMap sigma_inverse_T(const ExtensionInput& ext, int n);

// Returns δ + ρ with ρ: V → R^{⊕2} solving the containment system
// δ(R) ⊆ (R⊗V + V⊗R)^{⊕2}; throws NoLift when the system is inconsistent.
BlockMap lift_delta(AlgebraCache& a, const BlockMap& sigma, const BlockMap& delta);

// All conditions evaluated; never throws on a failed condition.
ValidatedExtension validate_report(AlgebraCache& a, const ExtensionInput& ext);
// As above, throwing the first failed condition as a validation error.
ValidatedExtension validate(AlgebraCache& a, const ExtensionInput& ext);

// Presentation of B over V̂ = V ⊕ k{y1, y2}.
Presentation build_B(const Presentation& a, const ValidatedExtension& ext);

struct HilbertReport {
    std::vector<std::size_t> b_dims;
    std::vector<std::size_t> expected;
    bool ok = false;
};
HilbertReport hilbert_report(AlgebraCache& a, AlgebraCache& b, int bound);

// λ_Y: 2×1 map from the degree-0 space to V̂, 1 ↦ (y1, y2)^T.
BlockMap lambda_Y(int n);

}  // namespace dox
