#include "dox/potential.hpp"

#include "dox/error.hpp"

namespace dox {

namespace {

using Fs = std::vector<const BlockMap*>;

Scalar sign(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

Tensor y_letter(int n, int a) { return Tensor(Word{Letter(n + a)}); }

Fs repeat(const BlockMap& f, int k) { return Factors::repeat(f, k); }

// λ_Y^T ⊠ J as a 1×2 map out of the degree-0 slot: 1 ↦ (Σ_a J_a1 y_a, Σ_a J_a2 y_a).
BlockMap lambda_T_J(const ScalarMatrix& J, int n) {
    BlockMap f(1, 2, 0, 1);
    for (int b = 0; b < 2; ++b) {
        Tensor img(1);
        for (int a = 0; a < 2; ++a) img += J[std::size_t(a)][std::size_t(b)] * y_letter(n, a);
        f.at(0, b).set(Word{}, img);
    }
    return f;
}

std::vector<Tensor> j_times(const ScalarMatrix& J, const TensorMatrix& v) {
    std::vector<Tensor> out(2, Tensor(v.at(0, 0).degree()));
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            if (!J[std::size_t(s)][std::size_t(t)].is_zero()) out[std::size_t(s)] += J[std::size_t(s)][std::size_t(t)] * v.at(t, 0);
    return out;
}

Tensor underline(const Fs& f, const std::vector<Tensor>& m, int deg) {
    Tensor out(deg);
    for (int s = 0; s < 2; ++s)
        if (!m[std::size_t(s)].is_zero()) out += apply_slotted(f, m[std::size_t(s)]).at(s, 0);
    return out;
}

}  // namespace

Superpotential build_omega_hat(const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega) {
    const int n = ext.n, d = q.d;
    if (int(q.delta_r.size()) <= d || q.upsilon_top() < d - 1)
        throw internal_error("ShapeMismatch", "quadruple not built to the levels ω̂ needs");
    Superpotential sp;
    sp.n = n;
    sp.d = d;
    for (auto& p : sp.parts) p = Tensor(d + 2);

    BlockMap det = single(ext.det_sigma);
    BlockMap id = single(LinearMap::identity(n, 1));
    BlockMap I2 = diag_power(LinearMap::identity(n, 1), 2);
    BlockMap lamJ = lambda_T_J(ext.J, n);
    BlockMap lam = lambda_Y(n);

    // Σ_{i,j} (-1)^j ((det σ)^{⊗i} ⊗ (λ_Y^T ⊠ (J•σ^{⊠j}) ⊠ λ_Y) ⊗ id^{⊗d-i-j}) τ^i_{d+2}(id ⊗ τ^{i+j}_{d+1})(1⊗1⊗ω)
    Tensor slotted = tensor(Tensor(Word{kUnitLetter, kUnitLetter}), omega);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j) {
            Tensor inner(d + 2);
            for (const auto& [w, c] : slotted.terms()) {
                Tensor head(Word{w[0]});
                Tensor tail(Word(w.begin() + 1, w.end()), c);
                inner += tensor(head, tau_apply(d + 1, i + j, tail));
            }
            Tensor moved = tau_apply(d + 2, i, inner);
            Fs f = cat({repeat(det, i), {&lamJ}, repeat(ext.sigma(), j), {&lam}, repeat(id, d - i - j)});
            sp.parts[0] += sign(j) * apply_slotted(f, moved).at(0, 0);
        }

    // Σ_{j,i} (-1)^{i+j} τ^j_{d+2}(λ_Y^T ⊠ ((σ^{⊠j} ⊠ I^{d+1-j})^T • J • (δ_{i,r} ⊠ id^{⊠d-i})))(1⊗ω)
    std::vector<std::vector<Tensor>> jd(std::size_t(d + 1));
    for (int i = 1; i <= d; ++i)
        jd[std::size_t(i)] = j_times(ext.J, apply_slotted(cat({{&q.delta_r[std::size_t(i)]}, repeat(id, d - i)}), omega));
    for (int j = 0; j <= d + 1; ++j) {
        Fs f = cat({repeat(ext.sigma(), j), repeat(I2, d + 1 - j)});
        for (int i = 1; i <= d; ++i) {
            Tensor row(d + 2);
            for (int b = 0; b < 2; ++b) {
                const Tensor& v = jd[std::size_t(i)][std::size_t(b)];
                if (v.is_zero()) continue;
                TensorMatrix m = apply_slotted(f, v);
                for (int a = 0; a < 2; ++a) row += tensor(y_letter(n, a), m.at(b, a));
            }
            sp.parts[1] += sign(i + j) * tau_apply(d + 2, j, row);
        }
    }

    // Σ_{i}Σ_{j≤i} (-1)^{i+j} underline(δ_{j,r} ⊠ id^{⊠d+1-j})(J • (δ_{i,r} ⊠ id^{⊠d-i}))(ω) - Σ_{i<d} (υ_{i,r} ⊗ id^{⊗d-i})(ω)
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= i; ++j) {
            Fs f = cat({{&q.delta_r[std::size_t(j)]}, repeat(id, d + 1 - j)});
            sp.parts[2] += sign(i + j) * underline(f, jd[std::size_t(i)], d + 2);
        }
    for (int i = 1; i <= d - 1; ++i) {
        BlockMap u = single(q.upsilon_r[std::size_t(i)]);
        sp.parts[2] -= apply_slotted(cat({{&u}, repeat(id, d - i)}), omega).at(0, 0);
    }

    sp.omega_hat = sp.parts[0] + sp.parts[1] + sp.parts[2];
    return sp;
}

Tensor twisted_residual(const Tensor& omega_hat, const ScalarMatrix& muB, int d) {
    return twist_residual(omega_hat, muB, d + 2);
}

Subspace derivation_span(const Tensor& omega_hat, int letters) {
    std::map<Word, Tensor> slices;
    for (const auto& [w, c] : omega_hat.terms()) {
        Word tail(w.begin() + 2, w.end());
        auto it = slices.try_emplace(tail, Tensor(2)).first;
        it->second.add_term(Word{w[0], w[1]}, c);
    }
    std::vector<Tensor> gens;
    for (auto& [tail, t] : slices) gens.push_back(t);
    return Subspace::span(Ambient{letters, 2}, gens);
}

bool in_padded(const Tensor& t, const Subspace& s, int left) {
    std::map<std::pair<Word, Word>, Tensor> slices;
    for (const auto& [w, c] : t.terms()) {
        Word pre(w.begin(), w.begin() + left), post(w.begin() + left + 2, w.end());
        auto it = slices.try_emplace({pre, post}, Tensor(2)).first;
        it->second.add_term(Word{w[std::size_t(left)], w[std::size_t(left) + 1]}, c);
    }
    for (const auto& [key, slice] : slices)
        if (!s.contains(slice)) return false;
    return true;
}

bool in_koszul_top(const Tensor& t, const Subspace& s) {
    for (int left = 0; left + 2 <= t.degree(); ++left)
        if (!in_padded(t, s, left)) return false;
    return true;
}

PotentialReport verify_potential(const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega,
                                 const ScalarMatrix& muB, const Presentation& b) {
    PotentialReport rep;
    rep.sp = build_omega_hat(ext, q, omega);
    const Tensor& w = rep.sp.omega_hat;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, ok ? "" : detail});
    };
    add("twisted", twisted_residual(w, muB, q.d).is_zero(), "ω̂ is not μ_B-twisted");
    add("in_R_hat_tensor_V_hat", in_padded(w, b.R, 0), "ω̂ ∉ R̂⊗V̂^{⊗d}");
    add("in_W_hat_top", in_koszul_top(w, b.R), "ω̂ ∉ Ŵ_{d+2}");
    rep.span = derivation_span(w, b.letters());
    add("derivation_quotient", rep.span == b.R,
        "derivation span has dimension " + std::to_string(rep.span.dim()) + ", R̂ has " + std::to_string(b.R.dim()));
    return rep;
}

}  // namespace dox
