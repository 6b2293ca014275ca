#include "dox/nakayama.hpp"

#include "dox/error.hpp"

namespace dox {

bool NakayamaReport::calabi_yau() const { return muB == mat_identity(std::size_t(n + 2)); }

namespace {

Scalar sign(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

// (μ ⊗ id^{d-1}) applied to t with μ(x_i) = Σ_j m_ij x_j.
Tensor first_slot(const ScalarMatrix& m, const Tensor& t) {
    Tensor out(t.degree());
    for (const auto& [w, c] : t.terms()) {
        const auto& row = m[w[0]];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) continue;
            Word v = w;
            v[0] = Letter(j);
            out.add_term(v, c * row[j]);
        }
    }
    return out;
}

}  // namespace

Tensor apply_matrix(const ScalarMatrix& m, const Tensor& v) {
    if (v.is_zero()) return Tensor(1);
    return first_slot(m, v);
}

Tensor twist_residual(const Tensor& omega, const ScalarMatrix& mu, int d) {
    return omega - sign(d - 1) * tau_apply(d, d - 1, first_slot(mu, omega));
}

ScalarMatrix mu_A_solve(const Tensor& omega, int n, int d) {
    Ambient amb{n, d};
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ScalarMatrix e(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
            e[std::size_t(i)][std::size_t(j)] = Scalar(1);
            cols.push_back(amb.to_vec(sign(d - 1) * tau_apply(d, d - 1, first_slot(e, omega))));
        }
    Vec rhs = amb.to_vec(omega);
    auto sol = solve_columns(cols, rhs);
    Mat m;
    for (std::size_t k = 0; k < amb.dim(); ++k) {
        Vec row;
        for (const Vec& c : cols) row.push_back(c[k]);
        m.push_back(row);
    }
    if (!sol || rank(m, cols.size()) != cols.size())
        throw internal_error("NonUniqueOrNone", "the twisting automorphism of ω is not determined uniquely");
    ScalarMatrix L(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L[std::size_t(i)][std::size_t(j)] = (*sol)[std::size_t(i * n + j)];
    return L;
}

ScalarMatrix hdet(const ValidatedExtension& ext, const Tensor& omega, int d) {
    std::vector<const BlockMap*> f(std::size_t(d), &ext.sigma());
    TensorMatrix m = apply_slotted(f, omega);
    const auto& [lead, lc] = *omega.terms().rbegin();
    ScalarMatrix H(2, std::vector<Scalar>(2));
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            const Tensor& e = m.at(s, t);
            Scalar c = e.coeff(lead) / lc;
            if (e != c * omega) throw internal_error("NotProportional", "σ^{⊠d}(ω) is not a scalar matrix times ω");
            H[std::size_t(s)][std::size_t(t)] = c;
        }
    return H;
}

namespace {

Tensor factor(const Tensor& t, const Tensor& omega, bool right) {
    if (t.is_zero()) return Tensor(1);
    const auto& [lead, lc] = *omega.terms().rbegin();
    Tensor v(1);
    for (const auto& [w, c] : t.terms()) {
        Word head = right ? Word(w.begin(), w.end() - 1) : Word(w.begin() + 1, w.end());
        if (head == lead) v.add_term(Word{right ? w.back() : w.front()}, c / lc);
    }
    Tensor back = right ? tensor(omega, v) : tensor(v, omega);
    if (back != t) throw internal_error("FactorizationFailure", "δ_{d,⋆}(ω) does not factor through ω");
    return v;
}

}  // namespace

Tensor factor_right(const Tensor& t, const Tensor& omega) { return factor(t, omega, true); }
Tensor factor_left(const Tensor& t, const Tensor& omega) { return factor(t, omega, false); }

void divergence(const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega, const ScalarMatrix& L,
                NakayamaReport& out) {
    int d = q.d;
    TensorMatrix r = q.delta_r[std::size_t(d)](omega);
    TensorMatrix l = q.delta_l[std::size_t(d)](omega);
    out.delta_r.clear();
    out.delta_l.clear();
    for (int s = 0; s < 2; ++s) {
        out.delta_r.push_back(factor_right(r.at(s, 0), omega));
        out.delta_l.push_back(factor_left(l.at(s, 0), omega));
    }
    std::vector<Tensor> twisted = column_action(ext.sigma_inv_T, out.delta_l);
    out.div.clear();
    for (int s = 0; s < 2; ++s) {
        Tensor v = out.delta_r[std::size_t(s)] + apply_matrix(L, twisted[std::size_t(s)]);
        if (v.is_zero()) v = Tensor(1);
        out.div.push_back(v);
    }
}

ScalarMatrix mu_B_matrix(const ValidatedExtension& ext, const ScalarMatrix& L, const ScalarMatrix& H,
                         const std::vector<Tensor>& div, int n) {
    ScalarMatrix K = mat_product(mat_inverse(mat_transpose(ext.J)), ext.J);
    for (auto& row : K)
        for (auto& e : row) e = -e;
    ScalarMatrix top = mat_product(ext.U_inv, L);
    ScalarMatrix C(2, std::vector<Scalar>(std::size_t(n)));
    for (int s = 0; s < 2; ++s)
        for (const auto& [w, c] : div[std::size_t(s)].terms()) C[std::size_t(s)][w[0]] = c;
    ScalarMatrix KC = mat_product(K, C), KH = mat_product(K, H);
    ScalarMatrix M(static_cast<std::size_t>(n + 2), std::vector<Scalar>(static_cast<std::size_t>(n + 2)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[std::size_t(i)][std::size_t(j)] = top[std::size_t(i)][std::size_t(j)];
    for (int s = 0; s < 2; ++s) {
        for (int j = 0; j < n; ++j) M[std::size_t(n + s)][std::size_t(j)] = KC[std::size_t(s)][std::size_t(j)];
        for (int t = 0; t < 2; ++t) M[std::size_t(n + s)][std::size_t(n + t)] = KH[std::size_t(s)][std::size_t(t)];
    }
    return M;
}

bool preserves_relations(const ScalarMatrix& m, const Subspace& R) {
    std::vector<Tensor> img;
    for (const Tensor& r : R.basis()) {
        Tensor out(2);
        for (const auto& [w, c] : r.terms())
            for (std::size_t a = 0; a < m.size(); ++a) {
                const Scalar& ca = m[w[0]][a];
                if (ca.is_zero()) continue;
                for (std::size_t b = 0; b < m.size(); ++b) {
                    const Scalar& cb = m[w[1]][b];
                    if (!cb.is_zero()) out.add_term(Word{Letter(a), Letter(b)}, c * ca * cb);
                }
            }
        img.push_back(out);
    }
    return Subspace::span(R.ambient(), img) == R;
}

NakayamaReport nakayama(AlgebraCache& a, const ValidatedExtension& ext, const Quadruple& q, const Tensor& omega,
                        const Presentation& b) {
    (void)a;
    NakayamaReport rep;
    rep.n = ext.n;
    rep.d = q.d;
    rep.L = mu_A_solve(omega, ext.n, q.d);
    rep.U = ext.U;
    rep.H = hdet(ext, omega, q.d);
    divergence(ext, q, omega, rep.L, rep);
    rep.muB = mu_B_matrix(ext, rep.L, rep.H, rep.div, ext.n);
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, ok ? "" : detail});
    };
    add("omega_twisted", twist_residual(omega, rep.L, q.d).is_zero(), "ω is not μ_A-twisted");
    add("block_commutes", mat_product(ext.U_inv, rep.L) == mat_product(rep.L, ext.U_inv),
        "U^{-1}L differs from LU^{-1}");
    bool invertible = true;
    try {
        mat_inverse(rep.muB);
    } catch (const Error&) {
        invertible = false;
    }
    add("muB_invertible", invertible, "μ_B matrix is singular");
    add("muB_preserves_relations", invertible && preserves_relations(rep.muB, b.R), "μ_B^{⊗2}(R̂) ≠ R̂");
    return rep;
}

}  // namespace dox
