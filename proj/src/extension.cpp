#include "dox/extension.hpp"

#include "dox/error.hpp"

namespace dox {

ScalarMatrix j_matrix(const Scalar& p12, const Scalar& p11) {
    return {{-p11, -p12}, {Scalar(1), Scalar(0)}};
}

ScalarMatrix mat_identity(std::size_t n) {
    ScalarMatrix m(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

ScalarMatrix mat_inverse(const ScalarMatrix& m) {
    std::size_t n = m.size();
    Mat aug(n, Vec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw internal_error("ShapeMismatch", "inverse of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = Scalar(1);
    }
    std::vector<int> piv = rref(aug, 2 * n);
    if (piv.size() < n || std::size_t(piv[n - 1]) >= n)
        throw validation_error("NotInvertible", "matrix is singular");
    ScalarMatrix out(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

ScalarMatrix mat_product(const ScalarMatrix& a, const ScalarMatrix& b) {
    std::size_t r = a.size(), inner = b.size(), c = inner ? b[0].size() : 0;
    ScalarMatrix out(r, std::vector<Scalar>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

ScalarMatrix mat_transpose(const ScalarMatrix& a) {
    std::size_t r = a.size(), c = r ? a[0].size() : 0;
    ScalarMatrix out(c, std::vector<Scalar>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) out[j][i] = a[i][j];
    return out;
}

LinearMap det_sigma(const BlockMap& s, const Scalar& p12, const Scalar& p11) {
    LinearMap d = compose(s.at(1, 1), s.at(0, 0));
    d += (-p12) * compose(s.at(0, 1), s.at(1, 0));
    d += (-p11) * compose(s.at(0, 1), s.at(0, 0));
    return LinearMap(1, 1) + d;
}

ScalarMatrix generator_matrix(const LinearMap& f, int n) {
    ScalarMatrix m(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        Tensor img = f(Word{Letter(i)});
        for (const auto& [w, c] : img.terms()) {
            if (w.size() != 1 || int(w[0]) >= n) throw internal_error("DegreeMismatch", "not a map V → V");
            m[std::size_t(i)][w[0]] = c;
        }
    }
    return m;
}

LinearMap map_from_matrix(const ScalarMatrix& m) {
    LinearMap f(1, 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Tensor t(1);
        for (std::size_t j = 0; j < m[i].size(); ++j) t.add_term(Word{Letter(j)}, m[i][j]);
        f.set(Word{Letter(i)}, t);
    }
    return f;
}

BlockMap sigma_inverse_T(const ExtensionInput& ext, int n) {
    ScalarMatrix U = generator_matrix(det_sigma(ext.sigma, ext.p12, ext.p11), n);
    LinearMap dinv = map_from_matrix(mat_inverse(U));
    ScalarMatrix J = j_matrix(ext.p12, ext.p11);
    BlockMap inner = bullet(diag_power(dinv, 2), scalar_right(transpose(ext.sigma), J));
    return scalar_left(mat_inverse(J), inner);
}

namespace {

BlockMap diag_id(int n) { return diag_power(LinearMap::identity(n, 1), 2); }

Subspace boundary_space(const Subspace& R) { return sum(pad(R, 0, 1), pad(R, 1, 0)); }

}  // namespace

BlockMap lift_delta(AlgebraCache& a, const BlockMap& sigma, const BlockMap& delta) {
    int n = a.letters();
    const Subspace& R = a.presentation().R;
    Subspace S = boundary_space(R);
    std::vector<Tensor> rels = R.basis();
    // Residues of δ_T(r)_s modulo S, stacked over (r, s).
    auto residues = [&](const BlockMap& d) {
        BlockMap ext2 = derivation_extension(sigma, d, n, 2);
        Vec out;
        for (const Tensor& r : rels) {
            TensorMatrix m = ext2(r);
            for (int s = 0; s < 2; ++s) {
                Vec v = S.residual(S.ambient().to_vec(m.at(s, 0)));
                out.insert(out.end(), v.begin(), v.end());
            }
        }
        return out;
    };
    Vec rhs = residues(delta);
    for (auto& x : rhs) x = -x;
    // Unknowns: coefficient of the k-th R basis vector in ρ_s(x_g).
    std::vector<BlockMap> units;
    std::vector<Vec> cols;
    for (int g = 0; g < n; ++g)
        for (int s = 0; s < 2; ++s)
            for (const Tensor& r : rels) {
                BlockMap rho(2, 1, 1, 2);
                rho.at(s, 0).set(Word{Letter(g)}, r);
                cols.push_back(rels.empty() ? Vec{} : residues(rho));
                units.push_back(std::move(rho));
            }
    if (rels.empty()) return delta;
    auto alpha = solve_columns(cols, rhs);
    if (!alpha) throw validation_error("NoLift", "δ(R) is not contained in (R⊗V+V⊗R)^{⊕2} for any lift of ν");
    BlockMap out = delta;
    for (std::size_t k = 0; k < units.size(); ++k)
        if (!(*alpha)[k].is_zero()) out += (*alpha)[k] * units[k];
    return out;
}

ValidatedExtension validate_report(AlgebraCache& a, const ExtensionInput& ext) {
    ValidatedExtension v;
    v.input = ext;
    v.n = a.letters();
    int n = v.n;
    const Subspace& R = a.presentation().R;
    const BlockMap& sigma = ext.sigma;
    const BlockMap& delta = ext.delta;
    auto add = [&](const std::string& name, bool ok, std::string detail = "") {
        v.checks.push_back({name, ok, ok ? std::string() : std::move(detail)});
    };

    add("p12_nonzero", !ext.p12.is_zero(), "p12 must be nonzero");
    if (ext.p12.is_zero()) return v;
    v.J = j_matrix(ext.p12, ext.p11);
    v.J_inv = mat_inverse(v.J);

    // σ^{⊠2}(R) ⊆ M_2(R).
    {
        BlockMap s2 = box(sigma, sigma);
        std::string bad;
        for (const Tensor& r : R.basis()) {
            TensorMatrix m = s2(r);
            for (const Tensor& e : m.entries)
                if (!R.contains(e)) bad = e.str(a.presentation().alpha);
        }
        add("sigma_preserves_R", bad.empty(), "σ^{⊠2} maps a relation outside R: " + bad);
    }

    // δ(R) ⊆ (R⊗V+V⊗R)^{⊕2}.
    {
        Subspace S = boundary_space(R);
        BlockMap ext2 = derivation_extension(sigma, delta, n, 2);
        std::string bad;
        for (const Tensor& r : R.basis()) {
            TensorMatrix m = ext2(r);
            for (const Tensor& e : m.entries)
                if (!S.contains(e)) bad = e.str(a.presentation().alpha);
        }
        add("delta_containment", bad.empty(), "δ maps a relation outside R⊗V+V⊗R: " + bad);
    }

    v.det_sigma = det_sigma(sigma, ext.p12, ext.p11);
    v.U = generator_matrix(v.det_sigma, n);
    bool det_ok = true;
    try {
        v.U_inv = mat_inverse(v.U);
        v.det_sigma_inv = map_from_matrix(v.U_inv);
    } catch (const Error&) {
        det_ok = false;
    }
    add("det_sigma_invertible", det_ok, "det σ is singular on V");

    // σ^T•J•σ = J•diag(det σ) = diag(det σ)•J on V.
    {
        BlockMap theta = bullet(scalar_right(transpose(sigma), v.J), sigma);
        BlockMap D = diag_power(v.det_sigma, 2);
        bool ok1 = (theta - scalar_left(v.J, D)).is_zero();
        bool ok2 = (theta - scalar_right(D, v.J)).is_zero();
        add("theta", ok1 && ok2, "σ^T•J•σ differs from J•diag(det σ)");
    }

    // ν^T•J•σ + (σ^T•J•ν)^T = 0 on V, in A_2.
    {
        BlockMap first = bullet(scalar_right(transpose(delta), v.J), sigma);
        BlockMap second = transpose(bullet(scalar_right(transpose(box(sigma, sigma)), v.J), delta));
        BlockMap g = first + second;
        bool ok = true;
        for (int s = 0; s < 2 && ok; ++s)
            for (int x = 0; x < n && ok; ++x)
                if (!a.project(g.at(0, s)(Word{Letter(x)})).empty()) ok = false;
        add("gamma", ok, "ν^T•J•σ + (σ^T•J•ν)^T does not vanish in A_2");
    }

    // ν^T•J•ν = 0 on V, in A_3.
    {
        BlockMap ext2 = derivation_extension(sigma, delta, n, 2);
        BlockMap jd = scalar_left(v.J, delta);
        bool ok = true;
        std::string bad;
        for (int x = 0; x < n; ++x) {
            Tensor t = underline_apply(ext2, jd(Tensor(Word{Letter(x)})));
            if (!a.project(t).empty()) {
                ok = false;
                bad = t.str(a.presentation().alpha);
            }
        }
        add("nu", ok, "underline δ(J•δ) leaves R⊗V+V⊗R: " + bad);
    }

    if (det_ok) {
        v.sigma_inv_T = sigma_inverse_T(ext, n);
        BlockMap id2 = diag_id(n);
        bool ok_t = bullet(v.sigma_inv_T, sigma) == id2 && bullet(sigma, v.sigma_inv_T) == id2;
        add("t_inverse", ok_t, "σ^{-T}•σ = σ•σ^{-T} = diag(id) fails on V");
        BlockMap phi = bullet(scalar_right(scalar_left(v.J, sigma), v.J_inv), diag_power(v.det_sigma_inv, 2));
        bool ok_i = bullet(transpose(sigma), phi) == id2 && bullet(phi, transpose(sigma)) == id2;
        add("inverse", ok_i, "σ^T•φ = φ•σ^T = diag(id) fails on V");
    }
    return v;
}

ValidatedExtension validate(AlgebraCache& a, const ExtensionInput& ext) {
    ValidatedExtension v = validate_report(a, ext);
    for (const Check& c : v.checks)
        if (!c.ok) throw validation_error(c.name, c.detail);
    return v;
}

BlockMap lambda_Y(int n) {
    BlockMap l(2, 1, 0, 1);
    l.at(0, 0).set(Word{}, Tensor(Word{Letter(n)}));
    l.at(1, 0).set(Word{}, Tensor(Word{Letter(n + 1)}));
    return l;
}

Presentation build_B(const Presentation& a, const ValidatedExtension& ext) {
    int n = a.letters();
    Presentation b;
    b.field = a.field;
    b.alpha = a.alpha;
    b.alpha.names.push_back("y1");
    b.alpha.names.push_back("y2");
    Letter y1 = Letter(n), y2 = Letter(n + 1);
    std::vector<Tensor> rels = a.R.basis();
    Tensor yrel(Word{y2, y1});
    yrel.add_term(Word{y1, y2}, -ext.p12());
    yrel.add_term(Word{y1, y1}, -ext.p11());
    rels.push_back(yrel);
    for (int i = 0; i < 2; ++i)
        for (int x = 0; x < n; ++x) {
            Word v{Letter(x)};
            Tensor r(Word{Letter(n + i), Letter(x)});
            for (int j = 0; j < 2; ++j) r -= tensor(ext.sigma().at(i, j)(v), Tensor(Word{Letter(n + j)}));
            r -= ext.delta().at(i, 0)(v);
            rels.push_back(r);
        }
    b.R = Subspace::span(Ambient{n + 2, 2}, rels);
    return b;
}

HilbertReport hilbert_report(AlgebraCache& a, AlgebraCache& b, int bound) {
    HilbertReport h;
    h.ok = true;
    for (int k = 0; k <= bound; ++k) {
        std::size_t expect = 0;
        for (int j = 0; j <= k; ++j) expect += a.dim(j) * std::size_t(k - j + 1);
        h.expected.push_back(expect);
        h.b_dims.push_back(b.dim(k));
        if (expect != h.b_dims.back()) h.ok = false;
    }
    return h;
}

}  // namespace dox
