#include "dox/linalg.hpp"

#include <algorithm>

#include "dox/error.hpp"

namespace dox {

std::vector<int> rref(Mat& rows, std::size_t ncols) {
    std::vector<int> pivots;
    std::size_t cur = 0;
    for (std::size_t c = 0; c < ncols && cur < rows.size(); ++c) {
        std::size_t p = cur;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[cur], rows[p]);
        Vec& piv = rows[cur];
        if (!piv[c].is_one()) {
            Scalar inv = piv[c].inverse();
            for (std::size_t k = c; k < ncols; ++k)
                if (!piv[k].is_zero()) piv[k] *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == cur || rows[r][c].is_zero()) continue;
            Scalar f = rows[r][c];
            Vec& row = rows[r];
            for (std::size_t k = c; k < ncols; ++k)
                if (!piv[k].is_zero()) row[k] -= f * piv[k];
        }
        pivots.push_back(int(c));
        ++cur;
    }
    rows.resize(cur);
    return pivots;
}

std::size_t rank(Mat rows, std::size_t ncols) { return rref(rows, ncols).size(); }

Mat mat_mul(const Mat& a, const Mat& b, std::size_t inner, std::size_t bcols) {
    Mat out(a.size(), Vec(bcols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < bcols; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& r : a)
        for (const auto& x : r)
            if (!x.is_zero()) return false;
    return true;
}

std::optional<Vec> solve_columns(const std::vector<Vec>& cols, const Vec& rhs) {
    std::size_t n = cols.size(), m = rhs.size();
    Mat aug(m, Vec(n + 1));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) aug[i][j] = cols[j][i];
    for (std::size_t i = 0; i < m; ++i) aug[i][n] = rhs[i];
    std::vector<int> piv = rref(aug, n + 1);
    Vec x(n);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (std::size_t(piv[r]) == n) return std::nullopt;
        x[std::size_t(piv[r])] = aug[r][n];
    }
    return x;
}

std::size_t Ambient::dim() const {
    std::size_t d = 1;
    for (int k = 0; k < degree; ++k) d *= std::size_t(letters);
    return d;
}

std::size_t Ambient::index(const Word& w) const {
    if (int(w.size()) != degree) throw internal_error("DegreeMismatch", "word length differs from ambient degree");
    std::size_t idx = 0;
    for (Letter l : w) {
        if (int(l) >= letters) throw internal_error("AlphabetMismatch", "letter outside ambient alphabet");
        idx = idx * std::size_t(letters) + l;
    }
    return idx;
}

Word Ambient::word(std::size_t idx) const {
    Word w(static_cast<std::size_t>(degree));
    for (int k = degree - 1; k >= 0; --k) {
        w[std::size_t(k)] = Letter(idx % std::size_t(letters));
        idx /= std::size_t(letters);
    }
    return w;
}

Vec Ambient::to_vec(const Tensor& t) const {
    Vec v(dim());
    for (const auto& [w, c] : t.terms()) v[index(w)] = c;
    return v;
}

Tensor Ambient::to_tensor(const Vec& v) const {
    Tensor t(degree);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) t.add_term(word(k), v[k]);
    return t;
}

Subspace Subspace::from_rows(Ambient amb, Mat rows) {
    Subspace s(amb);
    s.pivots_ = rref(rows, amb.dim());
    s.rows_ = std::move(rows);
    return s;
}

Subspace Subspace::span(Ambient amb, const std::vector<Tensor>& gens) {
    Mat rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(amb.to_vec(g));
    return from_rows(amb, std::move(rows));
}

Subspace Subspace::full(Ambient amb) {
    Subspace s(amb);
    std::size_t n = amb.dim();
    s.rows_.assign(n, Vec(n));
    for (std::size_t k = 0; k < n; ++k) {
        s.rows_[k][k] = Scalar(1);
        s.pivots_.push_back(int(k));
    }
    return s;
}

std::vector<Tensor> Subspace::basis() const {
    std::vector<Tensor> out;
    for (std::size_t k = 0; k < rows_.size(); ++k) out.push_back(basis_tensor(k));
    return out;
}

Vec Subspace::residual(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = v[std::size_t(pivots_[k])];
        if (f.is_zero()) continue;
        const Vec& row = rows_[k];
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!row[c].is_zero()) v[c] -= f * row[c];
    }
    return v;
}

Tensor Subspace::residual(const Tensor& t) const {
    if (t.is_zero()) return Tensor(amb_.degree);
    return amb_.to_tensor(residual(amb_.to_vec(t)));
}

bool Subspace::contains(const Tensor& t) const {
    if (t.is_zero()) return true;
    if (t.degree() != amb_.degree) return false;
    for (const auto& [w, c] : t.terms())
        for (Letter l : w)
            if (int(l) >= amb_.letters) return false;
    return residual(t).is_zero();
}

Vec Subspace::coordinates(const Tensor& t) const {
    Vec out(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) out[k] = t.coeff(pivot_word(k));
    return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (!(a.ambient() == b.ambient())) throw internal_error("AmbientMismatch", "sum of subspaces");
    Mat rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Subspace::from_rows(a.ambient(), std::move(rows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (!(a.ambient() == b.ambient())) throw internal_error("AmbientMismatch", "intersection of subspaces");
    const Ambient& amb = a.ambient();
    std::size_t n = amb.dim(), m = a.dim();
    if (m == 0 || b.dim() == 0) return Subspace(amb);
    // Rows [residual(a_j mod b) | e_j]; rows with vanishing left block give combinations of a inside b.
    Mat aug(m, Vec(n + m));
    for (std::size_t j = 0; j < m; ++j) {
        Vec r = b.residual(a.rows()[j]);
        std::copy(r.begin(), r.end(), aug[j].begin());
        aug[j][n + j] = Scalar(1);
    }
    std::vector<int> piv = rref(aug, n + m);
    Mat out;
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (std::size_t(piv[r]) < n) continue;
        Vec v(n);
        for (std::size_t j = 0; j < m; ++j) {
            const Scalar& c = aug[r][n + j];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!a.rows()[j][k].is_zero()) v[k] += c * a.rows()[j][k];
        }
        out.push_back(std::move(v));
    }
    return Subspace::from_rows(amb, std::move(out));
}

Subspace intersect(const std::vector<Subspace>& spaces, Ambient amb) {
    if (spaces.empty()) return Subspace::full(amb);
    Subspace acc = spaces[0];
    for (std::size_t k = 1; k < spaces.size(); ++k) acc = intersect(acc, spaces[k]);
    return acc;
}

Subspace pad(const Subspace& s, int left, int right) {
    int n = s.ambient().letters;
    Ambient amb{n, s.ambient().degree + left + right};
    Ambient la{n, left}, ra{n, right};
    std::size_t inner = s.ambient().dim(), rdim = ra.dim();
    Mat rows;
    rows.reserve(la.dim() * s.dim() * rdim);
    for (std::size_t u = 0; u < la.dim(); ++u)
        for (const Vec& b : s.rows())
            for (std::size_t v = 0; v < rdim; ++v) {
                Vec row(amb.dim());
                for (std::size_t c = 0; c < inner; ++c)
                    if (!b[c].is_zero()) row[(u * inner + c) * rdim + v] = b[c];
                rows.push_back(std::move(row));
            }
    return Subspace::from_rows(amb, std::move(rows));
}

Tensor solve_affine(const Tensor& target, const Subspace& congruence, const Subspace& constraint) {
    const Ambient& amb = constraint.ambient();
    if (!(congruence.ambient() == amb) || (!target.is_zero() && target.degree() != amb.degree))
        throw internal_error("AmbientMismatch", "solve_affine arguments live in different spaces");
    // Work modulo the congruence space: its normal form kills exactly that space.
    std::vector<Vec> cols;
    cols.reserve(constraint.dim());
    for (const Vec& k : constraint.rows()) cols.push_back(congruence.residual(k));
    Vec rhs = congruence.residual(amb.to_vec(target));
    auto alpha = solve_columns(cols, rhs);
    if (!alpha) throw internal_error("NoSolution", "target is not congruent to any element of the constraint space");
    Vec x(amb.dim());
    for (std::size_t j = 0; j < alpha->size(); ++j) {
        const Scalar& c = (*alpha)[j];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!constraint.rows()[j][k].is_zero()) x[k] += c * constraint.rows()[j][k];
    }
    return amb.to_tensor(x);
}

Tensor tau_apply(int d, int i, const Tensor& t) {
    if (d < 1 || i < 0 || i > d - 1)
        throw internal_error("IndexOutOfRange", "tau_" + std::to_string(d) + "^" + std::to_string(i));
    if (!t.is_zero() && t.degree() != d) throw internal_error("DegreeMismatch", "tau applied to wrong degree");
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) perm[std::size_t(k)] = k;
    for (int k = 0; k < i; ++k) perm[std::size_t(k)] = k + 1;
    perm[std::size_t(i)] = 0;
    return t.permuted(perm);
}

}  // namespace dox
