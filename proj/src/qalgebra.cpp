#include "dox/qalgebra.hpp"

#include "dox/error.hpp"

namespace dox {

AlgebraCache::AlgebraCache(Presentation p) : pres_(std::move(p)) {
    if (pres_.R.ambient().letters != pres_.letters() || pres_.R.ambient().degree != 2)
        throw internal_error("AmbientMismatch", "relation space must live in V⊗V");
}

const GradedPiece& AlgebraCache::piece(int k) {
    if (k < 0) throw internal_error("IndexOutOfRange", "negative degree");
    while (int(pieces_.size()) <= k) build_piece(int(pieces_.size()));
    return pieces_[std::size_t(k)];
}

void AlgebraCache::build_piece(int k) {
    GradedPiece g;
    g.degree = k;
    std::size_t n = std::size_t(letters());
    if (k == 0) {
        g.transversal.push_back(Word{});
    } else if (k == 1) {
        for (std::size_t x = 0; x < n; ++x) g.transversal.push_back(Word{Letter(x)});
    } else {
        const GradedPiece& prev = pieces_[std::size_t(k - 1)];
        // Copy: project() below may grow pieces_ only up to k-1, which already exist.
        std::vector<Word> lower = pieces_[std::size_t(k - 2)].transversal;
        std::vector<Tensor> rels = pres_.R.basis();
        for (const Word& t : lower) {
            for (const Tensor& r : rels) {
                SparseVec v;
                for (const auto& [ab, c] : r.terms()) {
                    Word ta = t;
                    ta.push_back(ab[0]);
                    const SparseVec& p = project(ta);
                    for (const auto& [idx, val] : p) {
                        auto [it, ins] = v.emplace(idx * n + ab[1], c * val);
                        if (!ins) {
                            it->second += c * val;
                            if (it->second.is_zero()) v.erase(it);
                        }
                    }
                }
                g.relations.insert(std::move(v));
            }
        }
        std::size_t cols = prev.transversal.size() * n;
        g.quotient_index.assign(cols, -1);
        for (std::size_t col = 0; col < cols; ++col) {
            if (g.relations.is_pivot(col)) continue;
            g.quotient_index[col] = std::ptrdiff_t(g.transversal.size());
            Word w = prev.transversal[col / n];
            w.push_back(Letter(col % n));
            g.transversal.push_back(std::move(w));
        }
    }
    for (std::size_t i = 0; i < g.transversal.size(); ++i) g.position.emplace(g.transversal[i], i);
    pieces_.push_back(std::move(g));
}

const SparseVec& AlgebraCache::project(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    int k = int(w.size());
    SparseVec out;
    std::size_t n = std::size_t(letters());
    for (Letter l : w)
        if (l >= n) throw internal_error("AlphabetMismatch", "letter outside the presentation's alphabet");
    if (k == 0) {
        out.emplace(0, Scalar(1));
    } else if (k == 1) {
        out.emplace(w[0], Scalar(1));
    } else {
        const GradedPiece& g = piece(k);
        Word head(w.begin(), w.end() - 1);
        SparseVec v;
        for (const auto& [idx, val] : project(head)) v.emplace(idx * n + w.back(), val);
        v = g.relations.reduce(std::move(v));
        for (const auto& [col, val] : v) out.emplace(std::size_t(g.quotient_index[col]), val);
    }
    return memo_.emplace(w, std::move(out)).first->second;
}

SparseVec AlgebraCache::project(const Tensor& t) {
    SparseVec out;
    for (const auto& [w, c] : t.terms()) axpy(out, c, project(w));
    return out;
}

Tensor AlgebraCache::lift(int k, const SparseVec& coords) {
    const GradedPiece& g = piece(k);
    Tensor t(k);
    for (const auto& [idx, c] : coords) t.add_term(g.transversal[idx], c);
    return t;
}

const Subspace& AlgebraCache::koszul(int i) {
    int n = letters();
    while (int(koszul_.size()) <= i) {
        int j = int(koszul_.size());
        if (j <= 1)
            koszul_.push_back(Subspace::full(Ambient{n, j}));
        else if (j == 2)
            koszul_.push_back(pres_.R);
        else
            koszul_.push_back(intersect(pad(koszul_[std::size_t(j - 1)], 1, 0), pad(koszul_[std::size_t(j - 1)], 0, 1)));
    }
    return koszul_[std::size_t(i)];
}

Subspace AlgebraCache::koszul_direct(int i) const {
    int n = pres_.letters();
    if (i <= 1) return Subspace::full(Ambient{n, i});
    std::vector<Subspace> parts;
    for (int s = 0; s <= i - 2; ++s) parts.push_back(pad(pres_.R, s, i - s - 2));
    return intersect(parts, Ambient{n, i});
}

Subspace AlgebraCache::relation_span(int k) const {
    int n = pres_.letters();
    Subspace acc(Ambient{n, k});
    for (int s = 0; s + 2 <= k; ++s) acc = sum(acc, pad(pres_.R, s, k - s - 2));
    return acc;
}

ASCertificate as_certificate(AlgebraCache& a, int bound) {
    if (bound < 2) throw internal_error("IndexOutOfRange", "certificate bound must be at least 2");
    ASCertificate c;
    c.bound = bound;
    int top = -1;
    for (int i = 0; i <= bound + 1; ++i) {
        std::size_t dim = a.koszul(i).dim();
        c.w_dims.push_back(dim);
        if (dim == 0) break;
        top = i;
    }
    c.d = top;
    bool vanishes = c.w_dims.back() == 0;
    c.w_top_ok = vanishes && c.w_dims[std::size_t(top)] == 1;
    c.palindrome_ok = true;
    for (int i = 0; i <= top; ++i)
        if (c.w_dims[std::size_t(i)] != c.w_dims[std::size_t(top - i)]) c.palindrome_ok = false;
    for (int k = 0; k <= bound; ++k) c.a_dims.push_back(a.dim(k));
    c.euler_ok = true;
    for (int k = 1; k <= bound && c.euler_ok; ++k) {
        mpz_class s = 0;
        for (int i = 0; i <= k && i < int(c.w_dims.size()); ++i) {
            mpz_class term = mpz_class(static_cast<unsigned long>(c.w_dims[std::size_t(i)])) *
                             mpz_class(static_cast<unsigned long>(c.a_dims[std::size_t(k - i)]));
            s += (i % 2 == 0) ? term : mpz_class(-term);
        }
        if (s != 0) {
            c.euler_ok = false;
            c.euler_fail_degree = k;
        }
    }
    if (c.w_top_ok) {
        Tensor b = a.koszul(top).basis_tensor(0);
        Scalar lead = b.terms().rbegin()->second;
        c.omega = lead.inverse() * b;
    }
    return c;
}

void require_regular(const ASCertificate& c) {
    if (c.ok()) return;
    std::string why;
    if (!c.w_top_ok) why += " top Koszul space is not one-dimensional or W_{d+1} does not vanish;";
    if (!c.palindrome_ok) why += " Koszul dimensions are not palindromic;";
    if (!c.euler_ok) why += " Euler sum fails in degree " + std::to_string(c.euler_fail_degree) + ";";
    throw validation_error("NotRegularEvidence", "d = " + std::to_string(c.d) + ":" + why);
}

BlockMap derivation_extension(const BlockMap& sigma, const BlockMap& delta, int letters, int k) {
    BlockMap out(2, 1, k, k + 1);
    for (int s = 0; s < k; ++s) {
        BlockMap term = box(box_power(sigma, s), delta);
        if (k - s - 1 > 0) term = box(term, single(LinearMap::identity(letters, k - s - 1)));
        out += term;
    }
    return out;
}

std::vector<SparseVec> apply_graded_hom(AlgebraCache& a, const BlockMap& sigma, int k, const SparseVec& x) {
    Tensor t = a.lift(k, x);
    TensorMatrix m = box_power(sigma, k)(t);
    std::vector<SparseVec> out;
    for (const Tensor& e : m.entries) out.push_back(a.project(e));
    return out;
}

std::vector<SparseVec> apply_graded_derivation(AlgebraCache& a, const BlockMap& sigma, const BlockMap& delta, int k,
                                               const SparseVec& x) {
    std::vector<SparseVec> out(2);
    if (k == 0) return out;
    Tensor t = a.lift(k, x);
    TensorMatrix m = derivation_extension(sigma, delta, a.letters(), k)(t);
    for (int s = 0; s < 2; ++s) out[std::size_t(s)] = a.project(m.at(s, 0));
    return out;
}

}  // namespace dox
