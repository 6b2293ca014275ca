#include "dox/resolution.hpp"

#include <functional>

#include "dox/error.hpp"

namespace dox {

bool SparseMat::is_zero() const {
    for (const auto& c : col)
        if (!c.empty()) return false;
    return true;
}

std::size_t SparseMat::rank() const { return sparse_rank(col); }

SparseMat& SparseMat::operator+=(const SparseMat& o) {
    if (rows != o.rows || cols != o.cols) throw internal_error("ShapeMismatch", "sparse matrix sum");
    for (std::size_t c = 0; c < cols; ++c) axpy(col[c], Scalar(1), o.col[c]);
    return *this;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.cols != b.rows) throw internal_error("ShapeMismatch", "sparse matrix product");
    SparseMat out(a.rows, b.cols);
    for (std::size_t c = 0; c < b.cols; ++c)
        for (const auto& [r, v] : b.col[c]) axpy(out.col[c], v, a.col[r]);
    return out;
}

namespace {

using Fs = std::vector<const BlockMap*>;

Scalar sign(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

Tensor with_unit(const Tensor& w) { return tensor(w, Tensor(Word{kUnitLetter})); }

SparseMat scaled(SparseMat m, const Scalar& c) {
    for (auto& v : m.col)
        for (auto& [r, x] : v) x *= c;
    return m;
}

}  // namespace

Resolution::Resolution(AlgebraCache& a, AlgebraCache& b, const ValidatedExtension& ext, const Quadruple& q,
                       const ResolutionOptions& opt)
    : a_(a), b_(b), n_(ext.n), d_(q.d) {
    if (q.upsilon_top() < d_) throw internal_error("ShapeMismatch", "resolution needs υ through the top level");
    for (int j = 0; j <= d_ + 2; ++j) {
        std::vector<Summand> s;
        if (j - 2 >= 0 && j - 2 <= d_) s.push_back({j - 2, 2});
        if (j - 1 >= 0 && j - 1 <= d_) {
            s.push_back({j - 1, 1});
            s.push_back({j - 1, 1});
        }
        if (j <= d_) s.push_back({j, 0});
        pos_.push_back(s);
    }

    BlockMap lam = lambda_Y(n_);
    BlockMap det = single(ext.det_sigma);
    for (int c = 0; c < 2; ++c) {
        maps_.f[c].resize(std::size_t(d_ + 1));
        maps_.g[c].resize(std::size_t(d_ + 1));
        maps_.f0[c].resize(std::size_t(d_ + 1));
        maps_.g0[c].resize(std::size_t(d_ + 1));
    }
    maps_.h.resize(std::size_t(d_ + 1));
    for (int i = 0; i <= d_; ++i) {
        std::vector<Tensor> basis = i == 0 ? std::vector<Tensor>{Tensor::unit()} : a_.koszul(i).basis();
        for (int c = 0; c < 2; ++c) {
            maps_.f[c][std::size_t(i)] = FreeMap{i, 2, i, 1, {}};
            maps_.f0[c][std::size_t(i)] = FreeMap{i, 2, i, 1, {}};
            maps_.g[c][std::size_t(i)] = FreeMap{i, 1, i, 0, {}};
            maps_.g0[c][std::size_t(i)] = FreeMap{i, 1, i, 0, {}};
        }
        maps_.h[std::size_t(i)] = FreeMap{i, 2, i + 1, 0, {}};
        for (const Tensor& w : basis) {
            // S(w)_a = Σ_b σ^{⊠i}_{ab}(w) ⊗ y_b, i.e. σ^{⊠i} ⊠ λ_Y.
            Fs fs = Factors::repeat(ext.sigma(), i);
            fs.push_back(&lam);
            TensorMatrix S = apply_slotted(fs, with_unit(w));
            std::vector<Tensor> del(2, Tensor(i + 1));
            if (i >= 1) {
                TensorMatrix m = q.delta_r[std::size_t(i)](w);
                for (int a = 0; a < 2; ++a) del[std::size_t(a)] = m.at(a, 0);
            }
            for (int r = 0; r < 2; ++r) {
                Tensor fr(i + 1), f0r(i + 1);
                for (int a = 0; a < 2; ++a) {
                    const Scalar& jr = ext.J[std::size_t(r)][std::size_t(a)];
                    if (jr.is_zero()) continue;
                    f0r += jr * S.at(a, 0);
                    fr += jr * (S.at(a, 0) + del[std::size_t(a)]);
                }
                maps_.f[r][std::size_t(i)].images.push_back(fr);
                maps_.f0[r][std::size_t(i)].images.push_back(f0r);
                maps_.g[r][std::size_t(i)].images.push_back(S.at(r, 0) + del[std::size_t(r)]);
                maps_.g0[r][std::size_t(i)].images.push_back(S.at(r, 0));
            }
            // h_i = Σ_u (-1)^{u+1} (det σ)^{⊠i-u} ⊠ Γ_{u,l} ⊠ λ_Y + υ_{i,r}.
            Tensor hw(i + 2);
            for (int u = 1; u <= i; ++u) {
                Fs hs = Factors::repeat(det, i - u);
                hs.push_back(&q.gamma_l[std::size_t(u)]);
                hs.push_back(&lam);
                hw += sign(u + 1) * apply_slotted(hs, with_unit(w)).at(0, 0);
            }
            if (i >= 1) hw += q.upsilon_r[std::size_t(i)](w);
            maps_.h[std::size_t(i)].images.push_back(hw);
        }
    }
    if (opt.corrupt_f1 && d_ >= 1) {
        Tensor& t = maps_.f[0][1].images.front();
        t.add_term(Word{0, Letter(n_)}, Scalar(1));
    }
}

std::vector<std::size_t> Resolution::generator_counts(int j) const {
    std::vector<std::size_t> out;
    for (const Summand& s : pos_[std::size_t(j)]) out.push_back(a_.koszul(s.i).dim());
    return out;
}

std::size_t Resolution::block_dim(const Summand& s, int k) {
    int bdeg = k - s.i - s.shift;
    if (bdeg < 0) return 0;
    return a_.koszul(s.i).dim() * b_.dim(bdeg);
}

std::size_t Resolution::dim(int j, int k) {
    if (j < 0 || j > d_ + 2) return 0;
    std::size_t out = 0;
    for (const Summand& s : pos_[std::size_t(j)]) out += block_dim(s, k);
    return out;
}

FreeMap Resolution::partial(int i, int shift) const {
    FreeMap m{i, shift, i - 1, shift, {}};
    m.images = a_.koszul(i).basis();
    return m;
}

SparseMat Resolution::materialize(const FreeMap& m, int k) {
    Summand src{m.src_i, m.src_shift}, tgt{m.tgt_i, m.tgt_shift};
    SparseMat out(block_dim(tgt, k), block_dim(src, k));
    int sb = k - m.src_i - m.src_shift, tb = k - m.tgt_i - m.tgt_shift;
    if (sb < 0 || tb < 0 || out.cols == 0) return out;
    const Subspace& wt = a_.koszul(m.tgt_i);
    const GradedPiece& bs = b_.piece(sb);
    std::size_t bs_dim = bs.transversal.size(), bt_dim = b_.dim(tb);
    for (std::size_t p = 0; p < m.images.size(); ++p) {
        // Split the image by its trailing letters; each slice lies in W_tgt.
        std::map<Word, Tensor> slices;
        for (const auto& [w, c] : m.images[p].terms()) {
            Word head(w.begin(), w.begin() + m.tgt_i), tail(w.begin() + m.tgt_i, w.end());
            slices.try_emplace(tail, Tensor(m.tgt_i)).first->second.add_term(head, c);
        }
        std::vector<std::pair<Word, Vec>> parts;
        for (const auto& [tail, slice] : slices) {
            if (!wt.contains(slice))
                throw internal_error("ContainmentFailure", "free map image leaves W_" + std::to_string(m.tgt_i));
            parts.emplace_back(tail, wt.coordinates(slice));
        }
        for (std::size_t b = 0; b < bs_dim; ++b) {
            SparseVec& column = out.col[p * bs_dim + b];
            for (const auto& [tail, coords] : parts) {
                Word ub = tail;
                ub.insert(ub.end(), bs.transversal[b].begin(), bs.transversal[b].end());
                const SparseVec& prod = b_.project(ub);
                for (std::size_t qi = 0; qi < coords.size(); ++qi) {
                    if (coords[qi].is_zero()) continue;
                    SparseVec shifted;
                    for (const auto& [idx, v] : prod) shifted.emplace(qi * bt_dim + idx, v);
                    axpy(column, coords[qi], shifted);
                }
            }
        }
    }
    return out;
}

SparseMat Resolution::differential(int j, int k) {
    const auto& src = pos_[std::size_t(j)];
    const auto& tgt = pos_[std::size_t(j - 1)];
    SparseMat out(dim(j - 1, k), dim(j, k));
    std::vector<std::size_t> row_off, col_off;
    std::size_t acc = 0;
    for (const Summand& s : tgt) {
        row_off.push_back(acc);
        acc += block_dim(s, k);
    }
    acc = 0;
    for (const Summand& s : src) {
        col_off.push_back(acc);
        acc += block_dim(s, k);
    }
    auto place = [&](std::size_t r, std::size_t c, const SparseMat& blk, const Scalar& coef) {
        for (std::size_t x = 0; x < blk.cols; ++x) {
            SparseVec shifted;
            for (const auto& [row, v] : blk.col[x]) shifted.emplace(row_off[r] + row, v);
            axpy(out.col[col_off[c] + x], coef, shifted);
        }
    };
    auto find = [](const std::vector<Summand>& ss, int i, int shift, int nth) -> std::ptrdiff_t {
        for (std::size_t x = 0; x < ss.size(); ++x)
            if (ss[x].i == i && ss[x].shift == shift && nth-- == 0) return std::ptrdiff_t(x);
        return -1;
    };
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Summand& s = src[c];
        if (s.shift == 2) {
            // column (∂, -f, h)
            auto ra = find(tgt, s.i - 1, 2, 0);
            if (ra >= 0 && s.i >= 1) place(std::size_t(ra), c, materialize(partial(s.i, 2), k), Scalar(1));
            for (int r = 0; r < 2; ++r) {
                auto rb = find(tgt, s.i, 1, r);
                if (rb >= 0) place(std::size_t(rb), c, materialize(maps_.f[r][std::size_t(s.i)], k), Scalar(-1));
            }
            auto rc = find(tgt, s.i + 1, 0, 0);
            if (rc >= 0) place(std::size_t(rc), c, materialize(maps_.h[std::size_t(s.i)], k), Scalar(1));
        } else if (s.shift == 1) {
            int copy = (c > 0 && src[c - 1].shift == 1) ? 1 : 0;
            auto rb = find(tgt, s.i - 1, 1, copy);
            if (rb >= 0 && s.i >= 1) place(std::size_t(rb), c, materialize(partial(s.i, 1), k), Scalar(-1));
            auto rc = find(tgt, s.i, 0, 0);
            if (rc >= 0) place(std::size_t(rc), c, materialize(maps_.g[copy][std::size_t(s.i)], k), Scalar(1));
        } else {
            auto rc = find(tgt, s.i - 1, 0, 0);
            if (rc >= 0 && s.i >= 1) place(std::size_t(rc), c, materialize(partial(s.i, 0), k), Scalar(1));
        }
    }
    return out;
}

bool ResolutionReport::ok() const {
    for (const Check& c : checks)
        if (!c.ok) return false;
    return true;
}

ResolutionReport verify_resolution(Resolution& r, int bound) {
    ResolutionReport rep;
    rep.bound = bound;
    const int top = r.length();
    for (int j = 0; j <= top; ++j) rep.generators.push_back(r.generator_counts(j));

    std::string broken, inexact, augmentation, minimal, euler;
    for (int k = 0; k <= bound; ++k) {
        std::vector<std::size_t> dims;
        for (int j = 0; j <= top; ++j) dims.push_back(r.dim(j, k));
        rep.dims.push_back(dims);
        std::vector<SparseMat> dj(std::size_t(top + 2));
        std::vector<std::size_t> rk(std::size_t(top + 2), 0);
        for (int j = 1; j <= top; ++j) {
            dj[std::size_t(j)] = r.differential(j, k);
            rk[std::size_t(j)] = dj[std::size_t(j)].rank();
        }
        for (int j = 2; j <= top; ++j)
            if (broken.empty() && !(dj[std::size_t(j - 1)] * dj[std::size_t(j)]).is_zero())
                broken = "d_" + std::to_string(j - 1) + "∘d_" + std::to_string(j) + " ≠ 0 in degree " + std::to_string(k);
        for (int j = 1; j <= top; ++j)
            if (inexact.empty() && rk[std::size_t(j)] + rk[std::size_t(j + 1)] != dims[std::size_t(j)])
                inexact = "position " + std::to_string(j) + ", degree " + std::to_string(k);
        std::size_t expect = k == 0 ? 0 : dims[0];
        if (augmentation.empty() && rk[1] != expect) augmentation = "degree " + std::to_string(k);
        // Minimality: F_j is generated in internal degree j, so d_j ⊗_B k = 0.
        for (int j = 0; j <= top && k == 0; ++j) {
            std::size_t gens = 0;
            for (std::size_t g : rep.generators[std::size_t(j)]) gens += g;
            if (minimal.empty() && (r.dim(j, j - 1) != 0 || r.dim(j, j) != gens))
                minimal = "position " + std::to_string(j);
        }
        if (k >= 1) {
            long long e = 0;
            for (int j = 0; j <= top; ++j) e += (j % 2 == 0 ? 1 : -1) * (long long)dims[std::size_t(j)];
            if (euler.empty() && e != 0) euler = "degree " + std::to_string(k);
        }
    }
    rep.checks.push_back({"complex", broken.empty(), broken});
    rep.checks.push_back({"exact", inexact.empty(), inexact});
    rep.checks.push_back({"augmentation", augmentation.empty(), augmentation});
    rep.checks.push_back({"minimal", minimal.empty(), minimal});
    rep.checks.push_back({"euler", euler.empty(), euler});

    // Module-map identities among the building blocks.
    const ChainMaps& cm = r.maps();
    const int d = r.d();
    std::string homotopy, squares, g0f0;
    for (int k = 0; k <= bound; ++k) {
        for (int i = 0; i <= d; ++i) {
            SparseMat gf = r.materialize(cm.g[0][std::size_t(i)], k) * r.materialize(cm.f[0][std::size_t(i)], k) +
                           r.materialize(cm.g[1][std::size_t(i)], k) * r.materialize(cm.f[1][std::size_t(i)], k);
            SparseMat rhs(gf.rows, gf.cols);
            if (i >= 1) rhs += r.materialize(cm.h[std::size_t(i - 1)], k) * r.materialize(r.partial(i, 2), k);
            if (i + 1 <= d) rhs += r.materialize(r.partial(i + 1, 0), k) * r.materialize(cm.h[std::size_t(i)], k);
            if (homotopy.empty() && !(gf == rhs))
                homotopy = "level " + std::to_string(i) + ", degree " + std::to_string(k);

            SparseMat z = r.materialize(cm.g0[0][std::size_t(i)], k) * r.materialize(cm.f0[0][std::size_t(i)], k) +
                          r.materialize(cm.g0[1][std::size_t(i)], k) * r.materialize(cm.f0[1][std::size_t(i)], k);
            if (g0f0.empty() && !z.is_zero()) g0f0 = "level " + std::to_string(i) + ", degree " + std::to_string(k);

            if (i == 0) continue;
            for (int c = 0; c < 2; ++c) {
                SparseMat lhs = r.materialize(cm.f[c][std::size_t(i - 1)], k) * r.materialize(r.partial(i, 2), k);
                SparseMat rhs2 = r.materialize(r.partial(i, 1), k) * r.materialize(cm.f[c][std::size_t(i)], k);
                SparseMat lg = r.materialize(r.partial(i, 0), k) * r.materialize(cm.g[c][std::size_t(i)], k);
                SparseMat rg = r.materialize(cm.g[c][std::size_t(i - 1)], k) * r.materialize(r.partial(i, 1), k);
                if (squares.empty() && (!(lhs == rhs2) || !(lg == rg)))
                    squares = "level " + std::to_string(i) + ", degree " + std::to_string(k);
            }
        }
    }
    rep.checks.push_back({"homotopy", homotopy.empty(), homotopy});
    rep.checks.push_back({"chain_squares", squares.empty(), squares});
    rep.checks.push_back({"sigma_lambda_square_zero", g0f0.empty(), g0f0});
    return rep;
}

}  // namespace dox
