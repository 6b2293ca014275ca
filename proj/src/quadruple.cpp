#include "dox/quadruple.hpp"

#include <functional>
#include <random>

#include "dox/error.hpp"

namespace dox {

Factors::Factors(const ValidatedExtension& ext)
    : sigma(ext.sigma()), det(single(ext.det_sigma)), id(single(LinearMap::identity(ext.n, 1))), n(ext.n) {}

std::vector<const BlockMap*> Factors::repeat(const BlockMap& f, int k) {
    return std::vector<const BlockMap*>(std::size_t(std::max(k, 0)), &f);
}

TensorMatrix eval(const std::vector<const BlockMap*>& factors, const Tensor& t) {
    return apply_slotted(factors, t);
}

std::vector<const BlockMap*> cat(std::initializer_list<std::vector<const BlockMap*>> parts) {
    std::vector<const BlockMap*> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

namespace {

using Fs = std::vector<const BlockMap*>;

Fs one(const BlockMap& f) { return Fs{&f}; }

Scalar sign(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

// J·v for a 2-column of tensors.
std::vector<Tensor> j_times(const ScalarMatrix& J, const TensorMatrix& v) {
    std::vector<Tensor> out(2, Tensor(v.at(0, 0).degree()));
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            if (!J[std::size_t(s)][std::size_t(t)].is_zero()) out[std::size_t(s)] += J[std::size_t(s)][std::size_t(t)] * v.at(t, 0);
    return out;
}

// Σ_s F_s(m_s) for a 2×1 box product F given as factors.
Tensor underline(const Fs& f, const std::vector<Tensor>& m) {
    Tensor out;
    bool first = true;
    for (int s = 0; s < 2; ++s) {
        if (m[std::size_t(s)].is_zero()) continue;
        Tensor v = eval(f, m[std::size_t(s)]).at(s, 0);
        if (first) {
            out = v;
            first = false;
        } else {
            out += v;
        }
    }
    return out;
}

BlockMap column_on_basis(const Subspace& w, const std::vector<std::vector<Tensor>>& vals, int rows, int cols, int out_deg) {
    BlockMap m(rows, cols, w.ambient().degree, out_deg);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::vector<Tensor> v;
            v.reserve(vals.size());
            for (const auto& e : vals) v.push_back(e[std::size_t(r * cols + c)]);
            m.at(r, c) = LinearMap::on_basis(w, v, out_deg);
        }
    return m;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    Scalar coef() { return Scalar(long(std::uniform_int_distribution<int>(-3, 3)(gen_))); }
    Tensor element(const Subspace& s) {
        Tensor t(s.ambient().degree);
        for (std::size_t k = 0; k < s.dim(); ++k) t += coef() * s.basis_tensor(k);
        return t;
    }

private:
    std::mt19937_64 gen_;
};

void require_in(const Subspace& s, const Tensor& t, const std::string& what) {
    if (!s.contains(t)) throw internal_error("ContainmentFailure", what);
}

}  // namespace

Split split_degree2(AlgebraCache& a, const ValidatedExtension& ext) {
    Quadruple q = build_quadruple(a, ext, 2, QuadrupleOptions{true, std::nullopt});
    return Split{q.delta_r[2], q.delta_l[2], q.upsilon_r[1], q.upsilon_l[1]};
}

Quadruple build_quadruple(AlgebraCache& a, const ValidatedExtension& ext, int d, const QuadrupleOptions& opt) {
    const int n = ext.n;
    const Subspace& R = a.presentation().R;
    Factors F(ext);
    std::optional<Rng> rng;
    if (opt.seed) rng.emplace(*opt.seed);

    Quadruple q;
    q.n = n;
    q.d = d;
    q.delta = ext.delta();
    if (rng && R.dim() > 0)
        for (int x = 0; x < n; ++x)
            for (int s = 0; s < 2; ++s) {
                Word w{Letter(x)};
                q.delta.at(s, 0).set(w, q.delta.at(s, 0)(w) + rng->element(R));
            }
    const BlockMap& delta = q.delta;

    q.delta_r.push_back(BlockMap(2, 1, 0, 1));
    q.delta_l.push_back(BlockMap(2, 1, 0, 1));
    q.gamma_r.push_back(BlockMap(1, 2, 0, 1));
    q.gamma_l.push_back(BlockMap(1, 2, 0, 1));
    if (d >= 1) {
        q.delta_r.push_back(delta);
        q.delta_l.push_back(delta);
    }
    for (int i = 2; i <= d; ++i) {
        const Subspace& Wi = a.koszul(i);
        Subspace cong = pad(R, i - 1, 0);
        Subspace constraint = pad(Wi, 0, 1);
        Subspace left_space = pad(Wi, 1, 0);
        const Subspace& Wnext = a.koszul(i + 1);
        std::vector<std::vector<Tensor>> rv, lv;
        Fs prev_r = cat({one(q.delta_r[std::size_t(i - 1)]), one(F.id)});
        Fs prev_l = cat({one(q.delta_l[std::size_t(i - 1)]), one(F.id)});
        Fs sig_delta = cat({Factors::repeat(F.sigma, i - 1), one(delta)});
        Fs sig_prev_r = cat({one(F.sigma), one(q.delta_r[std::size_t(i - 1)])});
        for (const Tensor& w : Wi.basis()) {
            TensorMatrix target = eval(sig_delta, w);
            TensorMatrix t2 = eval(prev_r, w);
            std::vector<Tensor> r(2);
            for (int s = 0; s < 2; ++s) {
                r[std::size_t(s)] = solve_affine(target.at(s, 0) + t2.at(s, 0), cong, constraint);
                if (rng) r[std::size_t(s)] += rng->element(Wnext);
            }
            TensorMatrix l1 = eval(prev_l, w);
            TensorMatrix l2 = eval(sig_prev_r, w);
            std::vector<Tensor> l(2);
            for (int s = 0; s < 2; ++s) {
                l[std::size_t(s)] = l1.at(s, 0) + sign(i) * (l2.at(s, 0) - r[std::size_t(s)]);
                require_in(left_space, l[std::size_t(s)], "δ_{" + std::to_string(i) + ",l} leaves V⊗W_i");
            }
            rv.push_back(r);
            lv.push_back(l);
        }
        q.delta_r.push_back(column_on_basis(Wi, rv, 2, 1, i + 1));
        q.delta_l.push_back(column_on_basis(Wi, lv, 2, 1, i + 1));
    }

    // Γ_{i,⋆} = ((σ^{⊠i+1})^T•J•δ_{i,⋆})^T + δ_{i,⋆}^T•J•σ^{⊠i}.
    for (int i = 1; i <= d; ++i) {
        const Subspace& Wi = a.koszul(i);
        for (int star = 0; star < 2; ++star) {
            const BlockMap& dl = star == 0 ? q.delta_r[std::size_t(i)] : q.delta_l[std::size_t(i)];
            Subspace target_space = star == 0 ? pad(Wi, 0, 1) : pad(Wi, 1, 0);
            Fs sig_next = Factors::repeat(F.sigma, i + 1);
            Fs sig_i = Factors::repeat(F.sigma, i);
            std::vector<std::vector<Tensor>> vals;
            for (const Tensor& w : Wi.basis()) {
                std::vector<Tensor> u = j_times(ext.J, dl(w));
                std::vector<Tensor> row(2, Tensor(i + 1));
                for (int t = 0; t < 2; ++t) {
                    if (u[std::size_t(t)].is_zero()) continue;
                    TensorMatrix m = eval(sig_next, u[std::size_t(t)]);
                    for (int s = 0; s < 2; ++s) row[std::size_t(s)] += m.at(t, s);
                }
                TensorMatrix S = eval(sig_i, w);
                for (int j = 0; j < 2; ++j)
                    for (int aa = 0; aa < 2; ++aa)
                        for (int b = 0; b < 2; ++b) {
                            const Scalar& c = ext.J[std::size_t(aa)][std::size_t(b)];
                            if (c.is_zero() || S.at(b, j).is_zero()) continue;
                            row[std::size_t(j)] += c * dl.at(aa, 0)(S.at(b, j));
                        }
                for (const Tensor& e : row)
                    require_in(target_space, e, std::string("Γ_{") + std::to_string(i) + (star == 0 ? ",r}" : ",l}") +
                                                    " leaves its stated image");
                vals.push_back(row);
            }
            (star == 0 ? q.gamma_r : q.gamma_l).push_back(column_on_basis(Wi, vals, 1, 2, i + 1));
        }
    }

    int top = opt.upsilon_through_top ? d : d - 1;
    q.upsilon_r.push_back(LinearMap(0, 2));
    q.upsilon_l.push_back(LinearMap(0, 2));
    q.Delta.push_back(LinearMap(0, 2));
    for (int i = 1; i <= top; ++i) {
        const Subspace& Wi = a.koszul(i);
        const Subspace& Wn = a.koszul(i + 1);
        Subspace cong = pad(R, i, 0);
        Subspace constraint = pad(Wn, 0, 1);
        Subspace left_space = pad(Wn, 1, 0);
        const Subspace& Wnn = a.koszul(i + 2);
        const BlockMap& dr = q.delta_r[std::size_t(i)];
        const BlockMap& dlm = q.delta_l[std::size_t(i)];
        BlockMap ur_prev = single(q.upsilon_r[std::size_t(i - 1)]);
        BlockMap ul_prev = single(q.upsilon_l[std::size_t(i - 1)]);
        Fs big = cat({Factors::repeat(F.sigma, i), one(delta)});
        Fs dr_id = cat({one(dr), one(F.id)});
        Fs sig_dr = cat({one(F.sigma), one(dr)});
        Fs dl_id = cat({one(dlm), one(F.id)});
        std::vector<Tensor> Dv, rv, lv;
        for (const Tensor& w : Wi.basis()) {
            std::vector<Tensor> jr = j_times(ext.J, dr(w));
            Tensor Di = underline(big, jr) + underline(dr_id, jr);
            if (Di.is_zero()) Di = Tensor(i + 2);
            Tensor target = Di;
            for (int u = 1; u <= i - 1; ++u) {
                Fs f = cat({Factors::repeat(F.det, i - 1 - u), one(q.gamma_l[std::size_t(u)]), one(delta)});
                target += sign(u) * eval(f, w).at(0, 0);
            }
            if (i >= 2) target -= eval(cat({one(ur_prev), one(F.id)}), w).at(0, 0);
            Tensor r = solve_affine(target, cong, constraint);
            if (rng) r += rng->element(Wnn);
            Tensor l(i + 2);
            if (i >= 2) {
                l -= eval(cat({one(ul_prev), one(F.id)}), w).at(0, 0);
                l += sign(i) * (r - eval(cat({one(F.det), one(ur_prev)}), w).at(0, 0));
            } else {
                l += sign(i) * r;
            }
            l += underline(sig_dr, j_times(ext.J, dlm(w)));
            l += underline(dl_id, jr);
            require_in(left_space, l, "υ_{" + std::to_string(i) + ",l} leaves V⊗W_{i+1}");
            Dv.push_back(Di);
            rv.push_back(r);
            lv.push_back(l);
        }
        q.Delta.push_back(LinearMap::on_basis(Wi, Dv, i + 2));
        q.upsilon_r.push_back(LinearMap::on_basis(Wi, rv, i + 2));
        q.upsilon_l.push_back(LinearMap::on_basis(Wi, lv, i + 2));
    }
    return q;
}

namespace {

// (L ⊗ G)(t) where L is a box product of 1×1 factors on the first `left`
// letters and G is an arbitrary linear map on the remaining letters.
Tensor apply_split(const Fs& left_factors, int left, const std::function<Tensor(const Word&)>& g, const Tensor& t) {
    Tensor out;
    bool first = true;
    std::map<Word, Tensor> memo;
    for (const auto& [w, c] : t.terms()) {
        Word head(w.begin(), w.begin() + left), tail(w.begin() + left, w.end());
        auto it = memo.find(tail);
        if (it == memo.end()) it = memo.emplace(tail, g(tail)).first;
        if (it->second.is_zero()) continue;
        Tensor lh = left_factors.empty() ? Tensor(head) : eval(left_factors, Tensor(head)).at(0, 0);
        Tensor term = c * tensor(lh, it->second);
        if (first) {
            out = term;
            first = false;
        } else {
            out += term;
        }
    }
    return out;
}

bool equal_on(const Subspace& w, const std::function<TensorMatrix(const Tensor&)>& lhs,
              const std::function<TensorMatrix(const Tensor&)>& rhs, std::string& witness, const Alphabet& alpha) {
    for (const Tensor& b : w.basis()) {
        TensorMatrix x = lhs(b), y = rhs(b);
        for (std::size_t k = 0; k < x.entries.size(); ++k)
            if (x.entries[k] - y.entries[k] != Tensor()) {
                witness = b.str(alpha) + " ↦ " + (x.entries[k] - y.entries[k]).str(alpha);
                return false;
            }
    }
    return true;
}

// (f ⊗ id)(word) with f reading the first `deg` letters.
Tensor tensor_apply_tail(const LinearMap& f, int deg, const Word& w) {
    Tensor head = f(Word(w.begin(), w.begin() + deg));
    if (head.is_zero()) return head;
    return tensor(head, Tensor(Word(w.begin() + deg, w.end())));
}

TensorMatrix as_matrix(Tensor t) {
    TensorMatrix m(1, 1, t.degree());
    m.at(0, 0) = std::move(t);
    return m;
}

TensorMatrix add(TensorMatrix a, const TensorMatrix& b, const Scalar& c = Scalar(1)) {
    if (a.entries.empty()) {
        a = b;
        for (auto& e : a.entries) e *= c;
        return a;
    }
    for (std::size_t k = 0; k < a.entries.size(); ++k) a.entries[k] += c * b.entries[k];
    return a;
}

}  // namespace

std::vector<Check> quadruple_identities(AlgebraCache& a, const ValidatedExtension& ext, const Quadruple& q) {
    std::vector<Check> out;
    const Alphabet& alpha = a.presentation().alpha;
    Factors F(ext);
    const int d = q.d;
    auto record = [&](const std::string& name, bool ok, const std::string& w) { out.push_back({name, ok, ok ? "" : w}); };
    auto lvl = [](const std::string& s, int i) { return s + "[" + std::to_string(i) + "]"; };

    // δ recursion.
    for (int i = 2; i <= d; ++i) {
        std::string w;
        bool ok = equal_on(
            a.koszul(i),
            [&](const Tensor& t) {
                return add(q.delta_r[std::size_t(i)](t), q.delta_l[std::size_t(i)](t), sign(i));
            },
            [&](const Tensor& t) {
                return add(eval({&F.sigma, &q.delta_r[std::size_t(i - 1)]}, t),
                           eval({&q.delta_l[std::size_t(i - 1)], &F.id}, t), sign(i));
            },
            w, alpha);
        record(lvl("delta_recursion", i), ok, w);
    }

    // Θ recursion and det σ^{⊠i} = (det σ)^{⊗i}.
    for (int i = 1; i <= std::max(d, 4); ++i) {
        Fs sig = Factors::repeat(F.sigma, i);
        Fs dets = Factors::repeat(F.det, i);
        auto theta = [&](const Tensor& t) {
            TensorMatrix S = eval(sig, t);
            TensorMatrix out2(2, 2, i);
            for (int s = 0; s < 2; ++s)
                for (int u = 0; u < 2; ++u)
                    for (int aa = 0; aa < 2; ++aa)
                        for (int b = 0; b < 2; ++b) {
                            const Scalar& c = ext.J[std::size_t(aa)][std::size_t(b)];
                            if (c.is_zero() || S.at(b, u).is_zero()) continue;
                            out2.at(s, u) += c * eval(sig, S.at(b, u)).at(aa, s);
                        }
            return out2;
        };
        if (i <= d) {
            std::string w;
            bool ok = equal_on(
                a.koszul(i), theta,
                [&](const Tensor& t) {
                    Tensor D = eval(dets, t).at(0, 0);
                    TensorMatrix m(2, 2, i);
                    for (int s = 0; s < 2; ++s)
                        for (int u = 0; u < 2; ++u) m.at(s, u) = ext.J[std::size_t(s)][std::size_t(u)] * D;
                    return m;
                },
                w, alpha);
            record(lvl("theta_recursion", i), ok, w);
        }
        if (i <= 4) {
            std::string w;
            bool ok = equal_on(
                Subspace::full(Ambient{q.n, i}), [&](const Tensor& t) { return as_matrix(theta(t).at(1, 0)); },
                [&](const Tensor& t) { return eval(dets, t); }, w, alpha);
            record(lvl("det_power", i), ok, w);
        }
    }

    // Γ relations.
    for (int i = 1; i <= d; ++i) {
        const Subspace& Wi = a.koszul(i);
        std::string w;
        bool ok;
        if (i == 1) {
            // Level-0 maps vanish, so both Γ_1 agree.
            ok = equal_on(
                Wi, [&](const Tensor& t) { return q.gamma_r[1](t); }, [&](const Tensor& t) { return q.gamma_l[1](t); }, w,
                alpha);
        } else {
            ok = equal_on(
                Wi,
                [&](const Tensor& t) {
                    return add(q.gamma_r[std::size_t(i)](t), q.gamma_l[std::size_t(i)](t), sign(i));
                },
                [&](const Tensor& t) {
                    TensorMatrix m = eval({&F.det, &q.gamma_r[std::size_t(i - 1)]}, t);
                    return add(m, eval({&q.gamma_l[std::size_t(i - 1)], &F.sigma}, t), sign(i));
                },
                w, alpha);
        }
        record(lvl("gamma_relation", i), ok, w);

        auto upsilon_sum = [&](const Tensor& t) {
            TensorMatrix acc;
            for (int u = 1; u <= i; ++u)
                acc = add(acc, eval(cat({Factors::repeat(F.det, i - u), one(q.gamma_l[std::size_t(u)])}), t),
                          sign(u + 1));
            return acc;
        };
        ok = equal_on(
            Wi,
            [&](const Tensor& t) {
                TensorMatrix acc;
                for (int u = 1; u <= i; ++u)
                    acc = add(acc, eval(cat({one(q.gamma_r[std::size_t(u)]), Factors::repeat(F.sigma, i - u)}), t),
                              sign(u));
                return acc;
            },
            [&](const Tensor& t) { return add(TensorMatrix(), upsilon_sum(t), sign(i)); }, w, alpha);
        record(lvl("gamma_sum_a", i), ok, w);

        const Subspace& Wn = a.koszul(i + 1);
        bool in = true;
        std::string wit;
        for (const Tensor& b : Wi.basis())
            for (const Tensor& e : upsilon_sum(b).entries)
                if (!Wn.contains(e)) {
                    in = false;
                    wit = e.str(alpha);
                }
        record(lvl("gamma_sum_in_W", i), in, wit);
    }

    // Alternating-sum identities on W_m.
    for (int m = 1; m <= d; ++m) {
        std::string w;
        bool ok = equal_on(
            a.koszul(m),
            [&](const Tensor& t) {
                TensorMatrix acc;
                for (int i = 1; i <= m; ++i)
                    acc = add(acc, eval(cat({one(q.delta_r[std::size_t(i)]), Factors::repeat(F.id, m - i)}), t), sign(i));
                return acc;
            },
            [&](const Tensor& t) {
                TensorMatrix acc;
                for (int i = 1; i <= m; ++i)
                    acc = add(acc, eval(cat({Factors::repeat(F.sigma, m - i), one(q.delta_l[std::size_t(i)])}), t),
                              sign(i + m + 1));
                return acc;
            },
            w, alpha);
        record(lvl("alt_sum_a", m), ok, w);
    }
    for (int m = 2; m <= d; ++m) {
        std::string w;
        bool ok = equal_on(
            a.koszul(m),
            [&](const Tensor& t) {
                TensorMatrix acc;
                for (int i = 1; i <= m - 1; ++i)
                    acc = add(acc,
                              eval(cat({Factors::repeat(F.sigma, m - i - 1), one(q.delta_l[std::size_t(i)]), one(F.id)}), t),
                              sign(i + 1));
                return acc;
            },
            [&](const Tensor& t) {
                TensorMatrix acc;
                for (int i = 1; i <= m - 1; ++i)
                    acc = add(acc, eval(cat({one(q.delta_r[std::size_t(i)]), Factors::repeat(F.id, m - i)}), t),
                              sign(i + m + 1));
                return acc;
            },
            w, alpha);
        record(lvl("alt_sum_b", m), ok, w);
    }

    // The correction term shared by identities c and d, on degree i + extra.
    auto correction = [&](int u, int i, int extra, const Word& word) {
        int pad_r = i - u + extra;
        Tensor t(word);
        Fs dl_f = cat({one(q.delta_l[std::size_t(u)]), Factors::repeat(F.id, pad_r)});
        Fs dr_f = cat({one(q.delta_r[std::size_t(u)]), Factors::repeat(F.id, pad_r)});
        std::vector<Tensor> jl = j_times(ext.J, eval(dl_f, t));
        std::vector<Tensor> jr = j_times(ext.J, eval(dr_f, t));
        Tensor s1 = underline(cat({one(F.sigma), one(q.delta_r[std::size_t(u)]), Factors::repeat(F.id, pad_r)}), jl);
        Tensor s2 = underline(cat({one(q.delta_l[std::size_t(u)]), Factors::repeat(F.id, pad_r + 1)}), jr);
        return s1 + s2;
    };
    int top = q.upsilon_top();
    for (int m = 1; m <= std::min(d, top); ++m) {
        std::string w;
        bool ok = equal_on(
            a.koszul(m),
            [&](const Tensor& t) {
                Tensor acc(m + 2);
                for (int i = 1; i <= m; ++i)
                    acc += apply_split({}, 0,
                                       [&](const Word& x) {
                                           return tensor_apply_tail(q.upsilon_r[std::size_t(i)], i, x);
                                       },
                                       t);
                return as_matrix(acc);
            },
            [&](const Tensor& t) {
                Tensor acc(m + 2);
                for (int i = 1; i <= m; ++i) {
                    Fs dets = Factors::repeat(F.det, m - i);
                    acc += sign(i) * apply_split(dets, m - i, [&](const Word& x) { return q.upsilon_l[std::size_t(i)](x); }, t);
                    for (int u = 1; u <= i; ++u)
                        acc -= sign(u) * apply_split(dets, m - i, [&](const Word& x) { return correction(u, i, 0, x); }, t);
                }
                return as_matrix(acc);
            },
            w, alpha);
        record(lvl("alt_sum_c", m), ok, w);
    }
    for (int m = 2; m <= std::min(d, top + 1); ++m) {
        std::string w;
        bool ok = equal_on(
            a.koszul(m),
            [&](const Tensor& t) {
                Tensor acc(m + 2);
                for (int i = 1; i <= m - 1; ++i)
                    acc += apply_split({}, 0,
                                       [&](const Word& x) {
                                           return tensor_apply_tail(q.upsilon_r[std::size_t(i)], i, x);
                                       },
                                       t);
                return as_matrix(acc);
            },
            [&](const Tensor& t) {
                Tensor acc(m + 2);
                for (int i = 1; i <= m - 1; ++i) {
                    Fs dets = Factors::repeat(F.det, m - i - 1);
                    acc += sign(i) * apply_split(dets, m - i - 1,
                                                 [&](const Word& x) { return tensor_apply_tail(q.upsilon_l[std::size_t(i)], i, x); },
                                                 t);
                    for (int u = 1; u <= i; ++u)
                        acc -= sign(u) *
                               apply_split(dets, m - i - 1, [&](const Word& x) { return correction(u, i, 1, x); }, t);
                }
                return as_matrix(acc);
            },
            w, alpha);
        record(lvl("alt_sum_d", m), ok, w);
    }
    return out;
}

std::vector<Check> quadruple_freedom(AlgebraCache& a, const ValidatedExtension& ext, const Quadruple& q1,
                                     const Quadruple& q2) {
    std::vector<Check> out;
    const Alphabet& alpha = a.presentation().alpha;
    Factors F(ext);
    int d = std::min(q1.d, q2.d);
    std::vector<BlockMap> diff;
    for (int i = 0; i <= d; ++i) diff.push_back(q1.delta_r[std::size_t(i)] - q2.delta_r[std::size_t(i)]);
    for (int i = 1; i <= d; ++i) {
        const Subspace& Wn = a.koszul(i + 1);
        bool ok_r = true, ok_l = true;
        std::string wr, wl;
        for (const Tensor& w : a.koszul(i).basis()) {
            TensorMatrix acc;
            for (int j = 0; j <= i - 1; ++j)
                acc = add(acc, eval(cat({one(diff[std::size_t(i - j)]), Factors::repeat(F.id, j)}), w), sign(j));
            for (const Tensor& e : acc.entries)
                if (!Wn.contains(e)) {
                    ok_r = false;
                    wr = e.str(alpha);
                }
            TensorMatrix l = add(q1.delta_l[std::size_t(i)](w), q2.delta_l[std::size_t(i)](w), Scalar(-1));
            for (int j = 1; j <= i - 1; ++j)
                l = add(l, eval(cat({one(F.sigma), one(diff[std::size_t(i - j)]), Factors::repeat(F.id, j - 1)}), w),
                        sign(i + j));
            for (const Tensor& e : l.entries)
                if (!Wn.contains(e)) {
                    ok_l = false;
                    wl = e.str(alpha);
                }
        }
        out.push_back({"freedom_r[" + std::to_string(i) + "]", ok_r, wr});
        out.push_back({"freedom_l[" + std::to_string(i) + "]", ok_l, wl});
    }
    return out;
}

}  // namespace dox
