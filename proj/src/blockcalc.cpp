#include "dox/blockcalc.hpp"

#include "dox/error.hpp"

namespace dox {

LinearMap LinearMap::identity(int letters, int degree) {
    return scalar(letters, degree, Scalar(1));
}

LinearMap LinearMap::scalar(int letters, int degree, const Scalar& c) {
    LinearMap m(degree, degree);
    if (c.is_zero()) return m;
    Ambient amb{letters, degree};
    for (std::size_t k = 0; k < amb.dim(); ++k) {
        Word w = amb.word(k);
        m.img_.emplace(w, Tensor(w, c));
    }
    return m;
}

LinearMap LinearMap::on_basis(const Subspace& w, const std::vector<Tensor>& values, int out_deg) {
    if (values.size() != w.dim()) throw internal_error("ShapeMismatch", "basis value count differs from dimension");
    LinearMap m(w.ambient().degree, out_deg);
    for (std::size_t k = 0; k < values.size(); ++k) m.set(w.pivot_word(k), values[k]);
    return m;
}

void LinearMap::set(const Word& w, Tensor t) {
    if (t.is_zero()) {
        img_.erase(w);
        return;
    }
    if (t.degree() != out_) throw internal_error("DegreeMismatch", "image degree differs from codomain degree");
    img_[w] = std::move(t);
}

Tensor LinearMap::operator()(const Word& w) const {
    auto it = img_.find(w);
    return it == img_.end() ? Tensor(out_) : it->second;
}

Tensor LinearMap::operator()(const Tensor& t) const {
    Tensor out(out_);
    for (const auto& [w, c] : t.terms()) {
        auto it = img_.find(w);
        if (it == img_.end()) continue;
        for (const auto& [v, cv] : it->second.terms()) out.add_term(v, c * cv);
    }
    return out;
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
    if (o.img_.empty()) return *this;
    if (img_.empty()) {
        in_ = o.in_;
        out_ = o.out_;
    } else if (in_ != o.in_ || out_ != o.out_) {
        throw internal_error("DegreeMismatch", "sum of linear maps of different degrees");
    }
    for (const auto& [w, t] : o.img_) {
        Tensor s = (*this)(w);
        s += t;
        set(w, std::move(s));
    }
    return *this;
}

LinearMap& LinearMap::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        img_.clear();
        return *this;
    }
    for (auto& [w, t] : img_) t *= c;
    return *this;
}

LinearMap tensor(const LinearMap& a, const LinearMap& b) {
    LinearMap out(a.in_degree() + b.in_degree(), a.out_degree() + b.out_degree());
    for (const auto& [u, ta] : a.images())
        for (const auto& [v, tb] : b.images()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.set(w, tensor(ta, tb));
        }
    return out;
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
    LinearMap out(b.in_degree(), a.out_degree());
    if (!a.is_zero() && !b.is_zero() && a.in_degree() != b.out_degree())
        throw internal_error("DegreeMismatch", "composition of non-composable maps");
    for (const auto& [u, t] : b.images()) out.set(u, a(t));
    return out;
}

BlockMap::BlockMap(int rows, int cols, int in_deg, int out_deg)
    : rows_(rows), cols_(cols), in_(in_deg), out_(out_deg),
      entries_(std::size_t(rows * cols), LinearMap(in_deg, out_deg)) {}

BlockMap BlockMap::from_entries(int rows, int cols, std::vector<LinearMap> entries) {
    if (entries.size() != std::size_t(rows * cols)) throw internal_error("ShapeMismatch", "entry count");
    BlockMap m(rows, cols, entries[0].in_degree(), entries[0].out_degree());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!entries[k].is_zero() &&
            (entries[k].in_degree() != m.in_ || entries[k].out_degree() != m.out_))
            throw internal_error("DegreeMismatch", "block entries of different degrees");
        m.entries_[k] = std::move(entries[k]);
    }
    return m;
}

bool BlockMap::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

TensorMatrix BlockMap::operator()(const Tensor& t) const {
    TensorMatrix out(rows_, cols_, out_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j)(t);
    return out;
}

BlockMap& BlockMap::operator+=(const BlockMap& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("ShapeMismatch", "sum of block maps");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    if (in_ != o.in_ || out_ != o.out_) {
        if (o.is_zero()) return *this;
        if (!is_zero()) throw internal_error("DegreeMismatch", "sum of block maps of different degrees");
        in_ = o.in_;
        out_ = o.out_;
    }
    return *this;
}

BlockMap& BlockMap::operator*=(const Scalar& c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

BlockMap box(const BlockMap& f, const BlockMap& g) {
    if (f.cols() != g.rows()) throw internal_error("ShapeMismatch", "box: inner dimensions differ");
    BlockMap out(f.rows(), g.cols(), f.in_degree() + g.in_degree(), f.out_degree() + g.out_degree());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            for (int l = 0; l < f.cols(); ++l) {
                if (f.at(i, l).is_zero() || g.at(l, j).is_zero()) continue;
                out.at(i, j) += tensor(f.at(i, l), g.at(l, j));
            }
    return out;
}

BlockMap bullet(const BlockMap& h, const BlockMap& f) {
    if (h.cols() != f.rows()) throw internal_error("ShapeMismatch", "bullet: inner dimensions differ");
    BlockMap out(h.rows(), f.cols(), f.in_degree(), h.out_degree());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
            for (int l = 0; l < h.cols(); ++l) {
                if (h.at(i, l).is_zero() || f.at(l, j).is_zero()) continue;
                out.at(i, j) += compose(h.at(i, l), f.at(l, j));
            }
    return out;
}

BlockMap transpose(const BlockMap& f) {
    BlockMap out(f.cols(), f.rows(), f.in_degree(), f.out_degree());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) out.at(j, i) = f.at(i, j);
    return out;
}

Tensor underline_apply(const BlockMap& f, const TensorMatrix& m) {
    if (f.rows() != m.rows || f.cols() != m.cols) throw internal_error("ShapeMismatch", "underline: shapes differ");
    Tensor out(f.out_degree());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) out += f.at(i, j)(m.at(i, j));
    return out;
}

BlockMap scalar_action(const ScalarMatrix& x, int letters, int degree) {
    int r = int(x.size()), s = r ? int(x[0].size()) : 0;
    BlockMap out(r, s, degree, degree);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) out.at(i, j) = LinearMap::scalar(letters, degree, x[std::size_t(i)][std::size_t(j)]);
    return out;
}

std::vector<Tensor> column_action(const BlockMap& f, const std::vector<Tensor>& v) {
    if (f.cols() != int(v.size())) throw internal_error("ShapeMismatch", "column_action: length differs");
    std::vector<Tensor> out(std::size_t(f.rows()), Tensor(f.out_degree()));
    for (int i = 0; i < f.rows(); ++i)
        for (int l = 0; l < f.cols(); ++l) out[std::size_t(i)] += f.at(i, l)(v[std::size_t(l)]);
    return out;
}

BlockMap diag_power(const LinearMap& phi, int r) {
    BlockMap out(r, r, phi.in_degree(), phi.out_degree());
    for (int i = 0; i < r; ++i) out.at(i, i) = phi;
    return out;
}

BlockMap box_power(const BlockMap& f, int i) {
    if (f.rows() != f.cols()) throw internal_error("ShapeMismatch", "box power of non-square block map");
    if (i == 0) return diag_power(LinearMap::identity(0, 0), f.rows());
    BlockMap acc = f;
    for (int k = 1; k < i; ++k) acc = box(acc, f);
    return acc;
}

BlockMap single(const LinearMap& f) {
    return BlockMap::from_entries(1, 1, {f});
}

BlockMap scalar_left(const ScalarMatrix& x, const BlockMap& f) {
    int r = int(x.size());
    if (r == 0 || int(x[0].size()) != f.rows()) throw internal_error("ShapeMismatch", "scalar_left");
    BlockMap out(r, f.cols(), f.in_degree(), f.out_degree());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < f.cols(); ++j)
            for (int l = 0; l < f.rows(); ++l) {
                const Scalar& c = x[std::size_t(i)][std::size_t(l)];
                if (c.is_zero() || f.at(l, j).is_zero()) continue;
                out.at(i, j) += c * f.at(l, j);
            }
    return out;
}

BlockMap scalar_right(const BlockMap& f, const ScalarMatrix& x) {
    int s = x.empty() ? 0 : int(x[0].size());
    if (int(x.size()) != f.cols()) throw internal_error("ShapeMismatch", "scalar_right");
    BlockMap out(f.rows(), s, f.in_degree(), f.out_degree());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < s; ++j)
            for (int l = 0; l < f.cols(); ++l) {
                const Scalar& c = x[std::size_t(l)][std::size_t(j)];
                if (c.is_zero() || f.at(i, l).is_zero()) continue;
                out.at(i, j) += c * f.at(i, l);
            }
    return out;
}

TensorMatrix apply_slotted(const std::vector<const BlockMap*>& factors, const Tensor& slotted) {
    if (factors.empty()) throw internal_error("ShapeMismatch", "apply_slotted without factors");
    int rows = factors.front()->rows(), cols = factors.back()->cols();
    int out_deg = 0;
    std::size_t slots = 0;
    for (const BlockMap* f : factors) {
        out_deg += f->out_degree();
        slots += f->in_degree() == 0 ? 1 : std::size_t(f->in_degree());
    }
    TensorMatrix total(rows, cols, out_deg);
    for (const auto& [w, c] : slotted.terms()) {
        if (w.size() != slots) throw internal_error("SlotMismatch", "slotted word length differs from factor arity");
        TensorMatrix acc;
        bool first = true;
        std::size_t pos = 0;
        for (const BlockMap* f : factors) {
            Tensor arg;
            if (f->in_degree() == 0) {
                if (w[pos] != kUnitLetter)
                    throw internal_error("SlotMismatch", "degree-0 factor met an ordinary letter");
                arg = Tensor::unit();
                ++pos;
            } else {
                Word seg(w.begin() + long(pos), w.begin() + long(pos) + f->in_degree());
                for (Letter l : seg)
                    if (l == kUnitLetter) throw internal_error("SlotMismatch", "unit slot fed to a positive-degree factor");
                arg = Tensor(seg);
                pos += std::size_t(f->in_degree());
            }
            if (first) {
                acc = (*f)(arg);
                for (auto& e : acc.entries) e *= c;
                first = false;
            } else {
                acc = box(acc, (*f)(arg));
            }
        }
        for (std::size_t k = 0; k < total.entries.size(); ++k) total.entries[k] += acc.entries[k];
    }
    return total;
}

}  // namespace dox
