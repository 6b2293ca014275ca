#include "dox/tensor.hpp"

#include "dox/error.hpp"

namespace dox {

std::string Alphabet::word_str(const Word& w, const std::string& sep) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += sep;
        if (w[k] == kUnitLetter)
            out += "1";
        else if (w[k] < names.size())
            out += names[w[k]];
        else
            out += "?" + std::to_string(int(w[k]));
    }
    return out;
}

Tensor::Tensor(const Word& w, Scalar c) : degree_(int(w.size())) {
    if (!c.is_zero()) terms_.emplace(w, std::move(c));
}

Scalar Tensor::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void Tensor::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    if (terms_.empty())
        degree_ = int(w.size());
    else if (int(w.size()) != degree_)
        throw internal_error("DegreeMismatch", "adding word of length " + std::to_string(w.size()) +
                                                   " to tensor of degree " + std::to_string(degree_));
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    if (terms_.empty() && o.terms_.empty() && degree_ == 0) degree_ = o.degree_;
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    if (terms_.empty() && o.terms_.empty() && degree_ == 0) degree_ = o.degree_;
    return *this;
}

Tensor& Tensor::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

Tensor tensor(const Tensor& a, const Tensor& b) {
    Tensor out(a.degree() + b.degree());
    Word w;
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, cu * cv);
        }
    }
    return out;
}

Tensor Tensor::permuted(const std::vector<int>& perm) const {
    if (int(perm.size()) != degree_)
        throw internal_error("DegreeMismatch", "permutation size differs from tensor degree");
    Tensor out(degree_);
    Word v(perm.size());
    for (const auto& [w, c] : terms_) {
        for (std::size_t k = 0; k < perm.size(); ++k) v[k] = w[std::size_t(perm[k])];
        out.add_term(v, c);
    }
    return out;
}

std::string Tensor::str(const Alphabet& alpha, const std::string& sep) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coef;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re) < 0;
            mpq_class a = abs(c.re);
            if (a != 1) coef = a.get_str() + " ";
        } else if (sgn(c.re) == 0) {
            negative = sgn(c.im) < 0;
            coef = Scalar(0, abs(c.im)).str() + " ";
        } else {
            coef = "(" + c.str() + ") ";
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += coef + alpha.word_str(w, sep);
        first = false;
    }
    return out;
}

bool TensorMatrix::is_zero() const {
    for (const auto& t : entries)
        if (!t.is_zero()) return false;
    return true;
}

TensorMatrix box(const TensorMatrix& m, const TensorMatrix& n) {
    if (m.cols != n.rows) throw internal_error("ShapeMismatch", "box of tensor matrices");
    int deg = (m.entries.empty() ? 0 : m.entries[0].degree()) + (n.entries.empty() ? 0 : n.entries[0].degree());
    TensorMatrix out(m.rows, n.cols, deg);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < n.cols; ++j)
            for (int l = 0; l < m.cols; ++l) {
                if (m.at(i, l).is_zero() || n.at(l, j).is_zero()) continue;
                out.at(i, j) += tensor(m.at(i, l), n.at(l, j));
            }
    return out;
}

}  // namespace dox
