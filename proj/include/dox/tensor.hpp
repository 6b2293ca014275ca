#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dox/scalar.hpp"

namespace dox {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Formal degree-0 slot used by the superpotential slot calculus.
inline constexpr Letter kUnitLetter = 255;

// Generator names; letters index into it. x-generators come first, then y1, y2.
struct Alphabet {
    std::vector<std::string> names;
    std::size_t size() const { return names.size(); }
    std::string word_str(const Word& w, const std::string& sep = "*") const;
};

// Sparse element of the degree-k tensor power, keyed by words in lex order.
class Tensor {
public:
    using Terms = std::map<Word, Scalar>;

    Tensor() = default;
    explicit Tensor(int degree) : degree_(degree) {}
    Tensor(const Word& w, Scalar c = Scalar(1));

    static Tensor unit() { return Tensor(Word{}); }

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const Scalar& c);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Scalar& c, Tensor a) { return a *= c; }
    friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.degree_ == b.degree_);
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    // a ⊗ b by word concatenation.
    friend Tensor tensor(const Tensor& a, const Tensor& b);

    // Slot i of the result is slot perm[i] of the input.
    Tensor permuted(const std::vector<int>& perm) const;

    std::string str(const Alphabet& alpha, const std::string& sep = "*") const;

private:
    int degree_ = 0;
    Terms terms_;
};

Tensor tensor(const Tensor& a, const Tensor& b);

// Matrix of tensors, used as the value of a BlockMap on an element.
struct TensorMatrix {
    int rows = 0, cols = 0;
    std::vector<Tensor> entries;

    TensorMatrix() = default;
    TensorMatrix(int r, int c, int degree) : rows(r), cols(c), entries(std::size_t(r * c), Tensor(degree)) {}
    Tensor& at(int i, int j) { return entries[std::size_t(i * cols + j)]; }
    const Tensor& at(int i, int j) const { return entries[std::size_t(i * cols + j)]; }
    bool is_zero() const;
    friend bool operator==(const TensorMatrix& a, const TensorMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

// (M ⊠ N)_{ij} = Σ_l M_il ⊗ N_lj.
TensorMatrix box(const TensorMatrix& m, const TensorMatrix& n);

}  // namespace dox
