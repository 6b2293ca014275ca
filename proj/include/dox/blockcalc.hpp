#pragma once

#include <map>
#include <vector>

#include "dox/linalg.hpp"
#include "dox/tensor.hpp"

namespace dox {

// Linear map between tensor powers, stored by the images of basis words.
// Words without a stored image map to zero.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(int in_deg, int out_deg) : in_(in_deg), out_(out_deg) {}

    static LinearMap identity(int letters, int degree);
    static LinearMap scalar(int letters, int degree, const Scalar& c);
    // Map defined on the RREF basis of `w`, extended by zero on the span of the
    // non-pivot unit vectors. Agrees with any extension on `w` itself.
    static LinearMap on_basis(const Subspace& w, const std::vector<Tensor>& values, int out_deg);

    int in_degree() const { return in_; }
    int out_degree() const { return out_; }
    const std::map<Word, Tensor>& images() const { return img_; }
    bool is_zero() const { return img_.empty(); }

    void set(const Word& w, Tensor t);
    Tensor operator()(const Word& w) const;
    Tensor operator()(const Tensor& t) const;

    LinearMap& operator+=(const LinearMap& o);
    LinearMap& operator*=(const Scalar& c);
    friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
    friend LinearMap operator-(LinearMap a, const LinearMap& b) {
        LinearMap nb = b;
        nb *= Scalar(-1);
        return a += nb;
    }
    friend LinearMap operator*(const Scalar& c, LinearMap a) { return a *= c; }
    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.img_ == b.img_; }

private:
    int in_ = 0, out_ = 0;
    std::map<Word, Tensor> img_;
};

// a ⊗ b acting on concatenated words.
LinearMap tensor(const LinearMap& a, const LinearMap& b);
// a ∘ b.
LinearMap compose(const LinearMap& a, const LinearMap& b);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// r×s matrix of linear maps sharing domain and codomain degrees.
class BlockMap {
public:
    BlockMap() = default;
    BlockMap(int rows, int cols, int in_deg, int out_deg);

    static BlockMap from_entries(int rows, int cols, std::vector<LinearMap> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int in_degree() const { return in_; }
    int out_degree() const { return out_; }
    LinearMap& at(int i, int j) { return entries_[std::size_t(i * cols_ + j)]; }
    const LinearMap& at(int i, int j) const { return entries_[std::size_t(i * cols_ + j)]; }
    bool is_zero() const;

    // Entrywise evaluation.
    TensorMatrix operator()(const Tensor& t) const;

    BlockMap& operator+=(const BlockMap& o);
    BlockMap& operator*=(const Scalar& c);
    friend BlockMap operator+(BlockMap a, const BlockMap& b) { return a += b; }
    friend BlockMap operator-(BlockMap a, const BlockMap& b) {
        BlockMap nb = b;
        nb *= Scalar(-1);
        return a += nb;
    }
    friend BlockMap operator*(const Scalar& c, BlockMap a) { return a *= c; }
    friend bool operator==(const BlockMap& a, const BlockMap& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    int rows_ = 0, cols_ = 0, in_ = 0, out_ = 0;
    std::vector<LinearMap> entries_;
};

// (f⊠g)_{ij} = Σ_l f_il ⊗ g_lj.
BlockMap box(const BlockMap& f, const BlockMap& g);
// (h•f)_{ij} = Σ_l h_il ∘ f_lj.
BlockMap bullet(const BlockMap& h, const BlockMap& f);
BlockMap transpose(const BlockMap& f);
// Σ_{ij} f_ij(M_ij).
Tensor underline_apply(const BlockMap& f, const TensorMatrix& m);
// X ∈ M_{r×s}(k) as the map v ↦ (x_ij v) on degree `degree`.
BlockMap scalar_action(const ScalarMatrix& x, int letters, int degree);
// (f·v)_i = Σ_l f_il(v_l) for a column v.
std::vector<Tensor> column_action(const BlockMap& f, const std::vector<Tensor>& v);
// r×r diagonal with φ on the diagonal.
BlockMap diag_power(const LinearMap& phi, int r);
// f^{⊠i} (i ≥ 1); i == 0 gives the identity matrix of degree-0 maps.
BlockMap box_power(const BlockMap& f, int i);
// 1×1 block from a single map.
BlockMap single(const LinearMap& f);

// X•f and f•X for a scalar matrix X, without materializing X as a map.
BlockMap scalar_left(const ScalarMatrix& x, const BlockMap& f);
BlockMap scalar_right(const BlockMap& f, const ScalarMatrix& x);

// Evaluates f_1 ⊠ … ⊠ f_m on a tensor whose words may contain the formal unit
// letter. A factor of input degree 0 consumes exactly one unit slot; any other
// factor consumes its input degree in ordinary letters.
TensorMatrix apply_slotted(const std::vector<const BlockMap*>& factors, const Tensor& slotted);

}  // namespace dox
