#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dox/scalar.hpp"
#include "dox/tensor.hpp"

namespace dox {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major, each row a Vec

// In-place reduced row echelon form with first-nonzero pivoting.
// Zero rows are dropped; returns the pivot column of each remaining row.
std::vector<int> rref(Mat& rows, std::size_t ncols);

std::size_t rank(Mat rows, std::size_t ncols);
Mat mat_mul(const Mat& a, const Mat& b, std::size_t inner, std::size_t bcols);
bool mat_is_zero(const Mat& a);

// Solves Σ_j x_j cols[j] = rhs; free unknowns (in column order) are zero.
std::optional<Vec> solve_columns(const std::vector<Vec>& cols, const Vec& rhs);

// Coordinate space of words of a fixed length over a fixed alphabet size;
// word index = base-N numeral, so index order is lexicographic word order.
struct Ambient {
    int letters = 0;
    int degree = 0;

    std::size_t dim() const;
    std::size_t index(const Word& w) const;
    Word word(std::size_t idx) const;
    Vec to_vec(const Tensor& t) const;
    Tensor to_tensor(const Vec& v) const;
    friend bool operator==(const Ambient& a, const Ambient& b) {
        return a.letters == b.letters && a.degree == b.degree;
    }
};

// Subspace of an Ambient in canonical RREF form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Ambient amb) : amb_(amb) {}

    static Subspace span(Ambient amb, const std::vector<Tensor>& gens);
    static Subspace from_rows(Ambient amb, Mat rows);
    static Subspace full(Ambient amb);

    const Ambient& ambient() const { return amb_; }
    std::size_t dim() const { return rows_.size(); }
    const Mat& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    Word pivot_word(std::size_t k) const { return amb_.word(std::size_t(pivots_[k])); }
    Tensor basis_tensor(std::size_t k) const { return amb_.to_tensor(rows_[k]); }
    std::vector<Tensor> basis() const;

    // v minus its projection along the pivot columns; zero iff v lies in the space.
    Vec residual(Vec v) const;
    Tensor residual(const Tensor& t) const;
    bool contains(const Tensor& t) const;
    // Coordinates of t in the RREF basis (valid when contains(t)).
    Vec coordinates(const Tensor& t) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.amb_ == b.amb_ && a.rows_ == b.rows_;
    }

private:
    Ambient amb_;
    Mat rows_;
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Empty list means the full space of `amb`.
Subspace intersect(const std::vector<Subspace>& spaces, Ambient amb);

// V^{⊗left} ⊗ S ⊗ V^{⊗right} inside the matching ambient.
Subspace pad(const Subspace& s, int left, int right);

// Returns x in `constraint` with target - x in `congruence`; throws NoSolution.
// Free coordinates of x in the RREF basis of `constraint` are zero.
Tensor solve_affine(const Tensor& target, const Subspace& congruence, const Subspace& constraint);

// τ_d^i: moves slot 1 to slot i+1, shifting slots 2..i+1 one step left.
Tensor tau_apply(int d, int i, const Tensor& t);

}  // namespace dox
