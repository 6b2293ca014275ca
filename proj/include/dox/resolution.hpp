#pragma once

#include <string>
#include <vector>

#include "dox/quadruple.hpp"
#include "dox/sparse.hpp"

namespace dox {

// Column-sparse matrix: col[c] maps row index to entry.
struct SparseMat {
    std::size_t rows = 0, cols = 0;
    std::vector<SparseVec> col;

    SparseMat() = default;
    SparseMat(std::size_t r, std::size_t c) : rows(r), cols(c), col(c) {}
    bool is_zero() const;
    std::size_t rank() const;
    SparseMat& operator+=(const SparseMat& o);
    friend SparseMat operator+(SparseMat a, const SparseMat& b) { return a += b; }
    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
    }
};
SparseMat operator*(const SparseMat& a, const SparseMat& b);

// Right B-module map W_src ⊗ B(-src_shift) → W_tgt ⊗ B(-tgt_shift), given by
// the images of the W_src basis in W_tgt ⊗ V̂^{⊗e}; multiplication into B
// acts on the trailing e letters.
struct FreeMap {
    int src_i = 0, src_shift = 0;
    int tgt_i = 0, tgt_shift = 0;
    std::vector<Tensor> images;  // one per RREF basis vector of W_src
};

// One free summand W_i ⊗ B(-shift).
struct Summand {
    int i = 0;
    int shift = 0;
};

struct ResolutionOptions {
    // Fault injection: perturb one coefficient of f_1.
    bool corrupt_f1 = false;
};

// The building blocks f_i, g_i, h_i, ∂_i and their σ ⊠ λ_Y parts.
struct ChainMaps {
    std::vector<FreeMap> f[2], g[2], f0[2], g0[2];  // per copy, levels 0..d
    std::vector<FreeMap> h;                         // levels 0..d
};

class Resolution {
public:
    // Needs δ_{i,r}, Γ_{i,l} through d and υ_{i,r} through d.
    Resolution(AlgebraCache& a, AlgebraCache& b, const ValidatedExtension& ext, const Quadruple& q,
               const ResolutionOptions& opt = {});

    int d() const { return d_; }
    int length() const { return d_ + 2; }
    const std::vector<Summand>& summands(int j) const { return pos_[std::size_t(j)]; }
    // Number of free generators per summand at position j.
    std::vector<std::size_t> generator_counts(int j) const;
    std::size_t dim(int j, int k);
    // d_j : F_j → F_{j-1} in internal degree k (1 ≤ j ≤ d+2).
    SparseMat differential(int j, int k);

    SparseMat materialize(const FreeMap& m, int k);
    FreeMap partial(int i, int shift) const;  // ∂_i
    const ChainMaps& maps() const { return maps_; }

private:
    std::size_t block_dim(const Summand& s, int k);

    AlgebraCache& a_;
    AlgebraCache& b_;
    int n_ = 0, d_ = 0;
    std::vector<std::vector<Summand>> pos_;
    ChainMaps maps_;
};

struct ResolutionReport {
    int bound = 0;
    std::vector<std::vector<std::size_t>> generators;  // per position
    std::vector<std::vector<std::size_t>> dims;        // [k][j]
    std::vector<Check> checks;
    bool ok() const;
};

ResolutionReport verify_resolution(Resolution& r, int bound);

}  // namespace dox
