#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dox/blockcalc.hpp"
#include "dox/linalg.hpp"
#include "dox/sparse.hpp"
#include "dox/tensor.hpp"

namespace dox {

enum class Field { Q, QI };

// Quadratic presentation T(V)/(R) with R inside V⊗V.
struct Presentation {
    Field field = Field::Q;
    Alphabet alpha;
    Subspace R;

    int letters() const { return int(alpha.size()); }
};

// Graded piece A_k: a transversal of standard words and the normal-form data.
struct GradedPiece {
    int degree = 0;
    std::vector<Word> transversal;
    std::map<Word, std::size_t> position;
    // Relations of degree k expressed on the basis A_{k-1} ⊗ V, index (t, x) ↦ t*N + x.
    SparseEchelon relations;
    std::vector<std::ptrdiff_t> quotient_index;  // per (t, x) column; -1 on pivots
};

// Lazily grown cache of graded pieces and Koszul spaces. Not safe to grow from
// several threads; once built to the needed degree it is only read.
class AlgebraCache {
public:
    explicit AlgebraCache(Presentation p);

    const Presentation& presentation() const { return pres_; }
    int letters() const { return pres_.letters(); }

    const GradedPiece& piece(int k);
    std::size_t dim(int k) { return piece(k).transversal.size(); }

    // Normal-form coordinates of a word (or tensor) of degree k in A_k.
    const SparseVec& project(const Word& w);
    SparseVec project(const Tensor& t);
    Tensor lift(int k, const SparseVec& coords);

    // W_i via (V⊗W_{i-1}) ∩ (W_{i-1}⊗V).
    const Subspace& koszul(int i);
    // W_i straight from the defining intersection (independent oracle path).
    Subspace koszul_direct(int i) const;
    // Σ_s V^s⊗R⊗V^{k-s-2}, dense; only for small k.
    Subspace relation_span(int k) const;

private:
    void build_piece(int k);

    Presentation pres_;
    std::deque<GradedPiece> pieces_;
    std::map<Word, SparseVec> memo_;
    std::deque<Subspace> koszul_;  // deque: references stay valid as it grows
};

struct ASCertificate {
    int d = 0;
    int bound = 0;
    std::vector<std::size_t> w_dims;  // dim W_0..W_{d+1}
    std::vector<std::size_t> a_dims;  // dim A_0..A_D
    Tensor omega;
    bool w_top_ok = false;
    bool palindrome_ok = false;
    bool euler_ok = false;
    int euler_fail_degree = -1;
    bool ok() const { return w_top_ok && palindrome_ok && euler_ok; }
};

// Degree-bounded evidence for Koszul AS-regularity; ω is scaled so its
// lexicographically greatest word has coefficient 1.
ASCertificate as_certificate(AlgebraCache& a, int bound);
void require_regular(const ASCertificate& cert);

// δ extended to V^{⊗k} by δ_i(ab) = δ_i(a)b + Σ_j σ_ij(a)δ_j(b):
// Σ_s σ^{⊠s} ⊠ δ ⊠ id^{k-s-1}. 2×1, degree k → k+1.
BlockMap derivation_extension(const BlockMap& sigma, const BlockMap& delta, int letters, int k);

// Graded homomorphism / derivation on A_k coordinates.
std::vector<SparseVec> apply_graded_hom(AlgebraCache& a, const BlockMap& sigma, int k, const SparseVec& x);
std::vector<SparseVec> apply_graded_derivation(AlgebraCache& a, const BlockMap& sigma, const BlockMap& delta, int k,
                                               const SparseVec& x);

}  // namespace dox
