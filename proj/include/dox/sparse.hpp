#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

#include "dox/scalar.hpp"

namespace dox {

using SparseVec = std::map<std::size_t, Scalar>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a*x

// Incremental row echelon form with monic leading entries and first-nonzero
// pivoting. Rows are not back-reduced; reduce() sweeps pivots left to right,
// which yields the same residual as a fully reduced basis would.
class SparseEchelon {
public:
    // Reduces v; if a nonzero remainder is left it becomes a new row.
    // Returns true when the rank grew.
    bool insert(SparseVec v);
    SparseVec reduce(SparseVec v) const;

    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::size_t col) const { return pivot_row_.count(col) != 0; }
    std::vector<std::size_t> pivots() const;

private:
    std::vector<SparseVec> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

std::size_t sparse_rank(const std::vector<SparseVec>& rows);

}  // namespace dox
