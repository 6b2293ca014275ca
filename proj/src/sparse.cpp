#include "dox/sparse.hpp"

#include <algorithm>

namespace dox {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero()) return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto pr = pivot_row_.find(it->first);
        if (pr == pivot_row_.end()) {
            ++it;
            continue;
        }
        std::size_t col = it->first;
        Scalar f = -it->second;
        axpy(v, f, rows_[pr->second]);
        it = v.upper_bound(col);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar inv = v.begin()->second.inverse();
    if (!inv.is_one())
        for (auto& [k, x] : v) x *= inv;
    pivot_row_.emplace(v.begin()->first, rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

std::vector<std::size_t> SparseEchelon::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(pivot_row_.size());
    for (const auto& [c, r] : pivot_row_) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t sparse_rank(const std::vector<SparseVec>& rows) {
    SparseEchelon e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace dox
