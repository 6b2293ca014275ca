#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <vector>

#include "support.hpp"

namespace oracle {

using namespace dox;

// Relations of B written out from the raw extension data.
inline std::vector<Tensor> b_relations(const ProblemSpec& s, const BlockMap& delta) {
    int n = s.pres.letters();
    std::vector<Tensor> rels = s.pres.R.basis();
    Tensor yy(Word{Letter(n + 1), Letter(n)});
    yy.add_term(Word{Letter(n), Letter(n + 1)}, -s.ext.p12);
    yy.add_term(Word{Letter(n), Letter(n)}, -s.ext.p11);
    rels.push_back(yy);
    for (int i = 0; i < 2; ++i)
        for (int x = 0; x < n; ++x) {
            Tensor r(Word{Letter(n + i), Letter(x)});
            for (int j = 0; j < 2; ++j) {
                Tensor img = s.ext.sigma.at(i, j)(Word{Letter(x)});
                for (const auto& [w, c] : img.terms()) r.add_term(Word{w[0], Letter(n + j)}, -c);
            }
            r -= delta.at(i, 0)(Word{Letter(x)});
            rels.push_back(r);
        }
    return rels;
}
inline std::vector<Tensor> b_relations(const ProblemSpec& s) { return b_relations(s, s.ext.delta); }

// dim of the degree-k part of T(V)/(rels): all words minus the rank of the
// ideal, spanned by u⊗r⊗v and reduced with a sparse echelon form.
inline std::size_t quotient_dim(int letters, const std::vector<Tensor>& rels, int k) {
    Ambient amb{letters, k};
    if (k < 2) return amb.dim();
    SparseEchelon ech;
    for (int left = 0; left + 2 <= k; ++left) {
        Ambient la{letters, left}, ra{letters, k - 2 - left};
        for (std::size_t u = 0; u < la.dim(); ++u)
            for (std::size_t v = 0; v < ra.dim(); ++v)
                for (const Tensor& r : rels) {
                    SparseVec row;
                    Word pre = la.word(u), post = ra.word(v);
                    for (const auto& [w, c] : r.terms()) {
                        Word full = pre;
                        full.insert(full.end(), w.begin(), w.end());
                        full.insert(full.end(), post.begin(), post.end());
                        row[amb.index(full)] += c;
                    }
                    std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
                    ech.insert(row);
                }
    }
    return amb.dim() - ech.rank();
}

// Reference superpotential for the quantum plane fixture (p = i).
struct Golden {
    Alphabet b;
    Tensor w1, w2, w3;

    static Tensor cat(const Alphabet& b, std::initializer_list<std::pair<const char*, int>> pieces) {
        Tensor out = Tensor::unit();
        for (const auto& [expr, deg] : pieces) out = tensor(out, T(b, expr, deg));
        return out;
    }

    explicit Golden(const Alphabet& a) : b(hat(a)) {
        const char* yy = "y2*y1 - i*y1*y2";
        const char* om = "x2*x1 - i*x1*x2";
        w1 = cat(b, {{yy, 2}, {om, 2}}) - cat(b, {{"y2", 1}, {"x2*y2*x2 + i*x1*y2*x1", 3}}) -
             cat(b, {{"y1", 1}, {"x1*y1*x1 + i*x2*y1*x2", 3}}) + cat(b, {{"y1", 1}, {"i*x1*x2 - x2*x1", 2}, {"y2", 1}}) +
             cat(b, {{"y2", 1}, {"i*x2*x1 + x1*x2", 2}, {"y1", 1}}) + cat(b, {{"i*x2", 1}, {yy, 2}, {"x1", 1}}) -
             cat(b, {{"x1", 1}, {yy, 2}, {"x2", 1}}) + cat(b, {{"x2", 1}, {"i*y1*x2*y1 + y2*x2*y2", 3}}) +
             cat(b, {{"x1", 1}, {"y1*x1*y1 + i*y2*x1*y2", 3}}) + cat(b, {{om, 2}, {yy, 2}});
        w2 = T(b,
               "-i*y2*x1*x2*x1 - y1*x2*x1*x2 + x2*y1*x2*x1 + i*x1*y2*x1*x2"
               " - x1*x2*y1*x2 - i*x2*x1*y2*x1 + x2*x1*x2*y1 + i*x1*x2*x1*y2",
               4);
        w3 = T(b, "i*x1*x2*x1*x2 - i*x2*x1*x2*x1", 4);
    }
};

}  // namespace oracle
