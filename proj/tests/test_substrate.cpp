#include <doctest.h>

#include <random>

#include "dox/blockcalc.hpp"
#include "dox/linalg.hpp"
#include "dox/qalgebra.hpp"
#include "support.hpp"

using namespace dox;

namespace {

Alphabet xs(int n) {
    Alphabet a;
    for (int k = 1; k <= n; ++k) a.names.push_back("x" + std::to_string(k));
    return a;
}

Tensor random_tensor(std::mt19937_64& rng, int letters, int degree, int terms) {
    std::uniform_int_distribution<int> letter(0, letters - 1), coef(-3, 3);
    Tensor t(degree);
    for (int k = 0; k < terms; ++k) {
        Word w;
        for (int s = 0; s < degree; ++s) w.push_back(Letter(letter(rng)));
        t.add_term(w, Scalar(coef(rng)));
    }
    return t;
}

Presentation commutative3() {
    Alphabet a = xs(3);
    std::vector<Tensor> rels{T(a, "x1*x2 - x2*x1", 2), T(a, "x1*x3 - x3*x1", 2), T(a, "x2*x3 - x3*x2", 2)};
    return Presentation{Field::Q, a, Subspace::span(Ambient{3, 2}, rels)};
}

Presentation quantum_plane() {
    Alphabet a = xs(2);
    return Presentation{Field::QI, a, Subspace::span(Ambient{2, 2}, {T(a, "x2*x1 - i*x1*x2", 2)})};
}

}  // namespace

TEST_CASE("scalar arithmetic and grammar round trip") {
    Scalar a = Scalar::from_parts("1/2", "-3");
    CHECK(a * a.inverse() == Scalar(1));
    for (const char* s : {"3", "-1/2", "i", "-2*i", "1/2+3*i", "1-i"}) CHECK(Scalar::parse(s).str() == s);
    CHECK(Scalar::I() * Scalar::I() == Scalar(-1));
}

TEST_CASE("tau flips") {
    Tensor t(Word{0, 1, 2});
    CHECK(tau_apply(3, 0, t) == t);
    CHECK(tau_apply(3, 2, t) == Tensor(Word{1, 2, 0}));
    CHECK(tau_apply(2, 1, Tensor(Word{0, 1})) == Tensor(Word{1, 0}));
    CHECK_THROWS(tau_apply(3, 3, t));
}

TEST_CASE("tau is the composite of adjacent flips and is invertible") {
    std::mt19937_64 rng(7);
    for (int d = 2; d <= 5; ++d) {
        Tensor t = random_tensor(rng, 3, d, 6);
        // Oracle: apply the single flips one after another.
        Tensor step = t;
        for (int i = 1; i <= d - 1; ++i) {
            Tensor next(d);
            for (const auto& [w, c] : step.terms()) {
                Word v = w;
                std::swap(v[std::size_t(i - 1)], v[std::size_t(i)]);
                next.add_term(v, c);
            }
            step = next;
            CHECK(tau_apply(d, i, t) == step);
        }
        Tensor back = tau_apply(d, d - 1, t);
        for (int k = 1; k < d; ++k) back = tau_apply(d, d - 1, back);
        CHECK(back == t);  // a d-cycle has order d
    }
}

TEST_CASE("rref canonical form") {
    std::mt19937_64 rng(11);
    Ambient amb{3, 2};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Tensor> g;
        for (int k = 0; k < 4; ++k) g.push_back(random_tensor(rng, 3, 2, 3));
        Subspace s = Subspace::span(amb, g);
        CHECK(Subspace::from_rows(amb, s.rows()) == s);
        for (std::size_t k = 1; k < s.pivots().size(); ++k) CHECK(s.pivots()[k - 1] < s.pivots()[k]);
        // Shuffled generators give the same canonical subspace.
        std::shuffle(g.begin(), g.end(), rng);
        CHECK(Subspace::span(amb, g) == s);
    }
}

TEST_CASE("dim(S ∩ T) + dim(S + T) = dim S + dim T") {
    std::mt19937_64 rng(3);
    Ambient amb{2, 3};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Tensor> a, b;
        for (int k = 0; k < 4; ++k) a.push_back(random_tensor(rng, 2, 3, 2));
        for (int k = 0; k < 5; ++k) b.push_back(random_tensor(rng, 2, 3, 2));
        Subspace s = Subspace::span(amb, a), t = Subspace::span(amb, b);
        CHECK(intersect(s, t).dim() + sum(s, t).dim() == s.dim() + t.dim());
    }
}

TEST_CASE("solve_affine") {
    Alphabet a = xs(3);
    SUBCASE("identity case") {
        Tensor x = T(a, "x1*x2", 2);
        Subspace zero(Ambient{3, 2});
        CHECK(solve_affine(x, zero, Subspace::span(Ambient{3, 2}, {x})) == x);
    }
    SUBCASE("no solution outside constraint + congruence") {
        Ambient amb{3, 1};
        Subspace cons = Subspace::span(amb, {T(a, "x1", 1)}), cong = Subspace::span(amb, {T(a, "x2", 1)});
        Tensor target = T(a, "x3", 1);
        // Oracle: target raises the rank of constraint + congruence.
        CHECK(sum(cons, cong).dim() == 2);
        CHECK(sum(sum(cons, cong), Subspace::span(amb, {target})).dim() == 3);
        CHECK_THROWS_AS(solve_affine(target, cong, cons), Error);
    }
    SUBCASE("returned x satisfies membership and congruence") {
        std::mt19937_64 rng(5);
        Ambient amb{2, 2};
        for (int trial = 0; trial < 10; ++trial) {
            Subspace cons = Subspace::span(amb, {random_tensor(rng, 2, 2, 2), random_tensor(rng, 2, 2, 2)});
            Subspace cong = Subspace::span(amb, {random_tensor(rng, 2, 2, 2)});
            Tensor x0 = random_tensor(rng, 2, 2, 0);
            for (const Tensor& b : cons.basis()) x0 += b;
            Tensor target = x0;
            for (const Tensor& b : cong.basis()) target += Scalar(2) * b;
            Tensor x = solve_affine(target, cong, cons);
            CHECK(cons.contains(x));
            CHECK(cong.contains(target - x));
        }
    }
}

TEST_CASE("Koszul spaces") {
    SUBCASE("quantum plane") {
        AlgebraCache a(quantum_plane());
        CHECK(a.dim(0) == 1);
        CHECK(a.dim(2) == 3);
        CHECK(a.dim(3) == 4);
        CHECK(a.koszul(2) == a.presentation().R);
        CHECK(a.koszul(3).dim() == 0);
        // Oracle: the defining intersection computed independently.
        CHECK(intersect(pad(a.presentation().R, 0, 1), pad(a.presentation().R, 1, 0)).dim() == 0);
    }
    SUBCASE("commutative polynomial ring in three variables") {
        AlgebraCache a(commutative3());
        std::vector<std::size_t> dims;
        for (int i = 0; i <= 4; ++i) {
            dims.push_back(a.koszul(i).dim());
            CHECK(a.koszul(i) == a.koszul_direct(i));
        }
        CHECK(dims == std::vector<std::size_t>{1, 3, 3, 1, 0});
        Tensor anti = T(xs(3), "x1*x2*x3 - x1*x3*x2 - x2*x1*x3 + x2*x3*x1 + x3*x1*x2 - x3*x2*x1", 3);
        CHECK(a.koszul(3).contains(anti));
        for (int k = 0; k <= 5; ++k) CHECK(a.dim(k) == std::size_t((k + 1) * (k + 2) / 2));
    }
    SUBCASE("W_{i+1} = (V⊗W_i) ∩ (W_i⊗V) for i ≥ 2") {
        AlgebraCache a(commutative3());
        for (int i = 2; i <= 3; ++i)
            CHECK(a.koszul(i + 1) == intersect(pad(a.koszul(i), 1, 0), pad(a.koszul(i), 0, 1)));
    }
}

TEST_CASE("graded pieces agree with the dense relation span") {
    AlgebraCache a(commutative3());
    for (int k = 2; k <= 4; ++k) {
        std::size_t nk = 1;
        for (int s = 0; s < k; ++s) nk *= 3;
        CHECK(a.dim(k) + a.relation_span(k).dim() == nk);
    }
}

TEST_CASE("AS certificates") {
    SUBCASE("quantum plane") {
        AlgebraCache a(quantum_plane());
        ASCertificate c = as_certificate(a, 6);
        CHECK(c.ok());
        CHECK(c.d == 2);
        // ω = x2⊗x1 − i x1⊗x2, lex-greatest word x2x1 has coefficient 1.
        CHECK(c.omega == T(xs(2), "x2*x1 - i*x1*x2", 2));
    }
    SUBCASE("commutative k[x1,x2,x3], D = 7") {
        AlgebraCache a(commutative3());
        ASCertificate c = as_certificate(a, 7);
        CHECK(c.ok());
        CHECK(c.d == 3);
        // Oracle: Euler sums recomputed from the dimensions.
        for (int k = 1; k <= 7; ++k) {
            long s = 0;
            for (int i = 0; i <= std::min(k, 3); ++i)
                s += (i % 2 ? -1 : 1) * long(c.w_dims[std::size_t(i)] * c.a_dims[std::size_t(k - i)]);
            CHECK(s == 0);
        }
    }
    SUBCASE("free algebra on two generators is flagged") {
        Presentation p{Field::Q, xs(2), Subspace(Ambient{2, 2})};
        AlgebraCache a(p);
        ASCertificate c = as_certificate(a, 4);
        CHECK(c.d == 1);
        CHECK(a.dim(2) == 4);
        CHECK_FALSE(c.w_top_ok);
        CHECK_FALSE(c.ok());
        CHECK_THROWS_AS(require_regular(c), Error);
    }
}

TEST_CASE("graded homomorphism and derivation on A") {
    ProblemSpec s = load_fixture("quantum_plane.dox");
    AlgebraCache a(s.pres);
    const Alphabet& al = s.pres.alpha;
    SparseVec x1 = a.project(Word{0});
    auto m = apply_graded_hom(a, s.ext.sigma, 1, x1);
    CHECK(a.lift(1, m[0]).is_zero());
    CHECK(a.lift(1, m[1]) == T(al, "i*x2", 1));
    CHECK(a.lift(1, m[2]) == T(al, "-i*x2", 1));
    CHECK(a.lift(1, m[3]).is_zero());
    // δ on x1x1, expanded by hand with δ_i(ab) = δ_i(a)b + Σ_j σ_ij(a)δ_j(b):
    // δ_1 = σ_12(x1)δ_2(x1) = x2x1x2, δ_2 = δ_2(x1)x1 = -i x1x2x1.
    auto dv = apply_graded_derivation(a, s.ext.sigma, s.ext.delta, 2, a.project(Word{0, 0}));
    CHECK(dv[0] == a.project(T(al, "x2*x1*x2", 3)));
    CHECK(dv[1] == a.project(T(al, "-i*x1*x2*x1", 3)));
    CHECK(a.lift(3, dv[1]) == T(al, "-x2*x1*x1", 3));  // normal words avoid x1x2
    CHECK(apply_graded_derivation(a, s.ext.sigma, s.ext.delta, 0, a.project(Word{}))[0].empty());
}
