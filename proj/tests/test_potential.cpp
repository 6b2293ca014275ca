#include <doctest.h>

#include "oracles.hpp"

using namespace dox;

using oracle::Golden;
using oracle::b_relations;

TEST_CASE("quantum plane superpotential matches its reference value") {
    Session s(load_fixture("quantum_plane.dox"));
    Golden g(s.spec().pres.alpha);
    const Superpotential& sp = s.potential().sp;
    CHECK(sp.parts[0] == g.w1);
    CHECK(sp.parts[1] == g.w2);
    CHECK(sp.parts[2] == g.w3);
    CHECK(sp.omega_hat == g.w1 + g.w2 + g.w3);
    for (const Check& c : s.potential().checks) {
        CAPTURE(c.name);
        CHECK(c.ok);
    }
}

TEST_CASE("ω̂ lies in the top Koszul space of B") {
    for (const std::string& f : fixtures()) {
        CAPTURE(f);
        Session s(load_fixture(f));
        const Tensor& w = s.potential().sp.omega_hat;
        int d = s.regular().d;
        CHECK_FALSE(w.is_zero());
        // Oracle: the Koszul space of B built from its own presentation.
        AlgebraCache b(s.b_presentation());
        CHECK(b.koszul(d + 2).dim() == 1);
        CHECK(b.koszul(d + 2).contains(w));
        CHECK(b.koszul(d + 3).dim() == 0);
    }
}

TEST_CASE("derivation quotient recovers the relations of B") {
    ProblemSpec spec = load_fixture("quantum_plane.dox");
    Session s(spec);
    Subspace rhat = Subspace::span(Ambient{4, 2}, b_relations(spec));
    CHECK(rhat.dim() == 6);
    CHECK(s.potential().span.dim() == 6);
    CHECK(s.potential().span == rhat);
}

TEST_CASE("fault injection") {
    Session s(load_fixture("quantum_plane.dox"));
    const Tensor& omega = s.regular().omega;
    SUBCASE("wrong twist") {
        ScalarMatrix m = mat_identity(4);
        m[2][2] = Scalar(2);
        PotentialReport r = verify_potential(s.valid(), s.quadruple(false), omega, m, s.b_presentation());
        CHECK_FALSE(r.checks[0].ok);
        CHECK(r.checks[0].name == "twisted");
    }
    SUBCASE("corrupted υ_{1,r}") {
        Quadruple q = s.quadruple(false);
        Alphabet al = s.spec().pres.alpha;
        q.upsilon_r[1].set(Word{1}, q.upsilon_r[1](Word{1}) + T(al, "x1*x1*x1", 3));
        PotentialReport r = verify_potential(s.valid(), q, omega, s.nakayama().muB, s.b_presentation());
        CHECK(r.sp.parts[2] != s.potential().sp.parts[2]);
        bool any_failed = false;
        for (const Check& c : r.checks) any_failed |= !c.ok;
        CHECK(any_failed);
    }
    SUBCASE("perturbed ω̂ leaves Ŵ") {
        Alphabet b = hat(s.spec().pres.alpha);
        Tensor bad = s.potential().sp.omega_hat + T(b, "y1*y1*y1*y1", 4);
        CHECK_FALSE(in_koszul_top(bad, s.b_presentation().R));
        CHECK_FALSE(twisted_residual(bad, s.nakayama().muB, 2).is_zero());
    }
}

TEST_CASE("slice membership helpers") {
    Alphabet a{{"x1", "x2"}};
    Subspace r = Subspace::span(Ambient{2, 2}, {T(a, "x2*x1 - i*x1*x2", 2)});
    Tensor t = tensor(T(a, "x2*x1 - i*x1*x2", 2), T(a, "x1 + x2", 1));
    CHECK(in_padded(t, r, 0));
    CHECK_FALSE(in_padded(t, r, 1));
    CHECK_FALSE(in_koszul_top(t, r));
    CHECK(derivation_span(tensor(T(a, "x2*x1 - i*x1*x2", 2), T(a, "x1", 1)), 2) == r);
}
