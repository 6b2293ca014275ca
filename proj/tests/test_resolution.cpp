#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace dox;

namespace {

std::size_t dense_rank(const SparseMat& m) {
    Mat rows(m.cols, Vec(m.rows));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col[c]) rows[c][r] = v;
    return rank(rows, m.rows);
}

struct Setup {
    Session s;
    Resolution r;
    explicit Setup(const std::string& f, ResolutionOptions opt = {})
        : s(load_fixture(f)),
          r(s.algebra(), s.extension_algebra(), s.valid(), s.quadruple(true), opt) {}
};

}  // namespace

TEST_CASE("quantum plane shape") {
    Setup st("quantum_plane.dox");
    Resolution& r = st.r;
    REQUIRE(r.d() == 2);
    CHECK(r.length() == 4);
    std::vector<std::vector<std::size_t>> want{{1}, {1, 1, 2}, {1, 2, 2, 1}, {2, 1, 1}, {1}};
    for (int j = 0; j <= 4; ++j) {
        CAPTURE(j);
        std::vector<std::size_t> g = r.generator_counts(j);
        std::vector<std::size_t> nz;
        for (std::size_t x : g)
            if (x) nz.push_back(x);
        CHECK(nz == want[std::size_t(j)]);
    }
}

TEST_CASE("generators match the Koszul spaces of B") {
    for (const std::string& f : fixtures()) {
        CAPTURE(f);
        Setup st(f);
        AlgebraCache b(st.s.b_presentation());
        for (int j = 0; j <= st.r.length(); ++j) {
            std::vector<std::size_t> g = st.r.generator_counts(j);
            CHECK(std::accumulate(g.begin(), g.end(), std::size_t(0)) == b.koszul(j).dim());
        }
    }
}

TEST_CASE("every fixture resolves") {
    for (const std::string& f : fixtures()) {
        CAPTURE(f);
        Setup st(f);
        ResolutionReport rep = verify_resolution(st.r, st.r.d() + 4);
        for (const Check& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.ok);
        }
    }
}

TEST_CASE("exactness recomputed with dense ranks") {
    Setup st("quantum_plane.dox");
    Resolution& r = st.r;
    AlgebraCache& b = st.s.extension_algebra();
    for (int k = 1; k <= 5; ++k) {
        std::vector<std::size_t> rk(std::size_t(r.length() + 2), 0);
        for (int j = 1; j <= r.length(); ++j) rk[std::size_t(j)] = dense_rank(r.differential(j, k));
        CHECK(rk[1] == b.dim(k));
        for (int j = 1; j <= r.length(); ++j) CHECK(rk[std::size_t(j)] + rk[std::size_t(j + 1)] == r.dim(j, k));
    }
}

TEST_CASE("a corrupted f_1 is caught") {
    Setup st("quantum_plane.dox", ResolutionOptions{true});
    ResolutionReport rep = verify_resolution(st.r, 6);
    CHECK_FALSE(rep.ok());
    bool complex_ok = true;
    for (const Check& c : rep.checks)
        if (c.name == "complex") complex_ok = c.ok;
    CHECK_FALSE(complex_ok);
}

TEST_CASE("sparse matrix product") {
    SparseMat a(2, 2), b(2, 1);
    a.col[0][0] = Scalar(1);
    a.col[1][0] = Scalar(2);
    a.col[1][1] = Scalar(3);
    b.col[0][0] = Scalar(1);
    b.col[0][1] = Scalar(-1);
    SparseMat c = a * b;
    CHECK(c.col[0].at(0) == Scalar(-1));
    CHECK(c.col[0].at(1) == Scalar(-3));
    CHECK(a.rank() == 2);
    CHECK(dense_rank(a) == 2);
}
