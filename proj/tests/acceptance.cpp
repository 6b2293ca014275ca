// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "oracles.hpp"

using namespace dox;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

bool all_ok(const std::vector<Check>& cs, std::string* first = nullptr) {
    for (const Check& c : cs)
        if (!c.ok) {
            if (first) *first = c.name + (c.detail.empty() ? "" : ": " + c.detail);
            return false;
        }
    return true;
}

ScalarMatrix diag(std::vector<Scalar> d) {
    ScalarMatrix m(d.size(), std::vector<Scalar>(d.size()));
    for (std::size_t k = 0; k < d.size(); ++k) m[k][k] = d[k];
    return m;
}

const Scalar I = Scalar::I();

Result quantum_plane_pipeline() {
    Result r;
    auto t0 = Clock::now();
    Session s(load_fixture("quantum_plane.dox"));
    const Alphabet& al = s.spec().pres.alpha;
    const ValidatedExtension& e = s.valid();
    const NakayamaReport& nk = s.nakayama();
    double t = seconds_since(t0);
    r.require(e.det_sigma(T(al, "x1", 1)) == T(al, "-i*x1", 1), "det σ(x1)");
    r.require(e.det_sigma(T(al, "x2", 1)) == T(al, "i*x2", 1), "det σ(x2)");
    r.require(nk.H == diag({I, -I}), "hdet");
    r.require(nk.L == diag({-I, I}), "μ_A");
    r.require(nk.delta_r == std::vector<Tensor>{Tensor(1), T(al, "-i*x2", 1)}, "δ_r");
    r.require(nk.delta_l == std::vector<Tensor>{T(al, "i*x1", 1), Tensor(1)}, "δ_l");
    r.require(nk.div[0].is_zero() && nk.div[1].is_zero(), "div");
    r.require(nk.muB == mat_identity(4), "μ_B");
    r.require(t < 1.0, "runtime " + secs(t));
    r.note = r.ok ? secs(t) : r.note;
    return r;
}

Result golden_superpotential() {
    Result r;
    auto t0 = Clock::now();
    Session s(load_fixture("quantum_plane.dox"));
    const Superpotential& sp = s.potential().sp;
    double t = seconds_since(t0);
    oracle::Golden g(s.spec().pres.alpha);
    r.require(sp.parts[0] == g.w1, "ω̂_1");
    r.require(sp.parts[1] == g.w2, "ω̂_2");
    r.require(sp.parts[2] == g.w3, "ω̂_3");
    r.require(t < 1.0, "runtime " + secs(t));
    r.note = r.ok ? secs(t) : r.note;
    return r;
}

Result twisted_everywhere() {
    Result r;
    for (const std::string& f : fixtures()) {
        Session s(load_fixture(f));
        r.require(twisted_residual(s.potential().sp.omega_hat, s.nakayama().muB, s.regular().d).is_zero(), f);
    }
    return r;
}

Result derivation_quotient() {
    Result r;
    for (const std::string& f : fixtures()) {
        ProblemSpec spec = load_fixture(f);
        Session s(spec);
        const Presentation& b = s.b_presentation();
        Subspace rhat = Subspace::span(Ambient{b.letters(), 2}, oracle::b_relations(spec, s.valid().delta()));
        r.require(s.potential().span == rhat, f);
        if (f == "quantum_plane.dox") r.require(rhat.dim() == 6, "dim R̂ for quantum plane");
    }
    return r;
}

Result resolution_checks() {
    Result r;
    auto t0 = Clock::now();
    Session s(load_fixture("quantum_plane.dox"));
    Resolution res(s.algebra(), s.extension_algebra(), s.valid(), s.quadruple(true));
    ResolutionReport rep = verify_resolution(res, 6);
    double t = seconds_since(t0);
    for (const Check& c : rep.checks)
        for (const char* want : {"complex", "exact", "augmentation", "minimal", "homotopy"})
            if (c.name == want) r.require(c.ok, c.name + ": " + c.detail);
    r.require(t < 10.0, "runtime " + secs(t));
    r.note = r.ok ? secs(t) : r.note;
    return r;
}

Result divergence_invariance() {
    Result r;
    for (const char* f : {"quantum_plane.dox", "poly3_nu.dox"}) {
        Session s(load_fixture(f));
        const Quadruple& base = s.quadruple(false);
        r.require(f != std::string("poly3_nu.dox") || base.d == 3, "poly3_nu has d = 3");
        const NakayamaReport& nk = s.nakayama();
        int moved = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            Quadruple q = build_quadruple(s.algebra(), s.valid(), base.d, QuadrupleOptions{false, seed});
            bool differs = !(q.delta == base.delta);
            for (int i = 2; i <= base.d; ++i)
                for (const Tensor& w : s.algebra().koszul(i).basis())
                    if (q.delta_r[std::size_t(i)](w) != base.delta_r[std::size_t(i)](w)) differs = true;
            moved += differs;
            NakayamaReport alt;
            divergence(s.valid(), q, s.regular().omega, nk.L, alt);
            r.require(alt.div == nk.div, std::string(f) + " seed " + std::to_string(seed));
        }
        r.require(moved >= 20, std::string(f) + ": only " + std::to_string(moved) + " perturbed quadruples");
    }
    return r;
}

Result trimmed_reduction() {
    Result r;
    for (const char* f : {"trimmed_kx.dox", "quantum_plane_trimmed.dox", "poly3_trimmed.dox"}) {
        Session s(load_fixture(f));
        const Quadruple& q = s.quadruple(true);
        AlgebraCache& a = s.algebra();
        auto zero_on = [&](int i, auto&& fn) {
            for (const Tensor& w : a.koszul(i).basis())
                if (!fn(w).is_zero()) return false;
            return true;
        };
        for (int i = 0; i <= q.d; ++i) {
            std::string lv = std::string(f) + " level " + std::to_string(i);
            r.require(zero_on(i, q.delta_r[std::size_t(i)]) && zero_on(i, q.delta_l[std::size_t(i)]), lv + " δ");
            r.require(zero_on(i, q.gamma_r[std::size_t(i)]) && zero_on(i, q.gamma_l[std::size_t(i)]), lv + " Γ");
            if (i <= q.upsilon_top()) {
                r.require(zero_on(i, q.Delta[std::size_t(i)]), lv + " Δ");
                r.require(zero_on(i, q.upsilon_r[std::size_t(i)]) && zero_on(i, q.upsilon_l[std::size_t(i)]), lv + " υ");
            }
        }
        const NakayamaReport& nk = s.nakayama();
        r.require(nk.div[0].is_zero() && nk.div[1].is_zero(), std::string(f) + " div");
        // Y block: −(J^T)^{-1}J·hdet.
        ScalarMatrix K = mat_product(mat_inverse(mat_transpose(s.valid().J)), s.valid().J);
        ScalarMatrix KH = mat_product(K, nk.H);
        int n = s.valid().n;
        for (int a2 = 0; a2 < 2; ++a2) {
            for (int b2 = 0; b2 < 2; ++b2)
                r.require(nk.muB[std::size_t(n + a2)][std::size_t(n + b2)] == -KH[std::size_t(a2)][std::size_t(b2)],
                          std::string(f) + " Y block");
            for (int x = 0; x < n; ++x)
                r.require(nk.muB[std::size_t(n + a2)][std::size_t(x)].is_zero(), std::string(f) + " Y row has x terms");
        }
    }
    Session kx(load_fixture("trimmed_kx.dox"));
    r.require(kx.nakayama().muB == mat_identity(3), "trimmed k[x] μ_B ≠ identity");
    return r;
}

Result hilbert_freeness() {
    Result r;
    for (const std::string& f : fixtures()) {
        ProblemSpec spec = load_fixture(f);
        Session s(spec, 6);
        HilbertReport h = hilbert_report(s.algebra(), s.extension_algebra(), 6);
        r.require(h.ok, f + " library report");
        AlgebraCache a(spec.pres);
        std::vector<Tensor> rels = oracle::b_relations(spec, s.valid().delta());
        for (int k = 0; k <= 6; ++k) {
            std::size_t expect = 0;
            for (int j = 0; j <= k; ++j) expect += oracle::quotient_dim(spec.pres.letters(), spec.pres.R.basis(), j) * std::size_t(k - j + 1);
            std::size_t got = oracle::quotient_dim(spec.pres.letters() + 2, rels, k);
            r.require(got == expect && got == h.b_dims[std::size_t(k)], f + " degree " + std::to_string(k));
        }
    }
    return r;
}

Result calculus_identities() {
    Result r;
    for (const std::string& f : fixtures()) {
        Session s(load_fixture(f));
        std::string bad;
        const Quadruple& q = s.quadruple(true);
        bool ok = all_ok(quadruple_identities(s.algebra(), s.valid(), q), &bad);
        r.require(ok, f + " " + bad);
        bool det4 = false;
        for (const Check& c : quadruple_identities(s.algebra(), s.valid(), q))
            if (c.name == "det_power[4]") det4 = true;
        r.require(det4, f + " det power up to 4 not checked");
    }
    return r;
}

Result determinism() {
    Result r;
    ProblemSpec spec = load_fixture("quantum_plane.dox");
    RunOptions opt;
    opt.randomized = 3;
    std::string a = run_command("verify", spec, opt).doc.dump(2);
    std::string b = run_command("verify", spec, opt).doc.dump(2);
    r.require(a == b, "verify JSON differs between runs");
    return r;
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* name;
        std::function<Result()> run;
    };
    std::vector<Item> items{{1, "quantum_plane_pipeline", quantum_plane_pipeline},
                            {2, "superpotential_golden", golden_superpotential},
                            {3, "superpotential_twisted", twisted_everywhere},
                            {4, "derivation_quotient", derivation_quotient},
                            {5, "resolution", resolution_checks},
                            {6, "divergence_invariance", divergence_invariance},
                            {7, "trimmed_reduction", trimmed_reduction},
                            {8, "hilbert_freeness", hilbert_freeness},
                            {9, "calculus_identities", calculus_identities},
                            {10, "determinism", determinism}};
    int failed = 0;
    for (const Item& it : items) {
        Result res;
        try {
            res = it.run();
        } catch (const std::exception& e) {
            res.ok = false;
            res.note = std::string("exception: ") + e.what();
        }
        failed += !res.ok;
        std::printf("criterion %2d %-24s %s%s%s\n", it.id, it.name, res.ok ? "PASS" : "FAIL",
                    res.note.empty() ? "" : "  ", res.note.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
