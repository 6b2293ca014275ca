#include "dox/pipeline.hpp"

#include "dox/error.hpp"

namespace dox {

namespace {

bool all_ok(const std::vector<Check>& checks) {
    for (const Check& c : checks)
        if (!c.ok) return false;
    return true;
}

Json field_name(Field f) { return f == Field::QI ? "Q(i)" : "Q"; }

}  // namespace

Session::Session(ProblemSpec spec, int degree)
    : spec_(std::move(spec)), degree_(degree >= 0 ? degree : spec_.degree) {
    a_ = std::make_unique<AlgebraCache>(spec_.pres);
}

int Session::bound() {
    if (degree_ >= 0) return std::max(degree_, 2);
    int d = 0;
    while (d < 16 && a_->koszul(d + 1).dim() != 0) ++d;
    return std::max(d + 4, 2);
}

const ASCertificate& Session::certificate() {
    if (!cert_) cert_ = as_certificate(*a_, bound());
    return *cert_;
}

const ASCertificate& Session::regular() {
    require_regular(certificate());
    return *cert_;
}

const ValidatedExtension& Session::extension() {
    if (!ext_) {
        regular();
        ExtensionInput in = spec_.ext;
        in.delta = lift_delta(*a_, in.sigma, in.delta);
        ext_ = validate_report(*a_, in);
    }
    return *ext_;
}

const ValidatedExtension& Session::valid() {
    for (const Check& c : extension().checks)
        if (!c.ok) throw validation_error(c.name, c.detail);
    return *ext_;
}

const Presentation& Session::b_presentation() {
    if (!bpres_) bpres_ = build_B(spec_.pres, valid());
    return *bpres_;
}

AlgebraCache& Session::extension_algebra() {
    if (!b_) b_ = std::make_unique<AlgebraCache>(b_presentation());
    return *b_;
}

const Quadruple& Session::quadruple(bool through_top) {
    auto& slot = through_top ? quad_top_ : quad_;
    if (!slot) slot = build_quadruple(*a_, valid(), regular().d, QuadrupleOptions{through_top, std::nullopt});
    return *slot;
}

const NakayamaReport& Session::nakayama() {
    if (!nak_) nak_ = dox::nakayama(*a_, valid(), quadruple(false), regular().omega, b_presentation());
    return *nak_;
}

const PotentialReport& Session::potential() {
    if (!pot_) pot_ = verify_potential(valid(), quadruple(false), regular().omega, nakayama().muB, b_presentation());
    return *pot_;
}

const ResolutionReport& Session::resolution() {
    if (!res_) {
        Resolution r(*a_, extension_algebra(), valid(), quadruple(true));
        res_ = verify_resolution(r, bound());
    }
    return *res_;
}

Json certificate_json(Session& s) {
    const ASCertificate& c = s.certificate();
    const Alphabet& alpha = s.spec().pres.alpha;
    Json j;
    j["d"] = c.d;
    j["bound"] = c.bound;
    j["w_dims"] = c.w_dims;
    j["a_dims"] = c.a_dims;
    if (c.w_top_ok) j["omega"] = to_json(c.omega, alpha);
    j["checks"] = to_json(std::vector<Check>{
        {"w_top", c.w_top_ok, c.w_top_ok ? "" : "dim W_d ≠ 1 or W_{d+1} ≠ 0"},
        {"palindrome", c.palindrome_ok, c.palindrome_ok ? "" : "dim W_i ≠ dim W_{d-i}"},
        {"euler", c.euler_ok, c.euler_ok ? "" : "fails in degree " + std::to_string(c.euler_fail_degree)}});
    j["scope"] = "degree-bounded certificate up to internal degree " + std::to_string(c.bound);
    j["ok"] = c.ok();
    return j;
}

Json validation_json(Session& s) {
    const ValidatedExtension& e = s.extension();
    const Alphabet& alpha = s.spec().pres.alpha;
    Json j;
    j["p12"] = to_json(e.p12());
    j["p11"] = to_json(e.p11());
    j["checks"] = to_json(e.checks);
    bool ok = all_ok(e.checks);
    if (ok) {
        j["J"] = to_json(e.J);
        j["det_sigma"] = to_json(e.U);
        Json lift = Json::array(), inv = Json::array();
        for (int g = 0; g < e.n; ++g) {
            Tensor x(Word{Letter(g)});
            lift.push_back(Json{{"generator", alpha.names[std::size_t(g)]}, {"value", to_json(e.delta()(x), alpha)}});
            inv.push_back(Json{{"generator", alpha.names[std::size_t(g)]}, {"value", to_json(e.sigma_inv_T(x), alpha)}});
        }
        j["nu_lift"] = lift;
        j["sigma_inverse_T"] = inv;
        HilbertReport h = hilbert_report(s.algebra(), s.extension_algebra(), s.bound());
        j["hilbert"] = Json{{"b_dims", h.b_dims}, {"expected", h.expected}, {"ok", h.ok}};
        ok = ok && h.ok;
    }
    j["scope"] = "invertibility of sigma is verified on V";
    j["ok"] = ok;
    return j;
}

Json quadruple_json(Session& s, const Quadruple& q) {
    const Alphabet& alpha = s.spec().pres.alpha;
    Json j;
    j["d"] = q.d;
    j["upsilon_top"] = q.upsilon_top();
    Json levels = Json::array();
    for (int i = 0; i <= q.d; ++i) {
        std::vector<Tensor> basis = i == 0 ? std::vector<Tensor>{Tensor::unit()} : s.algebra().koszul(i).basis();
        Json lv;
        lv["level"] = i;
        Json b = Json::array(), dr = Json::array(), dl = Json::array(), gr = Json::array(), gl = Json::array();
        Json ur = Json::array(), ul = Json::array(), dc = Json::array();
        for (const Tensor& w : basis) {
            b.push_back(to_json(w, alpha));
            dr.push_back(to_json(q.delta_r[std::size_t(i)](w), alpha));
            dl.push_back(to_json(q.delta_l[std::size_t(i)](w), alpha));
            gr.push_back(to_json(q.gamma_r[std::size_t(i)](w), alpha));
            gl.push_back(to_json(q.gamma_l[std::size_t(i)](w), alpha));
            if (i <= q.upsilon_top()) {
                ur.push_back(to_json(q.upsilon_r[std::size_t(i)](w), alpha));
                ul.push_back(to_json(q.upsilon_l[std::size_t(i)](w), alpha));
                dc.push_back(to_json(q.Delta[std::size_t(i)](w), alpha));
            }
        }
        lv["basis"] = b;
        lv["delta_r"] = dr;
        lv["delta_l"] = dl;
        lv["gamma_r"] = gr;
        lv["gamma_l"] = gl;
        if (i <= q.upsilon_top()) {
            lv["upsilon_r"] = ur;
            lv["upsilon_l"] = ul;
            lv["Delta"] = dc;
        }
        levels.push_back(lv);
    }
    j["levels"] = levels;
    auto checks = quadruple_identities(s.algebra(), s.valid(), q);
    j["checks"] = to_json(checks);
    j["ok"] = all_ok(checks);
    return j;
}

Json nakayama_json(Session& s) {
    const NakayamaReport& r = s.nakayama();
    const Alphabet& alpha = s.spec().pres.alpha;
    Json j;
    j["U"] = to_json(r.U);
    j["L"] = to_json(r.L);
    j["H"] = to_json(r.H);
    Json dr = Json::array(), dl = Json::array(), dv = Json::array();
    for (int t = 0; t < 2; ++t) {
        dr.push_back(to_json(r.delta_r[std::size_t(t)], alpha));
        dl.push_back(to_json(r.delta_l[std::size_t(t)], alpha));
        dv.push_back(to_json(r.div[std::size_t(t)], alpha));
    }
    j["delta_r"] = dr;
    j["delta_l"] = dl;
    j["div"] = dv;
    j["muB"] = to_json(r.muB);
    j["basis"] = s.b_presentation().alpha.names;
    j["calabi_yau"] = r.calabi_yau();
    j["checks"] = to_json(r.checks);
    j["ok"] = all_ok(r.checks);
    return j;
}

Json superpotential_json(Session& s) {
    const PotentialReport& p = s.potential();
    const Alphabet& alpha = s.b_presentation().alpha;
    Json j;
    j["d"] = p.sp.d;
    for (int k = 0; k < 3; ++k) j["omega_hat_" + std::to_string(k + 1)] = to_json(p.sp.parts[std::size_t(k)], alpha);
    j["omega_hat"] = to_json(p.sp.omega_hat, alpha);
    j["derivation_span_dim"] = p.span.dim();
    j["R_hat_dim"] = s.b_presentation().R.dim();
    j["checks"] = to_json(p.checks);
    j["ok"] = all_ok(p.checks);
    return j;
}

Json resolution_json(Session& s) {
    const ResolutionReport& r = s.resolution();
    Json j;
    j["bound"] = r.bound;
    Json pos = Json::array();
    Resolution shape(s.algebra(), s.extension_algebra(), s.valid(), s.quadruple(true));
    for (std::size_t p = 0; p < r.generators.size(); ++p) {
        Json sm = Json::array();
        const auto& ss = shape.summands(int(p));
        for (std::size_t x = 0; x < ss.size(); ++x)
            sm.push_back(Json{{"W", ss[x].i}, {"shift", ss[x].shift}, {"rank", r.generators[p][x]}});
        Json dims = Json::array();
        for (const auto& row : r.dims) dims.push_back(row[p]);
        pos.push_back(Json{{"position", p}, {"summands", sm}, {"dims", dims}});
    }
    j["positions"] = pos;
    j["checks"] = to_json(r.checks);
    j["ok"] = r.ok();
    return j;
}

Json randomized_json(Session& s, int count) {
    const ValidatedExtension& ext = s.valid();
    const Quadruple& base = s.quadruple(false);
    const NakayamaReport& nk = s.nakayama();
    const Tensor& omega = s.regular().omega;
    const Presentation& b = s.b_presentation();
    bool div_same = true, span_same = true, twisted = true, identities = true, freedom = true;
    std::string div_detail, span_detail, tw_detail, id_detail, fr_detail;
    for (int seed = 1; seed <= count; ++seed) {
        Quadruple q = build_quadruple(s.algebra(), ext, base.d, QuadrupleOptions{false, std::uint64_t(seed)});
        NakayamaReport alt;
        divergence(ext, q, omega, nk.L, alt);
        if (div_same && alt.div != nk.div) div_same = false, div_detail = "seed " + std::to_string(seed);
        PotentialReport p = verify_potential(ext, q, omega, nk.muB, b);
        if (span_same && !(p.span == b.R)) span_same = false, span_detail = "seed " + std::to_string(seed);
        if (twisted && !p.checks.front().ok) twisted = false, tw_detail = "seed " + std::to_string(seed);
        for (const Check& c : quadruple_identities(s.algebra(), ext, q))
            if (identities && !c.ok) identities = false, id_detail = "seed " + std::to_string(seed) + ": " + c.name;
        for (const Check& c : quadruple_freedom(s.algebra(), ext, base, q))
            if (freedom && !c.ok) freedom = false, fr_detail = "seed " + std::to_string(seed) + ": " + c.name;
    }
    std::vector<Check> checks{{"div_invariant", div_same, div_detail},
                              {"derivation_quotient_invariant", span_same, span_detail},
                              {"twisted_invariant", twisted, tw_detail},
                              {"identities", identities, id_detail},
                              {"freedom_in_koszul_spaces", freedom, fr_detail}};
    Json j;
    j["count"] = count;
    j["checks"] = to_json(checks);
    j["ok"] = all_ok(checks);
    return j;
}

Json error_json(const Error& e) {
    const char* cls = e.error_class() == ErrorClass::Parse        ? "parse"
                      : e.error_class() == ErrorClass::Validation ? "validation"
                                                                  : "internal";
    Json err{{"class", cls}, {"kind", e.kind()}, {"message", e.what()}};
    if (!e.witness.empty()) err["witness"] = e.witness;
    return Json{{"error", err}};
}

int exit_code_for(const Error& e) {
    switch (e.error_class()) {
        case ErrorClass::Parse: return kParseFailure;
        case ErrorClass::Validation: return kValidationFailure;
        case ErrorClass::Internal: return kInternalFailure;
    }
    return kInternalFailure;
}

Outcome run_command(const std::string& command, const ProblemSpec& spec, const RunOptions& opt) {
    Outcome out;
    Session s(spec, opt.degree);
    int randomized = opt.randomized >= 0 ? opt.randomized : spec.randomized;
    Json& doc = out.doc;
    doc["command"] = command;
    doc["input"] = Json{{"field", field_name(spec.pres.field)}, {"generators", spec.pres.alpha.names}};
    auto internal = [&](const Json& section) {
        if (!section["ok"].get<bool>()) out.exit_code = std::max(out.exit_code, int(kInternalFailure));
    };
    try {
        if (command == "analyze") {
            doc["certificate"] = certificate_json(s);
            if (!s.certificate().ok()) out.exit_code = kValidationFailure;
        } else if (command == "validate") {
            s.regular();
            doc["validation"] = validation_json(s);
            if (!doc["validation"]["ok"].get<bool>()) out.exit_code = kValidationFailure;
        } else if (command == "quadruple") {
            s.valid();
            doc["quadruple"] = quadruple_json(s, s.quadruple(false));
            internal(doc["quadruple"]);
        } else if (command == "nakayama") {
            doc["nakayama"] = nakayama_json(s);
            internal(doc["nakayama"]);
        } else if (command == "superpotential") {
            doc["superpotential"] = superpotential_json(s);
            internal(doc["superpotential"]);
        } else if (command == "resolution") {
            s.valid();
            doc["resolution"] = resolution_json(s);
            internal(doc["resolution"]);
        } else if (command == "verify") {
            doc["certificate"] = certificate_json(s);
            if (!s.certificate().ok()) {
                out.exit_code = kValidationFailure;
                doc["ok"] = false;
                return out;
            }
            doc["validation"] = validation_json(s);
            if (!doc["validation"]["ok"].get<bool>()) {
                out.exit_code = kValidationFailure;
                doc["ok"] = false;
                return out;
            }
            doc["quadruple"] = quadruple_json(s, s.quadruple(true));
            doc["nakayama"] = nakayama_json(s);
            doc["superpotential"] = superpotential_json(s);
            doc["resolution"] = resolution_json(s);
            doc["randomized"] = randomized_json(s, randomized);
            for (const char* k : {"quadruple", "nakayama", "superpotential", "resolution", "randomized"}) internal(doc[k]);
        } else {
            throw parse_error("UnknownCommand", command);
        }
    } catch (const Error& e) {
        Json err = error_json(e);
        doc["error"] = err["error"];
        out.exit_code = exit_code_for(e);
    } catch (const std::exception& e) {
        doc["error"] = Json{{"class", "internal"}, {"kind", "Exception"}, {"message", e.what()}};
        out.exit_code = kInternalFailure;
    }
    doc["ok"] = out.exit_code == kOk;
    return out;
}

}  // namespace dox
