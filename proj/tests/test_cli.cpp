#include <doctest.h>

#include "support.hpp"

using namespace dox;

namespace {

std::string example_text() {
    return "field Q(i)\n"
           "gens x1 x2\n"
           "rel x2*x1 - i*x1*x2\n"
           "p12 i\n"
           "p11 0\n"
           "sigma x1 = [[0, i*x2], [-i*x2, 0]]\n"
           "sigma x2 = [[0, i*x1], [i*x1, 0]]\n"
           "nu x1 = [0, -i*x1*x2]\n"
           "nu x2 = [i*x1*x2, 0]\n";
}

Error parse_failure(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected a parse error");
    return Error(ErrorClass::Internal, "none", "");
}

}  // namespace

TEST_CASE("problem parsing") {
    ProblemSpec s = parse_problem(example_text());
    CHECK(s.pres.field == Field::QI);
    CHECK(s.pres.alpha.names == std::vector<std::string>{"x1", "x2"});
    CHECK(s.pres.R.dim() == 1);
    CHECK(s.ext.p12 == Scalar::I());
    CHECK(s.ext.p11 == Scalar(0));
    CHECK(s.ext.sigma.at(1, 0)(Word{0}) == T(s.pres.alpha, "-i*x2", 1));
    CHECK(s.ext.delta.at(1, 0)(Word{0}) == T(s.pres.alpha, "-i*x1*x2", 2));
    ProblemSpec file = load_fixture("quantum_plane.dox");
    CHECK(file.pres.R == s.pres.R);
    CHECK(file.ext.sigma == s.ext.sigma);
}

TEST_CASE("emit and parse round trip") {
    for (const std::string& f : fixtures()) {
        CAPTURE(f);
        ProblemSpec s = load_fixture(f);
        std::string text = emit_problem(s);
        ProblemSpec back = parse_problem(text);
        CHECK(back.pres.R == s.pres.R);
        CHECK(back.pres.alpha.names == s.pres.alpha.names);
        CHECK(back.ext.p12 == s.ext.p12);
        CHECK(back.ext.p11 == s.ext.p11);
        CHECK(back.ext.sigma == s.ext.sigma);
        CHECK(back.ext.delta == s.ext.delta);
        CHECK(emit_problem(back) == text);
    }
}

TEST_CASE("parse errors") {
    SUBCASE("missing '*'") {
        std::string text = example_text();
        text.replace(text.find("rel x2*x1"), 9, "rel x2 x1");
        Error e = parse_failure(text);
        CHECK(e.error_class() == ErrorClass::Parse);
        CHECK(e.kind() == "ParseError");
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    SUBCASE("i under field Q") {
        std::string text = example_text();
        text.replace(0, 10, "field Q");
        Error e = parse_failure(text);
        CHECK(e.kind() == "FieldMismatch");
    }
    SUBCASE("unknown generator") {
        std::string text = example_text();
        text.replace(text.find("nu x2"), 5, "nu x3");
        CHECK(parse_failure(text).error_class() == ErrorClass::Parse);
    }
    SUBCASE("missing p11") {
        std::string text = example_text();
        text.replace(text.find("p11 0\n"), 6, "");
        CHECK(parse_failure(text).error_class() == ErrorClass::Parse);
    }
    SUBCASE("wrong degree in sigma") {
        std::string text = example_text();
        text.replace(text.find("[[0, i*x2]"), 10, "[[0, i*x2*x1]");
        CHECK(parse_failure(text).error_class() == ErrorClass::Parse);
    }
}

TEST_CASE("scalar grammar") {
    Alphabet a{{"x1", "x2"}};
    CHECK(T(a, "1/2*x1 - 3*i*x2", 1).coeff(Word{1}) == Scalar(0, -3));
    CHECK(T(a, "(1+2*i)*x1*x2", 2).coeff(Word{0, 1}) == Scalar(1, 2));
    CHECK_THROWS_AS(parse_tensor("x1*x2", a, Field::QI, 1), Error);
    CHECK_THROWS_AS(parse_tensor("1/0*x1", a, Field::QI, 1), Error);
    CHECK_THROWS_AS(Scalar::parse("2i"), Error);
}

TEST_CASE("JSON round trip of tensors and scalars") {
    Alphabet a = hat(Alphabet{{"x1", "x2"}});
    Tensor t = T(a, "i*x1*y2 - 1/3*y1*x2 + (2-5*i)*y2*y2", 2);
    Json j = to_json(t, a);
    CHECK(tensor_from_json(j, a, 2) == t);
    Json parsed = Json::parse(j.dump());
    CHECK(tensor_from_json(parsed, a, 2) == t);
    Scalar s = Scalar::from_parts("-7/4", "3");
    CHECK(scalar_from_json(to_json(s)) == s);
    CHECK(to_json(Scalar(0, 1)) == Json{{"re", "0"}, {"im", "1"}});
}

TEST_CASE("run_command exit codes") {
    ProblemSpec ex = load_fixture("quantum_plane.dox");
    for (const char* cmd : {"analyze", "validate", "quadruple", "nakayama", "superpotential", "resolution", "verify"}) {
        CAPTURE(cmd);
        Outcome o = run_command(cmd, ex);
        CHECK(o.exit_code == kOk);
        CHECK(o.doc["ok"].get<bool>());
    }
    SUBCASE("unknown command") { CHECK(run_command("frobnicate", ex).exit_code == kParseFailure); }
    SUBCASE("p12 = 0 is rejected by validation") {
        ProblemSpec bad = ex;
        bad.ext.p12 = Scalar(0);
        Outcome o = run_command("validate", bad);
        CHECK(o.exit_code == kValidationFailure);
        Outcome v = run_command("verify", bad);
        CHECK(v.exit_code == kValidationFailure);
        bool named = false;
        for (const Json& c : v.doc["validation"]["checks"])
            if (c["name"] == "p12_nonzero") named = !c["ok"].get<bool>();
        CHECK(named);
    }
    SUBCASE("broken σ condition") {
        ProblemSpec bad = ex;
        bad.ext.p11 = Scalar(1);
        CHECK(run_command("validate", bad).exit_code == kValidationFailure);
        Outcome n = run_command("nakayama", bad);
        CHECK(n.exit_code == kValidationFailure);
        CHECK(n.doc["error"]["class"] == "validation");
    }
    SUBCASE("free algebra is not regular") {
        ProblemSpec free = parse_problem(
            "field Q\ngens x1 x2\np12 1\np11 0\nsigma x1 = [[x1, 0], [0, x1]]\nsigma x2 = [[x2, 0], [0, x2]]\n");
        CHECK(run_command("analyze", free).exit_code == kValidationFailure);
        CHECK(run_command("nakayama", free).exit_code == kValidationFailure);
    }
}

TEST_CASE("renderers") {
    Outcome o = run_command("nakayama", load_fixture("jordan_kx.dox"));
    std::string text = render_text(o.doc);
    CHECK(text.find("[ok]") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);
    std::string tex = render_latex(o.doc);
    CHECK(tex.find("pmatrix") != std::string::npos);
    CHECK(tex.find("\\begin{itemize}") != std::string::npos);
    // Deterministic output.
    CHECK(run_command("nakayama", load_fixture("jordan_kx.dox")).doc.dump() == o.doc.dump());
}
