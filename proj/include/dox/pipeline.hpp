#pragma once

#include <memory>
#include <optional>
#include <string>

#include "dox/error.hpp"
#include "dox/nakayama.hpp"
#include "dox/potential.hpp"
#include "dox/problem.hpp"
#include "dox/report.hpp"
#include "dox/resolution.hpp"

namespace dox {

enum ExitCode { kOk = 0, kValidationFailure = 1, kParseFailure = 2, kInternalFailure = 3 };

// Stages are computed on demand and cached; later stages pull earlier ones.
class Session {
public:
    explicit Session(ProblemSpec spec, int degree = -1);

    const ProblemSpec& spec() const { return spec_; }
    AlgebraCache& algebra() { return *a_; }
    AlgebraCache& extension_algebra();
    int bound();

    const ASCertificate& certificate();        // throws NotRegularEvidence via regular()
    const ASCertificate& regular();
    const ValidatedExtension& extension();     // all conditions, never throws on a failed one
    const ValidatedExtension& valid();         // throws the first failed condition
    const Presentation& b_presentation();
    const Quadruple& quadruple(bool through_top);
    const NakayamaReport& nakayama();
    const PotentialReport& potential();
    const ResolutionReport& resolution();

private:
    ProblemSpec spec_;
    int degree_;
    std::unique_ptr<AlgebraCache> a_, b_;
    std::optional<ASCertificate> cert_;
    std::optional<ValidatedExtension> ext_;
    std::optional<Presentation> bpres_;
    std::optional<Quadruple> quad_, quad_top_;
    std::optional<NakayamaReport> nak_;
    std::optional<PotentialReport> pot_;
    std::optional<ResolutionReport> res_;
};

struct RunOptions {
    int degree = -1;      // overrides the spec when ≥ 0
    int randomized = -1;  // overrides the spec when ≥ 0
};

struct Outcome {
    Json doc;
    int exit_code = kOk;
};

// Commands: analyze, validate, quadruple, nakayama, resolution,
// superpotential, verify. Errors become a JSON error object.
Outcome run_command(const std::string& command, const ProblemSpec& spec, const RunOptions& opt = {});
Json error_json(const Error& e);
int exit_code_for(const Error& e);

// Sections emitted by the commands, reusable by the bindings.
Json certificate_json(Session& s);
Json validation_json(Session& s);
Json quadruple_json(Session& s, const Quadruple& q);
Json nakayama_json(Session& s);
Json superpotential_json(Session& s);
Json resolution_json(Session& s);
Json randomized_json(Session& s, int count);

}  // namespace dox
