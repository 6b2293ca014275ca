#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dox/pipeline.hpp"

namespace {

std::string render(const dox::Json& doc, const std::string& emit) {
    if (emit == "json") return doc.dump(2) + "\n";
    if (emit == "latex") return dox::render_latex(doc);
    return dox::render_text(doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double Ore extension kernel"};
    app.require_subcommand(1, 1);

    std::string input, emit = "text", out_path;
    int degree = -1, randomized = -1;
    const char* commands[][2] = {
        {"analyze", "degree-bounded Koszul AS-regularity certificate"},
        {"validate", "check the double Ore extension conditions"},
        {"quadruple", "construct the quadruple and check its identities"},
        {"nakayama", "hdet, divergence and the Nakayama automorphism of B"},
        {"resolution", "minimal free resolution of the trivial B-module"},
        {"superpotential", "twisted superpotential of B"},
        {"verify", "full pipeline with every invariant"},
    };
    for (auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("input", input, "problem file")->required()->check(CLI::ExistingFile);
        sub->add_option("--emit", emit, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--degree", degree, "internal-degree bound (default d + 4)")->check(CLI::Range(2, 64));
        sub->add_option("--randomized-quadruples", randomized, "randomized quadruples for the invariance checks")
            ->check(CLI::Range(0, 1000));
        sub->add_option("--out", out_path, "write the report here instead of stdout");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage errors share the exit status of malformed input.
        int rc = app.exit(e);
        return rc == 0 ? 0 : dox::kParseFailure;
    }
    std::string command = app.get_subcommands().front()->get_name();

    dox::Outcome outcome;
    try {
        dox::ProblemSpec spec = dox::parse_problem_file(input);
        outcome = dox::run_command(command, spec, dox::RunOptions{degree, randomized});
    } catch (const dox::Error& e) {
        outcome.doc = dox::Json{{"command", command}};
        outcome.doc["error"] = dox::error_json(e)["error"];
        outcome.doc["ok"] = false;
        outcome.exit_code = dox::exit_code_for(e);
    }

    std::string text = render(outcome.doc, emit);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return dox::kParseFailure;
        }
        f << text;
    }
    return outcome.exit_code;
}
