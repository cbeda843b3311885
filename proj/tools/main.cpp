// ghznogo command-line front end. Talks to the library exclusively through
// the C API, exactly like any external embedder would.

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ghznogo/ghznogo.h"

namespace {

struct ScenarioDeleter {
    void operator()(ghznogo_scenario* s) const { ghznogo_scenario_free(s); }
};
struct ReportDeleter {
    void operator()(ghznogo_report* r) const { ghznogo_report_free(r); }
};
using ScenarioPtr = std::unique_ptr<ghznogo_scenario, ScenarioDeleter>;
using ReportPtr = std::unique_ptr<ghznogo_report, ReportDeleter>;

int fail_with_last_error(ghznogo_status status) {
    std::fprintf(stderr, "error: %s\n", ghznogo_last_error());
    return static_cast<int>(status);
}

int load_scenario(const std::string& path, bool has_epsilon, double epsilon,
                  ScenarioPtr& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot read scenario file '%s'\n", path.c_str());
        return GHZNOGO_ERROR_PARSE;
    }
    std::ostringstream text;
    text << in.rdbuf();

    ghznogo_scenario* scenario = nullptr;
    ghznogo_status status = ghznogo_scenario_parse(text.str().c_str(), &scenario);
    if (status != GHZNOGO_OK) {
        return fail_with_last_error(status);
    }
    out.reset(scenario);

    if (has_epsilon) {
        status = ghznogo_scenario_set_epsilon(out.get(), epsilon);
        if (status != GHZNOGO_OK) {
            return fail_with_last_error(status);
        }
    }
    return GHZNOGO_OK;
}

int emit(const ReportPtr& report, const std::string& format) {
    const char* body =
        format == "json" ? ghznogo_report_json(report.get()) : ghznogo_report_text(report.get());
    std::fputs(body, stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GHZ observer-chain simulator and parity-constraint no-go prover"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", ghznogo_version());

    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    double epsilon = 0.0;
    CLI::Option* epsilon_opt =
        app.add_option("--epsilon", epsilon,
                       "tolerance override (precedence: flag > scenario file > default)");

    std::string run_path;
    CLI::App* cmd_run = app.add_subcommand(
        "run", "execute the scenario, list derived constraints, decide satisfiability");
    cmd_run->add_option("file", run_path, "scenario file")->required();

    std::string constraints_path;
    CLI::App* cmd_constraints = app.add_subcommand(
        "constraints", "scan basis patterns for deterministic correlations");
    cmd_constraints->add_option("file", constraints_path, "scenario file")->required();

    std::string nogo_path;
    int flip_sign = 0;
    CLI::App* cmd_nogo = app.add_subcommand(
        "nogo", "prove (un)satisfiability of the derived constraint system");
    cmd_nogo->add_option("file", nogo_path, "scenario file")->required();
    cmd_nogo->add_option("--flip-sign", flip_sign,
                         "negate the sign of the given constraint (1-based) before solving");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help / --version
        }
        std::fprintf(stderr, "error: %s\n", e.what());
        return GHZNOGO_ERROR_PARSE;
    }

    const bool has_epsilon = epsilon_opt->count() > 0;
    ScenarioPtr scenario;
    ghznogo_report* raw = nullptr;

    if (cmd_run->parsed()) {
        if (int rc = load_scenario(run_path, has_epsilon, epsilon, scenario); rc != 0) {
            return rc;
        }
        const ghznogo_status status = ghznogo_run(scenario.get(), &raw);
        ReportPtr report(raw);
        if (status != GHZNOGO_OK) {
            return fail_with_last_error(status);
        }
        return emit(report, format);
    }

    if (cmd_constraints->parsed()) {
        if (int rc = load_scenario(constraints_path, has_epsilon, epsilon, scenario); rc != 0) {
            return rc;
        }
        const ghznogo_status status = ghznogo_constraints(scenario.get(), &raw);
        ReportPtr report(raw);
        if (status == GHZNOGO_OK || status == GHZNOGO_ERROR_NO_CONSTRAINTS) {
            emit(report, format);  // the listing is still useful when empty
            return static_cast<int>(status);
        }
        return fail_with_last_error(status);
    }

    if (int rc = load_scenario(nogo_path, has_epsilon, epsilon, scenario); rc != 0) {
        return rc;
    }
    const ghznogo_status status = ghznogo_nogo(scenario.get(), flip_sign, &raw);
    ReportPtr report(raw);
    if (status != GHZNOGO_OK) {
        return fail_with_last_error(status);
    }
    return emit(report, format);
}
