#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ghznogo/ghznogo.h"

namespace {

struct Scenario {
    ghznogo_scenario* handle = nullptr;
    ~Scenario() { ghznogo_scenario_free(handle); }
};

struct Report {
    ghznogo_report* handle = nullptr;
    ~Report() { ghznogo_report_free(handle); }
};

}  // namespace

TEST_CASE("version is exposed") {
    CHECK(std::string(ghznogo_version()) == "0.1.0");
}

TEST_CASE("parse, run, render, free") {
    Scenario scenario;
    REQUIRE(ghznogo_scenario_parse("{}", &scenario.handle) == GHZNOGO_OK);
    REQUIRE(scenario.handle != nullptr);

    Report report;
    REQUIRE(ghznogo_run(scenario.handle, &report.handle) == GHZNOGO_OK);
    REQUIRE(report.handle != nullptr);
    CHECK(ghznogo_report_constraint_count(report.handle) == 4);

    const std::string text = ghznogo_report_text(report.handle);
    CHECK(text.find("B1*B2*B3 = +1") != std::string::npos);
    const std::string json = ghznogo_report_json(report.handle);
    CHECK(json.find("\"satisfiable\": false") != std::string::npos);
}

TEST_CASE("repeated runs render byte-identical reports") {
    Scenario scenario;
    REQUIRE(ghznogo_scenario_parse("{}", &scenario.handle) == GHZNOGO_OK);
    Report first;
    Report second;
    REQUIRE(ghznogo_run(scenario.handle, &first.handle) == GHZNOGO_OK);
    REQUIRE(ghznogo_run(scenario.handle, &second.handle) == GHZNOGO_OK);
    CHECK(std::string(ghznogo_report_json(first.handle)) ==
          ghznogo_report_json(second.handle));
    CHECK(std::string(ghznogo_report_text(first.handle)) ==
          ghznogo_report_text(second.handle));
}

TEST_CASE("parse failures set a status and a message") {
    Scenario scenario;
    CHECK(ghznogo_scenario_parse("{\n  \"a_basis\": }", &scenario.handle) ==
          GHZNOGO_ERROR_PARSE);
    CHECK(scenario.handle == nullptr);
    CHECK(std::string(ghznogo_last_error()).find("line 2") != std::string::npos);

    CHECK(ghznogo_scenario_parse(R"({"a_basis": 9})", &scenario.handle) ==
          GHZNOGO_ERROR_PARSE);
    CHECK(std::string(ghznogo_last_error()).find("unknown basis id") != std::string::npos);

    CHECK(ghznogo_scenario_parse(nullptr, &scenario.handle) == GHZNOGO_ERROR_PARSE);
}

TEST_CASE("epsilon override validation") {
    Scenario scenario;
    REQUIRE(ghznogo_scenario_parse("{}", &scenario.handle) == GHZNOGO_OK);
    CHECK(ghznogo_scenario_set_epsilon(scenario.handle, 1e-9) == GHZNOGO_OK);
    CHECK(ghznogo_scenario_set_epsilon(scenario.handle, 0.0) == GHZNOGO_ERROR_PARSE);
    CHECK(ghznogo_scenario_set_epsilon(scenario.handle, -1.0) == GHZNOGO_ERROR_PARSE);
    CHECK(ghznogo_scenario_set_epsilon(nullptr, 1e-9) == GHZNOGO_ERROR_PARSE);
}

TEST_CASE("constraints command distinguishes empty scans") {
    Scenario ghz;
    REQUIRE(ghznogo_scenario_parse("{}", &ghz.handle) == GHZNOGO_OK);
    Report found;
    CHECK(ghznogo_constraints(ghz.handle, &found.handle) == GHZNOGO_OK);
    CHECK(ghznogo_report_constraint_count(found.handle) == 4);

    Scenario product;
    REQUIRE(ghznogo_scenario_parse(R"({"initial_state": "product"})", &product.handle) ==
            GHZNOGO_OK);
    Report empty;
    CHECK(ghznogo_constraints(product.handle, &empty.handle) ==
          GHZNOGO_ERROR_NO_CONSTRAINTS);
    REQUIRE(empty.handle != nullptr);  // listing is still available
    CHECK(ghznogo_report_constraint_count(empty.handle) == 0);
    CHECK(std::string(ghznogo_report_text(empty.handle))
              .find("no deterministic correlation") != std::string::npos);
}

TEST_CASE("nogo command with and without a sign flip") {
    Scenario scenario;
    REQUIRE(ghznogo_scenario_parse("{}", &scenario.handle) == GHZNOGO_OK);

    Report unsat;
    REQUIRE(ghznogo_nogo(scenario.handle, 0, &unsat.handle) == GHZNOGO_OK);
    CHECK(std::string(ghznogo_report_text(unsat.handle)).find("UNSATISFIABLE") !=
          std::string::npos);

    Report sat;
    REQUIRE(ghznogo_nogo(scenario.handle, 1, &sat.handle) == GHZNOGO_OK);
    const std::string text = ghznogo_report_text(sat.handle);
    CHECK(text.find("SATISFIABLE") != std::string::npos);
    CHECK(text.find("witness") != std::string::npos);

    Report bad;
    CHECK(ghznogo_nogo(scenario.handle, 99, &bad.handle) == GHZNOGO_ERROR_PARSE);
    CHECK(bad.handle == nullptr);
    CHECK(ghznogo_nogo(scenario.handle, -2, &bad.handle) == GHZNOGO_ERROR_PARSE);
}

TEST_CASE("null handles are rejected, not dereferenced") {
    Report report;
    CHECK(ghznogo_run(nullptr, &report.handle) == GHZNOGO_ERROR_PARSE);
    CHECK(ghznogo_constraints(nullptr, &report.handle) == GHZNOGO_ERROR_PARSE);
    CHECK(ghznogo_nogo(nullptr, 0, &report.handle) == GHZNOGO_ERROR_PARSE);
    CHECK(std::string(ghznogo_report_text(nullptr)).empty());
    CHECK(std::string(ghznogo_report_json(nullptr)).empty());
    CHECK(ghznogo_report_constraint_count(nullptr) == 0);
    ghznogo_report_free(nullptr);
    ghznogo_scenario_free(nullptr);
}
