#include <doctest.h>

#include <string>

#include <nlohmann/json.hpp>

#include "ghznogo/errors.hpp"
#include "ghznogo/report.hpp"

using namespace ghznogo;
using nlohmann::json;

TEST_CASE("run report on the default scenario") {
    const ScenarioConfig config;
    const Report report = run_report(config);
    CHECK(report.correlations.size() == 8);
    CHECK(report.constraint_count() == 4);
    REQUIRE(report.nogo.has_value());
    CHECK(!report.nogo->enumeration.satisfiable);
    CHECK(!report.nogo->gf2.satisfiable);
    CHECK(report.nogo->methods_agree);
    CHECK(report.nogo->enumeration.count_checked == 64);

    const json parsed = json::parse(report.to_json());
    CHECK(parsed["version"] == kVersion);
    CHECK(parsed["patterns_scanned"] == 8);
    CHECK(parsed["constraint_count"] == 4);
    CHECK(parsed["scenario"]["num_system_qubits"] == 3);
    CHECK(parsed["tolerances"]["support_zero"] == doctest::Approx(1e-8));
    CHECK(parsed["nogo"]["exhaustive"]["satisfiable"] == false);
    CHECK(parsed["nogo"]["exhaustive"]["count_checked"] == 64);
    CHECK(parsed["nogo"]["gf2"]["certificate"] == json::array({1, 2, 3, 4}));
    CHECK(parsed["nogo"]["methods_agree"] == true);
    CHECK(parsed["correlations"][0]["constraint"]["text"] == "B1*B2*B3 = +1");
    CHECK(parsed["correlations"][0]["probabilities"].size() == 8);

    const std::string text = report.to_text();
    CHECK(text.find("B1*B2*B3 = +1") != std::string::npos);
    CHECK(text.find("UNSATISFIABLE") != std::string::npos);
}

TEST_CASE("report serialization is deterministic") {
    const ScenarioConfig config;
    const Report first = run_report(config);
    const Report second = run_report(config);
    CHECK(first.to_json() == second.to_json());
    CHECK(first.to_text() == second.to_text());
}

TEST_CASE("idle plan reports one pattern and a trivially satisfiable system") {
    ScenarioConfig config;
    config.plan.b_apply = {};
    const Report report = run_report(config);
    CHECK(report.correlations.size() == 1);
    CHECK(report.constraint_count() == 0);
    REQUIRE(report.nogo.has_value());
    CHECK(report.nogo->system.empty());
    CHECK(report.nogo->enumeration.satisfiable);
    CHECK(report.nogo->enumeration.count_checked == 64);
}

TEST_CASE("constraints report flags the product-state scenario as empty") {
    ScenarioConfig config;
    config.initial = InitialState::product;
    const Report report = constraints_report(config);
    CHECK(report.correlations.size() == 8);
    CHECK(report.constraint_count() == 0);
    CHECK(!report.nogo.has_value());
}

TEST_CASE("nogo report with a flipped sign is satisfiable by both procedures") {
    const ScenarioConfig config;
    const Report report = nogo_report(config, 1);
    REQUIRE(report.nogo.has_value());
    CHECK(report.nogo->flipped_constraint == 1);
    CHECK(report.nogo->enumeration.satisfiable);
    CHECK(report.nogo->gf2.satisfiable);
    CHECK(report.nogo->methods_agree);
    CHECK(report.nogo->enumeration.witness_count == 8);
    CHECK(!report.nogo->enumeration.witnesses.empty());

    const json parsed = json::parse(report.to_json());
    CHECK(parsed["nogo"]["flipped_constraint"] == 1);
    CHECK(parsed["nogo"]["exhaustive"]["satisfiable"] == true);
    CHECK(parsed["nogo"]["exhaustive"]["witnesses"].size() == 8);

    CHECK_THROWS_AS(nogo_report(config, 5), ParseError);
    CHECK_THROWS_AS(nogo_report(config, -1), ParseError);
}

TEST_CASE("completion conventions leave every report field unchanged") {
    const ScenarioConfig config;
    const Report aligned = run_report(config, CompletionConvention::aligned);
    const Report phased = run_report(config, CompletionConvention::phased);
    CHECK(aligned.to_json() == phased.to_json());
    CHECK(aligned.to_text() == phased.to_text());
}

TEST_CASE("probability tables are clamped below the tolerance") {
    const ScenarioConfig config;
    const Report report = run_report(config);
    const json parsed = json::parse(report.to_json());
    // Pattern (x,x,x): odd-parity outcomes are exactly zero in the report.
    for (const auto& row : parsed["correlations"][0]["probabilities"]) {
        int product = 1;
        for (const auto& l : row["labels"]) {
            product *= l.get<int>();
        }
        if (product < 0) {
            CHECK(row["value"] == 0.0);
        } else {
            CHECK(row["value"] == doctest::Approx(0.25));
        }
    }
}
