#include "ghznogo/ghznogo.h"

#include <cmath>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "ghznogo/errors.hpp"
#include "ghznogo/report.hpp"
#include "ghznogo/scenario.hpp"

struct ghznogo_scenario {
    ghznogo::ScenarioConfig config;
};

struct ghznogo_report {
    std::string text;
    std::string json;
    size_t constraint_count = 0;
};

namespace {

thread_local std::string g_last_error;

ghznogo_status fail(ghznogo_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <typename Fn>
ghznogo_status guarded(Fn&& fn) {
    try {
        const ghznogo_status status = fn();
        if (status == GHZNOGO_OK) {
            g_last_error.clear();
        }
        return status;
    } catch (const ghznogo::ParseError& e) {
        return fail(GHZNOGO_ERROR_PARSE, e.what());
    } catch (const ghznogo::NumericError& e) {
        return fail(GHZNOGO_ERROR_NUMERIC, e.what());
    } catch (const ghznogo::InternalCheckError& e) {
        return fail(GHZNOGO_ERROR_INTERNAL, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GHZNOGO_ERROR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(GHZNOGO_ERROR_INTERNAL, e.what());
    }
}

ghznogo_report* make_report(const ghznogo::Report& report) {
    auto* out = new ghznogo_report;
    out->text = report.to_text();
    out->json = report.to_json();
    out->constraint_count = report.constraint_count();
    return out;
}

}  // namespace

extern "C" {

const char* ghznogo_version(void) {
    return ghznogo::kVersion;
}

const char* ghznogo_last_error(void) {
    return g_last_error.c_str();
}

ghznogo_status ghznogo_scenario_parse(const char* json_text, ghznogo_scenario** out) {
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&]() -> ghznogo_status {
        if (json_text == nullptr || out == nullptr) {
            return fail(GHZNOGO_ERROR_PARSE, "null argument to ghznogo_scenario_parse");
        }
        ghznogo::ScenarioConfig config = ghznogo::parse_scenario(json_text);
        *out = new ghznogo_scenario{std::move(config)};
        return GHZNOGO_OK;
    });
}

ghznogo_status ghznogo_scenario_set_epsilon(ghznogo_scenario* scenario, double epsilon) {
    return guarded([&]() -> ghznogo_status {
        if (scenario == nullptr) {
            return fail(GHZNOGO_ERROR_PARSE, "null scenario handle");
        }
        if (!std::isfinite(epsilon) || epsilon <= 0.0) {
            return fail(GHZNOGO_ERROR_PARSE, "epsilon must be a finite positive number");
        }
        scenario->config.epsilon = epsilon;
        return GHZNOGO_OK;
    });
}

void ghznogo_scenario_free(ghznogo_scenario* scenario) {
    delete scenario;
}

ghznogo_status ghznogo_run(const ghznogo_scenario* scenario, ghznogo_report** out) {
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&]() -> ghznogo_status {
        if (scenario == nullptr || out == nullptr) {
            return fail(GHZNOGO_ERROR_PARSE, "null argument to ghznogo_run");
        }
        *out = make_report(ghznogo::run_report(scenario->config));
        return GHZNOGO_OK;
    });
}

ghznogo_status ghznogo_constraints(const ghznogo_scenario* scenario, ghznogo_report** out) {
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&]() -> ghznogo_status {
        if (scenario == nullptr || out == nullptr) {
            return fail(GHZNOGO_ERROR_PARSE, "null argument to ghznogo_constraints");
        }
        *out = make_report(ghznogo::constraints_report(scenario->config));
        if ((*out)->constraint_count == 0) {
            return fail(GHZNOGO_ERROR_NO_CONSTRAINTS,
                        "no deterministic correlation found in the scanned patterns");
        }
        return GHZNOGO_OK;
    });
}

ghznogo_status ghznogo_nogo(const ghznogo_scenario* scenario, int flip_sign,
                            ghznogo_report** out) {
    if (out != nullptr) {
        *out = nullptr;
    }
    return guarded([&]() -> ghznogo_status {
        if (scenario == nullptr || out == nullptr) {
            return fail(GHZNOGO_ERROR_PARSE, "null argument to ghznogo_nogo");
        }
        if (flip_sign < 0) {
            return fail(GHZNOGO_ERROR_PARSE, "flip_sign must be 0 or a 1-based index");
        }
        const std::optional<int> flip =
            flip_sign == 0 ? std::nullopt : std::optional<int>(flip_sign);
        *out = make_report(ghznogo::nogo_report(scenario->config, flip));
        return GHZNOGO_OK;
    });
}

const char* ghznogo_report_text(const ghznogo_report* report) {
    return report == nullptr ? "" : report->text.c_str();
}

const char* ghznogo_report_json(const ghznogo_report* report) {
    return report == nullptr ? "" : report->json.c_str();
}

size_t ghznogo_report_constraint_count(const ghznogo_report* report) {
    return report == nullptr ? 0 : report->constraint_count;
}

void ghznogo_report_free(ghznogo_report* report) {
    delete report;
}

}  // extern "C"
