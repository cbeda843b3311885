#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghznogo/correlations.hpp"
#include "ghznogo/nogo.hpp"
#include "ghznogo/scenario.hpp"

namespace ghznogo {

inline constexpr const char* kVersion = "0.1.0";

// Constraint-system verdict from both decision procedures. Reports are only
// emitted when the procedures agree; a disagreement raises
// InternalCheckError instead.
struct NogoSection {
    std::vector<ParityConstraint> system;
    std::optional<int> flipped_constraint;  // 1-based index whose sign was negated
    EnumerationResult enumeration;
    Gf2Result gf2;
    bool methods_agree = false;
};

// Everything a command run produced. Serialization is deterministic:
// insertion-ordered keys, floats rounded to 12 significant digits, values
// below the scenario tolerance clamped to zero.
struct Report {
    ScenarioConfig config;
    std::vector<DerivedCorrelation> correlations;
    bool include_probabilities = true;
    std::optional<NogoSection> nogo;

    std::string to_json() const;  // pretty-printed, trailing newline
    std::string to_text() const;

    std::size_t constraint_count() const;
};

// `run`: scan the patterns consistent with the configured plan, then decide
// satisfiability of the derived constraint system.
Report run_report(const ScenarioConfig& config,
                  CompletionConvention conv = CompletionConvention::aligned);

// `constraints`: the pattern scan alone.
Report constraints_report(const ScenarioConfig& config,
                          CompletionConvention conv = CompletionConvention::aligned);

// `nogo`: the derived system (optionally with one sign flipped, 1-based
// index) through both decision procedures.
Report nogo_report(const ScenarioConfig& config, std::optional<int> flip_sign,
                   CompletionConvention conv = CompletionConvention::aligned);

}  // namespace ghznogo
