#include "ghznogo/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ghznogo/errors.hpp"

namespace ghznogo {

namespace {

using ordered_json = nlohmann::ordered_json;

// Witnesses shown in reports; the exact total is always reported alongside.
constexpr std::size_t kReportWitnessLimit = 8;

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

// Values below the scenario tolerance are numeric noise by definition;
// clamping keeps reports byte-stable across conventions and platforms.
double clean(double x, double epsilon) {
    return std::abs(x) < epsilon ? 0.0 : round12(x);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

bool is_reference_scenario(const ScenarioConfig& config) {
    return config.model.system_qubits == 3 && config.plan.a_basis == BasisId::y &&
           config.plan.b_basis == BasisId::x && config.initial == InitialState::ghz &&
           config.plan.b_apply == std::vector<int>{1, 2, 3};
}

// The hardcoded GHZ constraint set and the simulation must agree on the
// reference scenario; anything else is an implementation bug.
void cross_check_reference(const ScenarioConfig& config,
                           std::span<const ParityConstraint> derived) {
    if (!is_reference_scenario(config)) {
        return;
    }
    if (normalized(derived) != normalized(ghz_constraint_system())) {
        throw InternalCheckError(
            "simulator-derived constraints do not match the GHZ reference system");
    }
}

NogoSection solve_nogo(const ScenarioConfig& config,
                       std::vector<ParityConstraint> system, std::optional<int> flip_sign) {
    if (flip_sign) {
        if (*flip_sign < 1 || static_cast<std::size_t>(*flip_sign) > system.size()) {
            throw ParseError("flip-sign index " + std::to_string(*flip_sign) +
                             " out of range 1.." + std::to_string(system.size()));
        }
        system[*flip_sign - 1].sign = -system[*flip_sign - 1].sign;
    }

    NogoSection section;
    section.flipped_constraint = flip_sign;
    const std::vector<FactLabel> universe = fact_universe(config.model.system_qubits);
    section.enumeration = exhaustive_satisfiability(system, universe);
    section.gf2 = gf2_satisfiability(system);
    section.methods_agree = section.enumeration.satisfiable == section.gf2.satisfiable;
    section.system = std::move(system);
    if (!section.methods_agree) {
        throw InternalCheckError(
            "enumeration and GF(2) elimination disagree on satisfiability");
    }
    return section;
}

ordered_json constraint_json(const ParityConstraint& c) {
    ordered_json j;
    j["vars"] = ordered_json::array();
    for (const FactLabel& v : c.vars) {
        j["vars"].push_back(v.str());
    }
    j["sign"] = c.sign;
    j["text"] = c.str();
    return j;
}

ordered_json assignment_json(const FactAssignment& a) {
    ordered_json j;
    for (const auto& [label, value] : a.values()) {
        j[label.str()] = value;
    }
    return j;
}

std::string labels_text(std::span<const Eigenvalue> labels) {
    std::string out = "(";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += eigen_sign(labels[i]) > 0 ? "+1" : "-1";
        if (i + 1 < labels.size()) {
            out += ",";
        }
    }
    return out + ")";
}

std::string pattern_text(std::span<const BasisId> pattern) {
    std::string out = "(";
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        out += std::to_string(basis_index(pattern[i]));
        if (i + 1 < pattern.size()) {
            out += ",";
        }
    }
    return out + ")";
}

std::string apply_set_text(std::span<const int> b_apply) {
    std::string out = "{";
    for (std::size_t i = 0; i < b_apply.size(); ++i) {
        out += std::to_string(b_apply[i]);
        if (i + 1 < b_apply.size()) {
            out += ",";
        }
    }
    return out + "}";
}

}  // namespace

std::size_t Report::constraint_count() const {
    return static_cast<std::size_t>(
        std::count_if(correlations.begin(), correlations.end(),
                      [](const DerivedCorrelation& d) { return d.constraint.has_value(); }));
}

std::string Report::to_json() const {
    ordered_json j;
    j["version"] = kVersion;

    ordered_json scenario;
    scenario["num_system_qubits"] = config.model.system_qubits;
    scenario["a_basis"] = basis_index(config.plan.a_basis);
    scenario["b_basis"] = basis_index(config.plan.b_basis);
    scenario["b_apply"] = config.plan.b_apply;
    scenario["initial_state"] = config.initial == InitialState::ghz ? "ghz" : "product";
    scenario["epsilon"] = round12(config.epsilon);
    j["scenario"] = std::move(scenario);

    ordered_json tolerances;
    tolerances["epsilon"] = round12(config.epsilon);
    tolerances["support_zero"] = round12(support_zero_tolerance(config.epsilon));
    j["tolerances"] = std::move(tolerances);

    j["patterns_scanned"] = correlations.size();
    j["constraint_count"] = constraint_count();

    j["correlations"] = ordered_json::array();
    for (const DerivedCorrelation& d : correlations) {
        ordered_json entry;
        entry["pattern"] = ordered_json::array();
        for (const BasisId n : d.pattern) {
            entry["pattern"].push_back(basis_index(n));
        }
        entry["b_apply"] = d.b_apply;
        entry["residual_weight"] = clean(d.tensor.residual_weight(), config.epsilon);
        entry["constraint"] =
            d.constraint ? constraint_json(*d.constraint) : ordered_json(nullptr);
        if (include_probabilities) {
            entry["probabilities"] = ordered_json::array();
            for (std::size_t i = 0; i < d.tensor.entry_count(); ++i) {
                const auto labels =
                    CoefficientTensor::labels_of(i, d.tensor.site_count());
                ordered_json row;
                row["labels"] = ordered_json::array();
                for (const Eigenvalue l : labels) {
                    row["labels"].push_back(eigen_sign(l));
                }
                row["value"] = clean(born_probability(d.tensor, labels), config.epsilon);
                entry["probabilities"].push_back(std::move(row));
            }
        }
        j["correlations"].push_back(std::move(entry));
    }

    if (nogo) {
        ordered_json n;
        n["system"] = ordered_json::array();
        for (const ParityConstraint& c : nogo->system) {
            n["system"].push_back(constraint_json(c));
        }
        n["flipped_constraint"] = nogo->flipped_constraint
                                      ? ordered_json(*nogo->flipped_constraint)
                                      : ordered_json(nullptr);
        ordered_json enumeration;
        enumeration["satisfiable"] = nogo->enumeration.satisfiable;
        enumeration["count_checked"] = nogo->enumeration.count_checked;
        enumeration["witness_count"] = nogo->enumeration.witness_count;
        enumeration["witnesses"] = ordered_json::array();
        const std::size_t shown =
            std::min(nogo->enumeration.witnesses.size(), kReportWitnessLimit);
        for (std::size_t i = 0; i < shown; ++i) {
            enumeration["witnesses"].push_back(
                assignment_json(nogo->enumeration.witnesses[i]));
        }
        n["exhaustive"] = std::move(enumeration);

        ordered_json gf2;
        gf2["satisfiable"] = nogo->gf2.satisfiable;
        gf2["certificate"] = ordered_json::array();
        for (const std::size_t row : nogo->gf2.certificate) {
            gf2["certificate"].push_back(row + 1);  // 1-based, matching the listing
        }
        gf2["witness"] = nogo->gf2.witness ? assignment_json(*nogo->gf2.witness)
                                           : ordered_json(nullptr);
        n["gf2"] = std::move(gf2);
        n["methods_agree"] = nogo->methods_agree;
        j["nogo"] = std::move(n);
    }

    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "ghznogo report (version " << kVersion << ")\n\n";

    out << "scenario\n";
    out << "  system qubits: " << config.model.system_qubits << "\n";
    out << "  a_basis: " << basis_index(config.plan.a_basis)
        << "   b_basis: " << basis_index(config.plan.b_basis) << "\n";
    out << "  b_apply: " << apply_set_text(config.plan.b_apply) << "\n";
    out << "  initial state: " << (config.initial == InitialState::ghz ? "ghz" : "product")
        << "\n";
    out << "  epsilon: " << format_double(config.epsilon) << " (support cutoff "
        << format_double(support_zero_tolerance(config.epsilon)) << ")\n\n";

    out << "correlations (" << correlations.size() << " patterns scanned, "
        << constraint_count() << " constraints)\n";
    for (const DerivedCorrelation& d : correlations) {
        out << "  pattern " << pattern_text(d.pattern) << "  B applied at "
            << apply_set_text(d.b_apply) << "  ";
        if (d.constraint) {
            out << "constraint: " << d.constraint->str() << "\n";
        } else {
            out << "no deterministic correlation\n";
        }
        if (include_probabilities) {
            out << "    probabilities:";
            for (std::size_t i = 0; i < d.tensor.entry_count(); ++i) {
                const auto labels =
                    CoefficientTensor::labels_of(i, d.tensor.site_count());
                out << " " << labels_text(labels) << "="
                    << format_double(clean(born_probability(d.tensor, labels),
                                           config.epsilon));
            }
            out << "\n";
        }
    }

    if (nogo) {
        out << "\nno-go\n";
        out << "  constraint system (" << nogo->system.size() << " constraints";
        if (nogo->flipped_constraint) {
            out << ", sign of [" << *nogo->flipped_constraint << "] flipped";
        }
        out << ")\n";
        for (std::size_t i = 0; i < nogo->system.size(); ++i) {
            out << "    [" << i + 1 << "] " << nogo->system[i].str() << "\n";
        }
        out << "  exhaustive enumeration: "
            << (nogo->enumeration.satisfiable ? "SATISFIABLE" : "UNSATISFIABLE") << " ("
            << nogo->enumeration.witness_count << " of " << nogo->enumeration.count_checked
            << " assignments satisfy every constraint)\n";
        const std::size_t shown =
            std::min(nogo->enumeration.witnesses.size(), kReportWitnessLimit);
        for (std::size_t i = 0; i < shown; ++i) {
            out << "    witness:";
            for (const auto& [label, value] : nogo->enumeration.witnesses[i].values()) {
                out << " " << label.str() << "=" << (value > 0 ? "+1" : "-1");
            }
            out << "\n";
        }
        out << "  gf2 elimination: "
            << (nogo->gf2.satisfiable ? "SATISFIABLE" : "UNSATISFIABLE");
        if (!nogo->gf2.satisfiable) {
            out << " (certificate: rows";
            for (const std::size_t row : nogo->gf2.certificate) {
                out << " " << row + 1;
            }
            out << " sum to the contradiction 0 = 1)";
        }
        out << "\n";
        out << "  methods agree: " << (nogo->methods_agree ? "yes" : "no") << "\n";
    }

    return out.str();
}

Report run_report(const ScenarioConfig& config, CompletionConvention conv) {
    Report report;
    report.config = config;
    report.correlations = scan_patterns(config, conv);
    report.include_probabilities = true;
    std::vector<ParityConstraint> system = derived_constraints(report.correlations);
    cross_check_reference(config, system);
    report.nogo = solve_nogo(config, std::move(system), std::nullopt);
    return report;
}

Report constraints_report(const ScenarioConfig& config, CompletionConvention conv) {
    Report report;
    report.config = config;
    report.correlations = scan_patterns(config, conv);
    report.include_probabilities = false;
    return report;
}

Report nogo_report(const ScenarioConfig& config, std::optional<int> flip_sign,
                   CompletionConvention conv) {
    Report report;
    report.config = config;
    report.correlations = scan_patterns(config, conv);
    report.include_probabilities = false;
    std::vector<ParityConstraint> system = derived_constraints(report.correlations);
    cross_check_reference(config, system);
    report.nogo = solve_nogo(config, std::move(system), flip_sign);
    return report;
}

}  // namespace ghznogo
