#include "ghznogo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "ghznogo/errors.hpp"

namespace ghznogo {

namespace {

constexpr int kMinSystemQubits = 2;
// 3k qubits total must stay under the 2^20 dimension cap.
constexpr int kMaxSystemQubits = 6;

void check_unitary(const Operator& op, const char* what) {
    if (op.unitarity_defect() > kDefaultEpsilon) {
        throw NumericError(std::string(what) + ": unitarity defect above tolerance");
    }
}

void check_norm(const StateVector& state, double epsilon, const char* stage) {
    if (std::abs(state.norm() - 1.0) > epsilon) {
        throw NumericError(std::string(stage) + ": state norm drifted beyond tolerance");
    }
}

}  // namespace

std::string SubsystemModel::s_label(int m) const {
    return "S" + std::to_string(m);
}

std::string SubsystemModel::a_label(int m) const {
    return "A" + std::to_string(m);
}

std::string SubsystemModel::b_label(int m) const {
    return "B" + std::to_string(m);
}

std::vector<std::string> SubsystemModel::system_labels() const {
    std::vector<std::string> out;
    for (int m = 1; m <= system_qubits; ++m) {
        out.push_back(s_label(m));
    }
    return out;
}

FactorLayout SubsystemModel::system_layout() const {
    const auto labels = system_labels();
    return FactorLayout::qubits(labels);
}

FactorLayout SubsystemModel::sa_layout() const {
    std::vector<std::string> labels = system_labels();
    for (int m = 1; m <= system_qubits; ++m) {
        labels.push_back(a_label(m));
    }
    return FactorLayout::qubits(labels);
}

FactorLayout SubsystemModel::full_layout() const {
    std::vector<std::string> labels = system_labels();
    for (int m = 1; m <= system_qubits; ++m) {
        labels.push_back(a_label(m));
    }
    for (int m = 1; m <= system_qubits; ++m) {
        labels.push_back(b_label(m));
    }
    return FactorLayout::qubits(labels);
}

StateVector prepare_ghz(int k) {
    if (k < kMinSystemQubits) {
        throw std::invalid_argument("GHZ state needs at least 2 qubits");
    }
    SubsystemModel model{k};
    FactorLayout layout = model.system_layout();
    std::vector<Amplitude> amps(layout.total_dim(), Amplitude{0.0, 0.0});
    const double w = 1.0 / std::sqrt(2.0);
    amps.front() = Amplitude{w, 0.0};
    amps.back() = Amplitude{w, 0.0};
    return StateVector(std::move(layout), std::move(amps));
}

StateVector prepare_product(int k) {
    if (k < kMinSystemQubits) {
        throw std::invalid_argument("product state needs at least 2 qubits");
    }
    SubsystemModel model{k};
    return StateVector::basis_state(model.system_layout(), 0);
}

Operator completion_unitary(BasisId n, Eigenvalue l, CompletionConvention conv) {
    Operator v(2);
    const StateVector target = mub_state(n, l);
    const StateVector complement = mub_state(n, l == Eigenvalue::plus ? Eigenvalue::minus
                                                                      : Eigenvalue::plus);
    const Amplitude complement_phase =
        conv == CompletionConvention::phased ? Amplitude{0.0, 1.0} : Amplitude{1.0, 0.0};
    for (std::size_t r = 0; r < 2; ++r) {
        v.at(r, 0) = target[r];
        v.at(r, 1) = complement_phase * complement[r];
    }
    return v;
}

Operator premeasurement_unitary(BasisId n, CompletionConvention conv) {
    Operator u(4);
    for (Eigenvalue l : kEigenvalues) {
        const StateVector ket = mub_state(n, l);
        const Operator v = completion_unitary(n, l, conv);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                const Amplitude proj = ket[r] * std::conj(ket[c]);
                for (std::size_t vr = 0; vr < 2; ++vr) {
                    for (std::size_t vc = 0; vc < 2; ++vc) {
                        u.at(r * 2 + vr, c * 2 + vc) += proj * v.at(vr, vc);
                    }
                }
            }
        }
    }
    check_unitary(u, "premeasurement unitary");
    return u;
}

std::vector<Amplitude> sa_copy_amps(BasisId a_basis, Eigenvalue l) {
    const StateVector q = mub_state(a_basis, l);
    std::vector<Amplitude> out(4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out[i * 2 + j] = q[i] * q[j];
        }
    }
    return out;
}

std::vector<Amplitude> sa_basis_amps(BasisId a_basis, BasisId n, Eigenvalue l) {
    std::vector<Amplitude> out(4, Amplitude{0.0, 0.0});
    for (Eigenvalue p : kEigenvalues) {
        const Amplitude coeff = mub_overlap(a_basis, p, n, l);
        const std::vector<Amplitude> copy = sa_copy_amps(a_basis, p);
        for (std::size_t i = 0; i < 4; ++i) {
            out[i] += coeff * copy[i];
        }
    }
    return out;
}

Operator b_premeasurement_unitary(BasisId a_basis, BasisId b_basis, CompletionConvention conv) {
    Operator u(8);
    Operator projector_sum(4);
    for (Eigenvalue l : kEigenvalues) {
        const std::vector<Amplitude> ket = sa_basis_amps(a_basis, b_basis, l);
        const Operator v = completion_unitary(b_basis, l, conv);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                const Amplitude proj = ket[r] * std::conj(ket[c]);
                projector_sum.at(r, c) += proj;
                for (std::size_t vr = 0; vr < 2; ++vr) {
                    for (std::size_t vc = 0; vc < 2; ++vc) {
                        u.at(r * 2 + vr, c * 2 + vc) += proj * v.at(vr, vc);
                    }
                }
            }
        }
    }
    // Identity on the unreached complement of the pair space.
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const Amplitude rest = (r == c ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0}) -
                                   projector_sum.at(r, c);
            u.at(r * 2, c * 2) += rest;
            u.at(r * 2 + 1, c * 2 + 1) += rest;
        }
    }
    check_unitary(u, "B premeasurement unitary");
    return u;
}

StateVector run_A_stage(const SubsystemModel& model, BasisId a_basis,
                        const StateVector& system_state, CompletionConvention conv,
                        double epsilon) {
    if (system_state.layout() != model.system_layout()) {
        throw std::invalid_argument("system state layout does not match the model");
    }
    StateVector state = system_state;
    for (int m = 1; m <= model.system_qubits; ++m) {
        state = tensor(state, mub_state(BasisId::z, Eigenvalue::plus, model.a_label(m)));
    }
    const Operator u = premeasurement_unitary(a_basis, conv);
    for (int m = 1; m <= model.system_qubits; ++m) {
        const std::string targets[] = {model.s_label(m), model.a_label(m)};
        state = apply_on_targets(u, state, targets);
    }
    check_norm(state, epsilon, "A stage");
    return state;
}

Operator embed_b_unitary(const SubsystemModel& model, const ScenarioPlan& plan, int m,
                         CompletionConvention conv) {
    if (m < 1 || m > model.system_qubits) {
        throw std::invalid_argument("B-stage index out of range");
    }
    const Operator u = b_premeasurement_unitary(plan.a_basis, plan.b_basis, conv);
    const std::string targets[] = {model.s_label(m), model.a_label(m), model.b_label(m)};
    return embed_on_targets(u, model.full_layout(), targets);
}

StateVector run_plan(const ScenarioConfig& config, CompletionConvention conv) {
    const SubsystemModel& model = config.model;
    const int k = model.system_qubits;

    const StateVector system_state =
        config.initial == InitialState::ghz ? prepare_ghz(k) : prepare_product(k);
    StateVector state = run_A_stage(model, config.plan.a_basis, system_state, conv,
                                    config.epsilon);
    for (int m = 1; m <= k; ++m) {
        state = tensor(state, mub_state(BasisId::z, Eigenvalue::plus, model.b_label(m)));
    }

    const Operator u = b_premeasurement_unitary(config.plan.a_basis, config.plan.b_basis, conv);
    std::vector<int> order = config.plan.b_apply;
    std::sort(order.begin(), order.end());
    for (int m : order) {
        const std::string targets[] = {model.s_label(m), model.a_label(m), model.b_label(m)};
        state = apply_on_targets(u, state, targets);
        check_norm(state, config.epsilon, "B stage");
    }
    return state;
}

namespace {

using nlohmann::json;

[[noreturn]] void syntax_error(const json::parse_error& err, std::string_view text) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = err.byte == 0 ? 0 : std::min(err.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ParseError("scenario syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + err.what());
}

long require_integer(const json& j, const std::string& key) {
    if (!j.is_number_integer()) {
        throw ParseError("scenario key '" + key + "' must be an integer");
    }
    return j.get<long>();
}

BasisId require_basis(const json& j, const std::string& key) {
    const long n = require_integer(j, key);
    if (n < 1 || n > 3) {
        throw ParseError("scenario key '" + key + "': unknown basis id " + std::to_string(n) +
                         " (valid ids: 1, 2, 3)");
    }
    return basis_from_index(static_cast<int>(n));
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        syntax_error(err, text);
    }
    if (!doc.is_object()) {
        throw ParseError("scenario file must contain a JSON object");
    }

    static const std::set<std::string> known_keys = {
        "a_basis", "b_basis", "b_apply", "num_system_qubits", "epsilon", "initial_state"};
    for (const auto& [key, value] : doc.items()) {
        if (!known_keys.contains(key)) {
            throw ParseError("unknown scenario key '" + key + "'");
        }
    }

    ScenarioConfig config;
    if (doc.contains("num_system_qubits")) {
        const long k = require_integer(doc["num_system_qubits"], "num_system_qubits");
        if (k < kMinSystemQubits || k > kMaxSystemQubits) {
            throw ParseError("num_system_qubits must be between " +
                             std::to_string(kMinSystemQubits) + " and " +
                             std::to_string(kMaxSystemQubits) +
                             " (total dimension cap), got " + std::to_string(k));
        }
        config.model.system_qubits = static_cast<int>(k);
    }
    const int k = config.model.system_qubits;

    if (doc.contains("a_basis")) {
        config.plan.a_basis = require_basis(doc["a_basis"], "a_basis");
    }
    if (doc.contains("b_basis")) {
        config.plan.b_basis = require_basis(doc["b_basis"], "b_basis");
    }
    if (config.plan.a_basis == config.plan.b_basis) {
        throw ParseError("a_basis and b_basis must differ; the two observers copy "
                         "complementary bases");
    }

    config.plan.b_apply.clear();
    for (int m = 1; m <= k; ++m) {
        config.plan.b_apply.push_back(m);
    }
    if (doc.contains("b_apply")) {
        const json& arr = doc["b_apply"];
        if (!arr.is_array()) {
            throw ParseError("scenario key 'b_apply' must be an array of integers");
        }
        std::vector<int> apply;
        for (const json& item : arr) {
            const long m = require_integer(item, "b_apply");
            if (m < 1 || m > k) {
                throw ParseError("b_apply entry " + std::to_string(m) +
                                 " outside 1.." + std::to_string(k));
            }
            if (std::find(apply.begin(), apply.end(), static_cast<int>(m)) != apply.end()) {
                throw ParseError("duplicate b_apply entry " + std::to_string(m));
            }
            apply.push_back(static_cast<int>(m));
        }
        std::sort(apply.begin(), apply.end());
        config.plan.b_apply = std::move(apply);
    }

    if (doc.contains("epsilon")) {
        const json& e = doc["epsilon"];
        if (!e.is_number()) {
            throw ParseError("scenario key 'epsilon' must be a number");
        }
        const double eps = e.get<double>();
        if (!std::isfinite(eps) || eps <= 0.0) {
            throw ParseError("epsilon must be a finite positive number");
        }
        config.epsilon = eps;
    }

    if (doc.contains("initial_state")) {
        const json& s = doc["initial_state"];
        if (!s.is_string()) {
            throw ParseError("scenario key 'initial_state' must be a string");
        }
        const std::string name = s.get<std::string>();
        if (name == "ghz") {
            config.initial = InitialState::ghz;
        } else if (name == "product") {
            config.initial = InitialState::product;
        } else {
            throw ParseError("initial_state must be \"ghz\" or \"product\", got \"" + name + "\"");
        }
    }

    return config;
}

}  // namespace ghznogo
