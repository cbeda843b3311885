#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ghznogo/correlations.hpp"
#include "ghznogo/errors.hpp"

using namespace ghznogo;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int label_product(std::span<const Eigenvalue> labels) {
    int p = 1;
    for (const Eigenvalue l : labels) {
        p *= eigen_sign(l);
    }
    return p;
}

// Closed forms of the bare GHZ expansion coefficients, derived by expanding
// (|000⟩+|111⟩)/√2 against the product states by hand:
//   pattern (3,3,3): (1 + i·pqr)/4
//   pattern (2,2,2): (1 + pqr)/4
//   pattern (2,3,3): (1 - pqr)/4
Amplitude closed_form_333(int pqr) {
    return Amplitude{0.25, 0.25 * pqr};
}
Amplitude closed_form_222(int pqr) {
    return Amplitude{0.25 * (1 + pqr), 0};
}
Amplitude closed_form_233(int pqr) {
    return Amplitude{0.25 * (1 - pqr), 0};
}

CoefficientTensor extract_plan(const ScenarioConfig& config,
                               const std::vector<BasisId>& pattern) {
    const StateVector state = run_plan(config);
    const auto sites = sab_sites(config.model, config.plan);
    return expansion_coefficients(state, sites, pattern, config.epsilon);
}

}  // namespace

TEST_CASE("bare GHZ coefficients in the computational pattern restate the state") {
    const SubsystemModel model{3};
    const std::vector<BasisId> ones(3, BasisId::z);
    const CoefficientTensor t =
        expansion_coefficients(prepare_ghz(3), bare_sites(model), ones);
    for (std::size_t i = 0; i < t.entry_count(); ++i) {
        const Amplitude want =
            (i == 0 || i == 7) ? Amplitude{kInvSqrt2, 0} : Amplitude{0, 0};
        CHECK(std::abs(t.at_index(i) - want) < 1e-12);
    }
    CHECK(t.residual_weight() < 1e-12);
}

TEST_CASE("bare GHZ coefficients in the y pattern are uniform") {
    const SubsystemModel model{3};
    const std::vector<BasisId> yyy(3, BasisId::y);
    const CoefficientTensor t =
        expansion_coefficients(prepare_ghz(3), bare_sites(model), yyy);
    double total = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const auto labels = CoefficientTensor::labels_of(i, 3);
        CHECK(std::abs(t.at_index(i) - closed_form_333(label_product(labels))) < 1e-12);
        CHECK(std::abs(born_probability(t, labels) - 0.125) < 1e-12);
        total += born_probability(t, labels);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("A-stage state is isomorphic to the bare GHZ state") {
    const SubsystemModel model{3};
    const std::vector<BasisId> yyy(3, BasisId::y);
    const CoefficientTensor bare =
        expansion_coefficients(prepare_ghz(3), bare_sites(model), yyy);
    const StateVector sa = run_A_stage(model, BasisId::y, prepare_ghz(3));
    const CoefficientTensor lifted =
        expansion_coefficients(sa, sa_sites(model, BasisId::y), yyy);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(lifted.at_index(i) - bare.at_index(i)) < 1e-12);
    }
    CHECK(lifted.residual_weight() < 1e-12);
}

TEST_CASE("full plan supports only even-parity x outcomes") {
    const ScenarioConfig config;
    const std::vector<BasisId> xxx(3, BasisId::x);
    const CoefficientTensor t = extract_plan(config, xxx);
    for (std::size_t i = 0; i < 8; ++i) {
        const auto labels = CoefficientTensor::labels_of(i, 3);
        CHECK(std::abs(t.at_index(i) - closed_form_222(label_product(labels))) < 1e-12);
    }
    const auto sign = support_sign(t, support_zero_tolerance(config.epsilon));
    REQUIRE(sign.has_value());
    CHECK(*sign == +1);
}

TEST_CASE("single-application plan supports only odd-parity mixed outcomes") {
    ScenarioConfig config;
    config.plan.b_apply = {1};
    const std::vector<BasisId> pattern = {BasisId::x, BasisId::y, BasisId::y};
    const CoefficientTensor t = extract_plan(config, pattern);
    double total = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const auto labels = CoefficientTensor::labels_of(i, 3);
        CHECK(std::abs(t.at_index(i) - closed_form_233(label_product(labels))) < 1e-12);
        const double expected = label_product(labels) == -1 ? 0.25 : 0.0;
        CHECK(std::abs(born_probability(t, labels) - expected) < 1e-12);
        total += born_probability(t, labels);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    const auto sign = support_sign(t, support_zero_tolerance(config.epsilon));
    REQUIRE(sign.has_value());
    CHECK(*sign == -1);
}

TEST_CASE("the y pattern of the idle plan has full support") {
    ScenarioConfig config;
    config.plan.b_apply = {};
    const std::vector<BasisId> yyy(3, BasisId::y);
    const CoefficientTensor t = extract_plan(config, yyy);
    CHECK(!support_sign(t, support_zero_tolerance(config.epsilon)).has_value());
    const SupportPattern pattern = support_pattern(t, support_zero_tolerance(config.epsilon));
    CHECK(pattern.nonzero_indices.size() == 8);
}

TEST_CASE("support_constraint labels sites by observer") {
    const ScenarioConfig config;
    const std::vector<BasisId> xxx(3, BasisId::x);
    const auto c1 = support_constraint(extract_plan(config, xxx), config.plan.a_basis,
                                       config.plan.b_basis,
                                       support_zero_tolerance(config.epsilon));
    REQUIRE(c1.has_value());
    CHECK(c1->str() == "B1*B2*B3 = +1");

    ScenarioConfig single = config;
    single.plan.b_apply = {1};
    const std::vector<BasisId> pattern = {BasisId::x, BasisId::y, BasisId::y};
    const auto c2 = support_constraint(extract_plan(single, pattern), config.plan.a_basis,
                                       config.plan.b_basis,
                                       support_zero_tolerance(config.epsilon));
    REQUIRE(c2.has_value());
    CHECK(c2->str() == "A2*A3*B1 = -1");
    CHECK(c2->sign == -1);
}

TEST_CASE("expansion rejects sites that do not match the state") {
    ScenarioConfig config;
    config.plan.b_apply = {1};
    const StateVector state = run_plan(config);

    // Sites built for a different application set miss the entangled B1.
    ScenarioPlan wrong = config.plan;
    wrong.b_apply = {2};
    const auto sites = sab_sites(config.model, wrong);
    const std::vector<BasisId> pattern = {BasisId::y, BasisId::x, BasisId::y};
    CHECK_THROWS_AS(expansion_coefficients(state, sites, pattern, config.epsilon),
                    NumericError);
}

TEST_CASE("expansion requires a partition of the state's factors") {
    const SubsystemModel model{3};
    const std::vector<BasisId> yyy(3, BasisId::y);
    const StateVector sa = run_A_stage(model, BasisId::y, prepare_ghz(3));
    CHECK_THROWS_AS(expansion_coefficients(sa, bare_sites(model), yyy),
                    std::invalid_argument);
}

TEST_CASE("support classification must be stable under tolerance perturbation") {
    // One entry sits inside the decade around the cutoff: ambiguous.
    std::vector<Amplitude> entries(8, Amplitude{0, 0});
    entries[0] = Amplitude{1.0, 0};
    entries[3] = Amplitude{5e-8, 0};
    const CoefficientTensor ambiguous(std::vector<BasisId>(3, BasisId::x),
                                      std::move(entries), 0.0);
    CHECK_THROWS_AS(support_pattern(ambiguous, 1e-8), NumericError);

    std::vector<Amplitude> empty(8, Amplitude{1e-30, 0});
    const CoefficientTensor zero(std::vector<BasisId>(3, BasisId::x), std::move(empty), 0.0);
    CHECK_THROWS_AS(support_pattern(zero, 1e-8), NumericError);
}

TEST_CASE("ghz_mub_amplitude matches the closed forms") {
    const std::vector<BasisId> yyy(3, BasisId::y);
    const std::vector<BasisId> xyy = {BasisId::x, BasisId::y, BasisId::y};
    for (std::size_t i = 0; i < 8; ++i) {
        const auto labels = CoefficientTensor::labels_of(i, 3);
        CHECK(std::abs(ghz_mub_amplitude(3, yyy, labels) -
                       closed_form_333(label_product(labels))) < 1e-12);
        CHECK(std::abs(ghz_mub_amplitude(3, xyy, labels) -
                       closed_form_233(label_product(labels))) < 1e-12);
    }
}

TEST_CASE("amplitude composition agrees with the direct inner product and the simulation") {
    ScenarioConfig config;
    config.plan.b_apply = {1};
    const std::vector<BasisId> pattern = {BasisId::x, BasisId::y, BasisId::y};
    const CoefficientTensor t = extract_plan(config, pattern);

    double total = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const auto labels = CoefficientTensor::labels_of(i, 3);
        const Amplitude composed =
            compose_amplitude(3, config.plan.a_basis, config.plan.b_basis, 1, labels);
        const Amplitude direct = ghz_mub_amplitude(3, pattern, labels);
        CHECK(std::abs(composed - direct) < 1e-12);
        CHECK(std::abs(composed - t.at(labels)) < 1e-12);
        CHECK(std::abs(std::norm(composed) - born_probability(t, labels)) < 1e-12);
        total += std::norm(composed);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("scan_patterns covers the plan-consistent patterns in order") {
    const ScenarioConfig config;
    const auto scan = scan_patterns(config);
    REQUIRE(scan.size() == 8);
    CHECK(scan[0].pattern == std::vector<BasisId>{BasisId::x, BasisId::x, BasisId::x});
    CHECK(scan[7].pattern == std::vector<BasisId>{BasisId::y, BasisId::y, BasisId::y});
    CHECK(scan[0].b_apply == std::vector<int>{1, 2, 3});
    CHECK(scan[7].b_apply.empty());

    const auto constraints = derived_constraints(scan);
    REQUIRE(constraints.size() == 4);
    CHECK(constraints[0].str() == "B1*B2*B3 = +1");
    CHECK(constraints[1].str() == "A2*A3*B1 = -1");
    CHECK(constraints[2].str() == "A1*A3*B2 = -1");
    CHECK(constraints[3].str() == "A1*A2*B3 = -1");

    // The four mixed/odd patterns carry no deterministic correlation.
    for (const auto& entry : scan) {
        int basis_y = 0;
        for (const BasisId n : entry.pattern) {
            basis_y += n == BasisId::y ? 1 : 0;
        }
        const bool expect_constraint = basis_y == 0 || basis_y == 2;
        CHECK(entry.constraint.has_value() == expect_constraint);
    }
}

TEST_CASE("scan_patterns respects a restricted plan") {
    ScenarioConfig config;
    config.plan.b_apply = {1};
    const auto scan = scan_patterns(config);
    REQUIRE(scan.size() == 2);
    CHECK(scan[0].pattern == std::vector<BasisId>{BasisId::x, BasisId::y, BasisId::y});
    REQUIRE(scan[0].constraint.has_value());
    CHECK(scan[0].constraint->sign == -1);
    CHECK(!scan[1].constraint.has_value());

    config.plan.b_apply = {};
    const auto idle = scan_patterns(config);
    REQUIRE(idle.size() == 1);
    CHECK(!idle[0].constraint.has_value());
}

TEST_CASE("a product initial state has no deterministic correlations") {
    ScenarioConfig config;
    config.initial = InitialState::product;
    const auto scan = scan_patterns(config);
    REQUIRE(scan.size() == 8);
    for (const auto& entry : scan) {
        CHECK(!entry.constraint.has_value());
        CHECK(entry.tensor.residual_weight() < 1e-12);
    }
}

TEST_CASE("site states of bare sites are the plain mub states") {
    const SubsystemModel model{3};
    const auto sites = bare_sites(model);
    for (BasisId n : kAllBases) {
        for (Eigenvalue l : kEigenvalues) {
            CHECK(max_abs_diff(site_state(sites[0], n, l),
                               mub_state(n, l, model.s_label(1))) < 1e-12);
        }
    }
}
