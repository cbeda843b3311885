#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ghznogo/hilbert.hpp"
#include "ghznogo/nogo.hpp"

namespace ghznogo::testing {

// Deterministic normalized random state on the given layout.
inline StateVector random_state(const FactorLayout& layout, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Amplitude> amps(layout.total_dim());
    double norm_sq = 0.0;
    for (Amplitude& a : amps) {
        a = Amplitude{gauss(rng), gauss(rng)};
        norm_sq += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (Amplitude& a : amps) {
        a *= scale;
    }
    return StateVector(layout, std::move(amps));
}

// Random parity system over at most max_vars labels. Constraint count and
// variable subsets are drawn uniformly; every constraint is nonempty.
inline std::vector<ParityConstraint> random_parity_system(std::mt19937_64& rng, int max_vars,
                                                          int max_constraints) {
    std::uniform_int_distribution<int> var_count(1, max_vars);
    const int nvars = var_count(rng);
    std::vector<FactLabel> labels;
    for (int i = 0; i < nvars; ++i) {
        // Alternate observers so both kinds of label appear.
        labels.push_back({i % 2 == 0 ? Observer::a : Observer::b, i / 2 + 1});
    }

    std::uniform_int_distribution<int> constraint_count(0, max_constraints);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<ParityConstraint> system;
    const int ncons = constraint_count(rng);
    for (int c = 0; c < ncons; ++c) {
        std::vector<FactLabel> vars;
        while (vars.empty()) {
            vars.clear();
            for (const FactLabel& l : labels) {
                if (coin(rng)) {
                    vars.push_back(l);
                }
            }
        }
        system.emplace_back(std::move(vars), coin(rng) ? 1 : -1);
    }
    return system;
}

}  // namespace ghznogo::testing
