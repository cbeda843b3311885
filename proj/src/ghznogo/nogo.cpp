#include "ghznogo/nogo.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ghznogo {

std::string FactLabel::str() const {
    return (observer == Observer::a ? "A" : "B") + std::to_string(site);
}

ParityConstraint::ParityConstraint(std::vector<FactLabel> variables, int s)
    : vars(std::move(variables)), sign(s) {
    if (vars.empty()) {
        throw std::invalid_argument("parity constraint needs at least one variable");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("parity constraint sign must be +1 or -1");
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
        throw std::invalid_argument("parity constraint variables must be distinct");
    }
}

std::string ParityConstraint::str() const {
    std::string out;
    for (const FactLabel& v : vars) {
        if (!out.empty()) {
            out += "*";
        }
        out += v.str();
    }
    out += sign > 0 ? " = +1" : " = -1";
    return out;
}

FactAssignment::FactAssignment(std::map<FactLabel, int> values) : values_(std::move(values)) {
    for (const auto& [label, v] : values_) {
        if (v != 1 && v != -1) {
            throw std::invalid_argument("fact value for " + label.str() + " must be +1 or -1");
        }
    }
}

FactAssignment FactAssignment::from_bits(std::span<const FactLabel> universe, std::uint32_t bits) {
    std::map<FactLabel, int> values;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        values[universe[i]] = (bits >> i) & 1u ? -1 : +1;
    }
    return FactAssignment(std::move(values));
}

int FactAssignment::value(const FactLabel& label) const {
    const auto it = values_.find(label);
    if (it == values_.end()) {
        throw std::invalid_argument("assignment is missing label " + label.str());
    }
    return it->second;
}

std::vector<FactLabel> fact_universe(int k) {
    std::vector<FactLabel> out;
    for (int m = 1; m <= k; ++m) {
        out.push_back({Observer::a, m});
    }
    for (int m = 1; m <= k; ++m) {
        out.push_back({Observer::b, m});
    }
    return out;
}

std::vector<ParityConstraint> ghz_constraint_system() {
    const FactLabel a1{Observer::a, 1}, a2{Observer::a, 2}, a3{Observer::a, 3};
    const FactLabel b1{Observer::b, 1}, b2{Observer::b, 2}, b3{Observer::b, 3};
    return {
        ParityConstraint({b1, b2, b3}, +1),
        ParityConstraint({b1, a2, a3}, -1),
        ParityConstraint({a1, b2, a3}, -1),
        ParityConstraint({a1, a2, b3}, -1),
    };
}

std::vector<bool> check(const FactAssignment& assignment,
                        std::span<const ParityConstraint> system) {
    std::vector<bool> out;
    out.reserve(system.size());
    for (const ParityConstraint& c : system) {
        int product = 1;
        for (const FactLabel& v : c.vars) {
            product *= assignment.value(v);
        }
        out.push_back(product == c.sign);
    }
    return out;
}

EnumerationResult exhaustive_satisfiability(std::span<const ParityConstraint> system,
                                            std::span<const FactLabel> universe) {
    if (universe.size() > static_cast<std::size_t>(kEnumerationVarCap)) {
        throw std::invalid_argument("enumeration bound exceeded: " +
                                    std::to_string(universe.size()) + " variables (cap " +
                                    std::to_string(kEnumerationVarCap) + ")");
    }
    std::vector<FactLabel> sorted_universe(universe.begin(), universe.end());
    std::sort(sorted_universe.begin(), sorted_universe.end());
    if (std::adjacent_find(sorted_universe.begin(), sorted_universe.end()) !=
        sorted_universe.end()) {
        throw std::invalid_argument("enumeration universe has duplicate labels");
    }

    // Bitmask per constraint for fast parity evaluation.
    std::vector<std::uint32_t> masks;
    std::vector<std::uint32_t> want_odd;
    for (const ParityConstraint& c : system) {
        std::uint32_t mask = 0;
        for (const FactLabel& v : c.vars) {
            const auto it =
                std::lower_bound(sorted_universe.begin(), sorted_universe.end(), v);
            if (it == sorted_universe.end() || *it != v) {
                throw std::invalid_argument("universe is missing constraint variable " + v.str());
            }
            mask |= 1u << (it - sorted_universe.begin());
        }
        masks.push_back(mask);
        want_odd.push_back(c.sign < 0 ? 1u : 0u);
    }

    EnumerationResult result;
    const std::uint64_t total = std::uint64_t{1} << sorted_universe.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        bool ok = true;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if ((std::popcount(static_cast<std::uint32_t>(bits) & masks[i]) & 1u) !=
                want_odd[i]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++result.witness_count;
            if (result.witnesses.size() < kMaxStoredWitnesses) {
                result.witnesses.push_back(FactAssignment::from_bits(
                    sorted_universe, static_cast<std::uint32_t>(bits)));
            }
        }
    }
    result.count_checked = total;
    result.satisfiable = result.witness_count > 0;
    return result;
}

EnumerationResult exhaustive_satisfiability(std::span<const ParityConstraint> system) {
    std::set<FactLabel> vars;
    for (const ParityConstraint& c : system) {
        vars.insert(c.vars.begin(), c.vars.end());
    }
    const std::vector<FactLabel> universe(vars.begin(), vars.end());
    return exhaustive_satisfiability(system, universe);
}

Gf2Result gf2_satisfiability(std::span<const ParityConstraint> system) {
    std::set<FactLabel> var_set;
    for (const ParityConstraint& c : system) {
        var_set.insert(c.vars.begin(), c.vars.end());
    }
    const std::vector<FactLabel> vars(var_set.begin(), var_set.end());
    if (vars.size() > 64 || system.size() > 64) {
        throw std::invalid_argument("GF(2) solver supports up to 64 variables and 64 constraints");
    }

    struct Row {
        std::uint64_t coeffs = 0;
        std::uint64_t combo = 0;  // which input rows were summed into this one
        unsigned rhs = 0;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < system.size(); ++i) {
        Row row;
        for (const FactLabel& v : system[i].vars) {
            const auto it = std::lower_bound(vars.begin(), vars.end(), v);
            row.coeffs |= std::uint64_t{1} << (it - vars.begin());
        }
        row.combo = std::uint64_t{1} << i;
        row.rhs = system[i].sign < 0 ? 1u : 0u;
        rows.push_back(row);
    }

    // Gauss-Jordan elimination, tracking the combination of input rows.
    std::vector<std::size_t> pivot_row_of_col(vars.size(), SIZE_MAX);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < vars.size() && next_row < rows.size(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            if (rows[r].coeffs & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot == SIZE_MAX) {
            continue;
        }
        std::swap(rows[next_row], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next_row && (rows[r].coeffs & bit)) {
                rows[r].coeffs ^= rows[next_row].coeffs;
                rows[r].combo ^= rows[next_row].combo;
                rows[r].rhs ^= rows[next_row].rhs;
            }
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }

    Gf2Result result;
    for (const Row& row : rows) {
        if (row.coeffs == 0 && row.rhs == 1) {
            result.satisfiable = false;
            for (std::size_t i = 0; i < system.size(); ++i) {
                if (row.combo & (std::uint64_t{1} << i)) {
                    result.certificate.push_back(i);
                }
            }
            return result;
        }
    }

    result.satisfiable = true;
    std::map<FactLabel, int> values;
    for (std::size_t col = 0; col < vars.size(); ++col) {
        // Free variables get x=0, i.e. value +1; pivots read off their row's
        // rhs (other pivots are already eliminated from it).
        unsigned x = 0;
        if (pivot_row_of_col[col] != SIZE_MAX) {
            x = rows[pivot_row_of_col[col]].rhs;
        }
        values[vars[col]] = x ? -1 : +1;
    }
    result.witness = FactAssignment(std::move(values));
    return result;
}

std::vector<MerminTerm> mermin_observable_table() {
    return {
        {"XXX", +1},
        {"XYY", -1},
        {"YXY", -1},
        {"YYX", -1},
    };
}

std::vector<ParityConstraint> mermin_reference_set() {
    std::vector<ParityConstraint> out;
    for (const MerminTerm& term : mermin_observable_table()) {
        std::vector<FactLabel> vars;
        for (std::size_t i = 0; i < term.axes.size(); ++i) {
            const Observer obs = term.axes[i] == 'X' ? Observer::b : Observer::a;
            vars.push_back({obs, static_cast<int>(i) + 1});
        }
        out.emplace_back(std::move(vars), term.sign);
    }
    return out;
}

std::vector<ParityConstraint> normalized(std::span<const ParityConstraint> system) {
    std::vector<ParityConstraint> out(system.begin(), system.end());
    std::sort(out.begin(), out.end(), [](const ParityConstraint& a, const ParityConstraint& b) {
        return std::tie(a.vars, a.sign) < std::tie(b.vars, b.sign);
    });
    return out;
}

}  // namespace ghznogo
