#include "ghznogo/correlations.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "ghznogo/errors.hpp"

namespace ghznogo {

namespace {

StateVector combine(const StateVector& plus, const StateVector& minus, Amplitude cp,
                    Amplitude cm) {
    std::vector<Amplitude> amps(plus.dim());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = cp * plus[i] + cm * minus[i];
    }
    return StateVector(plus.layout(), std::move(amps));
}

StateVector pair_state(const SubsystemModel& model, int m,
                       const std::vector<Amplitude>& amps) {
    const std::vector<std::string> labels = {model.s_label(m), model.a_label(m)};
    return StateVector(FactorLayout::qubits(labels), amps);
}

}  // namespace

StateVector site_state(const EffectiveSite& site, BasisId n, Eigenvalue l) {
    return combine(site.plus, site.minus,
                   mub_overlap(site.native_basis, Eigenvalue::plus, n, l),
                   mub_overlap(site.native_basis, Eigenvalue::minus, n, l));
}

std::vector<EffectiveSite> bare_sites(const SubsystemModel& model) {
    std::vector<EffectiveSite> sites;
    for (int m = 1; m <= model.system_qubits; ++m) {
        const std::string label = model.s_label(m);
        sites.push_back({{label},
                         BasisId::z,
                         mub_state(BasisId::z, Eigenvalue::plus, label),
                         mub_state(BasisId::z, Eigenvalue::minus, label)});
    }
    return sites;
}

std::vector<EffectiveSite> sa_sites(const SubsystemModel& model, BasisId a_basis) {
    std::vector<EffectiveSite> sites;
    for (int m = 1; m <= model.system_qubits; ++m) {
        sites.push_back({{model.s_label(m), model.a_label(m)},
                         a_basis,
                         pair_state(model, m, sa_copy_amps(a_basis, Eigenvalue::plus)),
                         pair_state(model, m, sa_copy_amps(a_basis, Eigenvalue::minus))});
    }
    return sites;
}

std::vector<EffectiveSite> sab_sites(const SubsystemModel& model, const ScenarioPlan& plan) {
    std::vector<EffectiveSite> sites;
    for (int m = 1; m <= model.system_qubits; ++m) {
        const bool applied = std::find(plan.b_apply.begin(), plan.b_apply.end(), m) !=
                             plan.b_apply.end();
        const std::vector<std::string> factors = {model.s_label(m), model.a_label(m),
                                                  model.b_label(m)};
        std::vector<StateVector> embedded;
        for (Eigenvalue l : kEigenvalues) {
            StateVector pair = applied
                                   ? pair_state(model, m, sa_basis_amps(plan.a_basis,
                                                                        plan.b_basis, l))
                                   : pair_state(model, m, sa_copy_amps(plan.a_basis, l));
            StateVector b_part = applied
                                     ? mub_state(plan.b_basis, l, model.b_label(m))
                                     : mub_state(BasisId::z, Eigenvalue::plus, model.b_label(m));
            embedded.push_back(tensor(pair, b_part));
        }
        sites.push_back({factors, applied ? plan.b_basis : plan.a_basis,
                         std::move(embedded[0]), std::move(embedded[1])});
    }
    return sites;
}

CoefficientTensor::CoefficientTensor(std::vector<BasisId> site_bases,
                                     std::vector<Amplitude> entries, double residual_weight)
    : site_bases_(std::move(site_bases)), entries_(std::move(entries)),
      residual_weight_(residual_weight) {
    if (entries_.size() != std::size_t{1} << site_bases_.size()) {
        throw std::invalid_argument("coefficient tensor needs 2^sites entries");
    }
}

std::size_t CoefficientTensor::index_of(std::span<const Eigenvalue> labels) {
    std::size_t index = 0;
    for (const Eigenvalue l : labels) {
        index = index * 2 + eigen_slot(l);
    }
    return index;
}

std::vector<Eigenvalue> CoefficientTensor::labels_of(std::size_t index, std::size_t site_count) {
    std::vector<Eigenvalue> labels(site_count);
    for (std::size_t i = site_count; i-- > 0;) {
        labels[i] = (index & 1) ? Eigenvalue::minus : Eigenvalue::plus;
        index >>= 1;
    }
    return labels;
}

Amplitude CoefficientTensor::at(std::span<const Eigenvalue> labels) const {
    if (labels.size() != site_bases_.size()) {
        throw std::invalid_argument("label tuple length does not match site count");
    }
    return entries_[index_of(labels)];
}

double CoefficientTensor::total_weight() const {
    double w = 0.0;
    for (const Amplitude& c : entries_) {
        w += std::norm(c);
    }
    return w;
}

CoefficientTensor expansion_coefficients(const StateVector& state,
                                         std::span<const EffectiveSite> sites,
                                         std::span<const BasisId> site_bases, double epsilon) {
    if (sites.size() != site_bases.size()) {
        throw std::invalid_argument("one basis id per site required");
    }

    // The site factor groups must partition the state's layout.
    std::vector<std::string> grouped_order;
    for (const EffectiveSite& site : sites) {
        grouped_order.insert(grouped_order.end(), site.factors.begin(), site.factors.end());
    }
    std::set<std::string> seen(grouped_order.begin(), grouped_order.end());
    if (seen.size() != grouped_order.size() ||
        grouped_order.size() != state.layout().factor_count()) {
        throw std::invalid_argument("site groups must partition the state's factors");
    }
    for (const std::string& label : grouped_order) {
        if (!state.layout().has(label)) {
            throw std::invalid_argument("site factor '" + label + "' not present in state");
        }
    }
    const StateVector grouped = reorder_factors(state, grouped_order);

    const std::size_t site_count = sites.size();
    std::vector<Amplitude> entries(std::size_t{1} << site_count);
    for (std::size_t index = 0; index < entries.size(); ++index) {
        const std::vector<Eigenvalue> labels =
            CoefficientTensor::labels_of(index, site_count);
        StateVector product = site_state(sites[0], site_bases[0], labels[0]);
        for (std::size_t i = 1; i < site_count; ++i) {
            product = tensor(product, site_state(sites[i], site_bases[i], labels[i]));
        }
        entries[index] = inner(product, grouped);
    }

    double captured = 0.0;
    for (const Amplitude& c : entries) {
        captured += std::norm(c);
    }
    const double norm = state.norm();
    const double residual = std::max(0.0, norm * norm - captured);
    if (residual > epsilon) {
        throw NumericError("residual weight " + std::to_string(residual) +
                           " outside the effective subspace; wrong site assumption");
    }
    return CoefficientTensor(std::vector<BasisId>(site_bases.begin(), site_bases.end()),
                             std::move(entries), residual);
}

SupportPattern support_pattern(const CoefficientTensor& tensor, double zero_tolerance) {
    const auto support_at = [&](double cutoff) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < tensor.entry_count(); ++i) {
            if (std::abs(tensor.at_index(i)) > cutoff) {
                idx.push_back(i);
            }
        }
        return idx;
    };
    const std::vector<std::size_t> support = support_at(zero_tolerance);
    if (support != support_at(zero_tolerance / 10.0) ||
        support != support_at(zero_tolerance * 10.0)) {
        throw NumericError("support classification unstable under tolerance perturbation");
    }
    if (support.empty()) {
        throw NumericError("empty support: tensor carries no weight at this tolerance");
    }
    return {support, zero_tolerance};
}

std::optional<int> support_sign(const CoefficientTensor& tensor, double zero_tolerance) {
    const SupportPattern pattern = support_pattern(tensor, zero_tolerance);
    std::set<int> signs;
    for (const std::size_t index : pattern.nonzero_indices) {
        signs.insert(std::popcount(index) % 2 == 0 ? +1 : -1);
    }
    if (signs.size() == 1) {
        return *signs.begin();
    }
    return std::nullopt;
}

std::optional<ParityConstraint> support_constraint(const CoefficientTensor& tensor,
                                                   BasisId a_basis, BasisId b_basis,
                                                   double zero_tolerance) {
    const std::optional<int> sign = support_sign(tensor, zero_tolerance);
    if (!sign) {
        return std::nullopt;
    }
    std::vector<FactLabel> vars;
    for (std::size_t i = 0; i < tensor.site_count(); ++i) {
        const BasisId n = tensor.site_bases()[i];
        const int site = static_cast<int>(i) + 1;
        if (n == b_basis) {
            vars.push_back({Observer::b, site});
        } else if (n == a_basis) {
            vars.push_back({Observer::a, site});
        } else {
            throw std::invalid_argument(
                "site basis outside {a_basis, b_basis}: no fact label for basis " +
                std::to_string(basis_index(n)));
        }
    }
    return ParityConstraint(std::move(vars), *sign);
}

double born_probability(const CoefficientTensor& tensor, std::span<const Eigenvalue> labels) {
    return std::norm(tensor.at(labels));
}

Amplitude ghz_mub_amplitude(int k, std::span<const BasisId> pattern,
                            std::span<const Eigenvalue> labels) {
    if (pattern.size() != static_cast<std::size_t>(k) || labels.size() != pattern.size()) {
        throw std::invalid_argument("pattern and labels must list one entry per qubit");
    }
    SubsystemModel model{k};
    StateVector bra = mub_state(pattern[0], labels[0], model.s_label(1));
    for (int m = 2; m <= k; ++m) {
        bra = tensor(bra, mub_state(pattern[m - 1], labels[m - 1], model.s_label(m)));
    }
    return inner(bra, prepare_ghz(k));
}

Amplitude compose_amplitude(int k, BasisId a_basis, BasisId b_basis, int b_site,
                            std::span<const Eigenvalue> labels) {
    if (b_site < 1 || b_site > k) {
        throw std::invalid_argument("B-measured site out of range");
    }
    const std::vector<BasisId> all_a(static_cast<std::size_t>(k), a_basis);
    std::vector<Eigenvalue> inner_labels(labels.begin(), labels.end());
    Amplitude sum{0.0, 0.0};
    for (Eigenvalue t : kEigenvalues) {
        inner_labels[b_site - 1] = t;
        sum += mub_overlap(b_basis, labels[b_site - 1], a_basis, t) *
               ghz_mub_amplitude(k, all_a, inner_labels);
    }
    return sum;
}

namespace {

DerivedCorrelation run_variant(const ScenarioConfig& config, CompletionConvention conv,
                               std::vector<int> b_apply, std::vector<BasisId> pattern) {
    ScenarioConfig variant = config;
    variant.plan.b_apply = b_apply;
    const StateVector state = run_plan(variant, conv);
    const std::vector<EffectiveSite> sites = sab_sites(variant.model, variant.plan);
    CoefficientTensor tensor =
        expansion_coefficients(state, sites, pattern, config.epsilon);
    std::optional<ParityConstraint> constraint =
        support_constraint(tensor, config.plan.a_basis, config.plan.b_basis,
                           support_zero_tolerance(config.epsilon));
    return {std::move(pattern), std::move(b_apply), std::move(tensor), std::move(constraint)};
}

}  // namespace

std::vector<DerivedCorrelation> scan_patterns(const ScenarioConfig& config,
                                              CompletionConvention conv) {
    const int k = config.model.system_qubits;
    const std::vector<int>& choosable = config.plan.b_apply;
    std::vector<DerivedCorrelation> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << choosable.size()); ++bits) {
        std::vector<BasisId> pattern(static_cast<std::size_t>(k), config.plan.a_basis);
        std::vector<int> b_apply;
        for (std::size_t i = 0; i < choosable.size(); ++i) {
            // Big-endian over the choosable sites; 0 -> basis b (B applied).
            const bool use_a = (bits >> (choosable.size() - 1 - i)) & 1;
            if (!use_a) {
                pattern[choosable[i] - 1] = config.plan.b_basis;
                b_apply.push_back(choosable[i]);
            }
        }
        out.push_back(run_variant(config, conv, std::move(b_apply), std::move(pattern)));
    }
    return out;
}

std::vector<ParityConstraint> derived_constraints(std::span<const DerivedCorrelation> derived) {
    std::vector<ParityConstraint> out;
    for (const DerivedCorrelation& d : derived) {
        if (d.constraint) {
            out.push_back(*d.constraint);
        }
    }
    return out;
}

}  // namespace ghznogo
