#include "ghznogo/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace ghznogo {

namespace {

std::size_t checked_dim_product(std::size_t a, std::size_t b) {
    if (b != 0 && a > kDimensionCap / b) {
        throw std::invalid_argument("total dimension exceeds the 2^20 cap; scenario too large");
    }
    return a * b;
}

}  // namespace

FactorLayout::FactorLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::unordered_set<std::string_view> seen;
    for (const Factor& f : factors_) {
        if (f.dim == 0) {
            throw std::invalid_argument("factor '" + f.label + "' has dimension 0");
        }
        if (!seen.insert(f.label).second) {
            throw std::invalid_argument("duplicate factor label '" + f.label + "'");
        }
        total_dim_ = checked_dim_product(total_dim_, f.dim);
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) {
        strides_[i - 1] = strides_[i] * factors_[i].dim;
    }
}

FactorLayout FactorLayout::qubits(std::span<const std::string> labels) {
    std::vector<Factor> fs;
    fs.reserve(labels.size());
    for (const std::string& l : labels) {
        fs.push_back({l, 2});
    }
    return FactorLayout(std::move(fs));
}

bool FactorLayout::has(std::string_view label) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.label == label; });
}

std::size_t FactorLayout::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].label == label) {
            return i;
        }
    }
    throw std::invalid_argument("unknown factor label '" + std::string(label) + "'");
}

std::size_t FactorLayout::flatten(std::span<const std::size_t> digits) const {
    if (digits.size() != factors_.size()) {
        throw std::invalid_argument("digit count does not match factor count");
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= factors_[i].dim) {
            throw std::invalid_argument("digit out of range for factor '" + factors_[i].label + "'");
        }
        flat += digits[i] * strides_[i];
    }
    return flat;
}

std::vector<std::size_t> FactorLayout::digits(std::size_t flat) const {
    std::vector<std::size_t> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = (flat / strides_[i]) % factors_[i].dim;
    }
    return out;
}

StateVector::StateVector(FactorLayout layout, std::vector<Amplitude> amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
    if (amps_.size() != layout_.total_dim()) {
        throw std::invalid_argument("amplitude count does not match layout dimension");
    }
    for (const Amplitude& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
    }
}

StateVector StateVector::basis_state(FactorLayout layout, std::size_t index) {
    if (index >= layout.total_dim()) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Amplitude> amps(layout.total_dim(), Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return StateVector(std::move(layout), std::move(amps));
}

double StateVector::norm() const {
    double sq = 0.0;
    for (const Amplitude& a : amps_) {
        sq += std::norm(a);
    }
    return std::sqrt(sq);
}

Operator::Operator(std::size_t dim) : dim_(dim), entries_(dim * dim, Amplitude{0.0, 0.0}) {
    if (dim == 0 || dim > kDimensionCap) {
        throw std::invalid_argument("operator dimension out of range");
    }
}

Operator::Operator(std::size_t dim, std::vector<Amplitude> entries) : Operator(dim) {
    if (entries.size() != dim * dim) {
        throw std::invalid_argument("entry count does not match operator dimension");
    }
    entries_ = std::move(entries);
}

Operator Operator::identity(std::size_t dim) {
    Operator op(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        op.at(i, i) = Amplitude{1.0, 0.0};
    }
    return op;
}

Operator Operator::adjoint() const {
    Operator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

Operator Operator::operator*(const Operator& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("operator dimension mismatch in product");
    }
    Operator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Amplitude lhs_rk = at(r, k);
            if (lhs_rk == Amplitude{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out.at(r, c) += lhs_rk * rhs.at(k, c);
            }
        }
    }
    return out;
}

double Operator::unitarity_defect() const {
    double defect = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            // (U†U)_rc = Σ_k conj(U_kr) U_kc
            Amplitude sum{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) {
                sum += std::conj(at(k, r)) * at(k, c);
            }
            if (r == c) {
                sum -= Amplitude{1.0, 0.0};
            }
            defect = std::max(defect, std::abs(sum));
        }
    }
    return defect;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<FactorLayout::Factor> fs;
    fs.reserve(a.layout().factor_count() + b.layout().factor_count());
    for (const auto& f : a.layout().factors()) {
        fs.push_back(f);
    }
    for (const auto& f : b.layout().factors()) {
        fs.push_back(f);
    }
    FactorLayout layout(std::move(fs));  // validates label disjointness and the cap

    std::vector<Amplitude> amps(layout.total_dim());
    const std::size_t bd = b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < bd; ++j) {
            amps[i * bd + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(layout), std::move(amps));
}

Operator tensor(const Operator& a, const Operator& b) {
    const std::size_t dim = checked_dim_product(a.dim(), b.dim());
    Operator out(dim);
    const std::size_t bd = b.dim();
    for (std::size_t ra = 0; ra < a.dim(); ++ra) {
        for (std::size_t ca = 0; ca < a.dim(); ++ca) {
            const Amplitude x = a.at(ra, ca);
            if (x == Amplitude{0.0, 0.0}) {
                continue;
            }
            for (std::size_t rb = 0; rb < bd; ++rb) {
                for (std::size_t cb = 0; cb < bd; ++cb) {
                    out.at(ra * bd + rb, ca * bd + cb) = x * b.at(rb, cb);
                }
            }
        }
    }
    return out;
}

namespace {

struct TargetPlan {
    std::size_t op_dim = 1;
    // Flat-index offset of each op-basis state, and the op-digit strides.
    std::vector<std::size_t> offsets;
    // Flat indices with all target digits zero, one per rest-configuration.
    std::vector<std::size_t> rest_bases;
};

TargetPlan plan_targets(const Operator& op, const FactorLayout& layout,
                        std::span<const std::string> targets) {
    std::vector<std::size_t> target_idx;
    target_idx.reserve(targets.size());
    for (const std::string& t : targets) {
        std::size_t i = layout.index_of(t);
        if (std::find(target_idx.begin(), target_idx.end(), i) != target_idx.end()) {
            throw std::invalid_argument("repeated target label '" + t + "'");
        }
        target_idx.push_back(i);
    }

    TargetPlan plan;
    for (std::size_t i : target_idx) {
        plan.op_dim *= layout.factor(i).dim;
    }
    if (plan.op_dim != op.dim()) {
        throw std::invalid_argument("operator dimension does not match target factors");
    }

    // offsets[m]: decompose m big-endian over the target dims, weight each
    // digit by the target factor's stride in the full layout.
    plan.offsets.assign(plan.op_dim, 0);
    for (std::size_t m = 0; m < plan.op_dim; ++m) {
        std::size_t rem = m;
        for (std::size_t j = target_idx.size(); j-- > 0;) {
            const std::size_t d = layout.factor(target_idx[j]).dim;
            plan.offsets[m] += (rem % d) * layout.stride(target_idx[j]);
            rem /= d;
        }
    }

    plan.rest_bases.reserve(layout.total_dim() / plan.op_dim);
    for (std::size_t i = 0; i < layout.total_dim(); ++i) {
        bool base = true;
        for (std::size_t t : target_idx) {
            if ((i / layout.stride(t)) % layout.factor(t).dim != 0) {
                base = false;
                break;
            }
        }
        if (base) {
            plan.rest_bases.push_back(i);
        }
    }
    return plan;
}

}  // namespace

StateVector apply_on_targets(const Operator& op, const StateVector& state,
                             std::span<const std::string> targets) {
    const TargetPlan plan = plan_targets(op, state.layout(), targets);

    std::vector<Amplitude> out(state.dim(), Amplitude{0.0, 0.0});
    std::vector<Amplitude> in_block(plan.op_dim);
    for (std::size_t base : plan.rest_bases) {
        for (std::size_t m = 0; m < plan.op_dim; ++m) {
            in_block[m] = state[base + plan.offsets[m]];
        }
        for (std::size_t r = 0; r < plan.op_dim; ++r) {
            Amplitude sum{0.0, 0.0};
            for (std::size_t c = 0; c < plan.op_dim; ++c) {
                sum += op.at(r, c) * in_block[c];
            }
            out[base + plan.offsets[r]] = sum;
        }
    }
    return StateVector(state.layout(), std::move(out));
}

Operator embed_on_targets(const Operator& op, const FactorLayout& layout,
                          std::span<const std::string> targets) {
    const TargetPlan plan = plan_targets(op, layout, targets);

    Operator out(layout.total_dim());
    for (std::size_t base : plan.rest_bases) {
        for (std::size_t r = 0; r < plan.op_dim; ++r) {
            for (std::size_t c = 0; c < plan.op_dim; ++c) {
                out.at(base + plan.offsets[r], base + plan.offsets[c]) = op.at(r, c);
            }
        }
    }
    return out;
}

StateVector apply(const Operator& op, const StateVector& state) {
    if (op.dim() != state.dim()) {
        throw std::invalid_argument("operator dimension does not match state dimension");
    }
    std::vector<Amplitude> out(state.dim(), Amplitude{0.0, 0.0});
    for (std::size_t r = 0; r < op.dim(); ++r) {
        Amplitude sum{0.0, 0.0};
        for (std::size_t c = 0; c < op.dim(); ++c) {
            sum += op.at(r, c) * state[c];
        }
        out[r] = sum;
    }
    return StateVector(state.layout(), std::move(out));
}

StateVector reorder_factors(const StateVector& state, std::span<const std::string> new_order) {
    const FactorLayout& old_layout = state.layout();
    if (new_order.size() != old_layout.factor_count()) {
        throw std::invalid_argument("factor reorder must list every label exactly once");
    }
    std::vector<FactorLayout::Factor> fs;
    std::vector<std::size_t> source;  // source[i]: old index of new factor i
    fs.reserve(new_order.size());
    for (const std::string& label : new_order) {
        const std::size_t i = old_layout.index_of(label);
        source.push_back(i);
        fs.push_back(old_layout.factor(i));
    }
    FactorLayout new_layout(std::move(fs));  // rejects duplicates

    std::vector<Amplitude> amps(state.dim());
    std::vector<std::size_t> new_digits(new_order.size());
    for (std::size_t flat = 0; flat < state.dim(); ++flat) {
        const std::vector<std::size_t> old_digits = old_layout.digits(flat);
        for (std::size_t i = 0; i < source.size(); ++i) {
            new_digits[i] = old_digits[source[i]];
        }
        amps[new_layout.flatten(new_digits)] = state[flat];
    }
    return StateVector(std::move(new_layout), std::move(amps));
}

Amplitude inner(const StateVector& a, const StateVector& b) {
    if (a.layout() != b.layout()) {
        throw std::invalid_argument("inner product requires identical layouts");
    }
    Amplitude sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace ghznogo
