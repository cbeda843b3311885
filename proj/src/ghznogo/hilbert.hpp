#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghznogo {

using Amplitude = std::complex<double>;

// Default tolerance for amplitude/norm/unitarity comparisons.
inline constexpr double kDefaultEpsilon = 1e-10;

// Hard cap on total Hilbert dimension. The largest scenario this artifact
// supports is 6 system qubits -> 18 qubits total -> dim 2^18.
inline constexpr std::size_t kDimensionCap = std::size_t{1} << 20;

// An ordered list of labeled tensor factors. The first factor is the most
// significant digit of the flat index (big-endian over factors).
class FactorLayout {
  public:
    struct Factor {
        std::string label;
        std::size_t dim;
        bool operator==(const Factor&) const = default;
    };

    FactorLayout() = default;
    explicit FactorLayout(std::vector<Factor> factors);

    // Convenience: one dim-2 factor per label.
    static FactorLayout qubits(std::span<const std::string> labels);

    std::size_t total_dim() const { return total_dim_; }
    std::size_t factor_count() const { return factors_.size(); }
    const Factor& factor(std::size_t i) const { return factors_[i]; }
    std::span<const Factor> factors() const { return factors_; }

    bool has(std::string_view label) const;
    std::size_t index_of(std::string_view label) const;  // throws on unknown label
    // Product of the dims of all factors after `i`.
    std::size_t stride(std::size_t i) const { return strides_[i]; }

    std::size_t flatten(std::span<const std::size_t> digits) const;
    std::vector<std::size_t> digits(std::size_t flat) const;

    bool operator==(const FactorLayout&) const = default;

  private:
    std::vector<Factor> factors_;
    std::vector<std::size_t> strides_;
    std::size_t total_dim_ = 1;
};

// Dense complex state vector over a factor layout. Immutable after
// construction; all entries are validated finite.
class StateVector {
  public:
    StateVector(FactorLayout layout, std::vector<Amplitude> amps);

    static StateVector basis_state(FactorLayout layout, std::size_t index);

    const FactorLayout& layout() const { return layout_; }
    std::size_t dim() const { return amps_.size(); }
    Amplitude operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Amplitude> amps() const { return amps_; }

    double norm() const;

  private:
    FactorLayout layout_;
    std::vector<Amplitude> amps_;
};

// Dense complex square matrix, row-major. Carries no factor labels; it is
// attached to factors at application time.
class Operator {
  public:
    explicit Operator(std::size_t dim);
    Operator(std::size_t dim, std::vector<Amplitude> entries);

    static Operator identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Amplitude& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Amplitude& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    Operator adjoint() const;
    Operator operator*(const Operator& rhs) const;

    // max_ij |(U†U - I)_ij|
    double unitarity_defect() const;

  private:
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

// Tensor products under the big-endian index convention. Labels of the two
// state layouts must be disjoint; the combined dimension must stay under
// kDimensionCap.
StateVector tensor(const StateVector& a, const StateVector& b);
Operator tensor(const Operator& a, const Operator& b);

// Applies `op` to the listed target factors (in the given order) and the
// identity to every other factor. The layout of the result is unchanged.
StateVector apply_on_targets(const Operator& op, const StateVector& state,
                             std::span<const std::string> targets);

// The full-dimension operator op ⊗ identity-on-rest, with the same action as
// apply_on_targets.
Operator embed_on_targets(const Operator& op, const FactorLayout& layout,
                          std::span<const std::string> targets);

// Full-dimension matrix-vector product (op.dim() must equal state.dim()).
StateVector apply(const Operator& op, const StateVector& state);

// Permutes the factor order of the layout; amplitudes move accordingly.
StateVector reorder_factors(const StateVector& state, std::span<const std::string> new_order);

// ⟨a|b⟩, conjugate-linear in the first argument. Layouts must match.
Amplitude inner(const StateVector& a, const StateVector& b);

double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace ghznogo
