#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ghznogo/bases.hpp"
#include "ghznogo/hilbert.hpp"
#include "ghznogo/nogo.hpp"
#include "ghznogo/scenario.hpp"

namespace ghznogo {

// Support classification uses a coarser cutoff than amplitude comparisons:
// two orders of magnitude above epsilon.
inline double support_zero_tolerance(double epsilon) {
    return 100.0 * epsilon;
}

// One logical ±1-valued site of a composite state: a group of factors
// carrying an effective two-dimensional subspace. `plus`/`minus` are the
// embedded images of the native-basis eigenstates, so the site's basis-n
// states are linear combinations with bare single-qubit overlap
// coefficients: Σ_p ⟨p^(native)|l^(n)⟩ e_p.
struct EffectiveSite {
    std::vector<std::string> factors;
    BasisId native_basis;
    StateVector plus;
    StateVector minus;
};

// The site's |l^(n)⟩ analog, on the site's factor layout.
StateVector site_state(const EffectiveSite& site, BasisId n, Eigenvalue l);

// Site builders for the three pipeline stages.
std::vector<EffectiveSite> bare_sites(const SubsystemModel& model);
std::vector<EffectiveSite> sa_sites(const SubsystemModel& model, BasisId a_basis);
// Sites of the full SAB state: pairs with an applied B unitary carry the
// basis-b triple states; unapplied pairs carry |l^(a)⟩_S|l^(a)⟩_A|initial⟩_B.
std::vector<EffectiveSite> sab_sites(const SubsystemModel& model, const ScenarioPlan& plan);

// Expansion coefficients of a state over per-site basis product states,
// indexed by eigenvalue tuples (big-endian over sites, plus before minus).
class CoefficientTensor {
  public:
    CoefficientTensor(std::vector<BasisId> site_bases, std::vector<Amplitude> entries,
                      double residual_weight);

    std::size_t site_count() const { return site_bases_.size(); }
    const std::vector<BasisId>& site_bases() const { return site_bases_; }
    std::size_t entry_count() const { return entries_.size(); }

    Amplitude at_index(std::size_t index) const { return entries_[index]; }
    Amplitude at(std::span<const Eigenvalue> labels) const;

    static std::size_t index_of(std::span<const Eigenvalue> labels);
    static std::vector<Eigenvalue> labels_of(std::size_t index, std::size_t site_count);

    // Σ|c|² and the weight of the state outside the effective product space.
    double total_weight() const;
    double residual_weight() const { return residual_weight_; }

  private:
    std::vector<BasisId> site_bases_;
    std::vector<Amplitude> entries_;
    double residual_weight_;
};

// Projects `state` onto the per-site basis product states. The sites must
// partition the state's factors. Throws NumericError if weight outside the
// effective product space exceeds epsilon (wrong effective-subspace
// assumption).
CoefficientTensor expansion_coefficients(const StateVector& state,
                                         std::span<const EffectiveSite> sites,
                                         std::span<const BasisId> site_bases,
                                         double epsilon = kDefaultEpsilon);

// The set of eigenvalue tuples with |c| above the cutoff. Classification
// must be stable when the cutoff moves one decade either way; otherwise (or
// on an empty support) NumericError.
struct SupportPattern {
    std::vector<std::size_t> nonzero_indices;  // sorted entry indices
    double zero_tolerance;
};

SupportPattern support_pattern(const CoefficientTensor& tensor, double zero_tolerance);

// +1 or -1 if every supported tuple has that label product, nullopt if both
// products occur.
std::optional<int> support_sign(const CoefficientTensor& tensor, double zero_tolerance);

// Promotes a deterministic support to a named constraint: site m measured in
// basis b becomes B_m, in basis a becomes A_m. Patterns using any other
// basis cannot be labeled and are rejected.
std::optional<ParityConstraint> support_constraint(const CoefficientTensor& tensor,
                                                   BasisId a_basis, BasisId b_basis,
                                                   double zero_tolerance);

double born_probability(const CoefficientTensor& tensor, std::span<const Eigenvalue> labels);

// ⟨l1^(n1), ..., lk^(nk) | GHZ⟩ on the bare k-qubit system.
Amplitude ghz_mub_amplitude(int k, std::span<const BasisId> pattern,
                            std::span<const Eigenvalue> labels);

// The two-step amplitude composition for a plan with a single B-measured
// site: Σ_t ⟨l_bsite^(b) | t^(a)⟩ · ⟨(labels with site -> t^(a)) | GHZ⟩.
// Agrees entrywise with ghz_mub_amplitude of the mixed pattern and with the
// extracted coefficients of the simulated plan.
Amplitude compose_amplitude(int k, BasisId a_basis, BasisId b_basis, int b_site,
                            std::span<const Eigenvalue> labels);

// One scenario variant: a basis pattern, the B-stage applications that
// realize it, the extracted tensor, and the detected constraint (if any).
struct DerivedCorrelation {
    std::vector<BasisId> pattern;
    std::vector<int> b_apply;
    CoefficientTensor tensor;
    std::optional<ParityConstraint> constraint;
};

// Scans every basis pattern consistent with the configured plan: a site in
// b_apply may be read in basis b (observer B's fact) or in basis a (observer
// A's fact recorded earlier); a site outside b_apply only in basis a. Each
// pattern is extracted from the state of the plan applying B exactly at the
// pattern's basis-b sites. Patterns are ordered with basis b first at the
// most significant site, so the full plan scans (b,b,b), (b,b,a), ...,
// (a,a,a).
std::vector<DerivedCorrelation> scan_patterns(const ScenarioConfig& config,
                                              CompletionConvention conv =
                                                  CompletionConvention::aligned);

// Constraints of the derived correlations, in order.
std::vector<ParityConstraint> derived_constraints(std::span<const DerivedCorrelation> derived);

}  // namespace ghznogo
