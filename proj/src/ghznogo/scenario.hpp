#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ghznogo/bases.hpp"
#include "ghznogo/hilbert.hpp"

namespace ghznogo {

// How a premeasurement unitary acts outside the subspace it is defined on.
// Both choices copy |l^(n)⟩|initial⟩ -> |l^(n)⟩|l^(n)⟩; physical results do
// not depend on the choice because the pipeline never leaves that subspace.
enum class CompletionConvention {
    // The state orthogonal to |initial⟩ maps onto the orthogonal complement
    // of the copied eigenstate (a controlled basis change).
    aligned,
    // Same, with the complement image multiplied by i.
    phased,
};

// Subsystem inventory: k system qubits S1..Sk, one observer-A qubit per
// system qubit, one observer-B qubit per (S,A) pair. All ancillas start in
// the basis-1 +1 state.
struct SubsystemModel {
    int system_qubits = 3;

    std::string s_label(int m) const;  // "S1".. (m is 1-based)
    std::string a_label(int m) const;
    std::string b_label(int m) const;

    std::vector<std::string> system_labels() const;
    FactorLayout system_layout() const;  // S1..Sk
    FactorLayout sa_layout() const;      // S1..Sk, A1..Ak
    FactorLayout full_layout() const;    // S1..Sk, A1..Ak, B1..Bk

    bool operator==(const SubsystemModel&) const = default;
};

// Which bases the two observers copy, and which of the B-stage unitaries are
// applied. b_apply is kept sorted and duplicate-free.
struct ScenarioPlan {
    BasisId a_basis = BasisId::y;
    BasisId b_basis = BasisId::x;
    std::vector<int> b_apply = {1, 2, 3};

    bool operator==(const ScenarioPlan&) const = default;
};

enum class InitialState {
    ghz,
    product,  // |0...0⟩; exhibits no deterministic correlations
};

struct ScenarioConfig {
    SubsystemModel model;
    ScenarioPlan plan;
    InitialState initial = InitialState::ghz;
    double epsilon = kDefaultEpsilon;

    bool operator==(const ScenarioConfig&) const = default;
};

// (|+1^(1)⟩^⊗k + |-1^(1)⟩^⊗k)/√2 on factors S1..Sk. Requires k >= 2.
StateVector prepare_ghz(int k);

// |+1^(1)⟩^⊗k on factors S1..Sk.
StateVector prepare_product(int k);

// 2x2 unitary mapping |initial⟩ = |+1^(1)⟩ to |l^(n)⟩ (the ancilla side of a
// premeasurement), completed on the complement per the convention.
Operator completion_unitary(BasisId n, Eigenvalue l,
                            CompletionConvention conv = CompletionConvention::aligned);

// 4x4 unitary on (source ⊗ ancilla) satisfying
//   U(|l^(n)⟩ ⊗ |initial⟩) = |l^(n)⟩ ⊗ |l^(n)⟩  for l = ±1.
// For n=1 and the aligned convention this is exactly CNOT.
Operator premeasurement_unitary(BasisId n,
                                CompletionConvention conv = CompletionConvention::aligned);

// The copied pair state |l^(a)⟩_S |l^(a)⟩_A as a 4-amplitude block (big-endian
// over source then ancilla).
std::vector<Amplitude> sa_copy_amps(BasisId a_basis, Eigenvalue l);

// Effective-qubit basis state of the pair: Σ_p ⟨p^(a)|l^(n)⟩ |p^(a)⟩_S|p^(a)⟩_A,
// the exact image of the bare |l^(n)⟩ under the copying isometry.
std::vector<Amplitude> sa_basis_amps(BasisId a_basis, BasisId n, Eigenvalue l);

// 8x8 unitary on (S_m A_m pair ⊗ B_m ancilla) copying the pair's effective
// basis-b label into B_m and acting as identity on the unreached complement
// of the pair space.
Operator b_premeasurement_unitary(BasisId a_basis, BasisId b_basis,
                                  CompletionConvention conv = CompletionConvention::aligned);

// ⊗_m U^{SA}_m (system_state ⊗ ancilla inits): entangles each S_m with A_m.
// Returns a state on sa_layout().
StateVector run_A_stage(const SubsystemModel& model, BasisId a_basis,
                        const StateVector& system_state,
                        CompletionConvention conv = CompletionConvention::aligned,
                        double epsilon = kDefaultEpsilon);

// The B-stage unitary for pair m embedded in the full SAB space with
// identities elsewhere. The three embeddings pairwise commute.
Operator embed_b_unitary(const SubsystemModel& model, const ScenarioPlan& plan, int m,
                         CompletionConvention conv = CompletionConvention::aligned);

// Full pipeline: initial state -> A stage -> B-stage unitaries for each m in
// b_apply, ascending. Returns the final state on full_layout().
StateVector run_plan(const ScenarioConfig& config,
                     CompletionConvention conv = CompletionConvention::aligned);

// Parses a UTF-8 JSON scenario description. Omitted keys take the defaults
// above; unknown keys, malformed JSON, and out-of-range values raise
// ParseError with a descriptive message (including line/column for syntax
// errors).
ScenarioConfig parse_scenario(std::string_view text);

}  // namespace ghznogo
