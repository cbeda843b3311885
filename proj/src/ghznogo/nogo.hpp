#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ghznogo {

// Which observer's record a ±1 fact belongs to.
enum class Observer : int {
    a = 0,  // the inner observer (copies basis a)
    b = 1,  // the outer observer (copies basis b)
};

// A named ±1 quantity: observer A's or B's recorded outcome at site m.
struct FactLabel {
    Observer observer;
    int site;  // 1-based

    auto operator<=>(const FactLabel&) const = default;
    std::string str() const;  // "A1", "B3", ...
};

// "Product of the named variables equals sign." Variables are kept sorted;
// an empty or duplicated variable list is rejected.
struct ParityConstraint {
    ParityConstraint(std::vector<FactLabel> variables, int sign);

    std::vector<FactLabel> vars;
    int sign;  // +1 or -1

    bool operator==(const ParityConstraint&) const = default;
    std::string str() const;  // "B1*A2*A3 = -1"
};

// A total map from fact labels to ±1.
class FactAssignment {
  public:
    FactAssignment() = default;
    explicit FactAssignment(std::map<FactLabel, int> values);

    // Bit i of `bits` gives the value of universe[i]: 0 -> +1, 1 -> -1.
    static FactAssignment from_bits(std::span<const FactLabel> universe, std::uint32_t bits);

    int value(const FactLabel& label) const;  // throws on missing label
    const std::map<FactLabel, int>& values() const { return values_; }

    bool operator==(const FactAssignment&) const = default;

  private:
    std::map<FactLabel, int> values_;
};

// The labels A1..Ak, B1..Bk in canonical order.
std::vector<FactLabel> fact_universe(int k = 3);

// The four perfect-correlation constraints of the three-qubit GHZ scenario:
//   B1*B2*B3 = +1,  B1*A2*A3 = -1,  A1*B2*A3 = -1,  A1*A2*B3 = -1.
// The simulation pipeline must reproduce exactly this set.
std::vector<ParityConstraint> ghz_constraint_system();

// Per-constraint evaluation: does the assignment's product match the sign?
std::vector<bool> check(const FactAssignment& assignment,
                        std::span<const ParityConstraint> system);

inline constexpr int kEnumerationVarCap = 24;
inline constexpr std::size_t kMaxStoredWitnesses = 4096;

struct EnumerationResult {
    bool satisfiable = false;
    std::vector<FactAssignment> witnesses;  // stored up to kMaxStoredWitnesses
    std::uint64_t witness_count = 0;        // exact total
    std::uint64_t count_checked = 0;
};

// Checks all 2^v assignments over the given universe (which must contain
// every variable of the system). Throws std::invalid_argument beyond
// kEnumerationVarCap variables.
EnumerationResult exhaustive_satisfiability(std::span<const ParityConstraint> system,
                                            std::span<const FactLabel> universe);
// Universe defaults to the union of the system's variables.
EnumerationResult exhaustive_satisfiability(std::span<const ParityConstraint> system);

struct Gf2Result {
    bool satisfiable = false;
    // On UNSAT: indices (0-based, into the input system) of the rows whose
    // mod-2 sum is the contradiction 0 = 1.
    std::vector<std::size_t> certificate;
    // On SAT: one solution (free variables set to +1).
    std::optional<FactAssignment> witness;
};

// Encodes each value v = (-1)^x and each constraint as Σx ≡ (1-sign)/2
// (mod 2), then runs Gaussian elimination with row bookkeeping.
Gf2Result gf2_satisfiability(std::span<const ParityConstraint> system);

// One line of the Mermin-style observable table: an X/Y axis per site and
// the deterministic product of the three outcomes.
struct MerminTerm {
    std::string axes;  // e.g. "XYY"
    int sign;

    bool operator==(const MerminTerm&) const = default;
};

// The GHZ operator identities of Mermin's hidden-variable refutation:
//   XXX = +1, XYY = -1, YXY = -1, YYX = -1.
std::vector<MerminTerm> mermin_observable_table();

// The same four constraints under the fact-label renaming X_m -> B_m,
// Y_m -> A_m (B copies the X basis, A copies the Y basis). Set-equal to
// ghz_constraint_system().
std::vector<ParityConstraint> mermin_reference_set();

// Canonical sorted copy, for set comparisons of constraint systems.
std::vector<ParityConstraint> normalized(std::span<const ParityConstraint> system);

}  // namespace ghznogo
