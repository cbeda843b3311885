#pragma once

#include <array>
#include <string>

#include "ghznogo/hilbert.hpp"

namespace ghznogo {

// The three mutually unbiased single-qubit bases: n=1 computational (Z),
// n=2 the ±1 superpositions (X), n=3 the ±i superpositions (Y).
enum class BasisId : int {
    z = 1,
    x = 2,
    y = 3,
};

inline constexpr std::array<BasisId, 3> kAllBases = {BasisId::z, BasisId::x, BasisId::y};

int basis_index(BasisId n);
BasisId basis_from_index(int n);  // throws std::invalid_argument outside {1,2,3}

// A ±1 measurement outcome label.
enum class Eigenvalue : int {
    plus = +1,
    minus = -1,
};

inline constexpr std::array<Eigenvalue, 2> kEigenvalues = {Eigenvalue::plus, Eigenvalue::minus};

inline int eigen_sign(Eigenvalue l) { return static_cast<int>(l); }
// plus -> 0, minus -> 1 (the amplitude index of the basis-1 state).
inline std::size_t eigen_slot(Eigenvalue l) { return l == Eigenvalue::plus ? 0 : 1; }
Eigenvalue eigen_from_sign(int s);  // throws outside {+1,-1}

// The normalized eigenstate |l^(n)⟩ as a single-qubit state with the given
// factor label. Phase conventions:
//   n=1: (1,0) and (0,1)
//   n=2: (1, ±1)/√2
//   n=3: (1, ±i)/√2
StateVector mub_state(BasisId n, Eigenvalue l, const std::string& label = "q");

// ⟨la^(na) | lb^(nb)⟩ on a single qubit.
Amplitude mub_overlap(BasisId na, Eigenvalue la, BasisId nb, Eigenvalue lb);

// 2x2 unitary with entries M[i][j] = ⟨to_i | from_j⟩: maps coordinates in the
// `from` basis to coordinates in the `to` basis. basis_change(n, n) = I.
Operator basis_change(BasisId from, BasisId to);

}  // namespace ghznogo
