#include "ghznogo/bases.hpp"

#include <cmath>
#include <stdexcept>

namespace ghznogo {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::array<Amplitude, 2> mub_amps(BasisId n, Eigenvalue l) {
    const double s = static_cast<double>(eigen_sign(l));
    switch (n) {
        case BasisId::z:
            return l == Eigenvalue::plus ? std::array<Amplitude, 2>{Amplitude{1, 0}, Amplitude{0, 0}}
                                         : std::array<Amplitude, 2>{Amplitude{0, 0}, Amplitude{1, 0}};
        case BasisId::x:
            return {Amplitude{kInvSqrt2, 0}, Amplitude{s * kInvSqrt2, 0}};
        case BasisId::y:
            return {Amplitude{kInvSqrt2, 0}, Amplitude{0, s * kInvSqrt2}};
    }
    throw std::invalid_argument("invalid basis id");
}

}  // namespace

int basis_index(BasisId n) {
    return static_cast<int>(n);
}

BasisId basis_from_index(int n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("basis id must be 1, 2 or 3, got " + std::to_string(n));
    }
    return static_cast<BasisId>(n);
}

Eigenvalue eigen_from_sign(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("eigenvalue label must be +1 or -1, got " + std::to_string(s));
    }
    return static_cast<Eigenvalue>(s);
}

StateVector mub_state(BasisId n, Eigenvalue l, const std::string& label) {
    const auto amps = mub_amps(n, l);
    FactorLayout layout({{label, 2}});
    return StateVector(std::move(layout), {amps[0], amps[1]});
}

Amplitude mub_overlap(BasisId na, Eigenvalue la, BasisId nb, Eigenvalue lb) {
    const auto a = mub_amps(na, la);
    const auto b = mub_amps(nb, lb);
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Operator basis_change(BasisId from, BasisId to) {
    Operator m(2);
    for (Eigenvalue li : kEigenvalues) {
        for (Eigenvalue lj : kEigenvalues) {
            m.at(eigen_slot(li), eigen_slot(lj)) = mub_overlap(to, li, from, lj);
        }
    }
    return m;
}

}  // namespace ghznogo
