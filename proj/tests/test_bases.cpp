#include <doctest.h>

#include <cmath>

#include "ghznogo/bases.hpp"

using namespace ghznogo;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("basis and eigenvalue id validation") {
    CHECK(basis_from_index(1) == BasisId::z);
    CHECK(basis_from_index(3) == BasisId::y);
    CHECK_THROWS_AS(basis_from_index(0), std::invalid_argument);
    CHECK_THROWS_AS(basis_from_index(5), std::invalid_argument);
    CHECK(eigen_from_sign(-1) == Eigenvalue::minus);
    CHECK_THROWS_AS(eigen_from_sign(0), std::invalid_argument);
    CHECK(eigen_sign(Eigenvalue::plus) * eigen_sign(Eigenvalue::plus) == 1);
    CHECK(eigen_sign(Eigenvalue::minus) * eigen_sign(Eigenvalue::minus) == 1);
}

TEST_CASE("mub_state frozen phase conventions") {
    const StateVector z_plus = mub_state(BasisId::z, Eigenvalue::plus);
    CHECK(z_plus[0] == Amplitude{1, 0});
    CHECK(z_plus[1] == Amplitude{0, 0});

    const StateVector x_minus = mub_state(BasisId::x, Eigenvalue::minus);
    CHECK(std::abs(x_minus[0] - Amplitude{kInvSqrt2, 0}) < 1e-15);
    CHECK(std::abs(x_minus[1] - Amplitude{-kInvSqrt2, 0}) < 1e-15);

    const StateVector y_plus = mub_state(BasisId::y, Eigenvalue::plus);
    CHECK(std::abs(y_plus[0] - Amplitude{kInvSqrt2, 0}) < 1e-15);
    CHECK(std::abs(y_plus[1] - Amplitude{0, kInvSqrt2}) < 1e-15);
}

TEST_CASE("orthonormality within each basis") {
    for (BasisId n : kAllBases) {
        for (Eigenvalue l : kEigenvalues) {
            for (Eigenvalue lp : kEigenvalues) {
                const Amplitude ov = mub_overlap(n, l, n, lp);
                const Amplitude expected = l == lp ? Amplitude{1, 0} : Amplitude{0, 0};
                CHECK(std::abs(ov - expected) < 1e-15);
            }
        }
    }
}

TEST_CASE("mutual unbiasedness across bases") {
    for (BasisId n : kAllBases) {
        for (BasisId np : kAllBases) {
            if (n == np) {
                continue;
            }
            for (Eigenvalue l : kEigenvalues) {
                for (Eigenvalue lp : kEigenvalues) {
                    const double p = std::norm(mub_overlap(n, l, np, lp));
                    CHECK(std::abs(p - 0.5) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("mub_overlap agrees with the inner product of the states") {
    for (BasisId n : kAllBases) {
        for (BasisId np : kAllBases) {
            for (Eigenvalue l : kEigenvalues) {
                for (Eigenvalue lp : kEigenvalues) {
                    const Amplitude direct =
                        inner(mub_state(n, l), mub_state(np, lp));
                    CHECK(std::abs(direct - mub_overlap(n, l, np, lp)) < 1e-15);
                }
            }
        }
    }
}

TEST_CASE("basis_change identity and unitarity") {
    for (BasisId n : kAllBases) {
        const Operator id = basis_change(n, n);
        CHECK(std::abs(id.at(0, 0) - Amplitude{1, 0}) < 1e-15);
        CHECK(std::abs(id.at(1, 1) - Amplitude{1, 0}) < 1e-15);
        CHECK(std::abs(id.at(0, 1)) < 1e-15);
        CHECK(std::abs(id.at(1, 0)) < 1e-15);
        for (BasisId to : kAllBases) {
            CHECK(basis_change(n, to).unitarity_defect() < 1e-12);
        }
    }
}

TEST_CASE("coordinates of the y basis in the x description") {
    // The y-basis +1 state written in x-basis coordinates has components of
    // modulus 1/√2, and matches (1, -i)/√2 up to one overall phase.
    const Operator m = basis_change(BasisId::y, BasisId::x);
    const Amplitude y0 = m.at(0, 0);  // ⟨+1^(2)|+1^(3)⟩
    const Amplitude y1 = m.at(1, 0);  // ⟨-1^(2)|+1^(3)⟩
    CHECK(std::abs(y0 - Amplitude{0.5, 0.5}) < 1e-15);
    CHECK(std::abs(std::abs(y0) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(std::abs(y1) - kInvSqrt2) < 1e-15);
    // Overlap modulus with the reference direction (1, -i)/√2 is exactly 1.
    const Amplitude ref0{kInvSqrt2, 0};
    const Amplitude ref1{0, -kInvSqrt2};
    const Amplitude overlap = std::conj(ref0) * y0 + std::conj(ref1) * y1;
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-12);
}
