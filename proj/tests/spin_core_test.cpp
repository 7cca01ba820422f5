// Copyright 2026 The dfsbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dfsbell/spin_core.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace dfsbell;
using oracle::max_abs;

TEST(pauli_embed, z_tensor_identity) {
    Mat m = pauli_embed("ZI");
    Mat expected = Mat::Zero(4, 4);
    expected.diagonal() << 1, 1, -1, -1;
    EXPECT_EQ(max_abs(m - expected), 0);
}

TEST(pauli_embed, xx_is_antidiagonal) {
    Mat m = pauli_embed("XX");
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            EXPECT_EQ(m(r, c), cplx(r + c == 3 ? 1 : 0, 0));
        }
    }
}

TEST(pauli_embed, raising_lowering) {
    // sigma_+ = (X + iY)/2 = |0><1|, sigma_- = |1><0|.
    Mat m = pauli_embed("+-");
    Mat expected = Mat::Zero(4, 4);
    expected(1, 2) = 1;  // row |01>, column |10>
    EXPECT_LT(max_abs(m - expected), 1e-15);
    Mat plus = (oracle::pauli('X') + cplx(0, 1) * oracle::pauli('Y')) / 2.0;
    EXPECT_LT(max_abs(pauli_matrix('+') - plus), 1e-15);
}

TEST(pauli_embed, coefficient_and_identity) {
    EXPECT_LT(max_abs(pauli_embed("III") - Mat::Identity(8, 8)), 1e-15);
    EXPECT_LT(max_abs(pauli_embed("XY", cplx(0, 2)) - cplx(0, 2) * oracle::pstr("XY")), 1e-15);
}

TEST(pauli_embed, algebra_per_spin) {
    for (int n : {1, 2, 3, 4}) {
        for (int k = 1; k <= n; k++) {
            Mat x = pauli_term(n, {{k, 'X'}});
            Mat y = pauli_term(n, {{k, 'Y'}});
            Mat z = pauli_term(n, {{k, 'Z'}});
            EXPECT_LT(max_abs(x * y - cplx(0, 1) * z), 1e-15);
        }
    }
}

TEST(pauli_term, errors) {
    EXPECT_THROW(pauli_term(2, {{3, 'X'}}), std::invalid_argument);
    EXPECT_THROW(pauli_term(2, {{1, 'X'}, {1, 'Z'}}), std::invalid_argument);
    EXPECT_THROW(pauli_matrix('Q'), std::invalid_argument);
}

TEST(rotation, pi_about_x) {
    Mat r = rotation(1, {1}, Axis::X, M_PI);
    EXPECT_LT(max_abs(r - cplx(0, -1) * oracle::pauli('X')), 1e-15);
}

TEST(rotation, zero_angle_is_identity) {
    EXPECT_LT(max_abs(rotation(3, {1, 3}, Axis::Y, 0) - Mat::Identity(8, 8)), 1e-15);
}

TEST(rotation, collective_half_pi_matches_series) {
    Mat gen = oracle::pstr("XI") + oracle::pstr("IX");
    Mat expected = oracle::expm_series(cplx(0, -M_PI / 4) * gen);
    EXPECT_LT(max_abs(rotation(2, {1, 2}, Axis::X, M_PI / 2) - expected), 1e-12);
}

TEST(rotation, barred_axes_negate_generator) {
    for (double theta : {0.3, 1.1, 2.5}) {
        Mat xb = oracle::expm_series(cplx(0, theta / 2) * oracle::pstr("XI"));
        Mat yb = oracle::expm_series(cplx(0, theta / 2) * oracle::pstr("IY"));
        Mat z = oracle::expm_series(cplx(0, -theta / 2) * oracle::pstr("ZI"));
        EXPECT_LT(max_abs(rotation(2, {1}, Axis::XBar, theta) - xb), 1e-12);
        EXPECT_LT(max_abs(rotation(2, {2}, Axis::YBar, theta) - yb), 1e-12);
        EXPECT_LT(max_abs(rotation(2, {1}, Axis::Z, theta) - z), 1e-12);
    }
}

TEST(rotation, full_turn_sign) {
    for (int k = 1; k <= 4; k++) {
        SpinSet targets;
        for (int s = 1; s <= k; s++) {
            targets.push_back(s);
        }
        double sign = k % 2 ? -1.0 : 1.0;
        EXPECT_LT(max_abs(rotation(4, targets, Axis::X, 2 * M_PI) - sign * Mat::Identity(16, 16)), 1e-14);
    }
}

TEST(rotation, empty_targets_rejected) {
    EXPECT_THROW(rotation(2, {}, Axis::X, 1.0), std::invalid_argument);
}

TEST(expm_skew, zero_generator) {
    EXPECT_LT(max_abs(expm_skew(Mat::Zero(4, 4), 3.0) - Mat::Identity(4, 4)), 1e-15);
}

TEST(expm_skew, sigma_z) {
    Mat u = expm_skew(oracle::pauli('Z'), M_PI / 2);
    EXPECT_LT(std::abs(u(0, 0) - std::exp(cplx(0, -M_PI / 2))), 1e-15);
    EXPECT_LT(std::abs(u(1, 1) - std::exp(cplx(0, M_PI / 2))), 1e-15);
}

TEST(expm_skew, zz_coupling_closed_form) {
    double j = 37.0;
    Mat h = M_PI / 2 * j * oracle::pstr("ZZ");
    Mat u = expm_skew(h, 1 / (2 * j));
    cplx m = std::exp(cplx(0, -M_PI / 4));
    cplx p = std::exp(cplx(0, M_PI / 4));
    EXPECT_LT(std::abs(u(0, 0) - m), 1e-14);
    EXPECT_LT(std::abs(u(1, 1) - p), 1e-14);
    EXPECT_LT(std::abs(u(2, 2) - p), 1e-14);
    EXPECT_LT(std::abs(u(3, 3) - m), 1e-14);
}

TEST(expm_skew, unitarity_and_series_agreement) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g(0, 1);
    for (int trial = 0; trial < 20; trial++) {
        Mat a(16, 16);
        for (int r = 0; r < 16; r++) {
            for (int c = 0; c < 16; c++) {
                a(r, c) = cplx(g(rng), g(rng));
            }
        }
        Mat h = (a + a.adjoint()) / 2.0;
        h /= h.norm();
        double t = 100.0 * (trial + 1) / 20.0;  // ||H|| t up to 100
        Mat u = expm_skew(h, t);
        EXPECT_TRUE(is_unitary(u, 1e-10));
        EXPECT_LT(max_abs(u - oracle::evolve(h, t)), 1e-9);
    }
}

TEST(expm_skew, rejects_non_hermitian) {
    Mat a = Mat::Zero(2, 2);
    a(0, 1) = 1;
    EXPECT_THROW(expm_skew(a, 1.0), std::invalid_argument);
}

TEST(partial_trace, product_state) {
    Mat rho = oracle::kron(outer(basis_ket("0")), outer(basis_ket("1")));
    EXPECT_LT(max_abs(partial_trace(rho, {1}) - outer(basis_ket("0"))), 1e-15);
    EXPECT_LT(max_abs(partial_trace(rho, {2}) - outer(basis_ket("1"))), 1e-15);
}

TEST(partial_trace, bell_pair_is_maximally_mixed) {
    Vec bell = (basis_ket("00") + basis_ket("11")) / std::sqrt(2.0);
    DensityMatrix r = partial_trace(DensityMatrix::pure(bell), {1});
    EXPECT_LT(max_abs(r.matrix() - Mat::Identity(2, 2) / 2.0), 1e-15);
}

TEST(partial_trace, keeps_order_and_trace) {
    std::mt19937_64 rng(3);
    std::vector<Vec> basis;
    for (int k = 0; k < 16; k++) {
        basis.push_back(basis_ket(basis_label(k, 4)));
    }
    Vec psi = oracle::random_in_span(basis, rng);
    Mat rho = outer(psi);
    EXPECT_LT(max_abs(partial_trace(rho, {1, 2, 3, 4}) - rho), 1e-15);
    EXPECT_LT(max_abs(partial_trace(rho, {4, 3, 2, 1}) - rho), 1e-15);
    for (SpinSet keep : {SpinSet{1}, SpinSet{2, 4}, SpinSet{1, 3}, SpinSet{3}}) {
        EXPECT_NEAR(partial_trace(rho, keep).trace().real(), 1.0, 1e-14);
    }
    // Oracle: <a b| tr_{2,4} rho |a' b'> = sum_{x,y} <a x b y| rho |a' x b' y>.
    Mat red = partial_trace(rho, {1, 3});
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            for (int a2 = 0; a2 < 2; a2++) {
                for (int b2 = 0; b2 < 2; b2++) {
                    cplx s = 0;
                    for (int x = 0; x < 2; x++) {
                        for (int y = 0; y < 2; y++) {
                            s += rho(8 * a + 4 * x + 2 * b + y, 8 * a2 + 4 * x + 2 * b2 + y);
                        }
                    }
                    EXPECT_LT(std::abs(red(2 * a + b, 2 * a2 + b2) - s), 1e-15);
                }
            }
        }
    }
    EXPECT_THROW(partial_trace(rho, {}), std::invalid_argument);
}

TEST(pauli_expand, maximally_mixed) {
    PauliTable t = pauli_expand(Mat::Identity(4, 4) / 4.0);
    ASSERT_EQ(t.coeffs.size(), 16u);
    EXPECT_EQ(t.label(0), "II");
    EXPECT_NEAR(t.coeffs[0].real(), 0.25, 1e-15);
    for (size_t k = 1; k < 16; k++) {
        EXPECT_LT(std::abs(t.coeffs[k]), 1e-15);
    }
}

TEST(pauli_expand, ground_state) {
    PauliTable t = pauli_expand(outer(basis_ket("0")));
    EXPECT_NEAR(t.coeffs[0].real(), 0.5, 1e-15);  // I
    EXPECT_NEAR(t.coeffs[3].real(), 0.5, 1e-15);  // Z
    EXPECT_LT(std::abs(t.coeffs[1]) + std::abs(t.coeffs[2]), 1e-15);
}

TEST(pauli_expand, round_trip_pseudo_pure) {
    Mat dev = outer(basis_ket("0101")) - Mat::Identity(16, 16) / 16.0;
    PauliTable t = pauli_expand(dev);
    EXPECT_EQ(t.coeffs.size(), 256u);
    EXPECT_LT(max_abs(t.resynthesize() - dev), 1e-12);
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0, 1);
    Mat a(16, 16);
    for (int r = 0; r < 16; r++) {
        for (int c = 0; c < 16; c++) {
            a(r, c) = cplx(g(rng), g(rng));
        }
    }
    EXPECT_LT(max_abs(pauli_expand(a).resynthesize() - a), 1e-12);
}

TEST(density_matrix, validation) {
    EXPECT_NO_THROW(DensityMatrix(Mat::Identity(4, 4) / 4.0));
    EXPECT_THROW(DensityMatrix(Mat::Identity(4, 4)), std::invalid_argument);
    Mat neg = Mat::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{neg}, std::invalid_argument);
    EXPECT_NO_THROW((DensityMatrix{neg, Form::Deviation}));
    Mat skew = Mat::Zero(2, 2);
    skew(0, 1) = 1;
    EXPECT_THROW((DensityMatrix{skew, Form::Deviation}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(Mat::Identity(3, 3) / 3.0), std::invalid_argument);
}
