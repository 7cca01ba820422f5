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

#include "dfsbell/encoding.hpp"

#include "dfsbell/hamiltonian.hpp"
#include "dfsbell/metrics.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace dfsbell;
using oracle::max_abs;

namespace {

// 4x4 matrix of an operator in the logical basis {|0101>,|0110>,|1001>,|1010>}.
Mat restrict(const Mat &op) {
    LogicalEncoding enc;
    auto basis = enc.basis();
    Mat out(4, 4);
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out(r, c) = basis[r].dot(op * basis[c]);
        }
    }
    return out;
}

}  // namespace

TEST(encode, basis_and_superposition) {
    EXPECT_LT((encode(1, 0) - oracle::ket("01")).norm(), 1e-15);
    double s = 1 / std::sqrt(2.0);
    EXPECT_LT((encode(s, s) - (oracle::ket("01") + oracle::ket("10")) * s).norm(), 1e-15);
    EXPECT_THROW(encode(1, 1), std::invalid_argument);
}

TEST(encode, dual_ground_state) {
    LogicalEncoding enc;
    EXPECT_LT((enc.ket("00") - oracle::ket("0101")).norm(), 1e-15);
    EXPECT_LT((enc.ket("11") - oracle::ket("1010")).norm(), 1e-15);
    auto b = enc.basis();
    ASSERT_EQ(b.size(), 4u);
    EXPECT_LT((b[1] - oracle::ket("0110")).norm(), 1e-15);
    EXPECT_LT((b[2] - oracle::ket("1001")).norm(), 1e-15);
    EXPECT_EQ(enc.ancillas(), (SpinSet{2, 4}));
}

TEST(logical_pauli, z_on_two_spins) {
    Mat z = logical_pauli('Z', {1, 2}, 2);
    Mat expected = Mat::Zero(4, 4);
    expected.diagonal() << 0, 1, -1, 0;
    EXPECT_LT(max_abs(z - expected), 1e-15);
}

TEST(logical_pauli, x_swaps_and_kills) {
    Mat x = logical_pauli('X', {1, 2}, 2);
    EXPECT_LT((x * oracle::ket("01") - oracle::ket("10")).norm(), 1e-15);
    EXPECT_LT((x * oracle::ket("00")).norm(), 1e-15);
    EXPECT_LT((x * oracle::ket("11")).norm(), 1e-15);
}

TEST(logical_pauli, identity_is_pair_projector) {
    Mat id = logical_pauli('I', {1, 2}, 2);
    Mat expected = outer(oracle::ket("01")) + outer(oracle::ket("10"));
    EXPECT_LT(max_abs(id - expected), 1e-15);
}

TEST(logical_pauli, hand_expanded_forms) {
    Mat y = logical_pauli('Y', {3, 4}, 4);
    EXPECT_LT(max_abs(y - (oracle::pstr("IIXY") - oracle::pstr("IIYX")) / 2.0), 1e-15);
    Mat x = logical_pauli('X', {1, 2}, 4);
    EXPECT_LT(max_abs(x - (oracle::pstr("XXII") + oracle::pstr("YYII")) / 2.0), 1e-15);
}

TEST(logical_pauli, projected_algebra) {
    // Within the logical block the operators form a Pauli algebra; with the
    // listed Y_L the commutator orientation is [X_L, Y_L] = -2i Z_L.
    for (SpinPair pair : {SpinPair{1, 2}, SpinPair{3, 4}}) {
        Mat p = logical_pauli('I', pair, 4);
        Mat x = logical_pauli('X', pair, 4);
        Mat y = logical_pauli('Y', pair, 4);
        Mat z = logical_pauli('Z', pair, 4);
        const cplx i(0, 1);
        EXPECT_LT(max_abs(x * x - p), 1e-15);
        EXPECT_LT(max_abs(y * y - p), 1e-15);
        EXPECT_LT(max_abs(z * z - p), 1e-15);
        EXPECT_LT(max_abs(x * y - y * x + 2.0 * i * z), 1e-15);
        EXPECT_LT(max_abs(y * z - z * y + 2.0 * i * x), 1e-15);
        EXPECT_LT(max_abs(z * x - x * z + 2.0 * i * y), 1e-15);
        EXPECT_LT(max_abs(x * y + y * x), 1e-15);
        EXPECT_LT(max_abs(x * y + i * z), 1e-15);
    }
}

TEST(logical_idempotent, two_spin_projectors) {
    Mat ep = logical_idempotent(+1, {1, 2}, 2);
    Mat em = logical_idempotent(-1, {1, 2}, 2);
    // (1 - Z1Z2 + Z1 - Z2)/4 evaluated on each ket by hand.
    EXPECT_LT(max_abs(ep - outer(oracle::ket("01"))), 1e-15);
    EXPECT_LT(max_abs(em - outer(oracle::ket("10"))), 1e-15);
    EXPECT_LT(max_abs(ep + em - logical_pauli('I', {1, 2}, 2)), 1e-15);
    EXPECT_LT(max_abs(ep * em), 1e-15);
    EXPECT_LT(max_abs(ep * ep - ep), 1e-15);
}

TEST(logical_encoding, projector_properties) {
    LogicalEncoding enc;
    Mat p = enc.projector();
    EXPECT_LT(max_abs(p * p - p), 1e-15);
    EXPECT_LT(max_abs(p - p.adjoint()), 1e-15);
    EXPECT_NEAR(p.trace().real(), 4.0, 1e-15);
    Mat expected = basis_projector(4, {"0101", "0110", "1001", "1010"});
    EXPECT_LT(max_abs(p - expected), 1e-15);
    Mat jz = collective_z(4, {1, 2, 3, 4}).op;
    for (const auto &k : enc.basis()) {
        EXPECT_LT((jz * k).norm(), 1e-15);
    }
}

TEST(logical_encoding, rotations_commute_with_noise) {
    std::vector<Mat> gens = {collective_z(4, {1, 2, 3, 4}).op, collective_z(4, {1, 2}).op,
                             collective_z(4, {3, 4}).op};
    for (SpinPair pair : {SpinPair{1, 2}, SpinPair{3, 4}}) {
        for (char mu : {'X', 'Y', 'Z'}) {
            for (double theta : {0.2, 1.3, 2.9}) {
                Mat u = oracle::evolve(logical_pauli(mu, pair, 4), theta);
                for (const auto &g : gens) {
                    EXPECT_LT(max_abs(u * g - g * u), 1e-12);
                }
            }
        }
    }
}

TEST(leakage, simple_states) {
    EXPECT_NEAR(leakage(DensityMatrix::pure(oracle::ket("0101"))), 0.0, 1e-15);
    EXPECT_NEAR(leakage(DensityMatrix::pure(oracle::ket("0000"))), 1.0, 1e-15);
    EXPECT_NEAR(leakage(DensityMatrix(Mat::Identity(16, 16) / 16.0)), 0.75, 1e-15);
    Mat dev = outer(oracle::ket("0101")) - Mat::Identity(16, 16) / 16.0;
    EXPECT_THROW(leakage(DensityMatrix(dev, Form::Deviation)), std::invalid_argument);
}

TEST(decode_unitary, basis_action) {
    Mat u = decode_unitary();
    EXPECT_LT((u * oracle::ket("0101") - oracle::ket("0000")).norm(), 1e-15);
    EXPECT_LT((u * oracle::ket("1010") - oracle::ket("1010")).norm(), 1e-15);
    EXPECT_LT((u * oracle::ket("0110") - oracle::ket("0010")).norm(), 1e-15);
    EXPECT_LT((u * oracle::ket("1001") - oracle::ket("1000")).norm(), 1e-15);
    EXPECT_LT(max_abs(u * u - Mat::Identity(16, 16)), 1e-15);
    EXPECT_TRUE(is_unitary(u));
}

TEST(decode_unitary, maps_logical_block_to_ancillas_zero) {
    Mat u = decode_unitary();
    Mat target = basis_projector(4, {"0000", "0010", "1000", "1010"});
    Mat p = LogicalEncoding{}.projector();
    EXPECT_LT(max_abs(u * p * u.adjoint() - target), 1e-15);
}

TEST(decode_unitary, bell_state_decodes_to_physical_bell) {
    Vec bell = (oracle::ket("0101") - oracle::ket("1010")) / std::sqrt(2.0);
    Mat u = decode_unitary();
    Vec decoded = u * bell;
    Vec expected = (oracle::ket("0000") - oracle::ket("1010")) / std::sqrt(2.0);
    EXPECT_LT((decoded - expected).norm(), 1e-15);
    Mat red = decode_and_trace(outer(bell));
    Vec pair_bell = (oracle::ket("00") - oracle::ket("11")) / std::sqrt(2.0);
    EXPECT_LT(max_abs(red - outer(pair_bell)), 1e-15);
    EXPECT_NEAR(purity(red), 1.0, 1e-15);
    EXPECT_LT(max_abs(partial_trace(Mat(u * outer(bell) * u.adjoint()), {2, 4}) - outer(oracle::ket("00"))), 1e-15);
}

TEST(decode_unitary, spin_core_partial_trace_example) {
    Mat u = decode_unitary();
    Mat rho = u * outer(oracle::ket("0101")) * u.adjoint();
    EXPECT_LT(max_abs(partial_trace(rho, {1, 3}) - outer(oracle::ket("00"))), 1e-15);
}

TEST(restrict_helper, logical_x_is_pauli_x_on_each_qubit) {
    Mat x1 = restrict(logical_pauli('X', {1, 2}, 4));
    Mat expected = oracle::kron(oracle::pauli('X'), oracle::pauli('I'));
    EXPECT_LT(max_abs(x1 - expected), 1e-15);
    Mat z2 = restrict(logical_pauli('Z', {3, 4}, 4));
    EXPECT_LT(max_abs(z2 - oracle::kron(oracle::pauli('I'), oracle::pauli('Z'))), 1e-15);
}
