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

#include "dfsbell/hamiltonian.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace dfsbell;
using oracle::max_abs;

namespace {

MoleculeSpec two_spin(double w1, double w2, double j, CouplingModel model) {
    MoleculeSpec s;
    s.spins = {{"a", w1}, {"b", w2}};
    if (j != 0) {
        s.couplings = {{1, 2, j, model}};
    }
    return s;
}

MoleculeSpec four_spin(const std::vector<double> &shifts, CouplingModel model) {
    MoleculeSpec s;
    for (size_t k = 0; k < shifts.size(); k++) {
        s.spins.push_back({"C" + std::to_string(k + 1), shifts[k]});
    }
    s.couplings = {{1, 2, 70, model}, {2, 3, 65, model}, {3, 4, 40, model},
                   {1, 3, 2, model},  {2, 4, 7, model},  {1, 4, 5, model}};
    return s;
}

}  // namespace

TEST(build_internal, isotropic_exchange_spectrum) {
    Mat h = build_internal(two_spin(0, 0, 1.0, CouplingModel::Isotropic));
    Mat expected = M_PI / 2 * (oracle::pstr("XX") + oracle::pstr("YY") + oracle::pstr("ZZ"));
    EXPECT_LT(max_abs(h - expected), 1e-15);
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + 4);
    std::sort(ev.begin(), ev.end());
    EXPECT_NEAR(ev[0], -3 * M_PI / 2, 1e-12);
    for (int k = 1; k < 4; k++) {
        EXPECT_NEAR(ev[k], M_PI / 2, 1e-12);
    }
}

TEST(build_internal, shifts_only) {
    double w = 123.0;
    Mat h = build_internal(two_spin(w, -w, 0, CouplingModel::Isotropic));
    Mat expected = Mat::Zero(4, 4);
    expected.diagonal() << 0, w, -w, 0;
    EXPECT_LT(max_abs(h - expected), 1e-12);
}

TEST(build_internal, weak_coupling_diagonal) {
    Mat h = build_internal(two_spin(0, 0, 1.0, CouplingModel::Weak));
    Mat expected = Mat::Zero(4, 4);
    expected.diagonal() << 1, -1, -1, 1;
    EXPECT_LT(max_abs(h - M_PI / 2 * expected), 1e-15);
}

TEST(build_internal, symmetries) {
    Mat jz = collective_z(4, {1, 2, 3, 4}).op;
    // Equal shifts and isotropic couplings: full rotational symmetry about z.
    Mat h_eq = build_internal(four_spin({5, 5, 5, 5}, CouplingModel::Isotropic));
    EXPECT_LT(max_abs(h_eq * jz - jz * h_eq), 1e-12);
    // Arbitrary shifts: every term still conserves total Z.
    Mat h = build_internal(four_spin({1e3, -2e3, 7e2, -3e3}, CouplingModel::Isotropic));
    EXPECT_LT(max_abs(h * jz - jz * h), 1e-9);
    EXPECT_TRUE(is_hermitian(h));
}

TEST(build_internal, validation) {
    MoleculeSpec s = two_spin(0, 0, 1, CouplingModel::Weak);
    s.couplings.push_back({2, 1, 3, CouplingModel::Weak});
    EXPECT_THROW(build_internal(s), std::invalid_argument);
    MoleculeSpec bad = two_spin(0, 0, 0, CouplingModel::Weak);
    bad.couplings = {{1, 3, 1, CouplingModel::Weak}};
    EXPECT_THROW(build_internal(bad), std::invalid_argument);
    bad.couplings = {{2, 2, 1, CouplingModel::Weak}};
    EXPECT_THROW(build_internal(bad), std::invalid_argument);
    EXPECT_THROW(build_internal(MoleculeSpec{}), std::invalid_argument);
}

TEST(molecule_spec, lookup_is_symmetric) {
    MoleculeSpec s = four_spin({0, 0, 0, 0}, CouplingModel::Isotropic);
    EXPECT_EQ(s.j_hz(2, 1), 70);
    EXPECT_EQ(s.j_hz(1, 2), 70);
    EXPECT_EQ(s.j_hz(4, 3), 40);
    MoleculeSpec w = s.with_model(CouplingModel::Weak);
    for (const auto &c : w.couplings) {
        EXPECT_EQ(c.model, CouplingModel::Weak);
    }
}

TEST(collective_z, two_spins) {
    NoiseGenerator g = collective_z(2, {1, 2});
    Mat expected = Mat::Zero(4, 4);
    expected.diagonal() << 2, 0, 0, -2;
    EXPECT_LT(max_abs(g.op - expected), 1e-15);
    EXPECT_EQ(g.eigenvalues, (std::vector<int>{2, 0, 0, -2}));
}

TEST(collective_z, zero_eigenspace_of_four_spins) {
    NoiseGenerator g = collective_z(4, {1, 2, 3, 4});
    std::vector<std::string> zeros;
    for (int k = 0; k < 16; k++) {
        if (g.eigenvalues[k] == 0) {
            zeros.push_back(basis_label(k, 4));
        }
    }
    EXPECT_EQ(zeros, (std::vector<std::string>{"0011", "0101", "0110", "1001", "1010", "1100"}));
}

TEST(collective_z, eigenvalue_bookkeeping) {
    for (const SpinSet &subset : {SpinSet{1, 2}, SpinSet{3, 4}, SpinSet{2}, SpinSet{1, 2, 3, 4}}) {
        NoiseGenerator g = collective_z(4, subset);
        int m = static_cast<int>(subset.size());
        for (int k = 0; k < 16; k++) {
            EXPECT_NEAR(g.op(k, k).real(), g.eigenvalues[k], 0);
            EXPECT_EQ((g.eigenvalues[k] + m) % 2, 0);
            EXPECT_LE(std::abs(g.eigenvalues[k]), m);
        }
        EXPECT_LT(max_abs(g.op - Mat(g.op.diagonal().asDiagonal())), 0.0 + 1e-300);
    }
    EXPECT_EQ(collective_z(4, {1, 2}).eigenvalues[0b0110], 0);
    EXPECT_THROW(collective_z(4, {}), std::invalid_argument);
}

TEST(collective_z, logical_basis_annihilated) {
    for (const SpinSet &subset : {SpinSet{1, 2, 3, 4}, SpinSet{1, 2}, SpinSet{3, 4}}) {
        NoiseGenerator g = collective_z(4, subset);
        for (const char *k : {"0101", "0110", "1001", "1010"}) {
            EXPECT_LT((g.op * oracle::ket(k)).norm(), 1e-15);
        }
    }
}
