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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace dfsbell {

namespace {

Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Mat axis_matrix(double phase) {
    return std::cos(phase) * pauli_matrix('X') + std::sin(phase) * pauli_matrix('Y');
}

}  // namespace

int n_spins_of(const Mat &m) {
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw std::invalid_argument("operator must be square with dimension 2^n, n >= 1");
    }
    int n = 0;
    Eigen::Index d = m.rows();
    while (d > 1) {
        if (d % 2 != 0) {
            throw std::invalid_argument("operator dimension " + std::to_string(m.rows()) + " is not a power of two");
        }
        d /= 2;
        n++;
    }
    return n;
}

bool is_unitary(const Mat &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Mat defect = m.adjoint() * m - Mat::Identity(m.rows(), m.cols());
    return defect.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Mat &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void check_spins(int n, const SpinSet &spins) {
    std::vector<bool> seen(n + 1, false);
    for (int s : spins) {
        if (s < 1 || s > n) {
            throw std::invalid_argument("spin " + std::to_string(s) + " is outside a register of " + std::to_string(n) + " spins");
        }
        if (seen[s]) {
            throw std::invalid_argument("spin " + std::to_string(s) + " listed twice");
        }
        seen[s] = true;
    }
}

Mat pauli_matrix(char label) {
    Mat m = Mat::Zero(2, 2);
    const cplx i(0, 1);
    switch (label) {
        case 'I':
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case 'X':
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 'Y':
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        case 'Z':
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
        case '+':
            m(0, 1) = 1;
            break;
        case '-':
            m(1, 0) = 1;
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli label '") + label + "'");
    }
    return m;
}

Mat pauli_embed(std::string_view factors, cplx coeff) {
    if (factors.empty()) {
        throw std::invalid_argument("Pauli string needs at least one factor");
    }
    Mat out = pauli_matrix(factors[0]);
    for (size_t k = 1; k < factors.size(); k++) {
        out = kron(out, pauli_matrix(factors[k]));
    }
    return coeff * out;
}

Mat pauli_term(int n, const std::vector<std::pair<int, char>> &factors, cplx coeff) {
    std::string labels(n, 'I');
    SpinSet spins;
    for (const auto &[spin, label] : factors) {
        spins.push_back(spin);
    }
    check_spins(n, spins);
    for (const auto &[spin, label] : factors) {
        labels[spin - 1] = label;
    }
    return pauli_embed(labels, coeff);
}

Mat embed(int n, const std::vector<std::pair<int, Mat>> &factors) {
    if (n < 1) {
        throw std::invalid_argument("register must have at least one spin");
    }
    std::vector<Mat> slots(n, Mat::Identity(2, 2));
    SpinSet spins;
    for (const auto &[spin, m] : factors) {
        spins.push_back(spin);
        if (m.rows() != 2 || m.cols() != 2) {
            throw std::invalid_argument("embedded factors must be 2x2");
        }
    }
    check_spins(n, spins);
    for (const auto &[spin, m] : factors) {
        slots[spin - 1] = m;
    }
    Mat out = slots[0];
    for (int k = 1; k < n; k++) {
        out = kron(out, slots[k]);
    }
    return out;
}

Mat collective(int n, const SpinSet &spins, char label) {
    check_spins(n, spins);
    int d = 1 << n;
    Mat out = Mat::Zero(d, d);
    for (int s : spins) {
        out += pauli_term(n, {{s, label}});
    }
    return out;
}

Mat rotation(int n, const SpinSet &targets, Axis axis, double angle) {
    switch (axis) {
        case Axis::X:
            return rotation_phase(n, targets, 0.0, angle);
        case Axis::Y:
            return rotation_phase(n, targets, M_PI / 2, angle);
        case Axis::XBar:
            return rotation_phase(n, targets, M_PI, angle);
        case Axis::YBar:
            return rotation_phase(n, targets, 3 * M_PI / 2, angle);
        case Axis::Z:
            break;
    }
    if (targets.empty()) {
        throw std::invalid_argument("rotation needs at least one target spin");
    }
    check_spins(n, targets);
    const cplx i(0, 1);
    Mat single = std::cos(angle / 2) * Mat::Identity(2, 2) - i * std::sin(angle / 2) * pauli_matrix('Z');
    std::vector<std::pair<int, Mat>> factors;
    for (int t : targets) {
        factors.emplace_back(t, single);
    }
    return embed(n, factors);
}

Mat rotation_phase(int n, const SpinSet &targets, double phase, double angle) {
    if (targets.empty()) {
        throw std::invalid_argument("rotation needs at least one target spin");
    }
    check_spins(n, targets);
    // The single-spin generators commute, so the exponential factorizes.
    const cplx i(0, 1);
    Mat single = std::cos(angle / 2) * Mat::Identity(2, 2) - i * std::sin(angle / 2) * axis_matrix(phase);
    std::vector<std::pair<int, Mat>> factors;
    for (int t : targets) {
        factors.emplace_back(t, single);
    }
    return embed(n, factors);
}

Mat expm_skew(const Mat &h, double t, double hermitian_tol) {
    if (!is_hermitian(h, hermitian_tol)) {
        throw std::invalid_argument("expm_skew requires a Hermitian generator");
    }
    Mat hs = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(hs);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const cplx i(0, 1);
    Eigen::VectorXcd phases(hs.rows());
    for (Eigen::Index k = 0; k < hs.rows(); k++) {
        phases(k) = std::exp(-i * es.eigenvalues()(k) * t);
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Vec basis_ket(std::string_view bits) {
    if (bits.empty()) {
        throw std::invalid_argument("basis ket needs at least one bit");
    }
    int index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis ket label must contain only 0 and 1");
        }
        index = 2 * index + (c - '0');
    }
    Vec v = Vec::Zero(1 << bits.size());
    v(index) = 1;
    return v;
}

std::string basis_label(int index, int n) {
    std::string s(n, '0');
    for (int k = 0; k < n; k++) {
        if ((index >> (n - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

Mat outer(const Vec &ket) {
    return ket * ket.adjoint();
}

DensityMatrix::DensityMatrix(Mat m, Form form, const Tolerances &tol) : m_(std::move(m)), form_(form), n_(n_spins_of(m_)) {
    if (!is_hermitian(m_, tol.hermitian)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (form_ == Form::Normalized) {
        double tr = m_.trace().real();
        if (std::abs(tr - 1.0) > tol.trace) {
            throw std::invalid_argument("normalized density matrix must have unit trace, got " + std::to_string(tr));
        }
        Eigen::SelfAdjointEigenSolver<Mat> es((m_ + m_.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < tol.min_eigenvalue) {
            throw std::invalid_argument("normalized density matrix has a negative eigenvalue");
        }
    }
}

DensityMatrix DensityMatrix::pure(const Vec &ket) {
    double norm = ket.norm();
    if (norm == 0) {
        throw std::invalid_argument("cannot build a state from the zero vector");
    }
    Vec k = ket / norm;
    return DensityMatrix(outer(k), Form::Normalized);
}

Mat partial_trace(const Mat &rho, const SpinSet &keep) {
    int n = n_spins_of(rho);
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs at least one kept spin");
    }
    check_spins(n, keep);
    SpinSet kept = keep;
    std::sort(kept.begin(), kept.end());
    int nk = static_cast<int>(kept.size());
    int d = 1 << n;
    // Bit position (from the most significant end) of each spin in an index.
    auto bit = [n](int index, int spin) { return (index >> (n - spin)) & 1; };
    std::vector<bool> is_kept(n + 1, false);
    for (int s : kept) {
        is_kept[s] = true;
    }
    auto reduced_index = [&](int index) {
        int r = 0;
        for (int s : kept) {
            r = 2 * r + bit(index, s);
        }
        return r;
    };
    auto traced_bits = [&](int index) {
        int r = 0;
        for (int s = 1; s <= n; s++) {
            if (!is_kept[s]) {
                r = 2 * r + bit(index, s);
            }
        }
        return r;
    };
    Mat out = Mat::Zero(1 << nk, 1 << nk);
    for (int i = 0; i < d; i++) {
        int ti = traced_bits(i);
        int ri = reduced_index(i);
        for (int j = 0; j < d; j++) {
            if (traced_bits(j) == ti) {
                out(ri, reduced_index(j)) += rho(i, j);
            }
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, const SpinSet &keep) {
    return DensityMatrix(partial_trace(rho.matrix(), keep), rho.form());
}

std::string PauliTable::label(size_t index) const {
    static const char kLabels[4] = {'I', 'X', 'Y', 'Z'};
    std::string s(n_spins, 'I');
    for (int k = n_spins - 1; k >= 0; k--) {
        s[k] = kLabels[index % 4];
        index /= 4;
    }
    return s;
}

Mat PauliTable::resynthesize() const {
    int d = 1 << n_spins;
    Mat out = Mat::Zero(d, d);
    for (size_t k = 0; k < coeffs.size(); k++) {
        if (coeffs[k] != cplx(0, 0)) {
            out += pauli_embed(label(k), coeffs[k]);
        }
    }
    return out;
}

PauliTable pauli_expand(const Mat &rho) {
    PauliTable table;
    table.n_spins = n_spins_of(rho);
    size_t count = size_t{1} << (2 * table.n_spins);
    table.coeffs.resize(count);
    double d = static_cast<double>(rho.rows());
    for (size_t k = 0; k < count; k++) {
        Mat p = pauli_embed(table.label(k));
        table.coeffs[k] = (p.adjoint() * rho).trace() / d;
    }
    return table;
}

}  // namespace dfsbell
