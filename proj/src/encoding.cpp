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

#include <cmath>
#include <stdexcept>

namespace dfsbell {

void LogicalEncoding::validate() const {
    SpinSet all;
    for (const auto &[a, b] : pairs) {
        all.push_back(a);
        all.push_back(b);
    }
    check_spins(n_spins, all);
}

Vec LogicalEncoding::ket(std::string_view logical_bits) const {
    validate();
    if (logical_bits.size() != pairs.size()) {
        throw std::invalid_argument("expected " + std::to_string(pairs.size()) + " logical bits");
    }
    std::string bits(n_spins, '0');
    for (size_t q = 0; q < pairs.size(); q++) {
        char c = logical_bits[q];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("logical bits must be 0 or 1");
        }
        bits[pairs[q].first - 1] = c;
        bits[pairs[q].second - 1] = c == '0' ? '1' : '0';
    }
    return basis_ket(bits);
}

std::vector<Vec> LogicalEncoding::basis() const {
    std::vector<Vec> out;
    size_t count = size_t{1} << pairs.size();
    for (size_t k = 0; k < count; k++) {
        std::string bits(pairs.size(), '0');
        for (size_t q = 0; q < pairs.size(); q++) {
            if ((k >> (pairs.size() - 1 - q)) & 1) {
                bits[q] = '1';
            }
        }
        out.push_back(ket(bits));
    }
    return out;
}

Mat LogicalEncoding::projector() const {
    validate();
    int d = 1 << n_spins;
    Mat p = Mat::Identity(d, d);
    for (const auto &pair : pairs) {
        p = p * logical_pauli('I', pair, n_spins);
    }
    return p;
}

SpinSet LogicalEncoding::ancillas() const {
    SpinSet out;
    for (const auto &pair : pairs) {
        out.push_back(pair.second);
    }
    return out;
}

SpinSet LogicalEncoding::carriers() const {
    SpinSet out;
    for (const auto &pair : pairs) {
        out.push_back(pair.first);
    }
    return out;
}

Vec encode(cplx alpha, cplx beta, double tol) {
    double norm2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm2 - 1.0) > tol) {
        throw std::invalid_argument("logical amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
    Vec v = Vec::Zero(4);
    v(1) = alpha;  // |01>
    v(2) = beta;   // |10>
    return v;
}

Mat logical_pauli(char which, SpinPair pair, int n) {
    auto [a, b] = pair;
    check_spins(n, {a, b});
    int d = 1 << n;
    Mat id = Mat::Identity(d, d);
    switch (which) {
        case 'I':
            return (id - pauli_term(n, {{a, 'Z'}, {b, 'Z'}})) / 2.0;
        case 'X':
            return (pauli_term(n, {{a, 'X'}, {b, 'X'}}) + pauli_term(n, {{a, 'Y'}, {b, 'Y'}})) / 2.0;
        case 'Y':
            return (pauli_term(n, {{a, 'X'}, {b, 'Y'}}) - pauli_term(n, {{a, 'Y'}, {b, 'X'}})) / 2.0;
        case 'Z':
            return (pauli_term(n, {{a, 'Z'}}) - pauli_term(n, {{b, 'Z'}})) / 2.0;
        default:
            throw std::invalid_argument(std::string("unknown logical operator '") + which + "'");
    }
}

Mat logical_idempotent(int sign, SpinPair pair, int n) {
    Mat il = logical_pauli('I', pair, n);
    Mat zl = logical_pauli('Z', pair, n);
    return sign > 0 ? Mat((il + zl) / 2.0) : Mat((il - zl) / 2.0);
}

Mat basis_projector(int n, const std::vector<std::string> &kets) {
    int d = 1 << n;
    Mat p = Mat::Zero(d, d);
    for (const auto &k : kets) {
        if (static_cast<int>(k.size()) != n) {
            throw std::invalid_argument("basis label '" + k + "' has the wrong length");
        }
        p += outer(basis_ket(k));
    }
    return p;
}

double leakage(const DensityMatrix &rho, const LogicalEncoding &enc) {
    if (rho.form() != Form::Normalized) {
        throw std::invalid_argument("leakage needs a normalized state; convert deviation-form input first");
    }
    if (rho.n_spins() != enc.n_spins) {
        throw std::invalid_argument("state and encoding register sizes differ");
    }
    Mat p = enc.projector();
    return 1.0 - (p * rho.matrix() * p).trace().real();
}

Mat decode_unitary(const LogicalEncoding &enc) {
    enc.validate();
    int n = enc.n_spins;
    int d = 1 << n;
    Mat u = Mat::Identity(d, d);
    Mat id = Mat::Identity(d, d);
    for (const auto &[a, b] : enc.pairs) {
        Mat up = (id + pauli_term(n, {{a, 'Z'}})) / 2.0;
        Mat down = (id - pauli_term(n, {{a, 'Z'}})) / 2.0;
        u = u * (up * pauli_term(n, {{b, 'X'}}) + down);
    }
    return u;
}

}  // namespace dfsbell
