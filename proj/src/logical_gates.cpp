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

#include "dfsbell/logical_gates.hpp"

#include <cmath>
#include <stdexcept>

namespace dfsbell {

Mat logical_hadamard(SpinPair pair, int n) {
    Mat y = logical_pauli('Y', pair, n);
    Mat x = logical_pauli('X', pair, n);
    return expm_skew(y, M_PI / 8) * expm_skew(x, M_PI / 2) * expm_skew(y, -M_PI / 8);
}

Mat logical_hadamard_reference(SpinPair pair, int n) {
    const cplx i(0, 1);
    return i * (logical_pauli('X', pair, n) + logical_pauli('Z', pair, n)) / std::sqrt(2.0);
}

CnotForms logical_cnot(const LogicalEncoding &enc) {
    if (enc.pairs.size() != 2) {
        throw std::invalid_argument("logical CNOT needs exactly two encoded pairs");
    }
    int n = enc.n_spins;
    SpinPair c = enc.pairs[0];
    SpinPair t = enc.pairs[1];
    CnotForms out;
    out.e_form = logical_idempotent(+1, c, n) * logical_pauli('X', t, n) +
                 logical_idempotent(-1, c, n) * logical_pauli('I', t, n);

    Mat ii = logical_pauli('I', c, n) * logical_pauli('I', t, n);
    Mat y2 = logical_pauli('Y', t, n);
    Mat z1 = logical_pauli('Z', c, n);
    Mat z2 = logical_pauli('Z', t, n);
    out.exp_form = expm_skew(ii, -M_PI / 4) * expm_skew(y2, M_PI / 4) * expm_skew(z1 + z2, M_PI / 4) *
                   expm_skew(z1 * z2, M_PI / 4) * expm_skew(y2, -M_PI / 4);
    return out;
}

BilinearForms bilinear_equivalents(double theta, SpinPair pair, int n) {
    auto [a, b] = pair;
    Mat xx = pauli_term(n, {{a, 'X'}, {b, 'X'}});
    Mat yy = pauli_term(n, {{a, 'Y'}, {b, 'Y'}});
    BilinearForms out;
    out.exchange = expm_skew((xx + yy) / 2.0, theta);
    out.xx = expm_skew(xx, theta);
    out.yy = expm_skew(yy, theta);
    return out;
}

Mat entangler_factor(int k) {
    const int n = 4;
    switch (k) {
        case 1:
            return expm_skew(pauli_term(n, {{1, 'Y'}, {2, 'Y'}}), M_PI / 4);
        case 2:
            return expm_skew(pauli_term(n, {{3, 'Y'}, {4, 'Y'}}), M_PI / 4);
        case 3:
            return expm_skew(pauli_term(n, {{2, 'Z'}, {3, 'Z'}}), M_PI / 4);
        case 4:
            return expm_skew(pauli_term(n, {{3, 'X'}, {4, 'Y'}}), M_PI / 4);
        default:
            throw std::invalid_argument("entangler factor index must be 1..4");
    }
}

Mat entangler_ideal() {
    return entangler_factor(4) * entangler_factor(3) * entangler_factor(2) * entangler_factor(1);
}

PhaseFit fit_global_phase(const Mat &a, const Mat &b, const Mat &p) {
    Mat pa = p * a * p;
    Mat pb = p * b * p;
    cplx tr = (pb.adjoint() * pa).trace();
    PhaseFit fit;
    fit.phase = std::abs(tr) > 0 ? tr / std::abs(tr) : cplx(1, 0);
    fit.residual = (pa - fit.phase * pb).cwiseAbs().maxCoeff();
    double rank = p.trace().real();
    fit.overlap = rank > 0 ? std::abs(tr) / rank : 0.0;
    return fit;
}

}  // namespace dfsbell
