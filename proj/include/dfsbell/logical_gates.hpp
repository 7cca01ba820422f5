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

#ifndef DFSBELL_LOGICAL_GATES_HPP
#define DFSBELL_LOGICAL_GATES_HPP

#include "dfsbell/encoding.hpp"
#include "dfsbell/spin_core.hpp"

namespace dfsbell {

/// exp(-i pi/8 Y_L) exp(-i pi/2 X_L) exp(+i pi/8 Y_L) on `pair`.
Mat logical_hadamard(SpinPair pair = {1, 2}, int n = 4);
/// i (X_L + Z_L) / sqrt(2), the closed form the product should match on P_L.
Mat logical_hadamard_reference(SpinPair pair = {1, 2}, int n = 4);

struct CnotForms {
    Mat e_form;    // E_+^{1L} X^{2L} + E_-^{1L} I^{2L}
    Mat exp_form;  // five-exponential product
};
/// Control is the first encoded pair, target the second. Fires on logical 0.
CnotForms logical_cnot(const LogicalEncoding &enc = LogicalEncoding{});

struct BilinearForms {
    Mat exchange;  // exp(-i theta (XX + YY)/2)
    Mat xx;        // exp(-i theta XX)
    Mat yy;        // exp(-i theta YY)
};
BilinearForms bilinear_equivalents(double theta, SpinPair pair = {1, 2}, int n = 4);

/// k = 1..4: exp(-i pi/4 Y1Y2), exp(-i pi/4 Y3Y4), exp(-i pi/4 Z2Z3), exp(-i pi/4 X3Y4).
Mat entangler_factor(int k);
/// U4 U3 U2 U1.
Mat entangler_ideal();

struct PhaseFit {
    cplx phase;       // unit modulus; a is compared with phase * b
    double residual;  // max-abs entry of P (a - phase b) P
    double overlap;   // |Tr(P a^dag P b)| / rank(P)
};
/// Best single global phase between two operators restricted by projector p.
PhaseFit fit_global_phase(const Mat &a, const Mat &b, const Mat &p);

}  // namespace dfsbell

#endif
