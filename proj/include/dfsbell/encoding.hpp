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

#ifndef DFSBELL_ENCODING_HPP
#define DFSBELL_ENCODING_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfsbell/spin_core.hpp"

namespace dfsbell {

using SpinPair = std::pair<int, int>;

/// Each logical qubit lives on a pair (a, b): |0>_L = |0_a 1_b>, |1>_L = |1_a 0_b>.
struct LogicalEncoding {
    int n_spins = 4;
    std::vector<SpinPair> pairs{{1, 2}, {3, 4}};

    void validate() const;
    /// Register ket for logical bits, e.g. "00" -> |0101>.
    Vec ket(std::string_view logical_bits) const;
    /// Logical basis in lexicographic order of the logical bits.
    std::vector<Vec> basis() const;
    Mat projector() const;
    /// Second spin of every pair; these become ancillas after decoding.
    SpinSet ancillas() const;
    /// First spin of every pair.
    SpinSet carriers() const;
};

/// alpha|01> + beta|10> on a two-spin pair.
Vec encode(cplx alpha, cplx beta, double tol = default_tolerances().normalization);

/// Logical operators on `pair`:
///   I: (1 - Z_a Z_b)/2     X: (X_a X_b + Y_a Y_b)/2
///   Y: (X_a Y_b - Y_a X_b)/2   Z: (Z_a - Z_b)/2
Mat logical_pauli(char which, SpinPair pair, int n);

/// E_+ = (I_L + Z_L)/2 for sign > 0, E_- = (I_L - Z_L)/2 otherwise.
Mat logical_idempotent(int sign, SpinPair pair, int n);

/// Projector onto the span of the listed computational basis states.
Mat basis_projector(int n, const std::vector<std::string> &kets);

/// 1 - Tr(P_L rho P_L). Rejects deviation-form input.
double leakage(const DensityMatrix &rho, const LogicalEncoding &enc = LogicalEncoding{});

/// Product over pairs of (E_+^a X_b + E_-^a I_b) with E_+^a = (1 + Z_a)/2.
Mat decode_unitary(const LogicalEncoding &enc = LogicalEncoding{});

}  // namespace dfsbell

#endif
