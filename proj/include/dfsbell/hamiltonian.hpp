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

#ifndef DFSBELL_HAMILTONIAN_HPP
#define DFSBELL_HAMILTONIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfsbell/spin_core.hpp"

namespace dfsbell {

enum class CouplingModel { Isotropic, Weak };

std::string to_string(CouplingModel model);
CouplingModel coupling_model_from_string(const std::string &name);

struct SpinEntry {
    std::string label;
    double shift_rad_s = 0;  // omega_i - omega_0
};

struct Coupling {
    int i = 0;
    int j = 0;
    double j_hz = 0;
    CouplingModel model = CouplingModel::Isotropic;
};

/// Shifts in rad/s, couplings in Hz. Each pair appears at most once.
struct MoleculeSpec {
    std::vector<SpinEntry> spins;
    std::vector<Coupling> couplings;

    int n_spins() const { return static_cast<int>(spins.size()); }
    /// Throws std::invalid_argument on unknown spins, self couplings or duplicates.
    void validate() const;
    const Coupling *find(int i, int j) const;
    double j_hz(int i, int j) const;
    /// Same molecule with every coupling switched to `model`.
    MoleculeSpec with_model(CouplingModel model) const;
};

/// H = (1/2) sum_i shift_i Z_i + sum_{i<j} (pi/2) J_ij [sigma.sigma or ZZ].
Mat build_internal(const MoleculeSpec &spec);

struct NoiseGenerator {
    SpinSet subset;
    Mat op;                    // sum over subset of Z_i
    std::vector<int> eigenvalues;  // diagonal of op, by basis index
};

NoiseGenerator collective_z(int n, const SpinSet &subset);

}  // namespace dfsbell

#endif
