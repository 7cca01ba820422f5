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

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace dfsbell {

std::string to_string(CouplingModel model) {
    return model == CouplingModel::Weak ? "weak" : "isotropic";
}

CouplingModel coupling_model_from_string(const std::string &name) {
    if (name == "weak") {
        return CouplingModel::Weak;
    }
    if (name == "isotropic") {
        return CouplingModel::Isotropic;
    }
    throw std::invalid_argument("unknown coupling model '" + name + "' (expected isotropic or weak)");
}

void MoleculeSpec::validate() const {
    int n = n_spins();
    if (n < 1) {
        throw std::invalid_argument("molecule must have at least one spin");
    }
    std::set<std::pair<int, int>> seen;
    for (const auto &c : couplings) {
        if (c.i < 1 || c.i > n || c.j < 1 || c.j > n) {
            throw std::invalid_argument("coupling (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") references a missing spin");
        }
        if (c.i == c.j) {
            throw std::invalid_argument("coupling of spin " + std::to_string(c.i) + " to itself");
        }
        if (!std::isfinite(c.j_hz)) {
            throw std::invalid_argument("coupling constant must be finite");
        }
        auto key = std::minmax(c.i, c.j);
        if (!seen.insert(key).second) {
            throw std::invalid_argument("coupling (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") listed twice");
        }
    }
    for (const auto &s : spins) {
        if (!std::isfinite(s.shift_rad_s)) {
            throw std::invalid_argument("chemical shift of spin '" + s.label + "' must be finite");
        }
    }
}

const Coupling *MoleculeSpec::find(int i, int j) const {
    for (const auto &c : couplings) {
        if ((c.i == i && c.j == j) || (c.i == j && c.j == i)) {
            return &c;
        }
    }
    return nullptr;
}

double MoleculeSpec::j_hz(int i, int j) const {
    const Coupling *c = find(i, j);
    return c == nullptr ? 0.0 : c->j_hz;
}

MoleculeSpec MoleculeSpec::with_model(CouplingModel model) const {
    MoleculeSpec out = *this;
    for (auto &c : out.couplings) {
        c.model = model;
    }
    return out;
}

Mat build_internal(const MoleculeSpec &spec) {
    spec.validate();
    int n = spec.n_spins();
    int d = 1 << n;
    Mat h = Mat::Zero(d, d);
    for (int k = 1; k <= n; k++) {
        h += 0.5 * spec.spins[k - 1].shift_rad_s * pauli_term(n, {{k, 'Z'}});
    }
    for (const auto &c : spec.couplings) {
        double scale = M_PI / 2 * c.j_hz;
        h += scale * pauli_term(n, {{c.i, 'Z'}, {c.j, 'Z'}});
        if (c.model == CouplingModel::Isotropic) {
            h += scale * pauli_term(n, {{c.i, 'X'}, {c.j, 'X'}});
            h += scale * pauli_term(n, {{c.i, 'Y'}, {c.j, 'Y'}});
        }
    }
    return h;
}

NoiseGenerator collective_z(int n, const SpinSet &subset) {
    if (subset.empty()) {
        throw std::invalid_argument("collective_z needs a nonempty subset");
    }
    check_spins(n, subset);
    NoiseGenerator g;
    g.subset = subset;
    g.op = collective(n, subset, 'Z');
    int d = 1 << n;
    g.eigenvalues.resize(d);
    for (int idx = 0; idx < d; idx++) {
        int m = 0;
        for (int s : subset) {
            m += ((idx >> (n - s)) & 1) ? -1 : 1;
        }
        g.eigenvalues[idx] = m;
    }
    return g;
}

}  // namespace dfsbell
