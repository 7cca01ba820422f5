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

#ifndef DFSBELL_TOLERANCES_HPP
#define DFSBELL_TOLERANCES_HPP

#include <string>
#include <utility>
#include <vector>

namespace dfsbell {

/// Every numeric threshold used by validation code, in one place.
struct Tolerances {
    double hermitian = 1e-10;
    double trace = 1e-10;
    double min_eigenvalue = -1e-9;
    double unitary = 1e-10;
    double normalization = 1e-10;
    double rf_weight_sum = 1e-12;
    double prep_min_correlation = 0.98;

    std::vector<std::pair<std::string, double>> entries() const;
    /// Overrides one field by name. Returns false if the name is unknown.
    bool set(const std::string &name, double value);
};

const Tolerances &default_tolerances();

}  // namespace dfsbell

#endif
