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

#include "dfsbell/tolerances.hpp"

namespace dfsbell {

std::vector<std::pair<std::string, double>> Tolerances::entries() const {
    return {
        {"hermitian", hermitian},
        {"trace", trace},
        {"min_eigenvalue", min_eigenvalue},
        {"unitary", unitary},
        {"normalization", normalization},
        {"rf_weight_sum", rf_weight_sum},
        {"prep_min_correlation", prep_min_correlation},
    };
}

bool Tolerances::set(const std::string &name, double value) {
    double *field = nullptr;
    if (name == "hermitian") field = &hermitian;
    else if (name == "trace") field = &trace;
    else if (name == "min_eigenvalue") field = &min_eigenvalue;
    else if (name == "unitary") field = &unitary;
    else if (name == "normalization") field = &normalization;
    else if (name == "rf_weight_sum") field = &rf_weight_sum;
    else if (name == "prep_min_correlation") field = &prep_min_correlation;
    if (field == nullptr) {
        return false;
    }
    *field = value;
    return true;
}

const Tolerances &default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace dfsbell
