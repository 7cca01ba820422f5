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

#ifndef DFSBELL_METRICS_HPP
#define DFSBELL_METRICS_HPP

#include <optional>
#include <string>

#include "dfsbell/encoding.hpp"
#include "dfsbell/errors.hpp"
#include "dfsbell/spin_core.hpp"

namespace dfsbell {

/// Tr(th exp) / sqrt(Tr(th^2) Tr(in^2)). Matrices are used as given.
/// Throws UndefinedMetricError when the denominator vanishes.
double correlation(const Mat &th, const Mat &exp, const Mat &in);
/// Same, but rejects arguments of mixed form.
double correlation(const DensityMatrix &th, const DensityMatrix &exp, const DensityMatrix &in);

/// correlation() of the P_L-projected matrices.
double correlation_ll(const Mat &th, const Mat &exp, const Mat &in, const LogicalEncoding &enc = LogicalEncoding{});

/// correlation() after U_Dec and a partial trace over the ancillas.
double correlation_dec(const Mat &th, const Mat &exp, const Mat &in, const LogicalEncoding &enc = LogicalEncoding{});
/// tr_ancillas(U_Dec rho U_Dec^dag).
Mat decode_and_trace(const Mat &rho, const LogicalEncoding &enc = LogicalEncoding{});

double purity(const Mat &rho);

/// s with Tr(D^2) = s^2 (1 - 1/d): the scale at which I/d + D/s is a pure state
/// when D is the traceless part of one.
double reference_scale(const Mat &deviation);
/// I/d + deviation / scale.
Mat effective_state(const Mat &deviation, double scale);

struct MetricValue {
    std::optional<double> value;
    std::string reason;  // set when value is empty
};

struct MetricReport {
    std::string label;
    MetricValue c, c_prime, c_ll, c_ll_prime, c_dec, c_dec_prime;
    double purity_in = 0;
    double purity_out = 0;
    // Purity of I/d + D/s for deviation-form runs; equal to the plain values otherwise.
    double purity_in_effective = 0;
    double purity_out_effective = 0;
    double leakage = 0;
};

struct ExperimentOutputs {
    std::string label;
    Mat rho_th;
    Mat rho_exp;
    Mat rho_in;
    Form form = Form::Deviation;
    /// For deviation form: scale used to build effective normalized states.
    double reference_scale = 1.0;
    LogicalEncoding enc;
};

/// Undefined metrics become empty values carrying the reason.
MetricReport assemble_report(const ExperimentOutputs &out);

}  // namespace dfsbell

#endif
