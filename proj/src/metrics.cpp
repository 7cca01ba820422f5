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

#include "dfsbell/metrics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace dfsbell {

namespace {

// Below this, Tr(rho^2) is treated as an exact zero.
constexpr double kZeroNorm = 1e-24;

void check_same_shape(const Mat &a, const Mat &b, const Mat &c) {
    if (a.rows() != b.rows() || a.rows() != c.rows() || a.rows() != a.cols() || b.rows() != b.cols() ||
        c.rows() != c.cols()) {
        throw std::invalid_argument("metric arguments must be square matrices of equal size");
    }
}

MetricValue guarded(const std::function<double()> &f) {
    try {
        return MetricValue{f(), ""};
    } catch (const UndefinedMetricError &e) {
        return MetricValue{std::nullopt, e.what()};
    }
}

}  // namespace

double correlation(const Mat &th, const Mat &exp, const Mat &in) {
    check_same_shape(th, exp, in);
    double n_th = (th * th).trace().real();
    double n_in = (in * in).trace().real();
    if (!(n_th > kZeroNorm) || !(n_in > kZeroNorm)) {
        throw UndefinedMetricError("correlation denominator is zero");
    }
    return (th * exp).trace().real() / std::sqrt(n_th * n_in);
}

double correlation(const DensityMatrix &th, const DensityMatrix &exp, const DensityMatrix &in) {
    if (th.form() != exp.form() || th.form() != in.form()) {
        throw std::invalid_argument("correlation arguments mix normalized and deviation forms");
    }
    return correlation(th.matrix(), exp.matrix(), in.matrix());
}

double correlation_ll(const Mat &th, const Mat &exp, const Mat &in, const LogicalEncoding &enc) {
    Mat p = enc.projector();
    check_same_shape(th, exp, in);
    if (p.rows() != th.rows()) {
        throw std::invalid_argument("encoding register does not match the states");
    }
    return correlation(p * th * p, p * exp * p, p * in * p);
}

Mat decode_and_trace(const Mat &rho, const LogicalEncoding &enc) {
    Mat u = decode_unitary(enc);
    if (u.rows() != rho.rows()) {
        throw std::invalid_argument("encoding register does not match the state");
    }
    return partial_trace(Mat(u * rho * u.adjoint()), enc.carriers());
}

double correlation_dec(const Mat &th, const Mat &exp, const Mat &in, const LogicalEncoding &enc) {
    check_same_shape(th, exp, in);
    return correlation(decode_and_trace(th, enc), decode_and_trace(exp, enc), decode_and_trace(in, enc));
}

double purity(const Mat &rho) {
    return (rho * rho).trace().real();
}

double reference_scale(const Mat &deviation) {
    double d = static_cast<double>(deviation.rows());
    double s2 = purity(deviation) / (1.0 - 1.0 / d);
    if (!(s2 > kZeroNorm)) {
        throw UndefinedMetricError("reference deviation is zero");
    }
    return std::sqrt(s2);
}

Mat effective_state(const Mat &deviation, double scale) {
    Eigen::Index d = deviation.rows();
    return Mat::Identity(d, d) / static_cast<double>(d) + deviation / scale;
}

MetricReport assemble_report(const ExperimentOutputs &out) {
    const Mat &th = out.rho_th;
    const Mat &ex = out.rho_exp;
    const Mat &in = out.rho_in;
    check_same_shape(th, ex, in);
    MetricReport r;
    r.label = out.label;
    r.c = guarded([&] { return correlation(th, ex, in); });
    r.c_prime = guarded([&] { return correlation(th, ex, ex); });
    r.c_ll = guarded([&] { return correlation_ll(th, ex, in, out.enc); });
    r.c_ll_prime = guarded([&] { return correlation_ll(th, ex, ex, out.enc); });
    r.c_dec = guarded([&] { return correlation_dec(th, ex, in, out.enc); });
    r.c_dec_prime = guarded([&] { return correlation_dec(th, ex, ex, out.enc); });
    r.purity_in = purity(in);
    r.purity_out = purity(ex);
    Mat eff_out = ex;
    if (out.form == Form::Deviation) {
        r.purity_in_effective = purity(effective_state(in, out.reference_scale));
        eff_out = effective_state(ex, out.reference_scale);
        r.purity_out_effective = purity(eff_out);
    } else {
        r.purity_in_effective = r.purity_in;
        r.purity_out_effective = r.purity_out;
    }
    Mat p = out.enc.projector();
    r.leakage = 1.0 - (p * eff_out * p).trace().real();
    return r;
}

}  // namespace dfsbell
