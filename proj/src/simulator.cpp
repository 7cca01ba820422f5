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

#include "dfsbell/simulator.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dfsbell/hamiltonian.hpp"

namespace dfsbell {

namespace {

// exp(-iHt) for many t from one eigendecomposition.
class DelayPropagator {
   public:
    explicit DelayPropagator(const Mat &h) {
        if (!is_hermitian(h)) {
            throw std::invalid_argument("Hamiltonian must be Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<Mat> es((h + h.adjoint()) / 2.0);
        vecs_ = es.eigenvectors();
        vals_ = es.eigenvalues();
    }

    Mat operator()(double t) const {
        const cplx i(0, 1);
        Vec ph(vals_.size());
        for (Eigen::Index k = 0; k < vals_.size(); k++) {
            ph(k) = std::exp(-i * vals_(k) * t);
        }
        return vecs_ * ph.asDiagonal() * vecs_.adjoint();
    }

   private:
    Mat vecs_;
    Eigen::VectorXd vals_;
};

std::vector<int> subset_eigenvalues(int n, const SpinSet &subset) {
    SpinSet s = subset;
    if (s.empty()) {
        for (int k = 1; k <= n; k++) {
            s.push_back(k);
        }
    }
    return collective_z(n, s).eigenvalues;
}

void check_dims(const PulseProgram &program, const Mat &h, const Mat &rho) {
    int d = 1 << program.n_spins;
    if (h.rows() != d || h.cols() != d) {
        throw std::invalid_argument("Hamiltonian dimension does not match the program register");
    }
    if (rho.rows() != d || rho.cols() != d) {
        throw std::invalid_argument("state dimension does not match the program register");
    }
}

double cosine(const Mat &a, const Mat &b) {
    double num = (a * b).trace().real();
    double den = std::sqrt((a * a).trace().real() * (b * b).trace().real());
    return den > 0 ? num / den : 0.0;
}

}  // namespace

void RfDistribution::validate(const Tolerances &tol) const {
    if (points.empty()) {
        throw std::invalid_argument("RF distribution needs at least one point");
    }
    double sum = 0;
    for (const auto &p : points) {
        if (!(p.weight >= 0)) {
            throw std::invalid_argument("RF weights must be nonnegative");
        }
        if (!(p.scale > 0) || !std::isfinite(p.scale)) {
            throw std::invalid_argument("RF scales must be positive");
        }
        sum += p.weight;
    }
    if (std::abs(sum - 1.0) > tol.rf_weight_sum) {
        throw std::invalid_argument("RF weights must sum to 1");
    }
}

RfDistribution RfDistribution::symmetric3(double width) {
    return RfDistribution{{{1.0 - width, 0.25}, {1.0, 0.5}, {1.0 + width, 0.25}}};
}

Mat program_unitary(const PulseProgram &program, const Mat &h, double rf_scale) {
    program.validate();
    int d = 1 << program.n_spins;
    if (h.rows() != d) {
        throw std::invalid_argument("Hamiltonian dimension does not match the program register");
    }
    DelayPropagator prop(h);
    Mat u = Mat::Identity(d, d);
    for (const auto &e : program.events) {
        if (const auto *dl = std::get_if<Delay>(&e)) {
            u = prop(dl->seconds) * u;
        } else if (const auto *p = std::get_if<Pulse>(&e)) {
            u = pulse_unitary(program.n_spins, *p, rf_scale) * u;
        } else {
            throw std::invalid_argument("program with crush events has no unitary");
        }
    }
    return u;
}

DensityMatrix propagate(const PulseProgram &program, const Mat &h, const DensityMatrix &rho, double rf_scale,
                        const PropagateOptions &opts) {
    program.validate();
    check_dims(program, h, rho.matrix());
    if (!(rf_scale > 0)) {
        throw std::invalid_argument("RF scale must be positive");
    }
    DelayPropagator prop(h);
    Mat r = rho.matrix();
    for (const auto &e : program.events) {
        if (const auto *dl = std::get_if<Delay>(&e)) {
            Mat u = prop(dl->seconds);
            r = u * r * u.adjoint();
            if (opts.delay_dephasing && opts.delay_dephasing->rate > 0) {
                DephasingModel m{opts.delay_dephasing->subset, opts.delay_dephasing->rate * std::sqrt(dl->seconds)};
                r = dephasing_channel(r, m);
            }
        } else if (const auto *p = std::get_if<Pulse>(&e)) {
            Mat u = pulse_unitary(program.n_spins, *p, rf_scale);
            r = u * r * u.adjoint();
        } else {
            r = gradient_crush(r, std::get<GradientCrush>(e).subset);
        }
    }
    return DensityMatrix(r, rho.form());
}

DensityMatrix rf_ensemble(const PulseProgram &program, const Mat &h, const DensityMatrix &rho,
                          const RfDistribution &dist, const PropagateOptions &opts) {
    dist.validate();
    Mat acc = Mat::Zero(rho.dim(), rho.dim());
    for (const auto &p : dist.points) {
        acc += p.weight * propagate(program, h, rho, p.scale, opts).matrix();
    }
    return DensityMatrix(acc, rho.form());
}

Mat dephasing_channel(const Mat &rho, const DephasingModel &model) {
    int n = n_spins_of(rho);
    if (!(model.sigma >= 0)) {
        throw std::invalid_argument("dephasing sigma must be nonnegative");
    }
    std::vector<int> m = subset_eigenvalues(n, model.subset);
    Mat out = rho;
    for (Eigen::Index i = 0; i < rho.rows(); i++) {
        for (Eigen::Index j = 0; j < rho.cols(); j++) {
            double dm = m[i] - m[j];
            if (dm != 0) {
                out(i, j) *= std::exp(-model.sigma * model.sigma * dm * dm / 2);
            }
        }
    }
    return out;
}

DensityMatrix dephasing_channel(const DensityMatrix &rho, const DephasingModel &model) {
    return DensityMatrix(dephasing_channel(rho.matrix(), model), rho.form());
}

Mat dephasing_monte_carlo(const Mat &rho, const DephasingModel &model, size_t samples, uint64_t seed) {
    int n = n_spins_of(rho);
    if (samples == 0) {
        throw std::invalid_argument("Monte Carlo dephasing needs at least one sample");
    }
    std::vector<int> m = subset_eigenvalues(n, model.subset);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, model.sigma);
    Mat acc = Mat::Zero(rho.rows(), rho.cols());
    const cplx i(0, 1);
    Vec ph(rho.rows());
    for (size_t s = 0; s < samples; s++) {
        double phi = normal(rng);
        for (Eigen::Index k = 0; k < rho.rows(); k++) {
            ph(k) = std::exp(-i * phi * static_cast<double>(m[k]));
        }
        acc += ph.asDiagonal() * rho * ph.conjugate().asDiagonal();
    }
    return acc / static_cast<double>(samples);
}

Mat gradient_crush(const Mat &rho, const SpinSet &subset) {
    int n = n_spins_of(rho);
    std::vector<int> m = subset_eigenvalues(n, subset);
    Mat out = rho;
    for (Eigen::Index i = 0; i < rho.rows(); i++) {
        for (Eigen::Index j = 0; j < rho.cols(); j++) {
            if (m[i] != m[j]) {
                out(i, j) = 0;
            }
        }
    }
    return out;
}

DensityMatrix gradient_crush(const DensityMatrix &rho, const SpinSet &subset) {
    return DensityMatrix(gradient_crush(rho.matrix(), subset), rho.form());
}

DensityMatrix equilibrium_state(int n, double eps, Form form) {
    if (n < 1) {
        throw std::invalid_argument("register must have at least one spin");
    }
    if (!(eps > 0)) {
        throw std::invalid_argument("polarization eps must be positive");
    }
    SpinSet all;
    for (int k = 1; k <= n; k++) {
        all.push_back(k);
    }
    Mat dev = -eps * collective(n, all, 'Z');
    if (form == Form::Deviation) {
        return DensityMatrix(dev, Form::Deviation);
    }
    int d = 1 << n;
    return DensityMatrix(Mat(Mat::Identity(d, d) / static_cast<double>(d) + dev), Form::Normalized);
}

Mat pseudo_pure_deviation(std::string_view bits) {
    Vec t = basis_ket(bits);
    double d = static_cast<double>(t.size());
    return outer(t) - Mat::Identity(t.size(), t.size()) / d;
}

void PrepCircuit::validate() const {
    if (n_spins < 1) {
        throw std::invalid_argument("circuit register must have at least one spin");
    }
    for (const auto &g : gates) {
        switch (g.kind) {
            case GateKind::Rot:
                check_spins(n_spins, {g.spin});
                break;
            case GateKind::CRot: {
                SpinSet all{g.spin};
                for (const auto &[s, bit] : g.controls) {
                    all.push_back(s);
                    if (bit != 0 && bit != 1) {
                        throw std::invalid_argument("control values must be 0 or 1");
                    }
                }
                check_spins(n_spins, all);
                break;
            }
            case GateKind::Swap:
                check_spins(n_spins, {g.spin, g.spin2});
                break;
            case GateKind::Crush:
                check_spins(n_spins, g.subset);
                break;
        }
        if (!std::isfinite(g.angle) || !std::isfinite(g.phase)) {
            throw std::invalid_argument("gate angles must be finite");
        }
    }
}

Mat gate_unitary(int n, const Gate &gate, double rf_scale) {
    int d = 1 << n;
    switch (gate.kind) {
        case GateKind::Rot:
            return rotation_phase(n, {gate.spin}, gate.phase, gate.angle * rf_scale);
        case GateKind::CRot: {
            Mat proj = Mat::Identity(d, d);
            for (const auto &[s, bit] : gate.controls) {
                Mat p = Mat::Zero(2, 2);
                p(bit, bit) = 1;
                proj = proj * embed(n, {{s, p}});
            }
            Mat r = rotation_phase(n, {gate.spin}, gate.phase, gate.angle * rf_scale);
            return proj * r + (Mat::Identity(d, d) - proj);
        }
        case GateKind::Swap: {
            check_spins(n, {gate.spin, gate.spin2});
            Mat s = Mat::Zero(d, d);
            for (int idx = 0; idx < d; idx++) {
                int b1 = (idx >> (n - gate.spin)) & 1;
                int b2 = (idx >> (n - gate.spin2)) & 1;
                int out = idx;
                if (b1 != b2) {
                    out ^= (1 << (n - gate.spin)) | (1 << (n - gate.spin2));
                }
                s(out, idx) = 1;
            }
            return s;
        }
        case GateKind::Crush:
            break;
    }
    throw std::invalid_argument("a crush gate has no unitary");
}

Mat run_circuit(const PrepCircuit &circuit, const Mat &rho, double rf_scale) {
    circuit.validate();
    if (rho.rows() != (1 << circuit.n_spins)) {
        throw std::invalid_argument("state dimension does not match the circuit register");
    }
    Mat r = rho;
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::Crush) {
            r = gradient_crush(r, g.subset);
        } else {
            Mat u = gate_unitary(circuit.n_spins, g, rf_scale);
            r = u * r * u.adjoint();
        }
    }
    return r;
}

double signal_fraction(const Mat &rho, const Mat &rho_eq) {
    int n = n_spins_of(rho);
    double sum = 0;
    for (int k = 1; k <= n; k++) {
        Mat z = pauli_term(n, {{k, 'Z'}});
        double ref = std::abs((z * rho_eq).trace().real());
        if (ref == 0) {
            throw std::invalid_argument("reference state has no signal on spin " + std::to_string(k));
        }
        sum += std::abs((z * rho).trace().real()) / ref;
    }
    return sum / n;
}

namespace {

PrepResult run_prep(const PrepCircuit &circuit, double eps, const RfDistribution &dist) {
    dist.validate();
    Mat eq = equilibrium_state(circuit.n_spins, eps).matrix();
    Mat ideal = run_circuit(circuit, eq, 1.0);
    Mat ens = Mat::Zero(eq.rows(), eq.cols());
    for (const auto &p : dist.points) {
        ens += p.weight * run_circuit(circuit, eq, p.scale);
    }
    return PrepResult{DensityMatrix(ens, Form::Deviation), DensityMatrix(ideal, Form::Deviation), 0.0,
                      signal_fraction(ens, eq)};
}

void require_correlation(const PrepCircuit &circuit, double c, const Tolerances &tol) {
    if (!(c >= tol.prep_min_correlation)) {
        std::ostringstream msg;
        msg << "preparation circuit '" << circuit.name << "' reaches correlation " << c << " with its target, below "
            << tol.prep_min_correlation;
        throw ConfigError(msg.str());
    }
}

}  // namespace

PrepResult prepare_pseudo_pure(const PrepCircuit &circuit, std::string_view target, double eps,
                               const RfDistribution &dist, const Tolerances &tol) {
    if (static_cast<int>(target.size()) != circuit.n_spins) {
        throw std::invalid_argument("target ket does not match the circuit register");
    }
    PrepResult r = run_prep(circuit, eps, dist);
    r.correlation = cosine(r.ideal_state.matrix(), pseudo_pure_deviation(target));
    require_correlation(circuit, r.correlation, tol);
    return r;
}

PrepResult prepare_subsystem_pp(const PrepCircuit &circuit, std::string_view logical_target,
                                const LogicalEncoding &enc, double eps, const RfDistribution &dist,
                                const Tolerances &tol) {
    if (enc.n_spins != circuit.n_spins) {
        throw std::invalid_argument("encoding and circuit register sizes differ");
    }
    PrepResult r = run_prep(circuit, eps, dist);
    Mat p = enc.projector();
    Mat t = outer(enc.ket(logical_target)) - p / p.trace().real();
    r.correlation = cosine(p * r.ideal_state.matrix() * p, t);
    require_correlation(circuit, r.correlation, tol);
    return r;
}

}  // namespace dfsbell
