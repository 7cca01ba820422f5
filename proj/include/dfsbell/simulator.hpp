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

#ifndef DFSBELL_SIMULATOR_HPP
#define DFSBELL_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfsbell/encoding.hpp"
#include "dfsbell/pulse_compiler.hpp"
#include "dfsbell/spin_core.hpp"

namespace dfsbell {

struct RfPoint {
    double scale = 1;
    double weight = 1;
};

struct RfDistribution {
    std::vector<RfPoint> points{{1.0, 1.0}};

    void validate(const Tolerances &tol = default_tolerances()) const;
    static RfDistribution ideal() { return RfDistribution{}; }
    /// {1-w, 1, 1+w} with weights {1/4, 1/2, 1/4}.
    static RfDistribution symmetric3(double width);
};

/// Random collective z-rotation exp(-i phi sum_{subset} Z) with phi ~ N(0, sigma^2).
struct DephasingModel {
    SpinSet subset;
    double sigma = 0;
};

/// Dephasing interleaved after every delay, with sigma = rate * sqrt(duration).
struct DelayDephasing {
    SpinSet subset;
    double rate = 0;  // rad / sqrt(s)
};

struct PropagateOptions {
    std::optional<DelayDephasing> delay_dephasing;
};

/// Product of pulse and delay propagators. Throws if the program contains a crush.
Mat program_unitary(const PulseProgram &program, const Mat &h, double rf_scale = 1.0);

DensityMatrix propagate(const PulseProgram &program, const Mat &h, const DensityMatrix &rho, double rf_scale = 1.0,
                        const PropagateOptions &opts = PropagateOptions{});

DensityMatrix rf_ensemble(const PulseProgram &program, const Mat &h, const DensityMatrix &rho,
                          const RfDistribution &dist, const PropagateOptions &opts = PropagateOptions{});

/// Closed form: rho_ij * exp(-sigma^2 (m_i - m_j)^2 / 2), m = eigenvalues of sum_{subset} Z.
Mat dephasing_channel(const Mat &rho, const DephasingModel &model);
DensityMatrix dephasing_channel(const DensityMatrix &rho, const DephasingModel &model);
/// Sampled average of the random rotation; deterministic for a given seed.
Mat dephasing_monte_carlo(const Mat &rho, const DephasingModel &model, size_t samples, uint64_t seed);

/// Zeroes elements of nonzero coherence order under sum_{subset} Z (empty subset = all spins).
Mat gradient_crush(const Mat &rho, const SpinSet &subset = {});
DensityMatrix gradient_crush(const DensityMatrix &rho, const SpinSet &subset = {});

/// Deviation form: -eps sum_j Z_j. Normalized form: I/2^n - eps sum_j Z_j.
DensityMatrix equilibrium_state(int n, double eps, Form form = Form::Deviation);

/// |t><t| - I/d, the traceless part of a pseudo-pure state.
Mat pseudo_pure_deviation(std::string_view bits);

enum class GateKind { Rot, CRot, Swap, Crush };

/// Gate-level step of a preparation circuit.
struct Gate {
    GateKind kind = GateKind::Rot;
    int spin = 0;   // rotated spin, or first spin of a swap
    int spin2 = 0;  // second spin of a swap
    double angle = 0;
    double phase = 0;
    std::vector<std::pair<int, int>> controls;  // (spin, required bit)
    SpinSet subset;                             // crush subset, empty = all
};

struct PrepCircuit {
    std::string name;
    int n_spins = 4;
    std::vector<Gate> gates;

    void validate() const;
};

/// Unitary of a non-crush gate. Rotation angles are multiplied by rf_scale; swaps are exact.
Mat gate_unitary(int n, const Gate &gate, double rf_scale = 1.0);
Mat run_circuit(const PrepCircuit &circuit, const Mat &rho, double rf_scale = 1.0);

/// Mean over spins k of |Tr(Z_k rho)| / |Tr(Z_k rho_eq)|.
double signal_fraction(const Mat &rho, const Mat &rho_eq);

struct PrepResult {
    DensityMatrix state;        // RF-ensemble output, deviation form
    DensityMatrix ideal_state;  // ideal-pulse output, deviation form
    double correlation = 0;     // of ideal_state with the target (block-restricted for subsystem prep)
    double signal_fraction = 0;
};

/// Runs the circuit on the equilibrium deviation. The ideal-pulse output must
/// correlate with |target><target| - I/d at least `tol.prep_min_correlation`.
PrepResult prepare_pseudo_pure(const PrepCircuit &circuit, std::string_view target, double eps = 1.0,
                               const RfDistribution &dist = RfDistribution::ideal(),
                               const Tolerances &tol = default_tolerances());

/// As above, but the target only has to hold on the logical block:
/// P_L rho P_L is compared with |t><t| - P_L/4 for logical bits `logical_target`.
PrepResult prepare_subsystem_pp(const PrepCircuit &circuit, std::string_view logical_target = "00",
                                const LogicalEncoding &enc = LogicalEncoding{}, double eps = 1.0,
                                const RfDistribution &dist = RfDistribution::ideal(),
                                const Tolerances &tol = default_tolerances());

}  // namespace dfsbell

#endif
