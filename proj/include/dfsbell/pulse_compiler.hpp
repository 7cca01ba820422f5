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

#ifndef DFSBELL_PULSE_COMPILER_HPP
#define DFSBELL_PULSE_COMPILER_HPP

#include <string>
#include <variant>
#include <vector>

#include "dfsbell/errors.hpp"
#include "dfsbell/hamiltonian.hpp"
#include "dfsbell/spin_core.hpp"

namespace dfsbell {

struct Delay {
    double seconds = 0;
};

enum class PulseModel {
    Ideal,   // angle is applied exactly, whatever the RF scale
    Scaled,  // angle is multiplied by the RF scale
};

struct Pulse {
    SpinSet targets;
    double phase = 0;     // transverse axis angle; ignored when z_axis is set
    double angle = 0;
    bool z_axis = false;
    PulseModel model = PulseModel::Scaled;
};

struct GradientCrush {
    SpinSet subset;  // empty means the whole register
};

using PulseEvent = std::variant<Delay, Pulse, GradientCrush>;

struct PulseProgram {
    int n_spins = 0;
    std::vector<PulseEvent> events;

    void add_delay(double seconds);
    void add_pulse(SpinSet targets, double phase, double angle);
    void add_crush(SpinSet subset = {});
    void append(const PulseProgram &other);
    void validate() const;

    double total_delay() const;
    size_t pulse_count() const;
    size_t delay_count() const;
};

/// In-plane phases for the barred/unbarred axes.
inline constexpr double kPhaseX = 0.0;
inline constexpr double kPhaseY = 1.5707963267948966;
inline constexpr double kPhaseXBar = 3.141592653589793;
inline constexpr double kPhaseYBar = 4.71238898038469;

/// Delay-pi-pulse blocks that keep only (pi/2) J_jk Z_j Z_k on average.
/// Needs a 4-spin register. With spectators a < b the pulse targets are
/// {j,k,a}, {j,k,b}, {j,k,a}, {b}, repeated n times. For odd n a final
/// zero-duration pi pulse on {j,k} returns the toggling frame to identity.
PulseProgram cp_subsequence(int n_spins, int j, int k, double delta, int n);

struct BellOptions {
    int repetitions = 1;
    /// Delta_jk = delta_factor / J_jk. 1/8 makes each block an exp(-i pi/4 Z_j Z_k).
    double delta_factor = 0.125;
};

/// The logical Bell sequence compiled from CP blocks on pairs (1,2), (3,4), (2,3), (3,4).
/// Throws ConfigError naming the key (J_12, J_34 or J_23) when a coupling is absent or not positive.
PulseProgram bell_sequence(const MoleculeSpec &spec, const BellOptions &opts = BellOptions{});

/// Zeroth-order average Hamiltonian (1/T) sum_i t_i U_i^dag H U_i over the
/// toggling frames U_i accumulated from ideal pulses before each delay.
Mat average_hamiltonian(const PulseProgram &program, const Mat &h);

/// Unitary of one pulse event at the given RF scale.
Mat pulse_unitary(int n_spins, const Pulse &pulse, double rf_scale = 1.0);

/// Line-oriented text: `delay <s>`, `pulse <t1,t2,..> <phase_rad> <angle_rad>`, `crush [s1,s2,..]`.
std::string dump_program(const PulseProgram &program);
PulseProgram parse_program(const std::string &text, int n_spins);

}  // namespace dfsbell

#endif
