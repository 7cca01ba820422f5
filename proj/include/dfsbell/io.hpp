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

#ifndef DFSBELL_IO_HPP
#define DFSBELL_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "dfsbell/errors.hpp"
#include "dfsbell/hamiltonian.hpp"
#include "dfsbell/simulator.hpp"
#include "dfsbell/spin_core.hpp"
#include "dfsbell/tolerances.hpp"

namespace dfsbell {

/// Whole file as bytes. Throws std::runtime_error with the OS message on failure.
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

/// 64-bit FNV-1a, lower-case hex.
std::string fnv1a_hex(std::string_view data);
uint64_t fnv1a(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL);

/// Molecule schema:
///   {"spins": [{"label": str, "shift_rad_s": num}, ...],
///    "couplings": [{"i": int, "j": int, "J_hz": num, "model": "isotropic"|"weak"}, ...]}
/// "model" is optional (isotropic). Errors are ConfigError with "source:line: ..." prefixes.
MoleculeSpec parse_molecule(const std::string &text, const std::string &source);
MoleculeSpec load_molecule(const std::string &path);

enum class PrepKind { Full, Subsystem };

struct CircuitConfig {
    PrepCircuit circuit;
    PrepKind kind = PrepKind::Full;
    /// Register ket for full preparation, logical bits for subsystem preparation.
    std::string target;
};

/// Circuit schema:
///   {"name": str, "kind": "full"|"subsystem", "target": str, "n_spins": int,
///    "gates": [{"gate": "rot", "spin": k, "angle_rad": a, "phase_rad": p},
///              {"gate": "crot", ..., "controls": {"<spin>": 0|1, ...}},
///              {"gate": "swap", "spins": [a, b]},
///              {"gate": "crush", "subset": [...]}]}
CircuitConfig parse_circuit(const std::string &text, const std::string &source);
CircuitConfig load_circuit(const std::string &path);

/// Flat JSON object of tolerance overrides, keyed by Tolerances field names.
Tolerances parse_tolerances(const std::string &text, const std::string &source);
Tolerances load_tolerances(const std::string &path);

/// Text dump: header lines `n_spins`, `form`, `dim`, then one row per line as re/im pairs.
std::string format_density(const DensityMatrix &rho);
DensityMatrix parse_density(const std::string &text);
void write_density(const std::string &path, const DensityMatrix &rho);
DensityMatrix read_density(const std::string &path);

/// CSV `row,col,re,im` over every element, labels as bit strings.
std::string format_bar_chart(const Mat &rho);
/// CSV `pauli,re,im` over the 4^n expansion coefficients.
std::string format_pauli_table(const Mat &rho);

}  // namespace dfsbell

#endif
