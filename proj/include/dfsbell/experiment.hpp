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

#ifndef DFSBELL_EXPERIMENT_HPP
#define DFSBELL_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dfsbell/io.hpp"
#include "dfsbell/metrics.hpp"
#include "dfsbell/pulse_compiler.hpp"
#include "dfsbell/simulator.hpp"

namespace dfsbell {

struct PrepSpec {
    enum class Source { Circuit, PseudoPure };
    Source source = Source::Circuit;
    std::string circuit_path;
    CircuitConfig circuit;
    std::string ket;  // for PseudoPure
};

struct ExperimentSpec {
    std::string name;
    PrepSpec prep;
    bool bell = false;
};

struct DephasingSpec {
    SpinSet subset;           // empty = all spins
    double sigma = 0;         // applied once after the sequence
    double delay_rate = 0;    // interleaved after every delay, sigma = rate * sqrt(t)
    bool monte_carlo = false; // sample the final channel instead of the closed form
    size_t samples = 100000;
};

/// Experiment config (JSON). Relative paths resolve against the config's directory.
///   {"molecule": path, "epsilon": num, "rf": [{"scale", "weight"}...],
///    "sequence": {"repetitions": int, "delta_factor": num},
///    "dephasing": {"subset": [...], "sigma": num, "delay_rate": num,
///                  "method": "closed_form"|"monte_carlo", "samples": int},
///    "experiments": [{"name": str, "prep": path | {"pseudo_pure": "0101"},
///                     "sequence": "bell"|"none"}]}
struct RunConfig {
    std::string source;
    std::string config_hash;  // FNV-1a over the config and every file it references
    std::string molecule_path;
    MoleculeSpec molecule;
    double epsilon = 1.0;
    RfDistribution rf;
    BellOptions bell;
    DephasingSpec dephasing;
    std::vector<ExperimentSpec> experiments;
};

RunConfig load_run_config(const std::string &path);

struct ExperimentResult {
    std::string name;
    bool bell = false;
    Mat rho_in;        // ideal-pulse preparation output
    Mat rho_in_rf;     // preparation output under the RF ensemble
    Mat rho_th;        // design propagator applied to rho_in
    Mat rho_exp;       // full simulated output
    double prep_correlation = 0;
    double signal_fraction = 0;
    double sequence_time = 0;
    PulseProgram program;
    MetricReport report;
};

/// Design propagator: the compiled Bell sequence under the weak-coupling model
/// of the same molecule with exact pulses.
Mat design_unitary(const MoleculeSpec &molecule, const BellOptions &opts);

std::vector<ExperimentResult> run_experiments(const RunConfig &cfg, uint64_t seed,
                                              const Tolerances &tol = default_tolerances());

/// Report JSON: config hash, seed, tolerances, Table I and Table II style rows.
std::string report_json(const RunConfig &cfg, const std::vector<ExperimentResult> &results, uint64_t seed,
                        const Tolerances &tol);

/// Writes the report and per-experiment dumps into `dir` (created if needed).
/// Returns warnings (for example metrics that came out undefined).
std::vector<std::string> write_outputs(const std::string &dir, const RunConfig &cfg,
                                       const std::vector<ExperimentResult> &results, uint64_t seed,
                                       const Tolerances &tol);

}  // namespace dfsbell

#endif
