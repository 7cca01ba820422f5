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

#include "dfsbell/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "json_util.hpp"

namespace dfsbell {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

std::string resolve(const fs::path &base, const std::string &p) {
    fs::path q(p);
    return q.is_absolute() ? q.string() : (base / q).lexically_normal().string();
}

std::string safe_name(const std::string &name) {
    std::string out;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
        out += ok ? c : '_';
    }
    return out.empty() ? "experiment" : out;
}

ojson metric_json(const MetricValue &v) {
    return v.value ? ojson(*v.value) : ojson(nullptr);
}

}  // namespace

RunConfig load_run_config(const std::string &path) {
    std::string text = read_file(path);
    JsonDoc doc(text, path);
    const auto &root = doc.root();
    doc.require_object(root, "config");
    fs::path base = fs::path(path).parent_path();
    uint64_t hash = fnv1a(text);

    RunConfig cfg;
    cfg.source = path;
    cfg.molecule_path = resolve(base, doc.get<std::string>(root, "molecule"));
    std::string mol_text = read_file(cfg.molecule_path);
    hash = fnv1a(mol_text, hash);
    cfg.molecule = parse_molecule(mol_text, cfg.molecule_path);

    if (root.contains("epsilon")) {
        cfg.epsilon = doc.get<double>(root, "epsilon");
        if (!(cfg.epsilon > 0)) {
            throw ConfigError(doc.anchor("epsilon") + "epsilon must be positive");
        }
    }
    if (root.contains("rf")) {
        const auto &rf = root.at("rf");
        doc.require_array(rf, "rf");
        cfg.rf.points.clear();
        for (const auto &p : rf) {
            cfg.rf.points.push_back({doc.get<double>(p, "scale", "rf"), doc.get<double>(p, "weight", "rf")});
        }
        try {
            cfg.rf.validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(doc.anchor("rf") + e.what());
        }
    }
    if (root.contains("sequence")) {
        const auto &s = root.at("sequence");
        doc.require_object(s, "sequence");
        if (s.contains("repetitions")) {
            cfg.bell.repetitions = doc.get<int>(s, "repetitions");
        }
        if (s.contains("delta_factor")) {
            cfg.bell.delta_factor = doc.get<double>(s, "delta_factor");
        }
        if (cfg.bell.repetitions < 1 || !(cfg.bell.delta_factor > 0)) {
            throw ConfigError(doc.anchor("sequence") + "repetitions must be >= 1 and delta_factor positive");
        }
    }
    if (root.contains("dephasing")) {
        const auto &d = root.at("dephasing");
        doc.require_object(d, "dephasing");
        if (d.contains("subset")) {
            cfg.dephasing.subset = doc.get<SpinSet>(d, "subset");
        }
        if (d.contains("sigma")) {
            cfg.dephasing.sigma = doc.get<double>(d, "sigma");
        }
        if (d.contains("delay_rate")) {
            cfg.dephasing.delay_rate = doc.get<double>(d, "delay_rate");
        }
        if (d.contains("method")) {
            std::string m = doc.get<std::string>(d, "method");
            if (m != "closed_form" && m != "monte_carlo") {
                throw ConfigError(doc.anchor("method") + "dephasing method must be closed_form or monte_carlo");
            }
            cfg.dephasing.monte_carlo = m == "monte_carlo";
        }
        if (d.contains("samples")) {
            int s = doc.get<int>(d, "samples");
            if (s < 1) {
                throw ConfigError(doc.anchor("samples") + "samples must be positive");
            }
            cfg.dephasing.samples = static_cast<size_t>(s);
        }
        if (!(cfg.dephasing.sigma >= 0) || !(cfg.dephasing.delay_rate >= 0)) {
            throw ConfigError(doc.anchor("dephasing") + "dephasing strengths must be nonnegative");
        }
        try {
            check_spins(cfg.molecule.n_spins(), cfg.dephasing.subset);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(doc.anchor("subset") + e.what());
        }
    }

    const auto &exps = doc.require(root, "experiments");
    doc.require_array(exps, "experiments");
    if (exps.empty()) {
        throw ConfigError(doc.anchor("experiments") + "at least one experiment is required");
    }
    std::set<std::string> names;
    bool any_bell = false;
    for (const auto &e : exps) {
        doc.require_object(e, "experiments");
        ExperimentSpec spec;
        spec.name = doc.get<std::string>(e, "name", "experiments");
        if (!names.insert(safe_name(spec.name)).second) {
            throw ConfigError(doc.anchor(spec.name) + "duplicate experiment name '" + spec.name + "'");
        }
        const auto &prep = doc.require(e, "prep", "experiments");
        if (prep.is_string()) {
            spec.prep.source = PrepSpec::Source::Circuit;
            spec.prep.circuit_path = resolve(base, prep.get<std::string>());
            std::string ctext = read_file(spec.prep.circuit_path);
            hash = fnv1a(ctext, hash);
            spec.prep.circuit = parse_circuit(ctext, spec.prep.circuit_path);
            if (spec.prep.circuit.circuit.n_spins != cfg.molecule.n_spins()) {
                throw ConfigError(doc.anchor("prep") + "circuit register does not match the molecule");
            }
        } else if (prep.is_object()) {
            spec.prep.source = PrepSpec::Source::PseudoPure;
            spec.prep.ket = doc.get<std::string>(prep, "pseudo_pure", "prep");
            if (static_cast<int>(spec.prep.ket.size()) != cfg.molecule.n_spins()) {
                throw ConfigError(doc.anchor("pseudo_pure") + "pseudo_pure ket does not match the molecule");
            }
            try {
                basis_ket(spec.prep.ket);
            } catch (const std::invalid_argument &ex) {
                throw ConfigError(doc.anchor("pseudo_pure") + ex.what());
            }
        } else {
            throw ConfigError(doc.anchor("prep") + "prep must be a circuit path or {\"pseudo_pure\": ket}");
        }
        std::string seq = e.contains("sequence") ? doc.get<std::string>(e, "sequence") : "none";
        if (seq != "bell" && seq != "none") {
            throw ConfigError(doc.anchor("sequence") + "sequence must be 'bell' or 'none'");
        }
        spec.bell = seq == "bell";
        any_bell = any_bell || spec.bell;
        cfg.experiments.push_back(spec);
    }
    if (any_bell) {
        try {
            bell_sequence(cfg.molecule, cfg.bell);
        } catch (const ConfigError &e) {
            throw ConfigError(JsonDoc(mol_text, cfg.molecule_path).anchor("couplings") + e.what());
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    cfg.config_hash = buf;
    return cfg;
}

Mat design_unitary(const MoleculeSpec &molecule, const BellOptions &opts) {
    PulseProgram prog = bell_sequence(molecule, opts);
    return program_unitary(prog, build_internal(molecule.with_model(CouplingModel::Weak)), 1.0);
}

std::vector<ExperimentResult> run_experiments(const RunConfig &cfg, uint64_t seed, const Tolerances &tol) {
    const int n = cfg.molecule.n_spins();
    const LogicalEncoding enc;
    if (enc.n_spins != n) {
        throw ConfigError("experiments need a 4-spin molecule");
    }
    Mat h = build_internal(cfg.molecule);
    Mat eq = equilibrium_state(n, cfg.epsilon).matrix();

    PulseProgram prog;
    Mat u_design;
    bool any_bell = false;
    for (const auto &e : cfg.experiments) {
        any_bell = any_bell || e.bell;
    }
    if (any_bell) {
        prog = bell_sequence(cfg.molecule, cfg.bell);
        u_design = design_unitary(cfg.molecule, cfg.bell);
    }
    PropagateOptions popts;
    if (cfg.dephasing.delay_rate > 0) {
        popts.delay_dephasing = DelayDephasing{cfg.dephasing.subset, cfg.dephasing.delay_rate};
    }

    std::vector<ExperimentResult> results;
    for (size_t idx = 0; idx < cfg.experiments.size(); idx++) {
        const ExperimentSpec &spec = cfg.experiments[idx];
        ExperimentResult r;
        r.name = spec.name;
        r.bell = spec.bell;

        const bool from_circuit = spec.prep.source == PrepSpec::Source::Circuit;
        if (from_circuit) {
            const CircuitConfig &cc = spec.prep.circuit;
            PrepResult pr = cc.kind == PrepKind::Full
                                ? prepare_pseudo_pure(cc.circuit, cc.target, cfg.epsilon, cfg.rf, tol)
                                : prepare_subsystem_pp(cc.circuit, cc.target, enc, cfg.epsilon, cfg.rf, tol);
            r.rho_in = pr.ideal_state.matrix();
            r.rho_in_rf = pr.state.matrix();
            r.prep_correlation = pr.correlation;
            r.signal_fraction = pr.signal_fraction;
        } else {
            r.rho_in = cfg.epsilon * pseudo_pure_deviation(spec.prep.ket);
            r.rho_in_rf = r.rho_in;
            r.prep_correlation = 1.0;
            r.signal_fraction = signal_fraction(r.rho_in, eq);
        }

        // Each RF scale sees the same field during preparation and sequence.
        Mat acc = Mat::Zero(r.rho_in.rows(), r.rho_in.cols());
        for (const auto &p : cfg.rf.points) {
            Mat state = from_circuit ? run_circuit(spec.prep.circuit.circuit, eq, p.scale) : r.rho_in;
            if (spec.bell) {
                state = propagate(prog, h, DensityMatrix(state, Form::Deviation, tol), p.scale, popts).matrix();
            }
            acc += p.weight * state;
        }
        if (cfg.dephasing.sigma > 0) {
            DephasingModel dm{cfg.dephasing.subset, cfg.dephasing.sigma};
            acc = cfg.dephasing.monte_carlo ? dephasing_monte_carlo(acc, dm, cfg.dephasing.samples, seed + idx)
                                            : dephasing_channel(acc, dm);
        }
        r.rho_exp = acc;
        r.rho_th = spec.bell ? Mat(u_design * r.rho_in * u_design.adjoint()) : r.rho_in;
        if (spec.bell) {
            r.program = prog;
            r.sequence_time = prog.total_delay();
        }

        ExperimentOutputs out;
        out.label = spec.name;
        out.rho_th = r.rho_th;
        out.rho_exp = r.rho_exp;
        out.rho_in = r.rho_in;
        out.form = Form::Deviation;
        out.reference_scale = reference_scale(r.rho_in);
        out.enc = enc;
        r.report = assemble_report(out);
        results.push_back(std::move(r));
    }
    return results;
}

std::string report_json(const RunConfig &cfg, const std::vector<ExperimentResult> &results, uint64_t seed,
                        const Tolerances &tol) {
    ojson j;
    j["config"] = cfg.source;
    j["config_hash"] = cfg.config_hash;
    j["seed"] = seed;
    ojson t = ojson::object();
    for (const auto &[k, v] : tol.entries()) {
        t[k] = v;
    }
    j["tolerances"] = t;
    j["molecule"] = cfg.molecule_path;
    j["epsilon"] = cfg.epsilon;
    ojson rf = ojson::array();
    for (const auto &p : cfg.rf.points) {
        rf.push_back({{"scale", p.scale}, {"weight", p.weight}});
    }
    j["rf"] = rf;
    j["sequence"] = {{"repetitions", cfg.bell.repetitions}, {"delta_factor", cfg.bell.delta_factor}};
    j["dephasing"] = {{"subset", cfg.dephasing.subset},
                      {"sigma", cfg.dephasing.sigma},
                      {"delay_rate", cfg.dephasing.delay_rate},
                      {"method", cfg.dephasing.monte_carlo ? "monte_carlo" : "closed_form"},
                      {"samples", cfg.dephasing.samples}};

    ojson table1 = ojson::array();
    ojson table2 = ojson::array();
    for (const auto &r : results) {
        const MetricReport &m = r.report;
        ojson row;
        row["experiment"] = r.name;
        row["sequence"] = r.bell ? "bell" : "none";
        row["sequence_time_s"] = r.sequence_time;
        row["prep_correlation"] = r.prep_correlation;
        row["signal_fraction"] = r.signal_fraction;
        ojson undefined = ojson::object();
        const std::pair<const char *, const MetricValue *> fields[] = {
            {"C", &m.c},         {"C_prime", &m.c_prime}, {"C_LL", &m.c_ll},
            {"C_LL_prime", &m.c_ll_prime}, {"C_Dec", &m.c_dec}, {"C_Dec_prime", &m.c_dec_prime}};
        for (const auto &[name, v] : fields) {
            row[name] = metric_json(*v);
            row[std::string(name) + "_abs"] = v->value ? ojson(std::abs(*v->value)) : ojson(nullptr);
            if (!v->value) {
                undefined[name] = v->reason;
            }
        }
        row["leakage"] = m.leakage;
        row["undefined"] = undefined;
        table1.push_back(row);
        table2.push_back({{"experiment", r.name},
                          {"purity_in", m.purity_in},
                          {"purity_out", m.purity_out},
                          {"purity_in_effective", m.purity_in_effective},
                          {"purity_out_effective", m.purity_out_effective}});
    }
    j["table_I"] = table1;
    j["table_II"] = table2;
    return j.dump(2) + "\n";
}

std::vector<std::string> write_outputs(const std::string &dir, const RunConfig &cfg,
                                       const std::vector<ExperimentResult> &results, uint64_t seed,
                                       const Tolerances &tol) {
    fs::create_directories(dir);
    fs::path base(dir);
    std::vector<std::string> warnings;
    bool program_written = false;
    for (const auto &r : results) {
        std::string stem = safe_name(r.name);
        write_density((base / (stem + "_rho_in.txt")).string(), DensityMatrix(r.rho_in, Form::Deviation, tol));
        write_density((base / (stem + "_rho_th.txt")).string(), DensityMatrix(r.rho_th, Form::Deviation, tol));
        write_density((base / (stem + "_rho_exp.txt")).string(), DensityMatrix(r.rho_exp, Form::Deviation, tol));
        write_file((base / (stem + "_rho_in_bars.csv")).string(), format_bar_chart(r.rho_in));
        write_file((base / (stem + "_rho_exp_bars.csv")).string(), format_bar_chart(r.rho_exp));
        write_file((base / (stem + "_rho_exp_pauli.csv")).string(), format_pauli_table(r.rho_exp));
        if (r.bell && !program_written) {
            write_file((base / "bell_program.txt").string(), dump_program(r.program));
            program_written = true;
        }
        const MetricReport &m = r.report;
        const std::pair<const char *, const MetricValue *> fields[] = {
            {"C", &m.c},         {"C_prime", &m.c_prime}, {"C_LL", &m.c_ll},
            {"C_LL_prime", &m.c_ll_prime}, {"C_Dec", &m.c_dec}, {"C_Dec_prime", &m.c_dec_prime}};
        for (const auto &[name, v] : fields) {
            if (!v->value) {
                warnings.push_back(r.name + ": " + name + " undefined (" + v->reason + ")");
            }
        }
    }
    write_file((base / "report.json").string(), report_json(cfg, results, seed, tol));
    return warnings;
}

}  // namespace dfsbell
