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

#include "dfsbell/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "json_util.hpp"

namespace dfsbell {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "': " + std::strerror(errno));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "': " + std::strerror(errno));
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed: " + std::strerror(errno));
    }
}

uint64_t fnv1a(std::string_view data, uint64_t seed) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(data)));
    return buf;
}

MoleculeSpec parse_molecule(const std::string &text, const std::string &source) {
    JsonDoc doc(text, source);
    const auto &root = doc.root();
    doc.require_object(root, "molecule");
    MoleculeSpec spec;
    const auto &spins = doc.require(root, "spins");
    doc.require_array(spins, "spins");
    for (const auto &s : spins) {
        doc.require_object(s, "spins");
        SpinEntry e;
        e.label = doc.get<std::string>(s, "label", "spins");
        e.shift_rad_s = doc.get<double>(s, "shift_rad_s", "spins");
        spec.spins.push_back(e);
    }
    if (root.contains("couplings")) {
        const auto &cs = root.at("couplings");
        doc.require_array(cs, "couplings");
        for (const auto &c : cs) {
            doc.require_object(c, "couplings");
            Coupling k;
            k.i = doc.get<int>(c, "i", "couplings");
            k.j = doc.get<int>(c, "j", "couplings");
            k.j_hz = doc.get<double>(c, "J_hz", "couplings");
            if (c.contains("model")) {
                try {
                    k.model = coupling_model_from_string(doc.get<std::string>(c, "model"));
                } catch (const std::invalid_argument &e) {
                    throw ConfigError(doc.anchor("model") + e.what());
                }
            }
            spec.couplings.push_back(k);
        }
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(doc.anchor("couplings") + e.what());
    }
    return spec;
}

MoleculeSpec load_molecule(const std::string &path) {
    return parse_molecule(read_file(path), path);
}

CircuitConfig parse_circuit(const std::string &text, const std::string &source) {
    JsonDoc doc(text, source);
    const auto &root = doc.root();
    doc.require_object(root, "circuit");
    CircuitConfig cfg;
    cfg.circuit.name = root.contains("name") ? doc.get<std::string>(root, "name") : source;
    cfg.circuit.n_spins = root.contains("n_spins") ? doc.get<int>(root, "n_spins") : 4;
    std::string kind = doc.get<std::string>(root, "kind");
    if (kind == "full") {
        cfg.kind = PrepKind::Full;
    } else if (kind == "subsystem") {
        cfg.kind = PrepKind::Subsystem;
    } else {
        throw ConfigError(doc.anchor(kind) + "kind must be 'full' or 'subsystem', got '" + kind + "'");
    }
    cfg.target = doc.get<std::string>(root, "target");
    const auto &gates = doc.require(root, "gates");
    doc.require_array(gates, "gates");
    for (const auto &g : gates) {
        doc.require_object(g, "gates");
        std::string name = doc.get<std::string>(g, "gate", "gates");
        Gate gate;
        if (name == "rot" || name == "crot") {
            gate.kind = name == "rot" ? GateKind::Rot : GateKind::CRot;
            gate.spin = doc.get<int>(g, "spin", "gates");
            gate.angle = doc.get<double>(g, "angle_rad", "gates");
            gate.phase = g.contains("phase_rad") ? doc.get<double>(g, "phase_rad") : 0.0;
            if (gate.kind == GateKind::CRot) {
                const auto &ctrl = doc.require(g, "controls", "gates");
                doc.require_object(ctrl, "controls");
                for (const auto &[key, val] : ctrl.items()) {
                    int spin = 0;
                    try {
                        spin = std::stoi(key);
                    } catch (const std::exception &) {
                        throw ConfigError(doc.anchor("controls") + "control key '" + key + "' is not a spin number");
                    }
                    if (!val.is_number_integer()) {
                        throw ConfigError(doc.anchor("controls") + "control value for spin " + key + " must be 0 or 1");
                    }
                    gate.controls.emplace_back(spin, val.get<int>());
                }
            }
        } else if (name == "swap") {
            gate.kind = GateKind::Swap;
            auto spins = doc.get<std::vector<int>>(g, "spins", "gates");
            if (spins.size() != 2) {
                throw ConfigError(doc.anchor("spins") + "swap needs exactly two spins");
            }
            gate.spin = spins[0];
            gate.spin2 = spins[1];
        } else if (name == "crush") {
            gate.kind = GateKind::Crush;
            if (g.contains("subset")) {
                gate.subset = doc.get<std::vector<int>>(g, "subset");
            }
        } else {
            throw ConfigError(doc.anchor(name) + "unknown gate '" + name + "'");
        }
        cfg.circuit.gates.push_back(gate);
    }
    try {
        cfg.circuit.validate();
        if (cfg.kind == PrepKind::Full && static_cast<int>(cfg.target.size()) != cfg.circuit.n_spins) {
            throw std::invalid_argument("target '" + cfg.target + "' does not match the register size");
        }
        basis_ket(cfg.target);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(doc.anchor("gates") + e.what());
    }
    return cfg;
}

CircuitConfig load_circuit(const std::string &path) {
    return parse_circuit(read_file(path), path);
}

Tolerances parse_tolerances(const std::string &text, const std::string &source) {
    JsonDoc doc(text, source);
    const auto &root = doc.root();
    doc.require_object(root, "tolerances");
    Tolerances tol = default_tolerances();
    for (const auto &[key, val] : root.items()) {
        if (!val.is_number()) {
            throw ConfigError(doc.anchor(key) + "tolerance '" + key + "' must be a number");
        }
        if (!tol.set(key, val.get<double>())) {
            throw ConfigError(doc.anchor(key) + "unknown tolerance '" + key + "'");
        }
    }
    return tol;
}

Tolerances load_tolerances(const std::string &path) {
    return parse_tolerances(read_file(path), path);
}

std::string format_density(const DensityMatrix &rho) {
    std::string out = "# dfsbell density matrix\n";
    out += "n_spins " + std::to_string(rho.n_spins()) + "\n";
    out += std::string("form ") + (rho.form() == Form::Normalized ? "normalized" : "deviation") + "\n";
    out += "dim " + std::to_string(rho.dim()) + "\n";
    const Mat &m = rho.matrix();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            if (j) {
                out += " ";
            }
            out += fmt(m(i, j).real()) + " " + fmt(m(i, j).imag());
        }
        out += "\n";
    }
    return out;
}

DensityMatrix parse_density(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    int dim = -1;
    Form form = Form::Normalized;
    bool have_form = false;
    while (dim < 0 && std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string key, val;
        ls >> key >> val;
        if (key == "n_spins") {
            n = std::stoi(val);
        } else if (key == "form") {
            if (val != "normalized" && val != "deviation") {
                throw std::invalid_argument("unknown density form '" + val + "'");
            }
            form = val == "normalized" ? Form::Normalized : Form::Deviation;
            have_form = true;
        } else if (key == "dim") {
            dim = std::stoi(val);
        } else {
            throw std::invalid_argument("unexpected header line '" + line + "'");
        }
    }
    if (n < 1 || dim != (1 << n) || !have_form) {
        throw std::invalid_argument("density dump header is incomplete or inconsistent");
    }
    Mat m(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            double re = 0, im = 0;
            if (!(in >> re >> im)) {
                throw std::invalid_argument("density dump ends early at element (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
            m(i, j) = cplx(re, im);
        }
    }
    return DensityMatrix(m, form);
}

void write_density(const std::string &path, const DensityMatrix &rho) {
    write_file(path, format_density(rho));
}

DensityMatrix read_density(const std::string &path) {
    return parse_density(read_file(path));
}

std::string format_bar_chart(const Mat &rho) {
    int n = n_spins_of(rho);
    std::string out = "row,col,re,im\n";
    for (Eigen::Index i = 0; i < rho.rows(); i++) {
        for (Eigen::Index j = 0; j < rho.cols(); j++) {
            out += basis_label(static_cast<int>(i), n) + "," + basis_label(static_cast<int>(j), n) + "," +
                   fmt(rho(i, j).real()) + "," + fmt(rho(i, j).imag()) + "\n";
        }
    }
    return out;
}

std::string format_pauli_table(const Mat &rho) {
    PauliTable t = pauli_expand(rho);
    std::string out = "pauli,re,im\n";
    for (size_t k = 0; k < t.coeffs.size(); k++) {
        out += t.label(k) + "," + fmt(t.coeffs[k].real()) + "," + fmt(t.coeffs[k].imag()) + "\n";
    }
    return out;
}

}  // namespace dfsbell
