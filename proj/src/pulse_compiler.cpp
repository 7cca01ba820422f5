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

#include "dfsbell/pulse_compiler.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dfsbell {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string join_spins(const SpinSet &spins) {
    std::string out;
    for (size_t k = 0; k < spins.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(spins[k]);
    }
    return out;
}

SpinSet parse_spins(const std::string &text, int line_no) {
    SpinSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": bad spin list '" + text + "'");
        }
    }
    return out;
}

double parse_number(const std::string &text, int line_no) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception &) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad number '" + text + "'");
    }
}

}  // namespace

void PulseProgram::add_delay(double seconds) {
    events.emplace_back(Delay{seconds});
}

void PulseProgram::add_pulse(SpinSet targets, double phase, double angle) {
    Pulse p;
    p.targets = std::move(targets);
    p.phase = phase;
    p.angle = angle;
    events.emplace_back(std::move(p));
}

void PulseProgram::add_crush(SpinSet subset) {
    events.emplace_back(GradientCrush{std::move(subset)});
}

void PulseProgram::append(const PulseProgram &other) {
    if (other.n_spins != n_spins) {
        throw std::invalid_argument("cannot append programs for different register sizes");
    }
    events.insert(events.end(), other.events.begin(), other.events.end());
}

void PulseProgram::validate() const {
    if (n_spins < 1) {
        throw std::invalid_argument("pulse program needs a register of at least one spin");
    }
    for (const auto &e : events) {
        if (const auto *d = std::get_if<Delay>(&e)) {
            if (!(d->seconds >= 0) || !std::isfinite(d->seconds)) {
                throw std::invalid_argument("delay durations must be finite and nonnegative");
            }
        } else if (const auto *p = std::get_if<Pulse>(&e)) {
            if (p->targets.empty()) {
                throw std::invalid_argument("pulse needs at least one target");
            }
            check_spins(n_spins, p->targets);
            if (!std::isfinite(p->angle) || !std::isfinite(p->phase)) {
                throw std::invalid_argument("pulse angle and phase must be finite");
            }
        } else {
            check_spins(n_spins, std::get<GradientCrush>(e).subset);
        }
    }
}

double PulseProgram::total_delay() const {
    double t = 0;
    for (const auto &e : events) {
        if (const auto *d = std::get_if<Delay>(&e)) {
            t += d->seconds;
        }
    }
    return t;
}

size_t PulseProgram::pulse_count() const {
    size_t c = 0;
    for (const auto &e : events) {
        c += std::holds_alternative<Pulse>(e);
    }
    return c;
}

size_t PulseProgram::delay_count() const {
    size_t c = 0;
    for (const auto &e : events) {
        c += std::holds_alternative<Delay>(e);
    }
    return c;
}

PulseProgram cp_subsequence(int n_spins, int j, int k, double delta, int n) {
    if (n_spins != 4) {
        throw std::invalid_argument("cp_subsequence is defined for a 4-spin register");
    }
    check_spins(n_spins, {j, k});
    if (!(delta > 0)) {
        throw std::invalid_argument("CP delay must be positive");
    }
    if (n < 1) {
        throw std::invalid_argument("CP repetitions must be at least 1");
    }
    SpinSet spectators;
    for (int s = 1; s <= n_spins; s++) {
        if (s != j && s != k) {
            spectators.push_back(s);
        }
    }
    int a = spectators[0];
    int b = spectators[1];
    PulseProgram prog;
    prog.n_spins = n_spins;
    const SpinSet targets[4] = {{j, k, a}, {j, k, b}, {j, k, a}, {b}};
    for (int r = 0; r < n; r++) {
        for (const auto &t : targets) {
            prog.add_delay(delta);
            prog.add_pulse(t, kPhaseX, M_PI);
        }
    }
    // One block rotates j and k by 3 pi; an odd count leaves them flipped.
    if (n % 2 == 1) {
        prog.add_pulse({j, k}, kPhaseX, M_PI);
    }
    return prog;
}

PulseProgram bell_sequence(const MoleculeSpec &spec, const BellOptions &opts) {
    spec.validate();
    if (spec.n_spins() != 4) {
        throw ConfigError("the Bell sequence needs a 4-spin molecule, got " + std::to_string(spec.n_spins()));
    }
    auto delta = [&](int i, int j) {
        const Coupling *c = spec.find(i, j);
        std::string key = "J_" + std::to_string(i) + std::to_string(j);
        if (c == nullptr) {
            throw ConfigError("missing required coupling " + key);
        }
        if (!(c->j_hz > 0)) {
            throw ConfigError("coupling " + key + " must be positive");
        }
        return opts.delta_factor / c->j_hz;
    };
    double d12 = delta(1, 2);
    double d34 = delta(3, 4);
    double d23 = delta(2, 3);
    int n = opts.repetitions;

    PulseProgram prog;
    prog.n_spins = 4;
    prog.add_pulse({1, 2}, kPhaseXBar, M_PI / 2);
    prog.append(cp_subsequence(4, 1, 2, d12, n));
    prog.add_pulse({1, 2, 3, 4}, kPhaseX, M_PI / 2);
    prog.append(cp_subsequence(4, 3, 4, d34, n));
    prog.add_pulse({3, 4}, kPhaseXBar, M_PI / 2);
    prog.append(cp_subsequence(4, 2, 3, d23, n));
    prog.add_pulse({3}, kPhaseX, M_PI / 2);
    prog.add_pulse({4}, kPhaseY, M_PI / 2);
    prog.append(cp_subsequence(4, 3, 4, d34, n));
    prog.add_pulse({3}, kPhaseXBar, M_PI / 2);
    prog.add_pulse({4}, kPhaseYBar, M_PI / 2);
    return prog;
}

Mat pulse_unitary(int n_spins, const Pulse &pulse, double rf_scale) {
    double angle = pulse.model == PulseModel::Scaled ? pulse.angle * rf_scale : pulse.angle;
    if (pulse.z_axis) {
        return rotation(n_spins, pulse.targets, Axis::Z, angle);
    }
    return rotation_phase(n_spins, pulse.targets, pulse.phase, angle);
}

Mat average_hamiltonian(const PulseProgram &program, const Mat &h) {
    program.validate();
    int d = 1 << program.n_spins;
    if (h.rows() != d || h.cols() != d) {
        throw std::invalid_argument("Hamiltonian dimension does not match the program register");
    }
    Mat frame = Mat::Identity(d, d);
    Mat sum = Mat::Zero(d, d);
    double total = 0;
    for (const auto &e : program.events) {
        if (const auto *dl = std::get_if<Delay>(&e)) {
            sum += dl->seconds * (frame.adjoint() * h * frame);
            total += dl->seconds;
        } else if (const auto *p = std::get_if<Pulse>(&e)) {
            Pulse ideal = *p;
            ideal.model = PulseModel::Ideal;
            frame = pulse_unitary(program.n_spins, ideal) * frame;
        } else {
            throw std::invalid_argument("average_hamiltonian is defined only for unitary programs (no crush events)");
        }
    }
    if (!(total > 0)) {
        throw std::invalid_argument("average_hamiltonian needs a positive total delay");
    }
    return sum / total;
}

std::string dump_program(const PulseProgram &program) {
    std::string out;
    for (const auto &e : program.events) {
        if (const auto *d = std::get_if<Delay>(&e)) {
            out += "delay " + format_double(d->seconds) + "\n";
        } else if (const auto *p = std::get_if<Pulse>(&e)) {
            out += "pulse " + join_spins(p->targets) + " " + (p->z_axis ? std::string("z") : format_double(p->phase)) +
                   " " + format_double(p->angle);
            if (p->model == PulseModel::Ideal) {
                out += " ideal";
            }
            out += "\n";
        } else {
            const auto &c = std::get<GradientCrush>(e);
            out += c.subset.empty() ? std::string("crush\n") : "crush " + join_spins(c.subset) + "\n";
        }
    }
    return out;
}

PulseProgram parse_program(const std::string &text, int n_spins) {
    PulseProgram prog;
    prog.n_spins = n_spins;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) {
            tok.push_back(t);
        }
        if (tok.empty() || tok[0][0] == '#') {
            continue;
        }
        if (tok[0] == "delay" && tok.size() == 2) {
            prog.add_delay(parse_number(tok[1], line_no));
        } else if (tok[0] == "pulse" && (tok.size() == 4 || (tok.size() == 5 && tok[4] == "ideal"))) {
            Pulse p;
            p.targets = parse_spins(tok[1], line_no);
            if (tok[2] == "z") {
                p.z_axis = true;
            } else {
                p.phase = parse_number(tok[2], line_no);
            }
            p.angle = parse_number(tok[3], line_no);
            if (tok.size() == 5) {
                p.model = PulseModel::Ideal;
            }
            prog.events.emplace_back(std::move(p));
        } else if (tok[0] == "crush" && tok.size() <= 2) {
            prog.add_crush(tok.size() == 2 ? parse_spins(tok[1], line_no) : SpinSet{});
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unrecognized event '" + line + "'");
        }
    }
    prog.validate();
    return prog;
}

}  // namespace dfsbell
