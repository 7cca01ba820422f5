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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dfsbell/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

int run(const std::string &config, const std::string &out_dir, uint64_t seed, const std::string &tol_path) {
    dfsbell::Tolerances tol = dfsbell::default_tolerances();
    dfsbell::RunConfig cfg;
    try {
        if (!tol_path.empty()) {
            tol = dfsbell::load_tolerances(tol_path);
        }
        cfg = dfsbell::load_run_config(config);
    } catch (const dfsbell::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        auto results = dfsbell::run_experiments(cfg, seed, tol);
        auto warnings = dfsbell::write_outputs(out_dir, cfg, results, seed, tol);
        for (const auto &w : warnings) {
            std::cerr << "warning: " << w << "\n";
        }
        for (const auto &r : results) {
            const auto &m = r.report;
            std::cout << r.name << ": C=" << (m.c.value ? std::to_string(*m.c.value) : "null")
                      << " C_LL=" << (m.c_ll.value ? std::to_string(*m.c_ll.value) : "null")
                      << " C_Dec=" << (m.c_dec.value ? std::to_string(*m.c_dec.value) : "null") << "\n";
        }
        return warnings.empty() ? kExitOk : kExitRuntime;
    } catch (const dfsbell::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulate logical Bell-state preparation on a four-spin register."};
    app.require_subcommand(1);

    std::string config;
    std::string out_dir = "out";
    uint64_t seed = 0;
    std::string tol_path;
    auto *run_cmd = app.add_subcommand("run", "Run the experiments listed in a config file.");
    run_cmd->add_option("config", config, "Experiment config (JSON)")->required();
    run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run_cmd->add_option("--seed", seed, "Seed for Monte-Carlo options")->capture_default_str();
    run_cmd->add_option("--tolerances", tol_path, "JSON file overriding tolerance constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    return run(config, out_dir, seed, tol_path);
}
