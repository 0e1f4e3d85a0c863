// Copyright 2026 The naqc Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "naqc/cli.h"
#include "naqc/suites.h"

using namespace naqc;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw cli::IoError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Coherence-steering (NAQC) criteria for two- and three-qubit states"};
    app.require_subcommand(1);

    std::string state_path;
    std::string measure = "all";
    auto *evaluate = app.add_subcommand("evaluate", "Evaluate every criterion on a state document");
    evaluate->add_option("--state", state_path, "JSON state file")->required();
    evaluate->add_option("--measure", measure, "l1, relent, skew or all");

    std::string family;
    cli::SweepOptions sweep_opts;
    std::string sweep_measure = "l1";
    std::string out_path;
    auto *sweep = app.add_subcommand("sweep", "Sweep a state family and write CSV");
    sweep->add_option("--family", family, "pure_alpha, ghz_alpha or werner")->required();
    sweep->add_option("--from", sweep_opts.from, "first parameter value");
    sweep->add_option("--to", sweep_opts.to, "last parameter value");
    sweep->add_option("--step", sweep_opts.step, "grid step");
    sweep->add_option("--measure", sweep_measure, "l1, relent or skew");
    sweep->add_option("--out", out_path, "output CSV path")->required();

    size_t nqubits = 2;
    std::string criterion;
    std::string search_measure = "l1";
    uint64_t samples = 100000;
    uint64_t seed = 1;
    auto *search = app.add_subcommand("search", "Random search for the largest criterion value");
    search->add_option("--nqubits", nqubits, "2 or 3");
    search->add_option("--criterion", criterion, "single0..2, double01/02/12, triple, t1, t2, t3")->required();
    search->add_option("--measure", search_measure, "l1, relent or skew");
    search->add_option("--samples", samples, "number of random states");
    search->add_option("--seed", seed, "master seed");

    std::string suite;
    uint64_t check_seed = 1;
    uint64_t check_samples = 0;
    auto *check = app.add_subcommand("check", "Run a Monte-Carlo property suite");
    check->add_option("--suite", suite, "suite name or 'all'")->required();
    check->add_option("--seed", check_seed, "master seed");
    check->add_option("--samples", check_samples, "override the suite's sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return cli::kParseError;
    }

    try {
        if (*evaluate) {
            cli::StateDocument doc = cli::parse_state_document(read_file(state_path));
            std::cout << cli::cmd_evaluate(doc, measure);
        } else if (*sweep) {
            try {
                sweep_opts.family = parse_family(family);
                sweep_opts.measure = parse_measure(sweep_measure);
            } catch (const std::invalid_argument &e) {
                throw cli::ParseError(e.what());
            }
            cli::cmd_sweep(sweep_opts, out_path);
        } else if (*search) {
            std::cout << cli::cmd_search(nqubits, criterion, parse_measure(search_measure), samples, seed);
        } else if (*check) {
            cli::CheckOutcome outcome = cli::cmd_check(suite, check_seed, check_samples);
            std::cout << outcome.text;
            if (!outcome.passed) {
                return cli::kSuiteFailure;
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code_for_current_exception();
    }
    return cli::kSuccess;
}
