// Copyright 2026 The ccr-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ccr_lab command line:
//
//   ccr_lab quantify <file>
//   ccr_lab verify [--dims 2,3,4,8] [--trials N] [--seed S] [--json]
//   ccr_lab sweep --experiment <fig1|fig2|fig3|detector> [--out <path>] [--resolution N]
//
// Exit codes: 0 success, 1 verification failure, 2 input error.
// CCR_LAB_SEED supplies the seed when --seed is absent.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccr/ccr.hpp"

namespace ccr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr std::uint64_t kDefaultSeed = 42;

inline std::uint64_t parse_seed(const std::string& text, const std::string& source) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw InputError(source + ": expected a non-negative integer seed, got '" + text + "'");
    }
    return v;
}

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CCR_LAB_SEED"); env != nullptr && *env != '\0') {
        return parse_seed(env, "CCR_LAB_SEED");
    }
    return kDefaultSeed;
}

inline int cmd_quantify(const std::string& path, std::ostream& out) {
    const io::State state = io::load_state(path);
    QuantifierReport report = std::holds_alternative<DensityMatrix>(state)
                                  ? ccr_report(std::get<DensityMatrix>(state))
                                  : ccr_report(std::get<BipartitePureState>(state));
    out << io::to_json(report).dump(2) << '\n';
    return report.residuals_ok() ? kExitOk : kExitFailure;
}

inline void print_verdict_table(const std::vector<PropertyVerdict>& verdicts, std::ostream& out) {
    std::size_t width = 4;
    for (const auto& v : verdicts) width = std::max(width, v.name.size());
    out << std::left << std::setw(7) << "status" << std::setw(static_cast<int>(width) + 2) << "check" << std::right
        << std::setw(8) << "trials" << std::setw(16) << "worst" << std::setw(10) << "slack" << '\n';
    std::size_t passed = 0;
    for (const auto& v : verdicts) {
        passed += v.pass ? 1 : 0;
        char worst[32], slack[32];
        std::snprintf(worst, sizeof worst, "%.4e", v.worst_violation);
        std::snprintf(slack, sizeof slack, "%.0e", v.slack);
        out << std::left << std::setw(7) << (v.pass ? "PASS" : "FAIL") << std::setw(static_cast<int>(width) + 2)
            << v.name << std::right << std::setw(8) << v.trials << std::setw(16) << worst << std::setw(10) << slack
            << '\n';
    }
    out << passed << "/" << verdicts.size() << " checks passed\n";
}

inline int cmd_verify(const VerifyOptions& opt, bool as_json, std::ostream& out) {
    const std::vector<PropertyVerdict> verdicts = run_verification(opt);
    if (as_json) {
        out << io::to_json(verdicts).dump(2) << '\n';
    } else {
        print_verdict_table(verdicts, out);
    }
    for (const auto& v : verdicts)
        if (!v.pass) return kExitFailure;
    return kExitOk;
}

inline int cmd_sweep(const SweepSpec& spec, std::ostream& out) {
    const CsvTable table = run_sweep(spec);
    if (!spec.output) {
        write_csv(out, table);
        return kExitOk;
    }
    std::ofstream file(*spec.output, std::ios::binary);
    if (!file) throw InputError("cannot open output path '" + *spec.output + "' for writing");
    write_csv(file, table);
    file.flush();
    if (!file) throw InputError("failed writing output path '" + *spec.output + "'");
    return kExitOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uncertainty, coherence and complementarity quantifiers for finite-dimensional quantum states",
                 "ccr_lab"};
    app.require_subcommand(1);

    std::string state_path;
    auto* quantify = app.add_subcommand("quantify", "Print every quantifier and CCR residual of a state file as JSON");
    quantify->add_option("file", state_path, "State file (density matrix or bipartite ket)")->required();

    std::vector<std::size_t> dims{2, 3, 4, 8};
    std::size_t trials = 1000;
    std::optional<std::string> seed_text;
    bool as_json = false;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "Run identity sweeps and axiom checks");
    verify->add_option("--dims", dims, "Dimensions to sweep")->delimiter(',')->check(CLI::Range(2, 64));
    verify->add_option("--trials", trials, "States (or mixtures) per check")->check(CLI::Range(1, 100000000));
    verify->add_option("--seed", seed_text, "Base seed (default: $CCR_LAB_SEED, else 42)");
    verify->add_flag("--json", as_json, "Print verdicts as a JSON array");
    verify->add_flag("--inject-fault", inject_fault, "Harness self-test: corrupt one measure")->group("");

    std::string experiment;
    std::optional<std::string> out_path;
    std::size_t resolution = 0;
    auto* sweep = app.add_subcommand("sweep", "Write a parameter sweep as CSV");
    sweep->add_option("--experiment", experiment, "fig1, fig2, fig3 or detector")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "detector"}));
    sweep->add_option("--out", out_path, "Output CSV path (default: stdout)");
    sweep->add_option("--resolution", resolution, "Grid points per axis (>= 2)")->check(CLI::Range(2, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (*quantify) return cmd_quantify(state_path, out);
        if (*verify) {
            VerifyOptions opt;
            opt.dims = dims;
            opt.trials = trials;
            opt.seed = resolve_seed(seed_text ? std::optional(parse_seed(*seed_text, "--seed")) : std::nullopt);
            opt.inject_fault = inject_fault;
            return cmd_verify(opt, as_json, out);
        }
        SweepSpec spec;
        spec.experiment = parse_experiment(experiment);
        spec.resolution = resolution;
        spec.output = out_path;
        return cmd_sweep(spec, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace ccr::cli
