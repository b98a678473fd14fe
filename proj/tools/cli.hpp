// Copyright 2026 The cvgauss Authors
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

// Command implementations behind the cvgauss executable. Kept in a header so the test
// suite can drive them in-process.

#ifndef CVGAUSS_TOOLS_CLI_HPP
#define CVGAUSS_TOOLS_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cvgauss/cvgauss.hpp"
#include "cvgauss/io.hpp"

namespace cvgauss::cli {

enum ExitCode : int { kOk = 0, kComputeFailure = 1, kUsageError = 2 };

/// Thrown for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    double r = 1.0;
    double r2 = 1.0;  // second resource (swap)
    double g = 1.0;
    int n = 3;
    int m = 2;
    int d = 0;  // 0: infinite dimension
    double nbar = 1.0;
    double x = 0.0;  // coherent input amplitude
    double p = 0.0;
    std::size_t shots = 0;
    std::uint64_t seed = 1;
    std::string backend = "covariance";
    std::string format = "json";
    std::string out;
    std::string sweep;
    std::string input;  // circuit or state file
};

struct Sweep {
    std::string param;
    double lo;
    double hi;
    int steps;

    double value(int k) const { return steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1); }
};

inline Sweep parse_sweep(const std::string &spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4) {
        throw UsageError("--sweep expects param:lo:hi:steps");
    }
    Sweep s;
    s.param = parts[0];
    try {
        std::size_t used = 0;
        s.lo = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("lo");
        s.hi = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("hi");
        s.steps = std::stoi(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument("steps");
    } catch (const std::exception &) {
        throw UsageError("--sweep bounds must be numbers: " + spec);
    }
    if (s.steps < 1 || !std::isfinite(s.lo) || !std::isfinite(s.hi)) {
        throw UsageError("--sweep needs finite bounds and steps >= 1");
    }
    return s;
}

inline void set_param(RunConfig &cfg, const std::string &name, double v) {
    if (name == "r") cfg.r = v;
    else if (name == "r2") cfg.r2 = v;
    else if (name == "g") cfg.g = v;
    else if (name == "nbar") cfg.nbar = v;
    else if (name == "N") cfg.n = static_cast<int>(std::lround(v));
    else if (name == "M") cfg.m = static_cast<int>(std::lround(v));
    else if (name == "x") cfg.x = v;
    else if (name == "p") cfg.p = v;
    else throw UsageError("cannot sweep parameter '" + name + "'");
}

/// 64-bit FNV-1a over the raw bytes of the mean vector and covariance matrix.
inline std::uint64_t fnv1a(const GaussianState &state) {
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&h](const double *data, Eigen::Index count) {
        const auto *bytes = reinterpret_cast<const unsigned char *>(data);
        for (std::size_t k = 0; k < static_cast<std::size_t>(count) * sizeof(double); ++k) {
            h ^= bytes[k];
            h *= 1099511628211ULL;
        }
    };
    feed(state.mean().data(), state.mean().size());
    feed(state.cov().data(), state.cov().size());
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << v;
    return ss.str();
}

inline Json report_json(const CriterionReport &r) {
    return Json{{"name", r.name},           {"lhs", r.lhs},           {"bound", r.bound},
                {"margin", r.margin},       {"tolerance", r.tolerance}, {"violated", r.violated}};
}

// ---------------------------------------------------------------------------------------------
// Protocol records. Every record repeats the parameters it was computed from.

inline Json teleport_record(const RunConfig &cfg) {
    if (!(cfg.r >= 0.0)) throw UsageError("--r must be >= 0");
    const auto input = coherent_state(cfg.x, cfg.p);
    const auto res = teleport(input, cfg.r, cfg.g);
    Json j{{"protocol", "teleport"},
           {"r", cfg.r},
           {"g", cfg.g},
           {"x", cfg.x},
           {"p", cfg.p},
           {"fidelity", *res.fidelity},
           {"excess_noise", teleport_excess_noise(cfg.r, cfg.g)},
           {"ensemble", state_to_json(res.ensemble)}};
    if (cfg.g == 1.0) {
        j["fidelity_transfer"] = teleport_fidelity_transfer(cfg.r);
    }
    if (cfg.shots > 0) {
        std::mt19937_64 rng(cfg.seed);
        const auto mc = teleport_monte_carlo(input, cfg.r, cfg.g, cfg.shots, rng);
        j["monte_carlo"] = Json{{"shots", cfg.shots},
                                {"seed", cfg.seed},
                                {"fidelity", mc.mean_fidelity},
                                {"fidelity_stderr", mc.fidelity_stderr},
                                {"ensemble_cov", matrix_to_json(mc.ensemble_cov)}};
    }
    return j;
}

inline Json densecode_record(const RunConfig &cfg) {
    if (!(cfg.nbar >= 0.0)) throw UsageError("--nbar must be >= 0");
    const auto caps = channel_capacities(cfg.nbar);
    const auto dense = dense_coding_capacity(cfg.nbar);
    return Json{{"protocol", "densecode"},
                {"nbar", cfg.nbar},
                {"units", "nats"},
                {"capacity_dense", dense.capacity},
                {"signal_variance", dense.signal},
                {"squeezing", dense.squeezing},
                {"capacity_number", caps.number},
                {"capacity_coherent", caps.coherent},
                {"capacity_squeezed", caps.squeezed},
                {"dense_minus_number", dense.capacity - caps.number},
                {"break_even_r_number", dense_coding_break_even(SingleChannel::number)},
                {"break_even_r_squeezed", dense_coding_break_even(SingleChannel::squeezed)},
                {"break_even_nbar_number", dense_coding_nbar(dense_coding_break_even(SingleChannel::number))}};
}

inline Json clone_record(const RunConfig &cfg) {
    if (cfg.n < 1 || cfg.m < cfg.n) throw UsageError("clone needs 1 <= N <= M");
    Json j{{"protocol", "clone"},
           {"N", cfg.n},
           {"M", cfg.m},
           {"d", cfg.d},
           {"fidelity_coherent", clone_fidelity(cfg.n, cfg.m, CloneAlphabet::coherent)},
           {"fidelity_universal", clone_fidelity(cfg.n, cfg.m, CloneAlphabet::universal, cfg.d)}};
    if (cfg.n == 1 && cfg.m == 2) {
        const auto input = coherent_state(cfg.x, cfg.p);
        const auto clones = clone_coherent_circuit(input);
        const Eigen::Vector2d target = input.mean();
        j["circuit_fidelity_a"] = coherent_fidelity(clones.clone_a, target);
        j["circuit_fidelity_b"] = coherent_fidelity(clones.clone_b, target);
    }
    return j;
}

inline Json swap_record(const RunConfig &cfg) {
    if (!(cfg.r >= 0.0) || !(cfg.r2 >= 0.0)) throw UsageError("--r and --r2 must be >= 0");
    const auto res = swap(cfg.r, cfg.r2);
    const auto shot = swap_single_shot(cfg.r, cfg.r2, swap_optimal_gain(cfg.r, cfg.r2), 0.0, 0.0);
    const double fitted = fit_tmsv_squeezing(shot);
    return Json{{"protocol", "swap"},
                {"r", cfg.r},
                {"r2", cfg.r2},
                {"R", res.squeezing},
                {"R_fitted", fitted},
                {"fit_residual", (shot.cov() - tmsv_covariance(fitted)).cwiseAbs().maxCoeff()},
                {"optimal_gain", swap_optimal_gain(cfg.r, cfg.r2)},
                {"state", state_to_json(res.state)}};
}

inline Json telecl_record(const RunConfig &cfg) {
    if (cfg.m < 2) throw UsageError("telecloning needs M >= 2");
    const auto res = telecloning_resource(cfg.m);
    return Json{{"protocol", "telecl"},
                {"M", cfg.m},
                {"squeezing", res.squeezing},
                {"decibels", res.decibels},
                {"clone_fidelity", clone_fidelity(1, cfg.m, CloneAlphabet::coherent)}};
}

inline Json nonlocality_record(const RunConfig &cfg) {
    if (!(cfg.r >= 0.0)) throw UsageError("--r must be >= 0");
    const auto state = two_mode_squeezed_vacuum(cap_squeezing(cfg.r));
    const auto best = b2_optimize(state);
    return Json{{"protocol", "nonlocality"},
                {"r", cfg.r},
                {"b2_max", best.value},
                {"J", best.j},
                {"b2_closed_form", b2_tmsv_closed_form(cfg.r, best.j)},
                {"violates_local_bound", best.value > 2.0}};
}

inline Json ghz_record(const RunConfig &cfg) {
    if (cfg.n < 2) throw UsageError("ghz needs N >= 2");
    const auto n = static_cast<std::size_t>(cfg.n);
    const double r1 = bowen_relation(n, cfg.r);
    const auto state = ghz_network(n, r1, cfg.r);
    return Json{{"protocol", "ghz"}, {"N", cfg.n}, {"r1", r1}, {"r2", cfg.r}, {"state", state_to_json(state)}};
}

inline Json entanglement_record(const GaussianState &state) {
    const auto diag = validate(state);
    if (!diag.ok()) {
        throw InvalidState("state file does not describe a physical state");
    }
    Json reports = Json::array();
    Json j{{"command", "entanglement"}, {"n_modes", state.n_modes()}, {"purity", purity(state)}};
    const std::size_t n = state.n_modes();
    for (std::size_t k = 0; k < n && n > 1; ++k) {
        auto r = npt_test(state, {k});
        r.name = "npt_mode_" + std::to_string(k);
        reports.push_back(report_json(r));
    }
    if (n == 2) {
        reports.push_back(report_json(simon_test(state)));
        reports.push_back(report_json(duan_test(state)));
        reports.push_back(report_json(tan_test(state)));
        reports.push_back(report_json(epr_paradox_test(state)));
        j["log_negativity"] = log_negativity(state, {0});
    }
    if (n == 3) {
        const auto cls = classify_three_mode(state);
        j["three_mode_class"] = cls.cls == ThreeModeClass::biseparable_or_separable ? Json("4-or-5")
                                                                                   : Json(static_cast<int>(cls.cls));
        // Witness with h = (1, -1, 0), g = (1, 1, 1) against the fully separable bound.
        const Vector h = Eigen::Vector3d(1.0, -1.0, 0.0);
        const Vector g = Eigen::Vector3d(1.0, 1.0, 1.0);
        reports.push_back(report_json(witness_linear(state, h, g, fully_separable_partition(3))));
    }
    j["reports"] = std::move(reports);
    return j;
}

// ---------------------------------------------------------------------------------------------
// Circuit execution

inline Json outcomes_json(const std::vector<MeasurementOutcome> &outs) {
    Json a = Json::array();
    for (const auto &o : outs) a.push_back(Json{{"mode", o.mode}, {"value", o.value}});
    return a;
}

inline std::string outcomes_csv(const std::vector<MeasurementOutcome> &outs) {
    std::ostringstream ss;
    ss << std::setprecision(17);
    for (std::size_t k = 0; k < outs.size(); ++k) {
        if (k) ss << ';';
        ss << outs[k].mode << '=' << outs[k].value;
    }
    return ss.str();
}

inline std::string state_hash(const std::optional<GaussianState> &s) { return s ? hex64(fnv1a(*s)) : std::string("-"); }

struct ShotResult {
    CircuitRun run;
    std::optional<double> diff;  // backend = both
};

inline ShotResult run_circuit_shot(const Circuit &circuit, const std::string &backend, std::mt19937_64 &rng) {
    ShotResult s;
    if (backend == "covariance") {
        s.run = run_covariance(circuit, rng);
    } else if (backend == "stabilizer") {
        s.run = run_stabilizer(circuit, rng);
    } else {
        s.run = run_stabilizer(circuit, rng);
        std::vector<double> forced;
        for (const auto &o : s.run.outcomes) forced.push_back(o.value);
        const auto cov = run_covariance(circuit, rng, forced);
        s.diff = max_state_difference(s.run, cov);
    }
    return s;
}

inline constexpr double kBackendAgreement = 1e-9;

inline int cmd_run_circuit(const RunConfig &cfg, std::ostream &out) {
    if (cfg.backend != "covariance" && cfg.backend != "stabilizer" && cfg.backend != "both") {
        throw UsageError("--backend must be covariance, stabilizer or both");
    }
    const Circuit circuit = read_circuit_file(cfg.input);
    spdlog::debug("circuit: {} modes, {} ops", circuit.modes, circuit.ops.size());
    const std::size_t shots = std::max<std::size_t>(cfg.shots, 1);
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    if (cfg.format == "csv") {
        out << "seed,shot,outcomes,state_hash" << (cfg.backend == "both" ? ",max_diff" : "") << '\n';
        for (std::size_t s = 0; s < shots; ++s) {
            const auto shot = run_circuit_shot(circuit, cfg.backend, rng);
            out << cfg.seed << ',' << s << ',' << outcomes_csv(shot.run.outcomes) << ',' << state_hash(shot.run.state);
            if (shot.diff) {
                out << ',' << std::setprecision(17) << *shot.diff;
                worst = std::max(worst, *shot.diff);
            }
            out << '\n';
        }
    } else {
        Json j{{"schema", kSchemaVersion},
               {"command", "run-circuit"},
               {"backend", cfg.backend},
               {"seed", cfg.seed},
               {"shots", shots},
               {"modes", circuit.modes}};
        Json runs = Json::array();
        for (std::size_t s = 0; s < shots; ++s) {
            const auto shot = run_circuit_shot(circuit, cfg.backend, rng);
            Json rj{{"shot", s},
                    {"outcomes", outcomes_json(shot.run.outcomes)},
                    {"remaining", shot.run.remaining},
                    {"state_hash", state_hash(shot.run.state)}};
            if (shot.run.state) rj["state"] = state_to_json(*shot.run.state);
            if (shot.diff) {
                rj["max_diff"] = *shot.diff;
                worst = std::max(worst, *shot.diff);
            }
            runs.push_back(std::move(rj));
        }
        j["runs"] = std::move(runs);
        if (cfg.backend == "both") {
            j["diff"] = Json{{"max_diff", worst}, {"tolerance", kBackendAgreement}, {"agree", worst <= kBackendAgreement}};
        }
        out << j.dump(2) << '\n';
    }
    if (cfg.backend == "both" && !(worst <= kBackendAgreement)) {
        spdlog::error("backends disagree: max difference {}", worst);
        return kComputeFailure;
    }
    return kOk;
}

inline int cmd_entanglement(const RunConfig &cfg, std::ostream &out) {
    const Json doc = parse_json(read_text_file(cfg.input));
    const GaussianState state = state_from_json(doc.contains("state") ? doc.at("state") : doc);
    Json j = entanglement_record(state);
    j["schema"] = kSchemaVersion;
    if (cfg.format == "csv") {
        out << "name,lhs,bound,margin,violated\n" << std::setprecision(17);
        for (const auto &r : j.at("reports")) {
            out << r.at("name").get<std::string>() << ',' << r.at("lhs").get<double>() << ','
                << r.at("bound").get<double>() << ',' << r.at("margin").get<double>() << ','
                << (r.at("violated").get<bool>() ? "true" : "false") << '\n';
        }
        return kOk;
    }
    out << j.dump(2) << '\n';
    return kOk;
}

using RecordFn = Json (*)(const RunConfig &);

/// Fixed CSV columns per protocol command (top-level numeric fields of its record).
inline const std::vector<std::string> &csv_columns(const std::string &command) {
    static const std::map<std::string, std::vector<std::string>> cols{
        {"teleport", {"r", "g", "x", "p", "fidelity", "excess_noise"}},
        {"densecode",
         {"nbar", "capacity_dense", "signal_variance", "squeezing", "capacity_number", "capacity_coherent",
          "capacity_squeezed", "dense_minus_number"}},
        {"clone", {"N", "M", "d", "fidelity_coherent", "fidelity_universal"}},
        {"swap", {"r", "r2", "R", "R_fitted", "optimal_gain"}},
        {"telecl", {"M", "squeezing", "decibels", "clone_fidelity"}},
        {"nonlocality", {"r", "b2_max", "J", "b2_closed_form"}},
        {"ghz", {"N", "r1", "r2"}},
    };
    return cols.at(command);
}

inline void write_csv_row(std::ostream &out, const Json &rec, const std::vector<std::string> &cols) {
    out << std::setprecision(17);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (k) out << ',';
        const auto &v = rec.at(cols[k]);
        if (v.is_number_integer()) {
            out << v.get<long long>();
        } else {
            out << v.get<double>();
        }
    }
    out << '\n';
}

inline int cmd_protocol(const RunConfig &cfg, RecordFn fn, std::ostream &out) {
    const auto &cols = csv_columns(cfg.command);
    if (cfg.sweep.empty()) {
        Json rec = fn(cfg);
        rec["schema"] = kSchemaVersion;
        rec["seed"] = cfg.seed;
        if (cfg.format == "csv") {
            for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
            out << '\n';
            write_csv_row(out, rec, cols);
        } else {
            out << rec.dump(2) << '\n';
        }
        return kOk;
    }
    const Sweep sw = parse_sweep(cfg.sweep);
    RunConfig point = cfg;
    if (cfg.format == "csv") {
        for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
        out << '\n';
        for (int k = 0; k < sw.steps; ++k) {
            set_param(point, sw.param, sw.value(k));
            write_csv_row(out, fn(point), cols);
        }
        return kOk;
    }
    Json rows = Json::array();
    for (int k = 0; k < sw.steps; ++k) {
        set_param(point, sw.param, sw.value(k));
        rows.push_back(fn(point));
    }
    out << Json{{"schema", kSchemaVersion},
                {"command", cfg.command},
                {"seed", cfg.seed},
                {"sweep", Json{{"param", sw.param}, {"lo", sw.lo}, {"hi", sw.hi}, {"steps", sw.steps}}},
                {"rows", std::move(rows)}}
               .dump(2)
        << '\n';
    return kOk;
}

inline void configure_logging() {
    static bool done = false;
    if (!done) {
        auto logger = spdlog::stderr_color_mt("cvgauss");
        spdlog::set_default_logger(logger);
        done = true;
    }
    const char *level = std::getenv("CVGAUSS_LOG");
    spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
}

/// Parses arguments and runs one command. Output goes to `out` (or the --out file).
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    configure_logging();
    CLI::App app{"Gaussian continuous-variable simulator", "cvgauss"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&cfg](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
        sub->add_option("--shots", cfg.shots, "Monte Carlo shots")->capture_default_str();
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "Output file (default: stdout)");
        sub->add_option("--sweep", cfg.sweep, "Parameter sweep param:lo:hi:steps");
        sub->add_option("--backend", cfg.backend, "covariance, stabilizer or both")
            ->check(CLI::IsMember({"covariance", "stabilizer", "both"}));
    };

    auto *run_circuit = app.add_subcommand("run-circuit", "Run a circuit file");
    run_circuit->add_option("circuit", cfg.input, "Circuit JSON file")->required();
    auto *tele = app.add_subcommand("teleport", "Coherent-state teleportation");
    tele->add_option("--r", cfg.r, "Resource squeezing");
    tele->add_option("--g", cfg.g, "Feed-forward gain");
    tele->add_option("--x", cfg.x, "Input mean x");
    tele->add_option("--p", cfg.p, "Input mean p");
    auto *dense = app.add_subcommand("densecode", "Dense coding capacity");
    dense->add_option("--nbar", cfg.nbar, "Mean photon number");
    auto *clone = app.add_subcommand("clone", "N -> M cloning fidelities");
    clone->add_option("--N", cfg.n, "Input copies");
    clone->add_option("--M", cfg.m, "Output clones");
    clone->add_option("--d", cfg.d, "Hilbert-space dimension for the universal alphabet (0: infinite)");
    clone->add_option("--x", cfg.x, "Input mean x for the 1 -> 2 circuit");
    clone->add_option("--p", cfg.p, "Input mean p for the 1 -> 2 circuit");
    auto *sw = app.add_subcommand("swap", "Entanglement swapping");
    sw->add_option("--r", cfg.r, "First resource squeezing");
    sw->add_option("--r2", cfg.r2, "Second resource squeezing");
    auto *tel = app.add_subcommand("telecl", "Telecloning resource squeezing");
    tel->add_option("--M", cfg.m, "Number of clones");
    auto *ent = app.add_subcommand("entanglement", "Criterion reports for a state file");
    ent->add_option("state", cfg.input, "State JSON file")->required();
    auto *nl = app.add_subcommand("nonlocality", "Displaced-parity CHSH test on TMSV(r)");
    nl->add_option("--r", cfg.r, "Squeezing");
    auto *ghz = app.add_subcommand("ghz", "N-mode GHZ-type state with minimum-energy squeezing");
    ghz->add_option("--N", cfg.n, "Number of modes");
    ghz->add_option("--r", cfg.r, "Position squeezing r2 of the N-1 inputs");
    for (auto *sub : app.get_subcommands({})) common(sub);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.n < 0 || cfg.m < 0 || cfg.d < 0) {
        err << "error: N, M and d must be nonnegative\n";
        return kUsageError;
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << cfg.out << "'\n";
            return kUsageError;
        }
        sink = &file;
    }
    spdlog::info("command {} seed {}", cfg.command, cfg.seed);
    try {
        if (cfg.command == "run-circuit") return cmd_run_circuit(cfg, *sink);
        if (cfg.command == "entanglement") return cmd_entanglement(cfg, *sink);
        static const std::map<std::string, RecordFn> records{
            {"teleport", teleport_record}, {"densecode", densecode_record},     {"clone", clone_record},
            {"swap", swap_record},         {"telecl", telecl_record},           {"nonlocality", nonlocality_record},
            {"ghz", ghz_record}};
        return cmd_protocol(cfg, records.at(cfg.command), *sink);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CircuitError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const StructuralError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kComputeFailure;
    }
}

}  // namespace cvgauss::cli

#endif
