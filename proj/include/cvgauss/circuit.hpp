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

#ifndef CVGAUSS_CIRCUIT_HPP
#define CVGAUSS_CIRCUIT_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "cvgauss/measurement.hpp"
#include "cvgauss/stabilizer.hpp"

namespace cvgauss {

/// Malformed circuit: unknown gate, wrong arity, bad mode index.
struct CircuitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Gate outside the Gaussian (Clifford-analog) set.
struct NonGaussianGate : CircuitError {
    using CircuitError::CircuitError;
};

struct Operation {
    std::string gate;
    std::vector<double> params;
    std::vector<std::size_t> modes;
};

/// Ordered gate list acting on squeezed-vacuum inputs (profile entry r: x variance e^{-2r}/4).
struct Circuit {
    std::size_t modes = 0;
    std::vector<double> squeeze_profile;  // empty means vacuum everywhere
    std::vector<Operation> ops;

    double input_squeezing(std::size_t k) const { return squeeze_profile.empty() ? 0.0 : squeeze_profile[k]; }
};

struct GateSpec {
    std::string_view name;
    std::size_t modes;
    std::size_t min_params;
    std::size_t max_params;
};

// clang-format off
inline constexpr std::array<GateSpec, 12> kGateTable{{
    {"squeeze",          1, 1, 2},  // r [, phi]
    {"phase_shift",      1, 1, 1},  // theta
    {"beam_splitter",    2, 1, 1},  // theta
    {"two_mode_squeeze", 2, 1, 1},  // r
    {"displace",         1, 2, 2},  // x, p
    {"pauli",            1, 2, 2},  // x, p
    {"sum",              2, 0, 1},  // [gain]; modes = control, target
    {"fourier",          1, 0, 0},
    {"phase_gate",       1, 1, 1},  // eta, p += eta x
    {"shear",            1, 1, 1},  // alias of phase_gate
    {"measure",          1, 0, 1},  // [theta], homodyne of x cos + p sin
    {"feed_forward",     2, 2, 2},  // gx, gp; modes = measured source, target
}};
// clang-format on

inline constexpr std::array<std::string_view, 4> kNonGaussianGates{"kerr", "cross_kerr", "cubic_phase", "photon_count"};

inline const GateSpec &gate_spec(std::string_view name) {
    for (const auto &g : kGateTable) {
        if (g.name == name) return g;
    }
    if (std::find(kNonGaussianGates.begin(), kNonGaussianGates.end(), name) != kNonGaussianGates.end()) {
        throw NonGaussianGate("non-Gaussian gate '" + std::string(name) + "' is outside the simulable set");
    }
    throw CircuitError("unknown gate '" + std::string(name) + "'");
}

/// Structural validation; the error message names the offending operation.
inline void validate(const Circuit &c) {
    if (c.modes == 0) {
        throw CircuitError("circuit needs at least one mode");
    }
    if (!c.squeeze_profile.empty() && c.squeeze_profile.size() != c.modes) {
        throw CircuitError("squeeze_profile must have one entry per mode");
    }
    for (std::size_t k = 0; k < c.ops.size(); ++k) {
        const auto &op = c.ops[k];
        const std::string where = "op " + std::to_string(k) + " (" + op.gate + "): ";
        const GateSpec *spec = nullptr;
        try {
            spec = &gate_spec(op.gate);
        } catch (const NonGaussianGate &e) {
            throw NonGaussianGate(where + e.what());
        } catch (const CircuitError &e) {
            throw CircuitError(where + e.what());
        }
        if (op.modes.size() != spec->modes) {
            throw CircuitError(where + "expected " + std::to_string(spec->modes) + " mode(s)");
        }
        if (op.params.size() < spec->min_params || op.params.size() > spec->max_params) {
            throw CircuitError(where + "wrong number of parameters");
        }
        for (auto m : op.modes) {
            if (m >= c.modes) throw CircuitError(where + "mode index out of range");
        }
        if (op.modes.size() == 2 && op.modes[0] == op.modes[1]) {
            throw CircuitError(where + "modes must be distinct");
        }
        for (double v : op.params) {
            if (!std::isfinite(v)) throw CircuitError(where + "parameters must be finite");
        }
    }
}

inline bool has_measurements(const Circuit &c) {
    return std::any_of(c.ops.begin(), c.ops.end(), [](const Operation &op) { return op.gate == "measure"; });
}

struct MeasurementOutcome {
    std::size_t mode;
    double value;
};

/// Result of one pass through a circuit. `state` covers the unmeasured modes listed in
/// `remaining` (original indices, ascending); it is empty when every mode was measured.
struct CircuitRun {
    std::optional<GaussianState> state;
    std::vector<std::size_t> remaining;
    std::vector<MeasurementOutcome> outcomes;
};

namespace detail {

/// Optional fixed outcomes, consumed in circuit order; sampling is used once they run out.
class OutcomeSource {
public:
    explicit OutcomeSource(std::span<const double> forced) : forced_(forced) {}
    std::optional<double> next() {
        if (pos_ < forced_.size()) return forced_[pos_++];
        return std::nullopt;
    }

private:
    std::span<const double> forced_;
    std::size_t pos_ = 0;
};

inline double param_or(const Operation &op, std::size_t k, double fallback) {
    return k < op.params.size() ? op.params[k] : fallback;
}

}  // namespace detail

/// Runs a circuit on the covariance backend. Measured modes are conditioned on and removed.
template <class Rng>
CircuitRun run_covariance(const Circuit &c, Rng &rng, std::span<const double> forced = {}) {
    validate(c);
    for (std::size_t k = 0; k < c.modes; ++k) {
        if (!std::isfinite(c.input_squeezing(k))) {
            throw CircuitError("ideal (infinitely squeezed) inputs need the stabilizer backend");
        }
    }
    GaussianState state = squeezed_vacuum(c.input_squeezing(0));
    for (std::size_t k = 1; k < c.modes; ++k) state = tensor(state, squeezed_vacuum(c.input_squeezing(k)));
    std::optional<GaussianState> cur = std::move(state);
    // index[m]: position of original mode m in the current state, or empty once measured.
    std::vector<std::optional<std::size_t>> index(c.modes);
    for (std::size_t k = 0; k < c.modes; ++k) index[k] = k;
    std::vector<std::optional<double>> value(c.modes);
    detail::OutcomeSource source(forced);
    CircuitRun run;

    auto live = [&](std::size_t m, const Operation &op) {
        if (!index[m]) {
            throw CircuitError("gate '" + op.gate + "' acts on measured mode " + std::to_string(m));
        }
        return *index[m];
    };

    for (const auto &op : c.ops) {
        const std::size_t n = cur->n_modes();
        const auto &pm = op.params;
        if (op.gate == "measure") {
            const std::size_t m = op.modes[0];
            const std::size_t at = live(m, op);
            const double theta = detail::param_or(op, 0, 0.0);
            MeasurementRecord rec;
            if (auto forced_value = source.next()) {
                rec = homodyne_at(*cur, at, theta, *forced_value);
            } else {
                rec = homodyne(*cur, at, theta, rng);
            }
            value[m] = rec.outcomes(0);
            run.outcomes.push_back({m, rec.outcomes(0)});
            index[m].reset();
            for (auto &ix : index) {
                if (ix && *ix > at) --*ix;
            }
            cur = std::move(rec.conditional);
            if (!cur) break;
            continue;
        }
        if (op.gate == "feed_forward") {
            const std::size_t from = op.modes[0];
            if (!value[from]) {
                throw CircuitError("feed_forward source mode " + std::to_string(from) + " has not been measured");
            }
            const std::size_t to = live(op.modes[1], op);
            cur = apply(displace(n, to, pm[0] * *value[from], pm[1] * *value[from]), *cur);
            continue;
        }
        GaussianChannel ch = GaussianChannel::identity(n);
        if (op.gate == "squeeze") {
            ch = squeeze(n, pm[0], detail::param_or(op, 1, 0.0), live(op.modes[0], op));
        } else if (op.gate == "phase_shift") {
            ch = phase_shift(n, pm[0], live(op.modes[0], op));
        } else if (op.gate == "beam_splitter") {
            ch = beam_splitter(n, pm[0], live(op.modes[0], op), live(op.modes[1], op));
        } else if (op.gate == "two_mode_squeeze") {
            ch = two_mode_squeeze(n, pm[0], live(op.modes[0], op), live(op.modes[1], op));
        } else if (op.gate == "displace" || op.gate == "pauli") {
            ch = displace(n, live(op.modes[0], op), pm[0], pm[1]);
        } else if (op.gate == "sum") {
            ch = sum_gate(n, live(op.modes[0], op), live(op.modes[1], op), detail::param_or(op, 0, 1.0));
        } else if (op.gate == "fourier") {
            ch = fourier(n, live(op.modes[0], op));
        } else if (op.gate == "phase_gate" || op.gate == "shear") {
            ch = shear(n, pm[0], live(op.modes[0], op));
        }
        cur = apply(ch, *cur);
    }
    for (std::size_t m = 0; m < c.modes; ++m) {
        if (index[m]) run.remaining.push_back(m);
    }
    run.state = std::move(cur);
    return run;
}

/// Builds the tableau for a circuit and runs it; measurements draw hidden variables from `rng`
/// unless fixed outcomes are supplied.
template <class Rng>
StabilizerTableau build_tableau(const Circuit &c, Rng &rng, std::span<const double> forced,
                                std::vector<MeasurementOutcome> *outcomes) {
    validate(c);
    std::vector<double> profile(c.modes);
    for (std::size_t k = 0; k < c.modes; ++k) profile[k] = c.input_squeezing(k);
    StabilizerTableau t(std::move(profile));
    detail::OutcomeSource source(forced);
    for (const auto &op : c.ops) {
        const auto &pm = op.params;
        const auto &md = op.modes;
        if (op.gate == "measure") {
            const double theta = detail::param_or(op, 0, 0.0);
            if (theta != 0.0) tableau_phase_shift(t, theta, md[0]);
            double v;
            if (auto forced_value = source.next()) {
                t.record_x(md[0], *forced_value);
                v = *forced_value;
            } else {
                v = t.measure_x(md[0], rng);
            }
            if (outcomes) outcomes->push_back({md[0], v});
        } else if (op.gate == "feed_forward") {
            t.feed_forward(md[0], md[1], pm[0], pm[1]);
        } else if (op.gate == "squeeze") {
            tableau_squeeze(t, pm[0], detail::param_or(op, 1, 0.0), md[0]);
        } else if (op.gate == "phase_shift") {
            tableau_phase_shift(t, pm[0], md[0]);
        } else if (op.gate == "beam_splitter") {
            tableau_beam_splitter(t, pm[0], md[0], md[1]);
        } else if (op.gate == "two_mode_squeeze") {
            tableau_two_mode_squeeze(t, pm[0], md[0], md[1]);
        } else if (op.gate == "displace" || op.gate == "pauli") {
            t.pauli(pm[0], pm[1], md[0]);
        } else if (op.gate == "sum") {
            t.sum(md[0], md[1], detail::param_or(op, 0, 1.0));
        } else if (op.gate == "fourier") {
            t.fourier(md[0]);
        } else if (op.gate == "phase_gate" || op.gate == "shear") {
            t.phase(pm[0], md[0]);
        }
    }
    return t;
}

template <class Rng>
CircuitRun run_stabilizer(const Circuit &c, Rng &rng, std::span<const double> forced = {}) {
    CircuitRun run;
    const auto t = build_tableau(c, rng, forced, &run.outcomes);
    for (std::size_t m = 0; m < c.modes; ++m) {
        if (!t.is_measured(m)) run.remaining.push_back(m);
    }
    run.state = t.conditional_state();
    return run;
}

/// Largest element-wise difference between the two runs' mean vectors and covariances.
inline double max_state_difference(const CircuitRun &a, const CircuitRun &b) {
    if (a.remaining != b.remaining || a.state.has_value() != b.state.has_value()) {
        return std::numeric_limits<double>::infinity();
    }
    if (!a.state) return 0.0;
    const double dm = (a.state->mean() - b.state->mean()).cwiseAbs().maxCoeff();
    const double dv = (a.state->cov() - b.state->cov()).cwiseAbs().maxCoeff();
    return std::max(dm, dv);
}

/// Random circuit over {sum, fourier, phase_gate, pauli} with random finite input squeezing.
template <class Rng>
Circuit random_clifford_circuit(std::size_t n_modes, std::size_t n_gates, Rng &rng) {
    if (n_modes == 0) {
        throw std::invalid_argument("random circuit needs at least one mode");
    }
    std::uniform_real_distribution<double> squeezing(-1.0, 1.0);
    std::uniform_real_distribution<double> param(-1.5, 1.5);
    std::uniform_int_distribution<std::size_t> pick_mode(0, n_modes - 1);
    std::uniform_int_distribution<int> pick_gate(n_modes > 1 ? 0 : 1, 3);
    Circuit c;
    c.modes = n_modes;
    for (std::size_t k = 0; k < n_modes; ++k) c.squeeze_profile.push_back(squeezing(rng));
    for (std::size_t g = 0; g < n_gates; ++g) {
        const int kind = pick_gate(rng);
        const std::size_t a = pick_mode(rng);
        switch (kind) {
            case 0: {
                std::size_t b = pick_mode(rng);
                while (b == a) b = pick_mode(rng);
                c.ops.push_back({"sum", {param(rng)}, {a, b}});
                break;
            }
            case 1: c.ops.push_back({"fourier", {}, {a}}); break;
            case 2: c.ops.push_back({"phase_gate", {param(rng)}, {a}}); break;
            default: c.ops.push_back({"pauli", {param(rng), param(rng)}, {a}}); break;
        }
    }
    return c;
}

}  // namespace cvgauss

#endif
