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

#ifndef CVGAUSS_MEASUREMENT_HPP
#define CVGAUSS_MEASUREMENT_HPP

#include <optional>
#include <random>

#include "cvgauss/criterion.hpp"
#include "cvgauss/ops.hpp"

namespace cvgauss {

struct MeasuredQuadrature {
    std::size_t mode;
    double angle;
};

/// Outcome of one or more homodyne detections. `conditional` holds the remaining modes
/// (measured modes removed, original order preserved); it is empty when nothing is left.
struct MeasurementRecord {
    std::vector<MeasuredQuadrature> measured;
    Vector outcomes;
    std::optional<GaussianState> conditional;
};

/// Mean and variance of x^(theta) = x cos(theta) + p sin(theta) on one mode.
inline std::pair<double, double> quadrature_moments(const GaussianState &state, std::size_t mode, double theta) {
    check_mode(mode, state.n_modes());
    const auto i = static_cast<Eigen::Index>(2 * mode);
    Eigen::Vector2d w(std::cos(theta), std::sin(theta));
    const double mean = w.dot(state.mean().segment<2>(i));
    const double var = w.dot(state.cov().block<2, 2>(i, i) * w);
    return {mean, var};
}

namespace detail {

/// Gaussian conditioning on a single measured quadrature value, Schur-complement form.
/// The measured mode is dropped from the returned state.
inline std::optional<GaussianState> condition_on_quadrature(const GaussianState &state, std::size_t mode,
                                                            double theta, double outcome) {
    const std::size_t n = state.n_modes();
    if (n == 1) {
        return std::nullopt;
    }
    // Rotate so the measured quadrature becomes x of `mode`.
    const auto rotated = apply(phase_shift(n, theta, mode), state);
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != mode) rest.push_back(k);
    }
    const auto idx = quadrature_indices(rest);
    const auto m = static_cast<Eigen::Index>(2 * mode);
    const double var = rotated.cov()(m, m);
    // Moore-Penrose inverse of the 1x1 block.
    const double inv = var < tol::variance ? 0.0 : 1.0 / var;
    const Vector cross = rotated.cov()(idx, std::vector<Eigen::Index>{m}).col(0);
    Vector mean = rotated.mean()(idx) + cross * (inv * (outcome - rotated.mean()(m)));
    Matrix cov = rotated.cov()(idx, idx) - inv * cross * cross.transpose();
    cov = (0.5 * (cov + cov.transpose())).eval();
    return GaussianState(std::move(mean), std::move(cov));
}

inline std::size_t reindex_after_removal(std::size_t mode, std::size_t removed) {
    return mode > removed ? mode - 1 : mode;
}

}  // namespace detail

/// Homodyne detection of x^(theta) on `mode` with the outcome fixed to `outcome`.
inline MeasurementRecord homodyne_at(const GaussianState &state, std::size_t mode, double theta, double outcome) {
    check_mode(mode, state.n_modes());
    if (!std::isfinite(outcome)) {
        throw std::invalid_argument("homodyne outcome must be finite");
    }
    MeasurementRecord rec;
    rec.measured.push_back({mode, theta});
    rec.outcomes = Vector::Constant(1, outcome);
    rec.conditional = detail::condition_on_quadrature(state, mode, theta, outcome);
    return rec;
}

/// Homodyne detection with the outcome drawn from the Gaussian marginal of x^(theta).
/// `efficiency` < 1 applies a pure-loss channel to the mode before detection.
template <class Rng>
MeasurementRecord homodyne(const GaussianState &state, std::size_t mode, double theta, Rng &rng,
                           double efficiency = 1.0) {
    check_mode(mode, state.n_modes());
    const GaussianState detected = efficiency < 1.0 ? apply_loss(state, mode, efficiency) : state;
    const auto [mean, var] = quadrature_moments(detected, mode, theta);
    std::normal_distribution<double> dist(mean, std::sqrt(std::max(var, 0.0)));
    return homodyne_at(detected, mode, theta, dist(rng));
}

/// Bell detection on modes i ("in") and j: 50:50 beam splitter, then x on
/// u = (x_i - x_j)/sqrt2 and p on v = (p_i + p_j)/sqrt2. Outcomes are (x_u, p_v).
inline MeasurementRecord bell_measure_at(const GaussianState &state, std::size_t i, std::size_t j, double x_u,
                                         double p_v) {
    if (i == j) {
        throw std::invalid_argument("bell_measure needs two distinct modes");
    }
    const std::size_t n = state.n_modes();
    check_mode(i, n);
    check_mode(j, n);
    // Output i carries (a_i + a_j)/sqrt2 (= v), output j carries (a_i - a_j)/sqrt2 (= u).
    const auto mixed = apply(beam_splitter(n, std::numbers::pi / 4.0, i, j), state);
    MeasurementRecord rec;
    rec.measured = {{j, 0.0}, {i, std::numbers::pi / 2.0}};
    rec.outcomes = Eigen::Vector2d(x_u, p_v);
    auto after_u = detail::condition_on_quadrature(mixed, j, 0.0, x_u);
    if (!after_u) {
        return rec;
    }
    rec.conditional =
        detail::condition_on_quadrature(*after_u, detail::reindex_after_removal(i, j), std::numbers::pi / 2.0, p_v);
    return rec;
}

template <class Rng>
MeasurementRecord bell_measure(const GaussianState &state, std::size_t i, std::size_t j, Rng &rng) {
    if (i == j) {
        throw std::invalid_argument("bell_measure needs two distinct modes");
    }
    const std::size_t n = state.n_modes();
    check_mode(i, n);
    check_mode(j, n);
    const auto mixed = apply(beam_splitter(n, std::numbers::pi / 4.0, i, j), state);
    // Sample x_u, then p_v from its distribution conditioned on x_u.
    const auto [mu_u, var_u] = quadrature_moments(mixed, j, 0.0);
    const double x_u = std::normal_distribution<double>(mu_u, std::sqrt(std::max(var_u, 0.0)))(rng);
    auto after_u = detail::condition_on_quadrature(mixed, j, 0.0, x_u);
    const auto [mu_v, var_v] =
        quadrature_moments(*after_u, detail::reindex_after_removal(i, j), std::numbers::pi / 2.0);
    const double p_v = std::normal_distribution<double>(mu_v, std::sqrt(std::max(var_v, 0.0)))(rng);
    return bell_measure_at(state, i, j, x_u, p_v);
}

/// Reid inferred (conditional) variances of mode 1 given mode 2, with optimal gains.
struct ConditionalVariances {
    double var_x;
    double var_p;
    double gain_x;
    double gain_p;
};

inline ConditionalVariances conditional_variances(const GaussianState &state) {
    if (state.n_modes() != 2) {
        throw std::invalid_argument("conditional_variances needs a two-mode state");
    }
    const Matrix &v = state.cov();
    auto one = [&](Eigen::Index q) {
        const double v1 = v(q, q);
        const double v2 = v(2 + q, 2 + q);
        const double c = v(q, 2 + q);
        if (v1 <= 0.0 || v2 <= 0.0) {
            throw InvalidState("conditional variance needs nonzero quadrature variances");
        }
        return std::pair{v1 * (1.0 - c * c / (v1 * v2)), c / v2};
    };
    const auto [vx, gx] = one(0);
    const auto [vp, gp] = one(1);
    return {vx, vp, gx, gp};
}

/// EPR paradox test: Var_x Var_p < 1/16 signals the paradox.
inline CriterionReport epr_paradox_test(const GaussianState &state) {
    const auto cv = conditional_variances(state);
    return make_report("epr_reid", cv.var_x * cv.var_p, 1.0 / 16.0);
}

}  // namespace cvgauss

#endif
