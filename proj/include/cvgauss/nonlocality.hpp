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

#ifndef CVGAUSS_NONLOCALITY_HPP
#define CVGAUSS_NONLOCALITY_HPP

#include <complex>

#include "cvgauss/core.hpp"

namespace cvgauss {

using Complex = std::complex<double>;

/// Phase-space point from per-mode complex displacements alpha_k = x_k + i p_k.
inline Vector phase_space_point(std::span<const Complex> alphas) {
    Vector xi(static_cast<Eigen::Index>(2 * alphas.size()));
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        if (!std::isfinite(alphas[k].real()) || !std::isfinite(alphas[k].imag())) {
            throw std::invalid_argument("parity displacement must be finite");
        }
        xi(static_cast<Eigen::Index>(2 * k)) = alphas[k].real();
        xi(static_cast<Eigen::Index>(2 * k + 1)) = alphas[k].imag();
    }
    return xi;
}

/// Expectation of the displaced parity operator, (pi/2)^N W(alpha).
inline double displaced_parity(const GaussianState &state, std::span<const Complex> alphas) {
    if (alphas.size() != state.n_modes()) {
        throw StructuralError("one displacement per mode is required");
    }
    const double n = static_cast<double>(state.n_modes());
    return std::pow(std::numbers::pi / 2.0, n) * wigner(state, phase_space_point(alphas));
}

inline double displaced_parity(const GaussianState &state, std::initializer_list<Complex> alphas) {
    std::vector<Complex> a(alphas);
    return displaced_parity(state, std::span<const Complex>(a));
}

/// CHSH-type combination Pi(0,0) + Pi(0,beta) + Pi(alpha,0) - Pi(alpha,beta); local
/// realism bounds its magnitude by 2.
inline double b2(const GaussianState &state, Complex alpha, Complex beta) {
    if (state.n_modes() != 2) {
        throw std::invalid_argument("b2 needs a two-mode state");
    }
    const Complex zero{0.0, 0.0};
    return displaced_parity(state, {zero, zero}) + displaced_parity(state, {zero, beta}) +
           displaced_parity(state, {alpha, zero}) - displaced_parity(state, {alpha, beta});
}

/// Closed form of b2 for the two-mode squeezed vacuum at alpha = beta = i sqrt(J).
inline double b2_tmsv_closed_form(double r, double j) {
    return 1.0 + 2.0 * std::exp(-2.0 * j * std::cosh(2.0 * r)) - std::exp(-4.0 * j * std::exp(2.0 * r));
}

struct B2Optimum {
    double value;
    double j;
};

/// Maximizes b2 over the family alpha = beta = i sqrt(J), J in [j_lo, j_hi], by golden-section
/// search after a coarse log-spaced bracket scan. `j_tol` is the final bracket width.
inline B2Optimum b2_optimize(const GaussianState &state, double j_lo = 0.0, double j_hi = 10.0,
                             double j_tol = 1e-8) {
    if (!(j_lo >= 0.0 && j_hi > j_lo)) {
        throw std::invalid_argument("b2_optimize needs 0 <= j_lo < j_hi");
    }
    auto f = [&](double j) {
        const Complex a{0.0, std::sqrt(j)};
        return b2(state, a, a);
    };
    // Coarse scan: the optimum sits near J ~ e^-2r, so sample on a log grid.
    const int samples = 400;
    const double floor = std::max(j_lo, 1e-14 * (j_hi - j_lo));
    double best_j = j_lo;
    double best = f(j_lo);
    std::vector<double> grid;
    grid.push_back(j_lo);
    for (int k = 0; k <= samples; ++k) {
        grid.push_back(floor * std::pow(j_hi / floor, static_cast<double>(k) / samples));
    }
    std::size_t best_k = 0;
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double v = f(grid[k]);
        if (v > best) {
            best = v;
            best_j = grid[k];
            best_k = k;
        }
    }
    double lo = grid[best_k == 0 ? 0 : best_k - 1];
    double hi = grid[std::min(best_k + 1, grid.size() - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > j_tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    const double j_star = 0.5 * (lo + hi);
    const double v_star = f(j_star);
    if (v_star >= best) {
        return {v_star, j_star};
    }
    return {best, best_j};
}

}  // namespace cvgauss

#endif
