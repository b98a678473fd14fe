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

#ifndef CVGAUSS_PROTOCOLS_HPP
#define CVGAUSS_PROTOCOLS_HPP

#include <functional>
#include <optional>
#include <random>

#include "cvgauss/measurement.hpp"
#include "cvgauss/ops.hpp"

namespace cvgauss {

/// Squeezing parameters above this are treated as infinite; e^-40 is far below every tolerance.
inline constexpr double kMaxSqueezing = 20.0;

inline double cap_squeezing(double r) {
    if (!(r >= 0.0)) {
        throw std::invalid_argument("squeezing parameter must be >= 0");
    }
    return std::min(r, kMaxSqueezing);
}

/// Overlap <alpha| rho |alpha> of a one-mode Gaussian state with the coherent state whose
/// quadrature means are `coherent_mean`: pi times the Q function at alpha.
inline double coherent_fidelity(const GaussianState &state, const Eigen::Vector2d &coherent_mean) {
    if (state.n_modes() != 1) {
        throw std::invalid_argument("coherent_fidelity needs a one-mode state");
    }
    const Eigen::Matrix2d q = state.cov() + kVacuumVariance * Eigen::Matrix2d::Identity();
    const Eigen::Vector2d delta = state.mean() - coherent_mean;
    return std::exp(-0.5 * delta.dot(q.inverse() * delta)) / (2.0 * std::sqrt(q.determinant()));
}

// ---------------------------------------------------------------------------------------------
// Teleportation

/// Ensemble state after Bell detection of (in, alice) and gain-g feed-forward onto bob:
/// x_bob -> x_bob + g (x_in - x_alice), p_bob -> p_bob + g (p_in + p_alice). The two
/// measured modes are traced out; the remaining modes keep their order.
inline GaussianState ensemble_teleport(const GaussianState &state, std::size_t in, std::size_t alice,
                                       std::size_t bob, double gain) {
    const std::size_t n = state.n_modes();
    check_mode(in, n);
    check_mode(alice, n);
    check_mode(bob, n);
    if (in == alice || in == bob || alice == bob) {
        throw std::invalid_argument("teleportation needs three distinct modes");
    }
    const auto dim = static_cast<Eigen::Index>(2 * n);
    Matrix t = Matrix::Identity(dim, dim);
    const auto b = static_cast<Eigen::Index>(2 * bob);
    const auto i = static_cast<Eigen::Index>(2 * in);
    const auto a = static_cast<Eigen::Index>(2 * alice);
    t(b, i) += gain;
    t(b, a) -= gain;
    t(b + 1, i + 1) += gain;
    t(b + 1, a + 1) += gain;
    Matrix cov = t * state.cov() * t.transpose();
    GaussianState moved(t * state.mean(), 0.5 * (cov + cov.transpose()));
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != in && k != alice) keep.push_back(k);
    }
    return partial_trace(moved, keep);
}

/// Input mode 0, EPR halves on modes 1 (Alice) and 2 (Bob).
inline GaussianState teleport_setup(const GaussianState &input, double r) {
    return tensor(input, two_mode_squeezed_vacuum(cap_squeezing(r)));
}

struct TeleportResult {
    double gain = 1.0;
    double squeezing = 0.0;
    GaussianState ensemble = GaussianState::vacuum(1);
    /// Coherent-state fidelity; empty unless the input is a coherent state.
    std::optional<double> fidelity;
};

/// Excess variance added to each teleported quadrature:
/// (g-1)^2 e^{2r}/8 + (g+1)^2 e^{-2r}/8.
inline double teleport_excess_noise(double r, double gain) {
    r = cap_squeezing(r);
    return (gain - 1.0) * (gain - 1.0) * std::exp(2.0 * r) / 8.0 +
           (gain + 1.0) * (gain + 1.0) * std::exp(-2.0 * r) / 8.0;
}

/// Q-function variance of the teleported mode for a coherent input,
/// (1+g^2)/4 + e^{2r}(g-1)^2/8 + e^{-2r}(g+1)^2/8.
inline double teleport_q_variance(double r, double gain) {
    return (1.0 + gain * gain) / 4.0 + teleport_excess_noise(r, gain);
}

/// Fidelity for coherent input alpha = x + i p:
/// F = exp[-(1-g)^2 (x^2 + p^2) / (2 sigma)] / (2 sigma).
inline double teleport_fidelity(double r, double gain, double x_in = 0.0, double p_in = 0.0) {
    const double sigma = teleport_q_variance(r, gain);
    return std::exp(-(1.0 - gain) * (1.0 - gain) * (x_in * x_in + p_in * p_in) / (2.0 * sigma)) / (2.0 * sigma);
}

/// Unit-gain fidelity from the transfer-operator picture, (1 + sqrt(lambda))/2 with lambda = tanh^2 r.
inline double teleport_fidelity_transfer(double r) {
    return (1.0 + std::tanh(cap_squeezing(r))) / 2.0;
}

/// Heisenberg-picture teleportation of a one-mode state through TMSV(r) with gain g.
inline TeleportResult teleport(const GaussianState &input, double r, double gain = 1.0) {
    if (input.n_modes() != 1) {
        throw std::invalid_argument("teleport needs a one-mode input");
    }
    r = cap_squeezing(r);
    TeleportResult out;
    out.gain = gain;
    out.squeezing = r;
    const Matrix cov = gain * gain * input.cov() + teleport_excess_noise(r, gain) * Matrix::Identity(2, 2);
    out.ensemble = GaussianState(gain * input.mean(), cov);
    const bool coherent = (input.cov() - kVacuumVariance * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12;
    if (coherent) {
        out.fidelity = teleport_fidelity(r, gain, input.mean()(0), input.mean()(1));
    }
    return out;
}

/// Bob's state for one Bell outcome (x_u, p_v) after the gain-g displacement.
inline GaussianState teleport_single_shot(const GaussianState &input, double r, double gain, double x_u, double p_v) {
    const auto rec = bell_measure_at(teleport_setup(input, r), 0, 1, x_u, p_v);
    const double k = gain * std::numbers::sqrt2;
    return apply(displace(1, 0, k * x_u, k * p_v), *rec.conditional);
}

struct TeleportMonteCarlo {
    std::size_t shots = 0;
    Vector ensemble_mean;
    Matrix ensemble_cov;
    double mean_fidelity = 0.0;
    double fidelity_stderr = 0.0;
};

/// Operational teleportation: sampled Bell detections, conditional states, displacements.
/// The ensemble covariance is the (outcome-independent) conditional covariance plus the
/// spread of the conditional means; the fidelity is the shot average of the coherent overlap.
template <class Rng>
TeleportMonteCarlo teleport_monte_carlo(const GaussianState &input, double r, double gain, std::size_t shots,
                                        Rng &rng) {
    if (shots == 0) {
        throw std::invalid_argument("Monte Carlo needs at least one shot");
    }
    const auto setup = teleport_setup(input, r);
    const double k = gain * std::numbers::sqrt2;
    const Eigen::Vector2d target = input.mean();
    TeleportMonteCarlo out;
    out.shots = shots;
    Eigen::Vector2d sum = Eigen::Vector2d::Zero();
    Eigen::Matrix2d sum_sq = Eigen::Matrix2d::Zero();
    Matrix cond_cov;
    double f_sum = 0.0;
    double f_sq = 0.0;
    for (std::size_t s = 0; s < shots; ++s) {
        const auto rec = bell_measure(setup, 0, 1, rng);
        const auto bob = apply(displace(1, 0, k * rec.outcomes(0), k * rec.outcomes(1)), *rec.conditional);
        const Eigen::Vector2d m = bob.mean();
        sum += m;
        sum_sq += m * m.transpose();
        if (s == 0) cond_cov = bob.cov();
        const double f = coherent_fidelity(bob, target);
        f_sum += f;
        f_sq += f * f;
    }
    const double n = static_cast<double>(shots);
    const Eigen::Vector2d mean = sum / n;
    out.ensemble_mean = mean;
    out.ensemble_cov = cond_cov + (sum_sq / n - mean * mean.transpose());
    out.mean_fidelity = f_sum / n;
    out.fidelity_stderr = std::sqrt(std::max(0.0, f_sq / n - out.mean_fidelity * out.mean_fidelity) / n);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Entanglement swapping

/// tanh R = tanh r tanh r'.
inline double swap_squeezing(double r, double r_prime) {
    return std::atanh(std::tanh(cap_squeezing(r)) * std::tanh(cap_squeezing(r_prime)));
}

struct SwapResult {
    double squeezing = 0.0;  // R
    GaussianState state = GaussianState::vacuum(2);
};

inline SwapResult swap(double r, double r_prime) {
    const double big_r = swap_squeezing(r, r_prime);
    return {big_r, GaussianState(Vector::Zero(4), tmsv_covariance(big_r))};
}

/// Feed-forward gain that minimizes Var(x_0 - x_3) + Var(p_0 + p_3) of the swapped ensemble:
/// (sinh 2r + sinh 2r') / (cosh 2r + cosh 2r').
inline double swap_optimal_gain(double r, double r_prime) {
    r = cap_squeezing(r);
    r_prime = cap_squeezing(r_prime);
    return (std::sinh(2 * r) + std::sinh(2 * r_prime)) / (std::cosh(2 * r) + std::cosh(2 * r_prime));
}

/// TMSV(r) on modes (0,1) and TMSV(r') on modes (2,3).
inline GaussianState swap_setup(double r, double r_prime) {
    return tensor(two_mode_squeezed_vacuum(cap_squeezing(r)), two_mode_squeezed_vacuum(cap_squeezing(r_prime)));
}

/// Single-shot swapping: Bell detection on modes 1 and 2 with outcomes (x_u, p_v), then the
/// gain-g displacement of mode 3. Returns the conditional state of modes (0, 3).
inline GaussianState swap_single_shot(double r, double r_prime, double gain, double x_u, double p_v) {
    const auto rec = bell_measure_at(swap_setup(r, r_prime), 1, 2, x_u, p_v);
    const double k = gain * std::numbers::sqrt2;
    return apply(displace(2, 1, k * x_u, k * p_v), *rec.conditional);
}

/// Ensemble (outcome-averaged) state of modes (0, 3) for feed-forward gain g.
inline GaussianState swap_ensemble(double r, double r_prime, double gain) {
    return ensemble_teleport(swap_setup(r, r_prime), 1, 2, 3, gain);
}

/// Squeezing of the TMSV whose covariance is closest in the local variance: cosh 2R = 4 V_00.
inline double fit_tmsv_squeezing(const GaussianState &state) {
    if (state.n_modes() != 2) {
        throw std::invalid_argument("fit_tmsv_squeezing needs a two-mode state");
    }
    const double c = std::max(1.0, 4.0 * state.cov()(0, 0));
    return 0.5 * std::acosh(c);
}

// ---------------------------------------------------------------------------------------------
// Capacities (nats per channel use)

struct Capacities {
    double number;     // ideal number-state alphabet, photon counting
    double coherent;   // coherent alphabet, heterodyne detection
    double squeezed;   // squeezed alphabet, homodyne detection
};

inline Capacities channel_capacities(double nbar) {
    if (!(nbar >= 0.0)) {
        throw std::invalid_argument("mean photon number must be >= 0");
    }
    const double number = nbar == 0.0 ? 0.0 : (1.0 + nbar) * std::log1p(nbar) - nbar * std::log(nbar);
    return {number, std::log1p(nbar), std::log1p(2.0 * nbar)};
}

inline double nats_to_bits(double nats) { return nats / std::numbers::ln2; }

struct DenseCodingPoint {
    double nbar;
    double capacity;   // ln(1 + nbar + nbar^2)
    double signal;     // sigma^2 = sinh r cosh r
    double squeezing;  // r, with nbar = e^r sinh r
};

/// Mutual information of the dense-coding channel, ln(1 + sigma^2 e^{2r}).
inline double dense_coding_mutual_info(double sigma2, double r) {
    if (!(sigma2 >= 0.0) || !(r >= 0.0)) {
        throw std::invalid_argument("dense coding needs sigma^2 >= 0 and r >= 0");
    }
    return std::log1p(sigma2 * std::exp(2.0 * r));
}

/// Optimal split of nbar = sigma^2 + sinh^2 r between modulation and squeezing.
inline DenseCodingPoint dense_coding_capacity(double nbar) {
    if (!(nbar >= 0.0)) {
        throw std::invalid_argument("mean photon number must be >= 0");
    }
    const double r = 0.5 * std::log1p(2.0 * nbar);
    return {nbar, std::log1p(nbar + nbar * nbar), std::sinh(r) * std::cosh(r), r};
}

/// Mean photon number e^r sinh r of the optimal dense-coding state with squeezing r.
inline double dense_coding_nbar(double r) { return std::exp(r) * std::sinh(r); }

/// Bisection root of f on [lo, hi]; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)> &f, double lo, double hi, double tol = 1e-12) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo * fhi > 0.0) {
        throw std::invalid_argument("bisection interval does not bracket a root");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

enum class SingleChannel { number, squeezed };

/// Squeezing r > 0 at which dense coding matches the chosen single-channel capacity at equal nbar.
inline double dense_coding_break_even(SingleChannel benchmark) {
    auto gap = [benchmark](double r) {
        const double nbar = dense_coding_nbar(r);
        const auto caps = channel_capacities(nbar);
        const double single = benchmark == SingleChannel::number ? caps.number : caps.squeezed;
        return dense_coding_capacity(nbar).capacity - single;
    };
    // Dense coding loses for small r and wins for large r; skip the trivial root at r = 0.
    return bisect(gap, 0.05, 5.0);
}

// ---------------------------------------------------------------------------------------------
// Cloning

enum class CloneAlphabet { coherent, universal };

/// Optimal N -> M cloning fidelity. Coherent alphabet: MN / (MN + M - N). Universal alphabet
/// in dimension d: (N(d-1) + M(N+1)) / (M(N+d)); dimension 0 means the d -> infinity limit N/M.
inline double clone_fidelity(int n, int m, CloneAlphabet alphabet, int dimension = 0) {
    if (n < 1 || m < n) {
        throw std::invalid_argument("cloning needs 1 <= N <= M");
    }
    const double nn = n;
    const double mm = m;
    if (alphabet == CloneAlphabet::coherent) {
        return mm * nn / (mm * nn + mm - nn);
    }
    if (dimension == 0) {
        return nn / mm;
    }
    if (dimension < 2) {
        throw std::invalid_argument("universal cloning dimension must be >= 2");
    }
    const double d = dimension;
    return (nn * (d - 1.0) + mm * (nn + 1.0)) / (mm * (nn + d));
}

struct CloneResult {
    GaussianState joint = GaussianState::vacuum(2);
    GaussianState clone_a = GaussianState::vacuum(1);
    GaussianState clone_b = GaussianState::vacuum(1);
};

/// 1 -> 2 coherent-state cloner: phase-insensitive amplifier of power gain 2 (a two-mode
/// squeezer with cosh r = sqrt2 against an ancilla) followed by a 50:50 split with a blank mode.
inline CloneResult clone_coherent_circuit(const GaussianState &input) {
    if (input.n_modes() != 1) {
        throw std::invalid_argument("clone_coherent_circuit needs a one-mode input");
    }
    // Modes: 0 input, 1 amplifier ancilla, 2 blank.
    const auto start = tensor(input, GaussianState::vacuum(2));
    const double r_amp = std::acosh(std::numbers::sqrt2);
    const auto amplified = apply(two_mode_squeeze(3, r_amp, 0, 1), start);
    const auto split = apply(beam_splitter(3, std::numbers::pi / 4.0, 0, 2), amplified);
    CloneResult out;
    out.joint = partial_trace(split, {0, 2});
    out.clone_a = partial_trace(split, {0});
    out.clone_b = partial_trace(split, {2});
    return out;
}

struct TeleclonResource {
    double squeezing;  // r with e^{-2r} = (sqrt M - 1)/(sqrt M + 1)
    double decibels;   // 10 log10 e^{2r}
};

inline TeleclonResource telecloning_resource(int m) {
    if (m < 2) {
        throw std::invalid_argument("telecloning needs M >= 2");
    }
    const double s = std::sqrt(static_cast<double>(m));
    const double e2r = (s + 1.0) / (s - 1.0);
    return {0.5 * std::log(e2r), 10.0 * std::log10(e2r)};
}

// ---------------------------------------------------------------------------------------------
// Multipartite GHZ-type states

/// One momentum-squeezed (r1) and N-1 position-squeezed (r2) vacua through the N-splitter.
inline GaussianState ghz_network(std::size_t n, double r1, double r2) {
    if (n < 2) {
        throw std::invalid_argument("ghz_network needs N >= 2");
    }
    r1 = cap_squeezing(r1);
    r2 = cap_squeezing(r2);
    auto state = GaussianState::vacuum(n);
    state = apply(squeeze(n, -r1, 0), state);
    for (std::size_t k = 1; k < n; ++k) {
        state = apply(squeeze(n, r2, k), state);
    }
    return apply(n_splitter(n), state);
}

/// Closed-form covariance (1/4)[a, b on the diagonal; c between x's, d between p's].
inline Matrix ghz_covariance(std::size_t n, double r1, double r2) {
    if (n < 2) {
        throw std::invalid_argument("ghz_covariance needs N >= 2");
    }
    const double nn = static_cast<double>(n);
    const double a = std::exp(2 * r1) / nn + (nn - 1) / nn * std::exp(-2 * r2);
    const double b = std::exp(-2 * r1) / nn + (nn - 1) / nn * std::exp(2 * r2);
    const double c = (std::exp(2 * r1) - std::exp(-2 * r2)) / nn;
    const double d = (std::exp(-2 * r1) - std::exp(2 * r2)) / nn;
    const auto dim = static_cast<Eigen::Index>(2 * n);
    Matrix v = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k) {
        for (Eigen::Index l = 0; l < static_cast<Eigen::Index>(n); ++l) {
            v(2 * k, 2 * l) = (k == l ? a : c) / 4.0;
            v(2 * k + 1, 2 * l + 1) = (k == l ? b : d) / 4.0;
        }
    }
    return v;
}

/// Minimum-energy (unbiased) relation: e^{2 r1} = (N-1) sinh 2r2 [sqrt(1 + 1/((N-1)^2 sinh^2 2r2)) + 1],
/// i.e. 2 r1 = asinh((N-1) sinh 2r2).
inline double bowen_relation(std::size_t n, double r2) {
    if (n < 2) {
        throw std::invalid_argument("bowen_relation needs N >= 2");
    }
    return 0.5 * std::asinh(static_cast<double>(n - 1) * std::sinh(2.0 * r2));
}

}  // namespace cvgauss

#endif
