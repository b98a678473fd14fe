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

#ifndef CVGAUSS_STABILIZER_HPP
#define CVGAUSS_STABILIZER_HPP

#include <limits>
#include <optional>
#include <random>

#include "cvgauss/measurement.hpp"

namespace cvgauss {

/// Variance standing in for the flat momentum distribution of an ideal position eigenstate.
inline constexpr double kIdealAntisqueezedVariance = 1e12;

/// Heisenberg-picture simulator for the Clifford-analog gate set.
///
/// Row k of `matrix()` expresses the current quadrature k as a linear combination of the
/// initial quadratures (x_0, p_0, ..., x_{n-1}, p_{n-1}); `displacement()` is the constant
/// offset. Inputs are squeezed vacua with per-mode parameters r_i (x variance e^{-2r}/4);
/// r = +inf is an ideal x eigenstate and r = -inf an ideal p eigenstate.
///
/// Measurement uses hidden initial quadratures drawn once per shot from the input Wigner
/// distribution: an x measurement returns row . xi0 + d. Measured modes are frozen.
class StabilizerTableau {
public:
    explicit StabilizerTableau(std::vector<double> squeeze_profile)
        : profile_(std::move(squeeze_profile)), measured_(profile_.size(), false), outcomes_(profile_.size(), 0.0) {
        if (profile_.empty()) {
            throw StructuralError("tableau needs at least one mode");
        }
        for (double r : profile_) {
            if (std::isnan(r)) {
                throw std::invalid_argument("squeeze profile entries must not be NaN");
            }
        }
        const auto dim = static_cast<Eigen::Index>(2 * profile_.size());
        m_ = Matrix::Identity(dim, dim);
        d_ = Vector::Zero(dim);
    }

    static StabilizerTableau vacuum(std::size_t n_modes) { return StabilizerTableau(std::vector<double>(n_modes, 0.0)); }

    std::size_t n_modes() const { return profile_.size(); }
    const Matrix &matrix() const { return m_; }
    const Vector &displacement() const { return d_; }
    const std::vector<double> &squeeze_profile() const { return profile_; }
    bool is_measured(std::size_t mode) const {
        check_mode(mode, n_modes());
        return measured_[mode];
    }
    double outcome(std::size_t mode) const {
        if (!is_measured(mode)) {
            throw std::logic_error("mode has not been measured");
        }
        return outcomes_[mode];
    }

    /// Number of reals tracked: the 2n x 2n evolution matrix plus 2n offsets and n squeezing values.
    std::size_t state_size() const { return static_cast<std::size_t>(m_.size() + d_.size()) + profile_.size(); }

    /// SUM gate: x_target += g x_control, p_control -= g p_target.
    void sum(std::size_t control, std::size_t target, double gain = 1.0) {
        check_pair(control, target);
        add_row(x(target), x(control), gain);
        add_row(p(control), p(target), -gain);
    }

    /// Fourier transform (x, p) -> (-p, x).
    void fourier(std::size_t mode) {
        check_free(mode);
        Vector old_x = m_.row(x(mode));
        const double old_dx = d_(x(mode));
        m_.row(x(mode)) = -m_.row(p(mode));
        d_(x(mode)) = -d_(p(mode));
        m_.row(p(mode)) = old_x;
        d_(p(mode)) = old_dx;
    }

    /// Phase gate P(eta) = exp(i eta x^2): p += eta x.
    void phase(double eta, std::size_t mode) {
        check_free(mode);
        require_finite(eta, "phase gate parameter");
        add_row(p(mode), x(mode), eta);
    }

    /// Pauli displacement X(dx) Z(dp).
    void pauli(double dx, double dp, std::size_t mode) {
        check_free(mode);
        require_finite(dx, "Pauli shift");
        require_finite(dp, "Pauli shift");
        d_(x(mode)) += dx;
        d_(p(mode)) += dp;
    }

    /// Single-mode squeezer: x *= e^-r, p *= e^r.
    void squeeze(double r, std::size_t mode) {
        check_free(mode);
        require_finite(r, "squeezing parameter");
        m_.row(x(mode)) *= std::exp(-r);
        d_(x(mode)) *= std::exp(-r);
        m_.row(p(mode)) *= std::exp(r);
        d_(p(mode)) *= std::exp(r);
    }

    /// x measurement on `mode`. The hidden initial quadratures are drawn on first use and
    /// reused for every later measurement of the same shot.
    template <class Rng>
    double measure_x(std::size_t mode, Rng &rng) {
        check_free(mode);
        if (!hidden_) {
            sample_hidden(rng);
        }
        const double value = m_.row(x(mode)).dot(*hidden_) + d_(x(mode));
        measured_[mode] = true;
        outcomes_[mode] = value;
        return value;
    }

    /// Measurement with a caller-supplied outcome (postselection).
    void record_x(std::size_t mode, double value) {
        check_free(mode);
        require_finite(value, "measurement outcome");
        measured_[mode] = true;
        outcomes_[mode] = value;
    }

    /// Feed-forward of a measured x value onto an unmeasured mode: x_to += gx * m, p_to += gp * m.
    /// Realized as the equivalent coherent controlled displacement (weighted SUM and controlled
    /// phase from the measured mode), so the ensemble state stays available.
    void feed_forward(std::size_t from, std::size_t to, double gx, double gp) {
        if (from == to) {
            throw std::invalid_argument("feed-forward needs two distinct modes");
        }
        if (!is_measured(from)) {
            throw std::logic_error("feed-forward source has not been measured");
        }
        check_free(to);
        require_finite(gx, "feed-forward gain");
        require_finite(gp, "feed-forward gain");
        add_row(x(to), x(from), gx);
        add_row(p(from), p(to), -gx);
        add_row(p(to), x(from), gp);
        add_row(p(from), x(to), gp);
    }

    /// Variances of the initial quadratures implied by the squeeze profile.
    Vector input_variances() const {
        Vector v(static_cast<Eigen::Index>(2 * n_modes()));
        for (std::size_t k = 0; k < n_modes(); ++k) {
            const double r = profile_[k];
            double vx;
            double vp;
            if (std::isinf(r)) {
                vx = r > 0 ? 0.0 : kIdealAntisqueezedVariance;
                vp = r > 0 ? kIdealAntisqueezedVariance : 0.0;
            } else {
                vx = std::exp(-2.0 * r) * kVacuumVariance;
                vp = std::exp(2.0 * r) * kVacuumVariance;
            }
            v(x(k)) = vx;
            v(p(k)) = vp;
        }
        return v;
    }

    /// Ensemble Gaussian state of all modes, measured ones included (deferred-measurement picture).
    GaussianState to_gaussian() const {
        Matrix cov = m_ * input_variances().asDiagonal() * m_.transpose();
        return {d_, 0.5 * (cov + cov.transpose())};
    }

    /// State of the unmeasured modes conditioned on the recorded outcomes; empty if every
    /// mode was measured.
    std::optional<GaussianState> conditional_state() const {
        std::optional<GaussianState> state = to_gaussian();
        std::vector<std::size_t> index(n_modes());
        for (std::size_t k = 0; k < n_modes(); ++k) index[k] = k;
        for (std::size_t k = 0; k < n_modes(); ++k) {
            if (!measured_[k]) continue;
            state = detail::condition_on_quadrature(*state, index[k], 0.0, outcomes_[k]);
            if (!state) return std::nullopt;
            for (std::size_t j = k + 1; j < n_modes(); ++j) --index[j];
        }
        return state;
    }

    double symplectic_defect() const {
        const Matrix lambda = symplectic_form(n_modes());
        return (m_ * lambda * m_.transpose() - lambda).cwiseAbs().maxCoeff();
    }

private:
    static Eigen::Index x(std::size_t mode) { return static_cast<Eigen::Index>(2 * mode); }
    static Eigen::Index p(std::size_t mode) { return static_cast<Eigen::Index>(2 * mode + 1); }

    static void require_finite(double v, const char *what) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(what) + " must be finite");
        }
    }

    void check_free(std::size_t mode) const {
        check_mode(mode, n_modes());
        if (measured_[mode]) {
            throw std::logic_error("mode " + std::to_string(mode) + " has already been measured");
        }
    }

    void check_pair(std::size_t i, std::size_t j) const {
        if (i == j) {
            throw std::invalid_argument("two-mode gate needs two distinct modes");
        }
        check_free(i);
        check_free(j);
    }

    void add_row(Eigen::Index dst, Eigen::Index src, double w) {
        m_.row(dst) += w * m_.row(src);
        d_(dst) += w * d_(src);
    }

    template <class Rng>
    void sample_hidden(Rng &rng) {
        const Vector var = input_variances();
        Vector xi(var.size());
        std::normal_distribution<double> unit(0.0, 1.0);
        for (Eigen::Index k = 0; k < var.size(); ++k) {
            xi(k) = std::sqrt(var(k)) * unit(rng);
        }
        hidden_ = std::move(xi);
    }

    std::vector<double> profile_;
    std::vector<bool> measured_;
    std::vector<double> outcomes_;
    Matrix m_;
    Vector d_;
    std::optional<Vector> hidden_;
};

// Composite gates built only from the tableau primitives.

/// Two-mode rotation x_i -> c x_i - s x_j, x_j -> s x_i + c x_j (same on p), from three
/// weighted SUMs; angles beyond pi/2 first take out a factor F^2 on both modes.
inline void tableau_rotation(StabilizerTableau &t, double theta, std::size_t i, std::size_t j) {
    theta = std::remainder(theta, 2.0 * std::numbers::pi);
    if (std::abs(theta) > std::numbers::pi / 2.0) {
        for (auto m : {i, j}) {
            t.fourier(m);
            t.fourier(m);
        }
        theta -= std::copysign(std::numbers::pi, theta);
    }
    const double tan_half = std::tan(theta / 2.0);
    t.sum(j, i, -tan_half);
    t.sum(i, j, std::sin(theta));
    t.sum(j, i, -tan_half);
}

/// Mode exchange as a quarter rotation followed by F^2 on the first mode.
inline void tableau_swap(StabilizerTableau &t, std::size_t i, std::size_t j) {
    tableau_rotation(t, std::numbers::pi / 2.0, i, j);
    t.fourier(i);
    t.fourier(i);
}

/// Beam splitter with the same matrix as gaussian_ops: exchange composed with a rotation.
inline void tableau_beam_splitter(StabilizerTableau &t, double theta, std::size_t i, std::size_t j) {
    tableau_rotation(t, theta, i, j);
    tableau_swap(t, i, j);
}

/// Position shear x += a p, as F P(-a) F^-1 conjugation.
inline void tableau_position_shear(StabilizerTableau &t, double a, std::size_t mode) {
    t.fourier(mode);
    t.phase(-a, mode);
    t.fourier(mode);
    t.fourier(mode);
    t.fourier(mode);
}

/// Phase rotation x -> c x + s p, p -> -s x + c p from shears.
inline void tableau_phase_shift(StabilizerTableau &t, double theta, std::size_t mode) {
    theta = std::remainder(theta, 2.0 * std::numbers::pi);
    if (std::abs(theta) > std::numbers::pi / 2.0) {
        t.fourier(mode);
        t.fourier(mode);
        theta -= std::copysign(std::numbers::pi, theta);
    }
    const double tan_half = std::tan(theta / 2.0);
    tableau_position_shear(t, tan_half, mode);
    t.phase(-std::sin(theta), mode);
    tableau_position_shear(t, tan_half, mode);
}

/// Squeezer with orientation phi: rotations by phi/2 around the phi = 0 squeezer.
inline void tableau_squeeze(StabilizerTableau &t, double r, double phi, std::size_t mode) {
    if (phi == 0.0) {
        t.squeeze(r, mode);
        return;
    }
    tableau_phase_shift(t, phi / 2.0, mode);
    t.squeeze(r, mode);
    tableau_phase_shift(t, -phi / 2.0, mode);
}

/// Two-mode squeezer: opposite single-mode squeezers in the rotated (sum, difference) basis.
inline void tableau_two_mode_squeeze(StabilizerTableau &t, double r, std::size_t i, std::size_t j) {
    tableau_rotation(t, -std::numbers::pi / 4.0, i, j);
    t.squeeze(-r, i);
    t.squeeze(r, j);
    tableau_rotation(t, std::numbers::pi / 4.0, i, j);
}

}  // namespace cvgauss

#endif
