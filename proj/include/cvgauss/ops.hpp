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

#ifndef CVGAUSS_OPS_HPP
#define CVGAUSS_OPS_HPP

#include <complex>
#include <string>

#include "cvgauss/core.hpp"

namespace cvgauss {

/// Affine symplectic map xi -> S xi + d acting on quadrature operators.
class GaussianChannel {
   public:
    GaussianChannel(Matrix s, Vector d) : s_(std::move(s)), d_(std::move(d)) {
        if (s_.rows() == 0 || s_.rows() % 2 != 0 || s_.rows() != s_.cols() || d_.size() != s_.rows()) {
            throw StructuralError("channel needs a 2N x 2N matrix and a length-2N displacement");
        }
    }

    static GaussianChannel identity(std::size_t n_modes) {
        const auto dim = static_cast<Eigen::Index>(2 * n_modes);
        return {Matrix::Identity(dim, dim), Vector::Zero(dim)};
    }

    std::size_t n_modes() const { return static_cast<std::size_t>(s_.rows() / 2); }
    const Matrix &matrix() const { return s_; }
    const Vector &displacement() const { return d_; }

   private:
    Matrix s_;
    Vector d_;
};

/// max |S Lambda S^T - Lambda|.
inline double symplectic_defect(const Matrix &s) {
    const Matrix lambda = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
    return (s * lambda * s.transpose() - lambda).cwiseAbs().maxCoeff();
}

inline bool is_symplectic(const Matrix &s) { return symplectic_defect(s) <= tol::symplectic; }

/// Embeds a local 2k x 2k symplectic block acting on `modes` into an n-mode identity.
inline GaussianChannel embed(const Matrix &local, std::span<const std::size_t> modes, std::size_t n_modes) {
    if (local.rows() != static_cast<Eigen::Index>(2 * modes.size())) {
        throw StructuralError("local block does not match the number of target modes");
    }
    for (std::size_t a = 0; a < modes.size(); ++a) {
        check_mode(modes[a], n_modes);
        for (std::size_t b = a + 1; b < modes.size(); ++b) {
            if (modes[a] == modes[b]) {
                throw std::invalid_argument("gate modes must be distinct");
            }
        }
    }
    const auto dim = static_cast<Eigen::Index>(2 * n_modes);
    Matrix s = Matrix::Identity(dim, dim);
    const auto idx = quadrature_indices(modes);
    s(idx, idx) = local;
    return {std::move(s), Vector::Zero(dim)};
}

inline GaussianChannel embed(const Matrix &local, std::initializer_list<std::size_t> modes, std::size_t n_modes) {
    std::vector<std::size_t> m(modes);
    return embed(local, std::span<const std::size_t>(m), n_modes);
}

/// Quadrature rotation x -> x cos(t) + p sin(t), p -> -x sin(t) + p cos(t).
inline Matrix rotation_block(double theta) {
    Matrix r(2, 2);
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return r;
}

inline GaussianChannel phase_shift(std::size_t n_modes, double theta, std::size_t mode) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("phase_shift angle must be finite");
    }
    return embed(rotation_block(theta), {mode}, n_modes);
}

/// Phase-free beam splitter: (a_i, a_j) -> (a_i sin t + a_j cos t, a_i cos t - a_j sin t),
/// applied identically to the x pair and the p pair.
inline GaussianChannel beam_splitter(std::size_t n_modes, double theta, std::size_t i, std::size_t j) {
    if (i == j) {
        throw std::invalid_argument("beam_splitter needs two distinct modes");
    }
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    Matrix local = Matrix::Zero(4, 4);
    for (int q = 0; q < 2; ++q) {
        local(q, q) = s;
        local(q, 2 + q) = c;
        local(2 + q, q) = c;
        local(2 + q, 2 + q) = -s;
    }
    return embed(local, {i, j}, n_modes);
}

/// Single-mode squeezer. For phi = 0 the position quadrature is attenuated by e^-r;
/// other orientations are the phi = 0 squeezer conjugated by a rotation of phi/2.
inline GaussianChannel squeeze(std::size_t n_modes, double r, double phi, std::size_t mode) {
    if (!std::isfinite(r) || !std::isfinite(phi)) {
        throw std::invalid_argument("squeeze parameters must be finite");
    }
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = std::exp(-r);
    diag(1, 1) = std::exp(r);
    const Matrix rot = rotation_block(phi / 2.0);
    return embed(rot.transpose() * diag * rot, {mode}, n_modes);
}

inline GaussianChannel squeeze(std::size_t n_modes, double r, std::size_t mode) {
    return squeeze(n_modes, r, 0.0, mode);
}

/// a_i -> a_i cosh r + a_j^dag sinh r and symmetrically for j.
inline GaussianChannel two_mode_squeeze(std::size_t n_modes, double r, std::size_t i, std::size_t j) {
    if (i == j) {
        throw std::invalid_argument("two_mode_squeeze needs two distinct modes");
    }
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    Matrix local(4, 4);
    local << ch, 0, sh, 0,
             0, ch, 0, -sh,
             sh, 0, ch, 0,
             0, -sh, 0, ch;
    return embed(local, {i, j}, n_modes);
}

inline GaussianChannel displace(const Vector &shift) {
    if (!shift.allFinite()) {
        throw std::invalid_argument("displacement must be finite");
    }
    const auto dim = shift.size();
    return {Matrix::Identity(dim, dim), shift};
}

inline GaussianChannel displace(std::size_t n_modes, std::size_t mode, double x, double p) {
    check_mode(mode, n_modes);
    Vector shift = Vector::Zero(static_cast<Eigen::Index>(2 * n_modes));
    shift(static_cast<Eigen::Index>(2 * mode)) = x;
    shift(static_cast<Eigen::Index>(2 * mode + 1)) = p;
    return displace(shift);
}

/// Quantum non-demolition SUM gate exp(-2i g x_i p_j): x_j -> x_j + g x_i, p_i -> p_i - g p_j.
inline GaussianChannel sum_gate(std::size_t n_modes, std::size_t control, std::size_t target, double gain = 1.0) {
    if (control == target) {
        throw std::invalid_argument("SUM gate needs distinct control and target");
    }
    Matrix local = Matrix::Identity(4, 4);
    local(2, 0) = gain;
    local(1, 3) = -gain;
    return embed(local, {control, target}, n_modes);
}

/// Fourier gate in the Heisenberg picture: (x, p) -> (-p, x). Equal to phase_shift(-pi/2).
inline GaussianChannel fourier(std::size_t n_modes, std::size_t mode) {
    Matrix local(2, 2);
    local << 0, -1, 1, 0;
    return embed(local, {mode}, n_modes);
}

/// Shear exp(i eta x^2): p -> p + eta x.
inline GaussianChannel shear(std::size_t n_modes, double eta, std::size_t mode) {
    if (!std::isfinite(eta)) {
        throw std::invalid_argument("shear strength must be finite");
    }
    Matrix local = Matrix::Identity(2, 2);
    local(1, 0) = eta;
    return embed(local, {mode}, n_modes);
}

/// Cascade of beam splitters B_{N-1,N}(pi/4) ... B_{12}(asin(1/sqrt N)) that spreads mode 1
/// evenly over all N outputs.
inline GaussianChannel n_splitter(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("n_splitter requires N >= 2");
    }
    Matrix s = Matrix::Identity(static_cast<Eigen::Index>(2 * n), static_cast<Eigen::Index>(2 * n));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n - k)));
        s = beam_splitter(n, theta, k, k + 1).matrix() * s;
    }
    return {std::move(s), Vector::Zero(static_cast<Eigen::Index>(2 * n))};
}

/// Channel that applies `second` after `first`.
inline GaussianChannel compose(const GaussianChannel &second, const GaussianChannel &first) {
    if (second.n_modes() != first.n_modes()) {
        throw StructuralError("cannot compose channels on different mode counts");
    }
    return {second.matrix() * first.matrix(),
            second.matrix() * first.displacement() + second.displacement()};
}

inline GaussianChannel inverse(const GaussianChannel &ch) {
    const Matrix lambda = symplectic_form(ch.n_modes());
    // S^-1 = -Lambda S^T Lambda for symplectic S.
    const Matrix inv = -lambda * ch.matrix().transpose() * lambda;
    return {inv, -inv * ch.displacement()};
}

inline GaussianState apply(const GaussianChannel &ch, const GaussianState &state) {
    if (ch.n_modes() != state.n_modes()) {
        throw StructuralError("channel acts on " + std::to_string(ch.n_modes()) + " modes, state has " +
                              std::to_string(state.n_modes()));
    }
    const Matrix &s = ch.matrix();
    Matrix cov = s * state.cov() * s.transpose();
    cov = (0.5 * (cov + cov.transpose())).eval();
    return {s * state.mean() + ch.displacement(), std::move(cov)};
}

/// Converts a_out = A a + B a^dag + gamma (a = x + i p) into quadrature form.
///
/// Requires A B^T symmetric and A A^dag = B B^dag + 1 within 1e-9.
inline GaussianChannel from_lubo(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, const Eigen::VectorXcd &gamma) {
    const auto n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n || gamma.size() != n || n == 0) {
        throw StructuralError("LUBO matrices must be N x N with a length-N displacement");
    }
    const Eigen::MatrixXcd abt = a * b.transpose();
    const double sym_residual = (abt - abt.transpose()).norm();
    const double norm_residual =
        (a * a.adjoint() - b * b.adjoint() - Eigen::MatrixXcd::Identity(n, n)).norm();
    if (sym_residual > 1e-9 || norm_residual > 1e-9) {
        throw std::invalid_argument("LUBO conditions violated: |AB^T - BA^T| = " + std::to_string(sym_residual) +
                                    ", |AA^dag - BB^dag - 1| = " + std::to_string(norm_residual));
    }
    Matrix s(2 * n, 2 * n);
    Vector d(2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            const auto akl = a(k, l);
            const auto bkl = b(k, l);
            s(2 * k, 2 * l) = akl.real() + bkl.real();
            s(2 * k, 2 * l + 1) = bkl.imag() - akl.imag();
            s(2 * k + 1, 2 * l) = akl.imag() + bkl.imag();
            s(2 * k + 1, 2 * l + 1) = akl.real() - bkl.real();
        }
        d(2 * k) = gamma(k).real();
        d(2 * k + 1) = gamma(k).imag();
    }
    return {std::move(s), std::move(d)};
}

/// Loss of transmissivity eta on one mode: mixes in a vacuum ancilla at a beam splitter and
/// traces it out.
inline GaussianState apply_loss(const GaussianState &state, std::size_t mode, double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("transmissivity must lie in [0, 1]");
    }
    check_mode(mode, state.n_modes());
    const std::size_t n = state.n_modes();
    const auto extended = tensor(state, GaussianState::vacuum(1));
    const auto mixed = apply(beam_splitter(n + 1, std::asin(std::sqrt(eta)), mode, n), extended);
    std::vector<std::size_t> keep(n);
    for (std::size_t k = 0; k < n; ++k) keep[k] = k;
    return partial_trace(mixed, keep);
}

/// Convenience states built from the gates above.
inline GaussianState squeezed_vacuum(double r, double phi = 0.0) {
    return apply(squeeze(1, r, phi, 0), GaussianState::vacuum(1));
}

inline GaussianState coherent_state(double x, double p) {
    return apply(displace(1, 0, x, p), GaussianState::vacuum(1));
}

inline GaussianState two_mode_squeezed_vacuum(double r) {
    return apply(two_mode_squeeze(2, r, 0, 1), GaussianState::vacuum(2));
}

/// Closed-form TMSV covariance (1/4)[[c,0,s,0],[0,c,0,-s],[s,0,c,0],[0,-s,0,c]].
inline Matrix tmsv_covariance(double r) {
    const double c = std::cosh(2.0 * r) / 4.0;
    const double s = std::sinh(2.0 * r) / 4.0;
    Matrix v(4, 4);
    v << c, 0, s, 0,
         0, c, 0, -s,
         s, 0, c, 0,
         0, -s, 0, c;
    return v;
}

}  // namespace cvgauss

#endif
