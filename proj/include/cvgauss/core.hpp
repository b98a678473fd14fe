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

#ifndef CVGAUSS_CORE_HPP
#define CVGAUSS_CORE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvgauss {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Units are hbar = 1/2: [x, p] = i/2 and the vacuum quadrature variance is 1/4.
inline constexpr double kVacuumVariance = 0.25;

/// Numerical tolerances shared across the library.
namespace tol {
inline constexpr double symmetry = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double purity = 1e-8;
inline constexpr double symplectic = 1e-10;
inline constexpr double criterion = 1e-10;
inline constexpr double variance = 1e-12;
}  // namespace tol

/// Thrown when a state is structurally sound but unphysical or singular.
struct InvalidState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when vector/matrix dimensions do not match the declared mode count.
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Block-diagonal symplectic form with 2x2 blocks J = [[0, 1], [-1, 0]].
inline Matrix symplectic_form(std::size_t n_modes) {
    Matrix lambda = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        lambda(2 * k, 2 * k + 1) = 1.0;
        lambda(2 * k + 1, 2 * k) = -1.0;
    }
    return lambda;
}

inline double max_abs_asymmetry(const Matrix &m) {
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of the Hermitian matrix V + (i/4) Lambda.
///
/// Non-negative (within tolerance) exactly when V satisfies the N-mode
/// uncertainty relation. The input is symmetrized first so that tiny
/// floating-point asymmetries do not leak into the Hermitian solve.
inline double min_uncertainty_eigenvalue(const Matrix &cov) {
    const auto n = static_cast<std::size_t>(cov.rows() / 2);
    Eigen::MatrixXcd h(cov.rows(), cov.cols());
    const Matrix sym = 0.5 * (cov + cov.transpose());
    const Matrix lambda = symplectic_form(n);
    h.real() = sym;
    h.imag() = 0.25 * lambda;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

/// Gaussian state: quadrature means and covariance matrix in (x1, p1, ..., xN, pN) order.
class GaussianState {
   public:
    GaussianState(Vector mean, Matrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
        if (cov_.rows() == 0 || cov_.rows() % 2 != 0 || cov_.rows() != cov_.cols()) {
            throw StructuralError("covariance must be a non-empty 2N x 2N matrix");
        }
        if (mean_.size() != cov_.rows()) {
            throw StructuralError(
                "mean has length " + std::to_string(mean_.size()) + " but covariance is " +
                std::to_string(cov_.rows()) + " x " + std::to_string(cov_.cols()));
        }
    }

    static GaussianState vacuum(std::size_t n_modes) {
        if (n_modes == 0) {
            throw std::invalid_argument("vacuum requires at least one mode");
        }
        const auto dim = static_cast<Eigen::Index>(2 * n_modes);
        return {Vector::Zero(dim), kVacuumVariance * Matrix::Identity(dim, dim)};
    }

    /// Single-mode thermal state with mean photon number nbar.
    static GaussianState thermal(double nbar) {
        if (!(nbar >= 0.0)) {
            throw std::invalid_argument("thermal state requires nbar >= 0");
        }
        return {Vector::Zero(2), (0.5 * nbar + kVacuumVariance) * Matrix::Identity(2, 2)};
    }

    std::size_t n_modes() const { return static_cast<std::size_t>(cov_.rows() / 2); }
    const Vector &mean() const { return mean_; }
    const Matrix &cov() const { return cov_; }

    bool operator==(const GaussianState &other) const {
        return mean_.size() == other.mean_.size() && mean_ == other.mean_ && cov_ == other.cov_;
    }

   private:
    Vector mean_;
    Matrix cov_;
};

enum class Violation { none, asymmetric, uncertainty };

struct Diagnostic {
    Violation kind = Violation::none;
    double symmetry_defect = 0.0;
    double min_eigenvalue = 0.0;

    bool ok() const { return kind == Violation::none; }
};

inline Diagnostic validate(const GaussianState &state) {
    Diagnostic d;
    d.symmetry_defect = max_abs_asymmetry(state.cov());
    d.min_eigenvalue = min_uncertainty_eigenvalue(state.cov());
    if (d.symmetry_defect > tol::symmetry) {
        d.kind = Violation::asymmetric;
    } else if (d.min_eigenvalue < -tol::psd) {
        d.kind = Violation::uncertainty;
    }
    return d;
}

inline void require_valid(const GaussianState &state) {
    auto d = validate(state);
    if (!d.ok()) {
        throw InvalidState(
            d.kind == Violation::asymmetric
                ? "covariance is not symmetric (defect " + std::to_string(d.symmetry_defect) + ")"
                : "covariance violates the uncertainty relation (min eigenvalue " +
                      std::to_string(d.min_eigenvalue) + ")");
    }
}

/// sqrt(16^-N / det V). Equals 1 exactly for pure states.
inline double purity(const GaussianState &state) {
    const double det = state.cov().determinant();
    if (!(det > 0.0)) {
        throw InvalidState("purity requires det V > 0");
    }
    const double n = static_cast<double>(state.n_modes());
    return std::sqrt(std::pow(16.0, -n) / det);
}

inline bool is_pure(const GaussianState &state) {
    return std::abs(purity(state) - 1.0) <= tol::purity;
}

/// Wigner function W(xi) = exp(-(xi-m)^T V^-1 (xi-m) / 2) / ((2 pi)^N sqrt(det V)).
inline double wigner(const GaussianState &state, const Vector &point) {
    if (point.size() != state.mean().size()) {
        throw StructuralError("Wigner evaluation point has the wrong dimension");
    }
    Eigen::LLT<Matrix> llt(state.cov());
    if (llt.info() != Eigen::Success) {
        throw InvalidState("Wigner function requires a positive definite covariance");
    }
    const Vector delta = point - state.mean();
    const double quad = delta.dot(llt.solve(delta));
    const Matrix l = llt.matrixL();
    const double sqrt_det = l.diagonal().prod();
    const double n = static_cast<double>(state.n_modes());
    return std::exp(-0.5 * quad) / (std::pow(2.0 * std::numbers::pi, n) * sqrt_det);
}

inline GaussianState tensor(const GaussianState &a, const GaussianState &b) {
    const auto da = a.mean().size();
    const auto db = b.mean().size();
    Vector mean(da + db);
    mean << a.mean(), b.mean();
    Matrix cov = Matrix::Zero(da + db, da + db);
    cov.topLeftCorner(da, da) = a.cov();
    cov.bottomRightCorner(db, db) = b.cov();
    return {std::move(mean), std::move(cov)};
}

/// Quadrature indices (x_k, p_k) of the listed modes, in order.
inline std::vector<Eigen::Index> quadrature_indices(std::span<const std::size_t> modes) {
    std::vector<Eigen::Index> idx;
    idx.reserve(2 * modes.size());
    for (auto m : modes) {
        idx.push_back(static_cast<Eigen::Index>(2 * m));
        idx.push_back(static_cast<Eigen::Index>(2 * m + 1));
    }
    return idx;
}

inline void check_mode(std::size_t mode, std::size_t n_modes) {
    if (mode >= n_modes) {
        throw std::invalid_argument("mode " + std::to_string(mode) + " out of range for " +
                                    std::to_string(n_modes) + "-mode system");
    }
}

/// Reduced state on the kept modes (in the order given).
inline GaussianState partial_trace(const GaussianState &state, std::span<const std::size_t> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs at least one kept mode");
    }
    std::vector<std::size_t> seen;
    for (auto m : keep) {
        check_mode(m, state.n_modes());
        if (std::find(seen.begin(), seen.end(), m) != seen.end()) {
            throw std::invalid_argument("partial_trace: duplicate mode " + std::to_string(m));
        }
        seen.push_back(m);
    }
    const auto idx = quadrature_indices(keep);
    return {state.mean()(idx), state.cov()(idx, idx)};
}

inline GaussianState partial_trace(const GaussianState &state,
                                   std::initializer_list<std::size_t> keep) {
    std::vector<std::size_t> k(keep);
    return partial_trace(state, std::span<const std::size_t>(k));
}

/// <n> = <x^2> + <p^2> - 1/2 on one mode, including the coherent part.
inline double mean_photon_number(const GaussianState &state, std::size_t mode) {
    check_mode(mode, state.n_modes());
    const auto i = static_cast<Eigen::Index>(2 * mode);
    const double x2 = state.cov()(i, i) + state.mean()(i) * state.mean()(i);
    const double p2 = state.cov()(i + 1, i + 1) + state.mean()(i + 1) * state.mean()(i + 1);
    return x2 + p2 - 0.5;
}

inline double total_photon_number(const GaussianState &state) {
    double total = 0.0;
    for (std::size_t k = 0; k < state.n_modes(); ++k) {
        total += mean_photon_number(state, k);
    }
    return total;
}

}  // namespace cvgauss

#endif
