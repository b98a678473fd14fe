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

// Reference computations for the test suites. Nothing here calls into the library's
// numerical routines, so agreement with it is a genuine cross-check.

#ifndef CVGAUSS_TESTS_ORACLES_HPP
#define CVGAUSS_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline Matrix omega(std::size_t n) {
    Matrix w = Matrix::Zero(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        w(2 * k, 2 * k + 1) = 1.0;
        w(2 * k + 1, 2 * k) = -1.0;
    }
    return w;
}

/// Random symplectic matrix exp(Omega H) for a random symmetric H of the given scale.
template <class Rng>
Matrix random_symplectic(std::size_t n, Rng &rng, double scale = 0.5) {
    std::normal_distribution<double> g(0.0, scale);
    Matrix h(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = g(rng);
    }
    h = (0.5 * (h + h.transpose())).eval();
    const Matrix generator = omega(n) * h;
    return generator.exp();
}

/// Williamson construction S diag(nu) S^T with symplectic eigenvalues nu_k >= 1/4.
/// `mixedness` = 0 gives pure states.
template <class Rng>
Matrix random_covariance(std::size_t n, Rng &rng, double mixedness = 1.0, double scale = 0.5) {
    std::uniform_real_distribution<double> u(0.0, mixedness);
    Vector d(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        const double nu = 0.25 * (1.0 + u(rng));
        d(2 * k) = nu;
        d(2 * k + 1) = nu;
    }
    const Matrix s = random_symplectic(n, rng, scale);
    Matrix v = s * d.asDiagonal() * s.transpose();
    return 0.5 * (v + v.transpose());
}

/// Separable two-mode covariance V_a (+) V_b + P with P positive semidefinite.
template <class Rng>
Matrix random_separable_two_mode(Rng &rng) {
    Matrix v = Matrix::Zero(4, 4);
    v.block(0, 0, 2, 2) = random_covariance(1, rng, 1.0, 0.7);
    v.block(2, 2, 2, 2) = random_covariance(1, rng, 1.0, 0.7);
    std::normal_distribution<double> g(0.0, 0.3);
    Matrix a(4, 2);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) a(i, j) = g(rng);
    }
    v += a * a.transpose();
    return v;
}

/// Smallest eigenvalue of V + (i/4) Omega through its real symmetric 2x embedding
/// [[V, -W], [W, V]] with W = Omega/4.
inline double min_uncertainty_eigenvalue(const Matrix &v) {
    const auto n = v.rows();
    const Matrix w = 0.25 * omega(static_cast<std::size_t>(n / 2));
    Matrix big(2 * n, 2 * n);
    big << v, -w, w, v;
    big = (0.5 * (big + big.transpose())).eval();
    return Eigen::SelfAdjointEigenSolver<Matrix>(big, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

/// Two-sided p-value of the asymptotic Kolmogorov distribution at sqrt(n_eff) D.
inline double kolmogorov_pvalue(double lambda) {
    if (lambda < 1e-3) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// Two-sample Kolmogorov-Smirnov test; returns the p-value.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    const double n_eff = na * nb / (na + nb);
    const double s = std::sqrt(n_eff);
    // Stephens' small-sample correction.
    return kolmogorov_pvalue((s + 0.12 + 0.11 / s) * d);
}

/// Gaussian density with covariance `v` at `xi` (mean zero), computed by direct inverse.
inline double gaussian_density(const Matrix &v, const Vector &xi) {
    const double n = static_cast<double>(v.rows());
    return std::exp(-0.5 * xi.dot(v.inverse() * xi)) / std::sqrt(std::pow(2.0 * M_PI, n) * v.determinant());
}

inline double normal_pdf(double x, double mean, double var) {
    return std::exp(-0.5 * (x - mean) * (x - mean) / var) / std::sqrt(2.0 * M_PI * var);
}

/// Mutual information (nats) of one real quadrature of the dense-coding channel by nested
/// Gauss-Kronrod quadrature: alpha ~ N(0, s2/2) is encoded on a squeezed carrier and read
/// out as beta | alpha ~ N(alpha / sqrt2, e^{-2r}/4).
inline double dense_coding_component_integral(double s2, double r) {
    using boost::math::quadrature::gauss_kronrod;
    const double va = s2 / 2.0;
    const double vn = std::exp(-2.0 * r) / 4.0;
    const double vb = va / 2.0 + vn;
    auto outer = [&](double a) {
        const double mu = a / std::sqrt(2.0);
        auto inner = [&](double b) {
            const double pc = normal_pdf(b, mu, vn);
            return pc * std::log(pc / normal_pdf(b, 0.0, vb));
        };
        const double w = 12.0 * std::sqrt(vn);
        return normal_pdf(a, 0.0, va) * gauss_kronrod<double, 61>::integrate(inner, mu - w, mu + w, 15, 1e-13);
    };
    const double w = 12.0 * std::sqrt(va);
    return gauss_kronrod<double, 61>::integrate(outer, -w, w, 15, 1e-12);
}

}  // namespace oracle

#endif
