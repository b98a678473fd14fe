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

#include "cvgauss/core.hpp"

#include <gtest/gtest.h>

#include "cvgauss/ops.hpp"
#include "oracles.hpp"

using namespace cvgauss;

TEST(vacuum, single_mode) {
    const auto v = GaussianState::vacuum(1);
    EXPECT_EQ(v.n_modes(), 1u);
    EXPECT_EQ(v.cov(), Matrix::Identity(2, 2) * 0.25);
    EXPECT_EQ(v.mean(), Vector::Zero(2));
}

TEST(vacuum, two_modes_is_tensor) {
    const auto v = GaussianState::vacuum(2);
    EXPECT_EQ(v.cov(), Matrix::Identity(4, 4) * 0.25);
    EXPECT_EQ(tensor(GaussianState::vacuum(1), GaussianState::vacuum(1)), v);
}

TEST(vacuum, saturates_uncertainty) {
    const auto d = validate(GaussianState::vacuum(3));
    EXPECT_TRUE(d.ok());
    EXPECT_NEAR(d.min_eigenvalue, 0.0, tol::psd);
}

TEST(vacuum, zero_modes_rejected) { EXPECT_THROW(GaussianState::vacuum(0), std::invalid_argument); }

TEST(symplectic_form, squares_to_minus_identity) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const Matrix l = symplectic_form(n);
        EXPECT_TRUE((l * l + Matrix::Identity(2 * n, 2 * n)).isZero(0.0));
    }
}

TEST(validate, sub_vacuum_covariance) {
    Matrix v = Matrix::Identity(2, 2) / 8.0;
    const auto d = validate(GaussianState(Vector::Zero(2), v));
    EXPECT_EQ(d.kind, Violation::uncertainty);
    // Eigenvalues of [[1/8, i/4], [-i/4, 1/8]] are 1/8 +- 1/4.
    EXPECT_NEAR(d.min_eigenvalue, -0.125, 1e-14);
    EXPECT_NEAR(d.min_eigenvalue, oracle::min_uncertainty_eigenvalue(v), 1e-14);
}

TEST(validate, asymmetric_covariance) {
    Matrix v = Matrix::Identity(2, 2) * 0.25;
    v(0, 1) = 1e-6;
    const auto d = validate(GaussianState(Vector::Zero(2), v));
    EXPECT_EQ(d.kind, Violation::asymmetric);
    EXPECT_NEAR(d.symmetry_defect, 1e-6, 1e-18);
}

TEST(validate, tmsv_ok_matches_oracle) {
    const auto s = two_mode_squeezed_vacuum(1.0);
    const auto d = validate(s);
    EXPECT_TRUE(d.ok());
    EXPECT_NEAR(d.min_eigenvalue, oracle::min_uncertainty_eigenvalue(s.cov()), 1e-12);
}

TEST(validate, dimension_mismatch_is_structural) {
    EXPECT_THROW(GaussianState(Vector::Zero(3), Matrix::Identity(2, 2)), StructuralError);
    EXPECT_THROW(GaussianState(Vector::Zero(2), Matrix::Identity(2, 3)), StructuralError);
    EXPECT_THROW(GaussianState(Vector::Zero(4), Matrix::Identity(4, 4).topLeftCorner(3, 3)), StructuralError);
}

TEST(validate, random_states_match_embedding_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const Matrix v = oracle::random_covariance(n, rng);
        const auto d = validate(GaussianState(Vector::Zero(2 * n), v));
        EXPECT_TRUE(d.ok());
        EXPECT_NEAR(d.min_eigenvalue, oracle::min_uncertainty_eigenvalue(v), 1e-9);
    }
}

TEST(purity, vacuum_thermal_tmsv) {
    EXPECT_NEAR(purity(GaussianState::vacuum(1)), 1.0, 1e-15);
    const GaussianState thermal(Vector::Zero(2), Matrix::Identity(2, 2) * std::cosh(2.0) / 4.0);
    EXPECT_NEAR(purity(thermal), 1.0 / std::cosh(2.0), 1e-14);
    EXPECT_NEAR(purity(thermal), 0.2658022288340797, 1e-12);
    for (double r : {0.0, 0.3, 1.0, 2.5}) {
        EXPECT_NEAR(purity(two_mode_squeezed_vacuum(r)), 1.0, tol::purity);
        EXPECT_TRUE(is_pure(two_mode_squeezed_vacuum(r)));
    }
    EXPECT_FALSE(is_pure(thermal));
}

TEST(purity, singular_rejected) {
    Matrix v = Matrix::Zero(2, 2);
    v(0, 0) = 1.0;
    EXPECT_THROW(purity(GaussianState(Vector::Zero(2), v)), InvalidState);
}

TEST(purity, multiplicative_under_tensor) {
    const GaussianState a(Vector::Zero(2), Matrix::Identity(2, 2) * 0.4);
    const auto b = squeezed_vacuum(0.7);
    const GaussianState c(Vector::Zero(2), Matrix::Identity(2, 2) * 0.9);
    EXPECT_NEAR(purity(tensor(a, c)), purity(a) * purity(c), 1e-14);
    EXPECT_NEAR(purity(tensor(a, b)), purity(a), 1e-12);
}

TEST(uncertainty, det_bound_on_random_states) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const Matrix v = oracle::random_covariance(n, rng);
        EXPECT_GE(v.determinant() * (1.0 + 1e-9), std::pow(16.0, -static_cast<double>(n)));
    }
}

TEST(wigner, vacuum_and_tmsv_at_origin) {
    EXPECT_NEAR(wigner(GaussianState::vacuum(1), Vector::Zero(2)), 2.0 / std::numbers::pi, 1e-15);
    for (double r : {0.0, 0.5, 1.5}) {
        EXPECT_NEAR(wigner(two_mode_squeezed_vacuum(r), Vector::Zero(4)),
                    4.0 / (std::numbers::pi * std::numbers::pi), 1e-12);
    }
}

TEST(wigner, matches_direct_density) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 0.6);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix v = oracle::random_covariance(2, rng);
        Vector mean(4);
        Vector xi(4);
        for (int k = 0; k < 4; ++k) {
            mean(k) = g(rng);
            xi(k) = g(rng);
        }
        const double expect = oracle::gaussian_density(v, xi - mean);
        EXPECT_NEAR(wigner(GaussianState(mean, v), xi), expect, 1e-12 * std::max(1.0, expect));
    }
}

TEST(wigner, singular_rejected) {
    Matrix v = Matrix::Zero(2, 2);
    v(1, 1) = 1.0;
    EXPECT_THROW(wigner(GaussianState(Vector::Zero(2), v), Vector::Zero(2)), InvalidState);
}

TEST(wigner, grid_normalization_one_mode) {
    const auto s = apply(displace(1, 0, 0.3, -0.2), squeezed_vacuum(0.6, 0.4));
    const double h = 0.02;
    double total = 0.0;
    for (double x = -6.0; x <= 6.0; x += h) {
        for (double p = -6.0; p <= 6.0; p += h) {
            total += wigner(s, Eigen::Vector2d(x, p));
        }
    }
    EXPECT_NEAR(total * h * h, 1.0, 1e-4);
}

TEST(wigner, grid_normalization_two_modes) {
    const auto s = two_mode_squeezed_vacuum(0.3);
    const double h = 0.2;
    const int half = 16;
    double total = 0.0;
    Vector xi(4);
    for (int a = -half; a <= half; ++a) {
        for (int b = -half; b <= half; ++b) {
            for (int c = -half; c <= half; ++c) {
                for (int d = -half; d <= half; ++d) {
                    xi << a * h, b * h, c * h, d * h;
                    total += wigner(s, xi);
                }
            }
        }
    }
    EXPECT_NEAR(total * std::pow(h, 4), 1.0, 1e-4);
}

TEST(wigner, momentum_marginal_is_position_density) {
    const auto s = squeezed_vacuum(0.5, 0.9);
    const double vxx = s.cov()(0, 0);
    const double h = 0.01;
    for (double x : {-0.7, 0.0, 0.4, 1.1}) {
        double marginal = 0.0;
        for (double p = -8.0; p <= 8.0; p += h) marginal += wigner(s, Eigen::Vector2d(x, p));
        marginal *= h;
        const double expect = std::exp(-x * x / (2 * vxx)) / std::sqrt(2 * std::numbers::pi * vxx);
        EXPECT_NEAR(marginal, expect, 1e-8);
    }
}

TEST(tensor, block_structure) {
    const auto a = squeezed_vacuum(0.8);
    const auto b = GaussianState::vacuum(1);
    const auto t = tensor(a, b);
    EXPECT_EQ(t.cov().block(0, 0, 2, 2), a.cov());
    EXPECT_EQ(t.cov().block(2, 2, 2, 2), b.cov());
    EXPECT_TRUE(t.cov().block(0, 2, 2, 2).isZero(0.0));
}

TEST(partial_trace, tmsv_arm_is_thermal) {
    for (double r : {0.0, 0.2, 0.9, 2.0}) {
        const auto red = partial_trace(two_mode_squeezed_vacuum(r), {1});
        EXPECT_TRUE(red.cov().isApprox(Matrix::Identity(2, 2) * std::cosh(2 * r) / 4.0, 1e-14));
        EXPECT_NEAR(mean_photon_number(red, 0), std::sinh(r) * std::sinh(r), 1e-12);
        EXPECT_NEAR(purity(red), 1.0 / std::cosh(2 * r), 1e-12);
    }
}

TEST(partial_trace, keep_all_and_vacuum) {
    const auto s = two_mode_squeezed_vacuum(0.4);
    EXPECT_EQ(partial_trace(s, {0, 1}), s);
    EXPECT_EQ(partial_trace(GaussianState::vacuum(2), {0}), GaussianState::vacuum(1));
}

TEST(partial_trace, inverts_tensor) {
    const auto a = squeezed_vacuum(0.3, 1.0);
    const auto b = coherent_state(0.5, -1.0);
    EXPECT_EQ(partial_trace(tensor(a, b), {0}), a);
    EXPECT_EQ(partial_trace(tensor(a, b), {1}), b);
}

TEST(partial_trace, bad_indices) {
    const auto s = GaussianState::vacuum(2);
    EXPECT_THROW(partial_trace(s, {2}), std::invalid_argument);
    EXPECT_THROW(partial_trace(s, {0, 0}), std::invalid_argument);
    EXPECT_THROW(partial_trace(s, std::span<const std::size_t>{}), std::invalid_argument);
}

TEST(photon_number, vacuum_squeezed_coherent) {
    EXPECT_NEAR(mean_photon_number(GaussianState::vacuum(1), 0), 0.0, 1e-15);
    EXPECT_NEAR(mean_photon_number(squeezed_vacuum(0.7), 0), std::sinh(0.7) * std::sinh(0.7), 1e-12);
    EXPECT_NEAR(mean_photon_number(coherent_state(1.2, -0.5), 0), 1.44 + 0.25, 1e-12);
    const auto displaced_squeezed = apply(displace(1, 0, 0.6, 0.8), squeezed_vacuum(0.4));
    EXPECT_NEAR(mean_photon_number(displaced_squeezed, 0), 1.0 + std::sinh(0.4) * std::sinh(0.4), 1e-12);
}

TEST(thermal, occupation) {
    const auto t = GaussianState::thermal(2.5);
    EXPECT_NEAR(mean_photon_number(t, 0), 2.5, 1e-12);
    EXPECT_THROW(GaussianState::thermal(-0.1), std::invalid_argument);
}
