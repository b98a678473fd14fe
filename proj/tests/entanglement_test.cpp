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

#include "cvgauss/entanglement.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "cvgauss/protocols.hpp"
#include "oracles.hpp"

using namespace cvgauss;

namespace {

GaussianState noisy_tmsv(double r, double mu) {
    return {Vector::Zero(4), tmsv_covariance(r) + Matrix::Identity(4, 4) * (mu / 4)};
}

// Applies an independent random symplectic map to every mode.
template <class Rng>
GaussianState random_local_gates(const GaussianState &s, Rng &rng) {
    const auto n = static_cast<Eigen::Index>(s.n_modes());
    Matrix big = Matrix::Zero(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < n; ++k) big.block(2 * k, 2 * k, 2, 2) = oracle::random_symplectic(1, rng, 0.6);
    return {big * s.mean(), big * s.cov() * big.transpose()};
}

GaussianState permute(const GaussianState &s, const std::array<Eigen::Index, 3> &order) {
    std::vector<Eigen::Index> idx;
    for (auto m : order) {
        idx.push_back(2 * m);
        idx.push_back(2 * m + 1);
    }
    return {s.mean()(idx), s.cov()(idx, idx)};
}

}  // namespace

TEST(partial_transpose, involution_and_errors) {
    std::mt19937_64 rng(1);
    const GaussianState s(Vector::Random(4), oracle::random_covariance(2, rng));
    const auto twice = partial_transpose(partial_transpose(s, {0, 1}), {0, 1});
    EXPECT_EQ(twice.cov(), s.cov());
    EXPECT_EQ(twice.mean(), s.mean());
    EXPECT_THROW(partial_transpose(s, std::span<const std::size_t>{}), std::invalid_argument);
    EXPECT_THROW(partial_transpose(s, {2}), std::invalid_argument);
}

TEST(partial_transpose, tmsv_min_eigenvalue) {
    for (double r : {0.1, 0.5, 1.3}) {
        const auto pt = partial_transpose(two_mode_squeezed_vacuum(r), {1});
        EXPECT_NEAR(oracle::min_uncertainty_eigenvalue(pt.cov()), (std::exp(-2 * r) - 1) / 4, 1e-12);
    }
    const auto product = tensor(squeezed_vacuum(0.7), coherent_state(1, 2));
    EXPECT_TRUE(validate(partial_transpose(product, {0})).ok());
}

TEST(npt, tmsv_and_vacuum) {
    for (double r : {1e-3, 0.2, 1.0, 3.0}) EXPECT_TRUE(npt_test(two_mode_squeezed_vacuum(r), {0}).violated);
    EXPECT_FALSE(npt_test(GaussianState::vacuum(2), {0}).violated);
}

TEST(npt, noise_crossing) {
    for (double r : {0.3, 0.8, 1.5}) {
        const double mu_star = 1 - std::exp(-2 * r);
        const auto at = npt_test(noisy_tmsv(r, mu_star), {0});
        EXPECT_NEAR(at.margin, 0.0, 1e-12);
        EXPECT_TRUE(npt_test(noisy_tmsv(r, mu_star - 1e-6), {0}).violated);
        EXPECT_FALSE(npt_test(noisy_tmsv(r, mu_star + 1e-6), {0}).violated);
        EXPECT_LT(npt_test(noisy_tmsv(r, mu_star + 1e-6), {0}).margin, 0.0);
    }
}

TEST(simon, examples) {
    EXPECT_TRUE(simon_test(two_mode_squeezed_vacuum(1.0)).violated);
    const auto vac = simon_test(GaussianState::vacuum(2));
    EXPECT_FALSE(vac.violated);
    EXPECT_NEAR(vac.lhs, 1.0 / 256 + 1.0 / 256, 1e-15);
    EXPECT_NEAR(vac.bound, 1.0 / 128, 1e-15);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        EXPECT_FALSE(simon_test({Vector::Zero(4), oracle::random_separable_two_mode(rng)}).violated);
    }
    EXPECT_THROW(simon_test(GaussianState::vacuum(3)), std::invalid_argument);
}

TEST(simon, agrees_with_npt_on_random_states) {
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> mix(0.0, 3.0);
    int compared = 0;
    int entangled = 0;
    for (int k = 0; k < 1000; ++k) {
        Matrix v = k % 3 == 0 ? oracle::random_separable_two_mode(rng) : oracle::random_covariance(2, rng, mix(rng), 0.6);
        const GaussianState s(Vector::Zero(4), v);
        ASSERT_TRUE(validate(s).ok());
        const auto simon = simon_test(s);
        const auto npt = npt_test(s, {0});
        if (std::abs(simon.margin) <= 1e-8 || std::abs(npt.margin) <= 1e-8) continue;
        ++compared;
        entangled += npt.violated;
        EXPECT_EQ(simon.violated, npt.violated) << "state " << k;
    }
    EXPECT_GT(compared, 950);
    EXPECT_GT(entangled, 100);
    EXPECT_LT(entangled, compared - 100);
}

TEST(duan, tmsv_sweep) {
    for (double r = 0.0; r <= 3.0; r += 0.125) {
        const auto rep = duan_test(two_mode_squeezed_vacuum(r));
        EXPECT_NEAR(rep.lhs, std::exp(-2 * r), 1e-12);
        EXPECT_EQ(rep.bound, 1.0);
        EXPECT_EQ(rep.violated, r > 0);
    }
}

TEST(duan, thermal_product_and_errors) {
    const auto thermal = tensor(GaussianState::thermal(0.7), GaussianState::thermal(1.1));
    for (double a : {0.5, 1.0, -2.0}) EXPECT_FALSE(duan_test(thermal, a).violated);
    // On diagonal covariances: a^2 (V_x1 + V_p1) + (V_x2 + V_p2)/a^2.
    const auto rep = duan_test(thermal, 0.5);
    EXPECT_NEAR(rep.lhs, 0.25 * (0.7 + 0.5) + 4 * (1.1 + 0.5), 1e-14);
    EXPECT_THROW(duan_test(thermal, 0.0), std::invalid_argument);
}

TEST(duan, implies_npt) {
    std::mt19937_64 rng(99);
    int hits = 0;
    for (int k = 0; k < 1000; ++k) {
        const GaussianState s(Vector::Zero(4), oracle::random_covariance(2, rng, 0.5, 0.7));
        for (double a : {0.7, 1.0, 1.6}) {
            if (duan_test(s, a).violated) {
                ++hits;
                EXPECT_TRUE(npt_test(s, {1}).violated);
            }
        }
    }
    EXPECT_GT(hits, 20);
}

TEST(tan, examples) {
    const auto t = tan_test(two_mode_squeezed_vacuum(1.0));
    EXPECT_NEAR(t.lhs, std::exp(-4.0) / 4, 1e-14);
    EXPECT_TRUE(t.violated);
    const auto vac = tan_test(GaussianState::vacuum(2));
    EXPECT_NEAR(vac.lhs, 0.25, 1e-15);
    EXPECT_FALSE(vac.violated);
    EXPECT_FALSE(tan_test(tensor(squeezed_vacuum(1.2), squeezed_vacuum(-0.4))).violated);
}

TEST(witness, two_mode_bound) {
    const Vector h = Eigen::Vector2d(1, -1);
    const Vector g = Eigen::Vector2d(1, 1);
    const auto rep = witness_linear(two_mode_squeezed_vacuum(0.4), h, g, fully_separable_partition(2));
    EXPECT_EQ(rep.bound, 1.0);
    EXPECT_NEAR(rep.lhs, std::exp(-0.8), 1e-14);
    EXPECT_THROW(witness_linear(GaussianState::vacuum(3), h, g, fully_separable_partition(3)), StructuralError);
    EXPECT_THROW(witness_linear(GaussianState::vacuum(2), h, g, Partition{{0}}), std::invalid_argument);
}

TEST(witness, fully_separable_vacuum_equality) {
    const Vector ones = Vector::Ones(3);
    const auto rep = witness_linear(GaussianState::vacuum(3), ones, ones, fully_separable_partition(3));
    EXPECT_NEAR(rep.lhs, 1.5, 1e-15);
    EXPECT_NEAR(rep.bound, 1.5, 1e-15);
    EXPECT_FALSE(rep.violated);
}

TEST(witness, partition_bounds) {
    const Vector h = Eigen::Vector3d(1, -1, 0);
    const Vector g = Eigen::Vector3d(1, 1, 1);
    const auto ghz = ghz_network(3, 0.8, 0.8);
    EXPECT_EQ(witness_linear(ghz, h, g, Partition{{0}, {1, 2}}).bound, 1.0);
    EXPECT_EQ(witness_linear(ghz, h, g, Partition{{1}, {0, 2}}).bound, 1.0);
    EXPECT_EQ(witness_linear(ghz, h, g, Partition{{2}, {0, 1}}).bound, 0.0);
}

TEST(classify, examples) {
    EXPECT_EQ(classify_three_mode(ghz_network(3, 0.8, 0.8)).cls, ThreeModeClass::fully_inseparable);
    EXPECT_EQ(classify_three_mode(GaussianState::vacuum(3)).cls, ThreeModeClass::biseparable_or_separable);
    const auto c = classify_three_mode(tensor(two_mode_squeezed_vacuum(0.5), GaussianState::vacuum(1)));
    EXPECT_EQ(c.cls, ThreeModeClass::one_mode_biseparable);
    EXPECT_TRUE(c.npt[0]);
    EXPECT_TRUE(c.npt[1]);
    EXPECT_FALSE(c.npt[2]);
    EXPECT_THROW(classify_three_mode(GaussianState::vacuum(2)), std::invalid_argument);
}

TEST(classify, relabeling) {
    std::mt19937_64 rng(3);
    std::vector<GaussianState> states = {ghz_network(3, 0.5, 1.1),
                                         tensor(two_mode_squeezed_vacuum(0.5), GaussianState::vacuum(1)),
                                         GaussianState::vacuum(3)};
    for (int k = 0; k < 20; ++k) states.emplace_back(Vector::Zero(6), oracle::random_covariance(3, rng, 1.5));
    std::array<Eigen::Index, 3> order = {0, 1, 2};
    for (const auto &s : states) {
        const auto base = classify_three_mode(s);
        do {
            const auto p = classify_three_mode(permute(s, order));
            EXPECT_EQ(p.cls, base.cls);
            for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(p.npt[m], base.npt[static_cast<std::size_t>(order[m])]);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST(log_negativity, tmsv_and_separable) {
    for (double r : {0.0, 0.3, 1.0, 2.5}) {
        EXPECT_NEAR(log_negativity(two_mode_squeezed_vacuum(r), {0}), 2 * r / std::numbers::ln2, 1e-9);
    }
    EXPECT_EQ(log_negativity(tensor(squeezed_vacuum(1.0), GaussianState::thermal(2.0)), {0}), 0.0);
}

TEST(log_negativity, monotone_in_r) {
    double prev = 0.0;
    for (double r = 0.0; r <= 3.0; r += 0.05) {
        const double e = log_negativity(two_mode_squeezed_vacuum(r), {1});
        EXPECT_GE(e, prev - 1e-12);
        prev = e;
    }
}

TEST(log_negativity, local_gate_invariance) {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 50; ++k) {
        const GaussianState s(Vector::Zero(4), oracle::random_covariance(2, rng, 0.5));
        const double before = log_negativity(s, {0});
        EXPECT_NEAR(log_negativity(random_local_gates(s, rng), {0}), before, 1e-9);
    }
}

TEST(symplectic_eigenvalues, thermal_and_tmsv) {
    const auto nu = symplectic_eigenvalues(tensor(GaussianState::thermal(1.0), GaussianState::thermal(3.0)).cov());
    EXPECT_NEAR(nu(0), 0.75, 1e-12);
    EXPECT_NEAR(nu(1), 1.75, 1e-12);
    const auto pure = symplectic_eigenvalues(tmsv_covariance(1.4));
    EXPECT_NEAR(pure(0), 0.25, 1e-12);
    EXPECT_NEAR(pure(1), 0.25, 1e-12);
}

TEST(entropy, closed_forms) {
    EXPECT_EQ(entropy_tmsv(0.0), 0.0);
    EXPECT_EQ(qunat_entropy(0.0), 0.0);
    EXPECT_NEAR(qunat_entropy(1.151), 2.607, 1e-3);
    EXPECT_NEAR(qunat_entropy(1.151, LogBase::two), qunat_entropy(1.151) / std::numbers::ln2, 1e-15);
    EXPECT_THROW(entropy_tmsv(-0.1), std::invalid_argument);
    EXPECT_THROW(thermal_entropy(-1.0), std::invalid_argument);
}

TEST(entropy, cosh_form_equals_occupation_form_and_covariance_entropy) {
    for (double r : {0.1, 0.6, 1.151, 2.0}) {
        const double nbar = std::sinh(r) * std::sinh(r);
        const double closed = entropy_tmsv(r);
        EXPECT_NEAR(closed, thermal_entropy(nbar), 1e-12);
        const auto reduced = partial_trace(two_mode_squeezed_vacuum(r), {1});
        EXPECT_NEAR(von_neumann_entropy(reduced), closed, 1e-10);
    }
    // The resource counted with nbar = e^r sinh r corresponds to a TMSV of squeezing rho with
    // sinh^2 rho = e^r sinh r.
    const double r = 1.151;
    const double rho = std::asinh(std::sqrt(std::exp(r) * std::sinh(r)));
    EXPECT_NEAR(entropy_tmsv(rho), qunat_entropy(r), 1e-12);
}
