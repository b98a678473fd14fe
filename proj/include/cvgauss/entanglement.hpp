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

#ifndef CVGAUSS_ENTANGLEMENT_HPP
#define CVGAUSS_ENTANGLEMENT_HPP

#include <array>

#include "cvgauss/criterion.hpp"
#include "cvgauss/ops.hpp"

namespace cvgauss {

/// Momentum sign flip on the listed modes (time reversal). The result may be unphysical.
inline GaussianState partial_transpose(const GaussianState &state, std::span<const std::size_t> modes) {
    if (modes.empty()) {
        throw std::invalid_argument("partial_transpose needs at least one mode");
    }
    const auto dim = static_cast<Eigen::Index>(2 * state.n_modes());
    Vector flip = Vector::Ones(dim);
    for (auto m : modes) {
        check_mode(m, state.n_modes());
        flip(static_cast<Eigen::Index>(2 * m + 1)) = -1.0;
    }
    const auto gamma = flip.asDiagonal();
    return {gamma * state.mean(), gamma * state.cov() * gamma};
}

inline GaussianState partial_transpose(const GaussianState &state, std::initializer_list<std::size_t> modes) {
    std::vector<std::size_t> m(modes);
    return partial_transpose(state, std::span<const std::size_t>(m));
}

/// Peres-Horodecki test: the partial transpose over `party` violating the uncertainty
/// relation witnesses entanglement across party | rest.
inline CriterionReport npt_test(const GaussianState &state, std::span<const std::size_t> party) {
    const double min_eig = min_uncertainty_eigenvalue(partial_transpose(state, party).cov());
    return make_report("npt", min_eig, 0.0, tol::psd);
}

inline CriterionReport npt_test(const GaussianState &state, std::initializer_list<std::size_t> party) {
    std::vector<std::size_t> p(party);
    return npt_test(state, std::span<const std::size_t>(p));
}

namespace detail {

inline void require_two_modes(const GaussianState &state, const char *what) {
    if (state.n_modes() != 2) {
        throw std::invalid_argument(std::string(what) + " needs a two-mode state");
    }
}

inline Eigen::Matrix2d j2() {
    Eigen::Matrix2d j;
    j << 0, 1, -1, 0;
    return j;
}

/// Variance of sum_k (h_k x_k) and of sum_k (g_k p_k).
inline std::pair<double, double> combination_variances(const Matrix &cov, const Vector &h, const Vector &g) {
    const auto n = h.size();
    Vector hx = Vector::Zero(2 * n);
    Vector gp = Vector::Zero(2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        hx(2 * k) = h(k);
        gp(2 * k + 1) = g(k);
    }
    return {hx.dot(cov * hx), gp.dot(cov * gp)};
}

}  // namespace detail

/// Simon's two-mode criterion, separable states obey
/// det A det B + (1/16 - |det C|)^2 - Tr(AJCJBJC^T J) >= (det A + det B)/16.
inline CriterionReport simon_test(const GaussianState &state) {
    detail::require_two_modes(state, "simon_test");
    const Eigen::Matrix2d a = state.cov().block<2, 2>(0, 0);
    const Eigen::Matrix2d b = state.cov().block<2, 2>(2, 2);
    const Eigen::Matrix2d c = state.cov().block<2, 2>(0, 2);
    const Eigen::Matrix2d j = detail::j2();
    const double da = a.determinant();
    const double db = b.determinant();
    const double gap = 1.0 / 16.0 - std::abs(c.determinant());
    const double lhs = da * db + gap * gap - (a * j * c * j * b * j * c.transpose() * j).trace();
    return make_report("simon", lhs, (da + db) / 16.0);
}

/// Duan sum criterion with u = |a| x1 - x2/a and v = |a| p1 + p2/a.
inline CriterionReport duan_test(const GaussianState &state, double abar = 1.0) {
    detail::require_two_modes(state, "duan_test");
    if (abar == 0.0 || !std::isfinite(abar)) {
        throw std::invalid_argument("duan_test needs a finite nonzero parameter");
    }
    const Vector h = Eigen::Vector2d(std::abs(abar), -1.0 / abar);
    const Vector g = Eigen::Vector2d(std::abs(abar), 1.0 / abar);
    const auto [vu, vv] = detail::combination_variances(state.cov(), h, g);
    return make_report("duan", vu + vv, 0.5 * abar * abar + 0.5 / (abar * abar));
}

/// Product form of the Duan criterion with a = 1: Var(x1 - x2) Var(p1 + p2) >= 1/4.
inline CriterionReport tan_test(const GaussianState &state) {
    detail::require_two_modes(state, "tan_test");
    const auto [vu, vv] =
        detail::combination_variances(state.cov(), Eigen::Vector2d(1.0, -1.0), Eigen::Vector2d(1.0, 1.0));
    return make_report("tan", vu * vv, 0.25);
}

using Partition = std::vector<std::vector<std::size_t>>;

inline Partition fully_separable_partition(std::size_t n_modes) {
    Partition p;
    for (std::size_t k = 0; k < n_modes; ++k) p.push_back({k});
    return p;
}

/// Variance witness Var(sum h_k x_k) + Var(sum g_k p_k) >= sum_groups |sum_{k in group} h_k g_k| / 2,
/// which holds for every state that is a mixture of products over the groups of `partition`.
/// Singleton groups give the fully separable bound; {k,m},{n} gives the bound for states
/// where mode n factorizes.
inline CriterionReport witness_linear(const GaussianState &state, const Vector &h, const Vector &g,
                                      const Partition &partition) {
    const auto n = static_cast<Eigen::Index>(state.n_modes());
    if (h.size() != n || g.size() != n) {
        throw StructuralError("witness coefficient vectors must have one entry per mode");
    }
    std::vector<int> covered(state.n_modes(), 0);
    double bound = 0.0;
    for (const auto &group : partition) {
        double s = 0.0;
        for (auto k : group) {
            check_mode(k, state.n_modes());
            ++covered[k];
            s += h(static_cast<Eigen::Index>(k)) * g(static_cast<Eigen::Index>(k));
        }
        bound += std::abs(s);
    }
    if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) {
        throw std::invalid_argument("partition must cover every mode exactly once");
    }
    const auto [vu, vv] = detail::combination_variances(state.cov(), h, g);
    return make_report("witness_linear", vu + vv, 0.5 * bound);
}

enum class ThreeModeClass {
    fully_inseparable = 1,
    one_mode_biseparable = 2,
    two_mode_biseparable = 3,
    biseparable_or_separable = 45,  // classes 4 and 5 are not distinguished by partial transposition
};

struct ThreeModeClassification {
    ThreeModeClass cls;
    std::array<bool, 3> npt;  // npt[k]: transpose of mode k alone is unphysical
};

inline ThreeModeClassification classify_three_mode(const GaussianState &state) {
    if (state.n_modes() != 3) {
        throw std::invalid_argument("classify_three_mode needs a three-mode state");
    }
    ThreeModeClassification out{};
    int ppt_count = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        out.npt[k] = npt_test(state, {k}).violated;
        if (!out.npt[k]) ++ppt_count;
    }
    switch (ppt_count) {
        case 0: out.cls = ThreeModeClass::fully_inseparable; break;
        case 1: out.cls = ThreeModeClass::one_mode_biseparable; break;
        case 2: out.cls = ThreeModeClass::two_mode_biseparable; break;
        default: out.cls = ThreeModeClass::biseparable_or_separable; break;
    }
    return out;
}

/// Symplectic eigenvalues (ascending, one per mode): absolute spectrum of i Lambda V.
inline Vector symplectic_eigenvalues(const Matrix &cov) {
    const auto n = static_cast<std::size_t>(cov.rows() / 2);
    const Matrix lambda = symplectic_form(n);
    // i Lambda V is Hermitian-similar; its eigenvalues are real and come in +/- pairs.
    Eigen::EigenSolver<Matrix> solver(lambda * cov, false);
    std::vector<double> mags;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        mags.push_back(std::abs(solver.eigenvalues()(k)));
    }
    std::sort(mags.begin(), mags.end());
    Vector nu(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        nu(static_cast<Eigen::Index>(k)) = 0.5 * (mags[2 * k] + mags[2 * k + 1]);
    }
    return nu;
}

/// Logarithmic negativity (base 2) across party | rest.
inline double log_negativity(const GaussianState &state, std::span<const std::size_t> party) {
    const Vector nu = symplectic_eigenvalues(partial_transpose(state, party).cov());
    double total = 0.0;
    for (Eigen::Index k = 0; k < nu.size(); ++k) {
        total += std::max(0.0, -std::log2(nu(k) / kVacuumVariance));
    }
    return total;
}

inline double log_negativity(const GaussianState &state, std::initializer_list<std::size_t> party) {
    std::vector<std::size_t> p(party);
    return log_negativity(state, std::span<const std::size_t>(p));
}

/// Entropy (nats) of a thermal distribution with mean occupation nbar: (1+n)ln(1+n) - n ln n.
inline double thermal_entropy(double nbar) {
    if (nbar < 0.0) {
        throw std::invalid_argument("thermal_entropy needs nbar >= 0");
    }
    if (nbar == 0.0) return 0.0;
    return (1.0 + nbar) * std::log1p(nbar) - nbar * std::log(nbar);
}

/// Von Neumann entropy (nats) of a Gaussian state from its symplectic spectrum.
inline double von_neumann_entropy(const GaussianState &state) {
    const Vector nu = symplectic_eigenvalues(state.cov());
    double s = 0.0;
    for (Eigen::Index k = 0; k < nu.size(); ++k) {
        s += thermal_entropy(std::max(0.0, 2.0 * nu(k) - 0.5));
    }
    return s;
}

enum class LogBase { natural, two };

/// Entanglement entropy of the two-mode squeezed vacuum,
/// cosh^2 r ln cosh^2 r - sinh^2 r ln sinh^2 r.
inline double entropy_tmsv(double r, LogBase base = LogBase::natural) {
    if (!(r >= 0.0)) {
        throw std::invalid_argument("entropy_tmsv needs r >= 0");
    }
    const double c2 = std::cosh(r) * std::cosh(r);
    const double s2 = std::sinh(r) * std::sinh(r);
    const double nats = s2 == 0.0 ? 0.0 : c2 * std::log(c2) - s2 * std::log(s2);
    return base == LogBase::natural ? nats : nats / std::numbers::ln2;
}

/// Qunat count of the entangled resource made from two e^-r squeezed vacua, counted with
/// nbar = e^r sinh r photons per mode (e.g. 2.607 qunats for 10 dB, r = 1.151).
inline double qunat_entropy(double r, LogBase base = LogBase::natural) {
    if (!(r >= 0.0)) {
        throw std::invalid_argument("qunat_entropy needs r >= 0");
    }
    const double nats = thermal_entropy(std::exp(r) * std::sinh(r));
    return base == LogBase::natural ? nats : nats / std::numbers::ln2;
}

}  // namespace cvgauss

#endif
