#pragma once

// Random finite group actions on sl2 (x) k^n for property tests and the
// acceptance suite. The base group is generated by elements D (x) pi, D in the
// dihedral group <Ad diag(z^a, 1), omega> of sl2 and pi a permutation of the
// points; it is finite by construction. Conjugating by a random point-wise
// Ad(g_j) makes the action genuinely twisted (u not a permutation matrix).

#include "tca/errors.hpp"
#include "tca/twistact.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>

namespace tca::testing {

/// x -> a x a^-1 on sl2 in the basis (e, f, h).
inline Matrix ad_conjugation(const Matrix& a)
{
    const auto f = a.field();
    const Matrix ai = inverse(a);
    const auto basis = sl_defining_matrices(f, 2);
    Matrix out(f, 3, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        const Matrix y = a * basis[k] * ai;
        out.set_column(k, Vec{y(0, 1), y(1, 0), y(0, 0)});
    }
    return out;
}

inline Matrix pointwise_block(const std::vector<Matrix>& per_point)
{
    const auto f = per_point.front().field();
    const std::size_t n = per_point.size(), d = per_point.front().rows();
    Matrix u(f, d * n, d * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                u(i * n + j, k * n + j) = per_point[j](i, k);
            }
        }
    }
    return u;
}

struct RandomActionOptions {
    unsigned conductor = 12;
    std::size_t max_points = 3;
    std::size_t max_order = 48;
    std::size_t max_generators = 2;
};

inline ActionPtr random_twisted_action(std::mt19937& rng, const RandomActionOptions& opt = {})
{
    const auto f = CyclotomicField::make(opt.conductor);
    auto g = std::make_shared<const LieAlgebra>(build_sl(f, 2));
    std::uniform_int_distribution<std::size_t> npts(1, opt.max_points), ngen(1, opt.max_generators);
    std::uniform_int_distribution<long> expo(0, static_cast<long>(opt.conductor) - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        const std::size_t n = npts(rng);
        std::vector<Matrix> gens;
        const std::size_t k = ngen(rng);
        for (std::size_t q = 0; q < k; ++q) {
            Matrix t = Matrix::identity(f, 2);
            t(0, 0) = Cyc::zeta(f, expo(rng));
            Matrix d = ad_conjugation(t);
            if (coin(rng)) {
                d = d * chevalley_involution(f);
            }
            Permutation pi(n);
            for (std::size_t j = 0; j < n; ++j) {
                pi[j] = j;
            }
            std::shuffle(pi.begin(), pi.end(), rng);
            gens.push_back(kron(d, scalar_action_matrix(f, pi)));
        }
        // a = [[1, x], [0, 1]] [[1, 0], [y, 1]] with x, y of the form c z^k keeps
        // the entries integral and small.
        std::uniform_int_distribution<long> small(-2, 2);
        auto monomial = [&] { return Cyc::zeta(f, expo(rng)) * Cyc(f, small(rng)); };
        std::vector<Matrix> per_point;
        for (std::size_t j = 0; j < n; ++j) {
            Matrix upper = Matrix::identity(f, 2), lower = Matrix::identity(f, 2);
            upper(0, 1) = monomial();
            lower(1, 0) = monomial();
            per_point.push_back(ad_conjugation(upper * lower));
        }
        const Matrix u = pointwise_block(per_point);
        const Matrix ui = inverse(u);
        for (auto& m : gens) {
            m = u * m * ui;
        }
        try {
            return build_action(g, SiteAlgebra(f, n), gens, opt.max_order);
        } catch (const InputError&) {
            // Group too large for a quick test; draw again.
        }
    }
}

} // namespace tca::testing
