#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing in
// here calls the elimination routines it is used to check.

#include "tca/cyclotomic.hpp"
#include "tca/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace tca::testing {

inline Cyc random_scalar(const FieldPtr& f, std::mt19937& rng, int range = 3)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<mpq_class> c(f->degree());
    for (auto& x : c) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
    }
    return Cyc(f, std::move(c));
}

inline Matrix random_matrix(const FieldPtr& f, std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 3)
{
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = random_scalar(f, rng, range);
        }
    }
    return m;
}

/// Leibniz expansion over all permutations.
inline Cyc leibniz_determinant(const Matrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Cyc total(m.field());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Cyc term(m.field(), inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) {
            term *= m(i, perm[i]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

/// Largest k with a nonzero k x k minor, by exhaustive enumeration.
inline std::size_t minor_rank(const Matrix& m)
{
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::size_t> rs(k), cs(k);
        std::iota(rs.begin(), rs.end(), 0);
        do {
            std::iota(cs.begin(), cs.end(), 0);
            do {
                Matrix sub(m.field(), k, k);
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        sub(i, j) = m(rs[i], cs[j]);
                    }
                }
                if (!leibniz_determinant(sub).is_zero()) {
                    return k;
                }
            } while (next_combination(cs, m.cols()));
        } while (next_combination(rs, m.rows()));
    }
    return 0;
}

inline Matrix int_matrix(const FieldPtr& f, const std::vector<std::vector<long>>& rows)
{
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m(r, c) = Cyc(f, rows[r][c]);
        }
    }
    return m;
}

inline Vec int_vector(const FieldPtr& f, const std::vector<long>& xs)
{
    Vec v;
    for (long x : xs) {
        v.emplace_back(f, x);
    }
    return v;
}

} // namespace tca::testing
