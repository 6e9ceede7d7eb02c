#pragma once

// Independent irreducibility decision for small modules. It searches for an
// explicit invariant subspace among cyclic submodules A v (A the unital algebra
// generated by the representation), for v running over coordinate vectors and
// kernels of A's basis elements, commutant elements and their rational
// eigen-shifts, plus the submodule J V for the trace radical J of A. Without a
// witness, irreducibility is certified by J = 0 and a one-dimensional
// commutant. Nothing here calls algebra_closure or intertwiners.

#include "tca/liecore.hpp"
#include "tca/subspace.hpp"

#include <optional>
#include <set>
#include <string>

namespace tca::testing {

enum class OracleVerdict { reducible, irreducible, not_absolutely_irreducible };

struct OracleResult {
    OracleVerdict verdict;
    std::optional<Subspace> witness; // a proper nonzero invariant subspace
    std::size_t algebra_dim = 0;
    std::size_t commutant_dim = 0;
    std::size_t radical_dim = 0;
};

namespace oracle_detail {

inline std::vector<Matrix> unital_algebra(const std::vector<Matrix>& gens, const FieldPtr& f, std::size_t d)
{
    std::vector<Matrix> basis{Matrix::identity(f, d)};
    std::vector<Vec> flat{basis.front().flatten()};
    for (std::size_t next = 0; next < basis.size(); ++next) {
        for (const auto& g : gens) {
            Matrix cand = g * basis[next];
            std::vector<Vec> trial = flat;
            trial.push_back(cand.flatten());
            if (rank(Matrix::from_rows(f, trial, d * d)) > flat.size()) {
                flat.push_back(cand.flatten());
                basis.push_back(std::move(cand));
            }
        }
    }
    return basis;
}

inline Subspace cyclic(const std::vector<Matrix>& alg, const Vec& v, const FieldPtr& f, std::size_t d)
{
    std::vector<Vec> images;
    for (const auto& a : alg) {
        images.push_back(a.apply(v));
    }
    return Subspace::span(f, d, images);
}

inline bool invariant(const std::vector<Matrix>& gens, const Subspace& w)
{
    for (const auto& g : gens) {
        for (const auto& v : w.basis_vectors()) {
            if (!w.contains(g.apply(v))) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<Matrix> commutant(const std::vector<Matrix>& gens, const FieldPtr& f, std::size_t d)
{
    // X g - g X = 0, unknown X(r, c) at r * d + c.
    std::vector<Vec> rows;
    for (const auto& g : gens) {
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                Vec row = zero_vector(f, d * d);
                for (std::size_t s = 0; s < d; ++s) {
                    row[r * d + s] += g(s, c);
                    row[s * d + c] -= g(r, s);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    std::vector<Matrix> out;
    if (rows.empty()) {
        for (std::size_t k = 0; k < d * d; ++k) {
            out.push_back(Matrix::unflatten(f, d, d, unit_vector(f, d * d, k)));
        }
        return out;
    }
    for (const auto& v : kernel(Matrix::from_rows(f, rows, d * d)).basis_vectors()) {
        out.push_back(Matrix::unflatten(f, d, d, v));
    }
    return out;
}

// Rational roots of the minimal polynomial of a over Q (degree-one fields only).
inline std::vector<Cyc> rational_eigenvalues(const Matrix& a)
{
    const FieldPtr& f = a.field();
    const std::size_t d = a.rows();
    std::vector<Cyc> out;
    if (f->degree() != 1 || d == 0) {
        return out;
    }
    std::vector<Vec> powers{Matrix::identity(f, d).flatten()};
    Matrix p = a;
    std::vector<mpq_class> poly;
    for (std::size_t k = 1; k <= d; ++k) {
        const Subspace s = Subspace::span(f, d * d, powers);
        const Vec pv = p.flatten();
        if (s.dim() == powers.size() && s.contains(pv)) {
            // a^k = sum c_i a^i with coefficients solved from the independent powers.
            const Matrix m = Matrix::from_columns(f, powers, d * d);
            const Vec c = solve(m, pv).value();
            for (const auto& x : c) {
                poly.push_back(-x.coeffs()[0]);
            }
            poly.emplace_back(1);
            break;
        }
        powers.push_back(pv);
        p = p * a;
    }
    if (poly.empty()) {
        return out;
    }
    // Clear denominators, then try +-p/q with p | a_0, q | a_n.
    mpz_class l = 1;
    for (const auto& c : poly) {
        l = lcm(l, c.get_den());
    }
    std::vector<mpz_class> ints;
    for (const auto& c : poly) {
        ints.push_back(mpz_class(c * l));
    }
    std::size_t low = 0;
    while (ints[low] == 0) {
        ++low;
    }
    std::set<mpq_class> roots;
    if (low > 0) {
        roots.insert(0);
    }
    auto divisors = [](mpz_class n) {
        n = abs(n);
        std::vector<mpz_class> ds;
        for (mpz_class k = 1; k * k <= n; ++k) {
            if (n % k == 0) {
                ds.push_back(k);
                ds.push_back(n / k);
            }
        }
        return ds;
    };
    for (const auto& num : divisors(ints[low])) {
        for (const auto& den : divisors(ints.back())) {
            for (int sign : {1, -1}) {
                mpq_class r(sign * num, den);
                r.canonicalize();
                mpq_class val = 0;
                for (std::size_t i = ints.size(); i-- > 0;) {
                    val = val * r + ints[i];
                }
                if (val == 0) {
                    roots.insert(r);
                }
            }
        }
    }
    for (const auto& r : roots) {
        out.emplace_back(f, r);
    }
    return out;
}

} // namespace oracle_detail

inline OracleResult irreducibility_oracle(const LieRep& rep)
{
    using namespace oracle_detail;
    const FieldPtr& f = rep.algebra()->field();
    const std::size_t d = rep.dim();
    const auto& gens = rep.matrices();
    const auto alg = unital_algebra(gens, f, d);
    const auto comm = commutant(gens, f, d);
    OracleResult out{OracleVerdict::irreducible, std::nullopt, alg.size(), comm.size(), 0};

    auto proper = [&](const Subspace& w) { return w.dim() > 0 && w.dim() < d; };
    auto accept = [&](const Subspace& w) {
        if (proper(w) && invariant(gens, w)) {
            out.verdict = OracleVerdict::reducible;
            out.witness = w;
            return true;
        }
        return false;
    };

    // Trace radical: a with tr(a b) = 0 for all b in A.
    Matrix gram(f, alg.size(), alg.size());
    for (std::size_t i = 0; i < alg.size(); ++i) {
        for (std::size_t j = 0; j < alg.size(); ++j) {
            gram(i, j) = (alg[i] * alg[j]).trace();
        }
    }
    const Subspace rad = kernel(gram);
    out.radical_dim = rad.dim();
    std::vector<Vec> jv;
    for (const auto& c : rad.basis_vectors()) {
        Matrix a(f, d, d);
        for (std::size_t i = 0; i < alg.size(); ++i) {
            a = a + alg[i].scaled(c[i]);
        }
        for (std::size_t k = 0; k < d; ++k) {
            jv.push_back(a.column(k));
        }
    }
    if (!jv.empty() && accept(Subspace::span(f, d, jv))) {
        return out;
    }

    std::vector<Vec> candidates;
    for (std::size_t k = 0; k < d; ++k) {
        candidates.push_back(unit_vector(f, d, k));
    }
    auto add_kernel = [&](const Matrix& m) {
        if (m.is_zero()) {
            return;
        }
        for (const auto& v : kernel(m).basis_vectors()) {
            candidates.push_back(v);
        }
    };
    std::vector<Matrix> probes = alg;
    probes.insert(probes.end(), gens.begin(), gens.end());
    for (const auto& m : probes) {
        add_kernel(m);
        for (const auto& mu : rational_eigenvalues(m)) {
            add_kernel(m - Matrix::identity(f, d).scaled(mu));
        }
    }
    for (const auto& c : comm) {
        // Kernels of commutant elements are submodules outright.
        if (!c.is_zero() && accept(kernel(c))) {
            return out;
        }
        for (const auto& mu : rational_eigenvalues(c)) {
            const Matrix shifted = c - Matrix::identity(f, d).scaled(mu);
            if (!shifted.is_zero() && accept(kernel(shifted))) {
                return out;
            }
        }
    }
    for (const auto& v : candidates) {
        if (accept(cyclic(alg, v, f, d))) {
            return out;
        }
    }
    out.verdict = rad.dim() == 0 && comm.size() == 1 ? OracleVerdict::irreducible : OracleVerdict::not_absolutely_irreducible;
    return out;
}

inline std::string to_string(OracleVerdict v)
{
    switch (v) {
    case OracleVerdict::reducible:
        return "reducible";
    case OracleVerdict::irreducible:
        return "irreducible";
    case OracleVerdict::not_absolutely_irreducible:
        break;
    }
    return "not absolutely irreducible";
}

} // namespace tca::testing
