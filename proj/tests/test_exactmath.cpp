#include "test_support.hpp"

#include "tca/errors.hpp"
#include "tca/subspace.hpp"

#include <doctest.h>

#include <cmath>

using namespace tca;
using namespace tca::testing;

TEST_CASE("cyclotomic polynomials")
{
    // Phi_12 = x^4 - x^2 + 1
    const auto p12 = cyclotomic_polynomial(12);
    REQUIRE(p12.size() == 5);
    CHECK(p12[0] == 1);
    CHECK(p12[1] == 0);
    CHECK(p12[2] == -1);
    CHECK(p12[3] == 0);
    CHECK(p12[4] == 1);
    for (unsigned n = 1; n <= 30; ++n) {
        CHECK(cyclotomic_polynomial(n).size() - 1 == euler_phi(n));
    }
}

TEST_CASE("scalar arithmetic examples")
{
    const auto f4 = CyclotomicField::make(4);
    const Cyc z = Cyc::zeta(f4);
    const Cyc one(f4, 1);
    CHECK(z * z == Cyc(f4, -1));
    CHECK((one + z) * (one - z) == Cyc(f4, 2));

    const auto f1 = CyclotomicField::make(1);
    CHECK(Cyc(f1, mpq_class(3, 2)) + Cyc(f1, mpq_class(1, 2)) == Cyc(f1, 2));

    CHECK_THROWS_AS(one / Cyc(f4), DivisionByZero);
    const auto f3 = CyclotomicField::make(3);
    CHECK_THROWS_AS(one + Cyc(f3, 1), FieldMismatch);
}

TEST_CASE("roots of unity")
{
    for (unsigned n : {1u, 2u, 3u, 5u, 7u, 8u, 12u, 15u}) {
        const auto f = CyclotomicField::make(n);
        const Cyc z = Cyc::zeta(f);
        Cyc p(f, 1);
        for (unsigned k = 0; k < n; ++k) {
            if (k > 0) {
                CHECK_FALSE(p.is_one());
            }
            p *= z;
        }
        CHECK(p.is_one());
        CHECK(z.inverse() == Cyc::zeta(f, -1));
        // 1 + z + ... + z^(n-1) = 0 for n > 1
        Cyc s(f);
        for (unsigned k = 0; k < n; ++k) {
            s += Cyc::zeta(f, k);
        }
        CHECK(s.is_zero() == (n > 1));
    }
}

TEST_CASE("field axioms on random scalars")
{
    std::mt19937 rng(17);
    for (unsigned n : {1u, 4u, 5u, 12u}) {
        const auto f = CyclotomicField::make(n);
        for (int trial = 0; trial < 40; ++trial) {
            const Cyc a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!b.is_zero()) {
                CHECK((a / b) * b == a);
                CHECK(b * b.inverse() == Cyc(f, 1));
            }
        }
    }
}

TEST_CASE("scalar grammar")
{
    const auto f4 = CyclotomicField::make(4);
    CHECK(Cyc::parse(f4, "z^2") == Cyc(f4, -1));
    CHECK(Cyc::parse(f4, "1/2*z^2 - 3") == Cyc(f4, mpq_class(-7, 2)));
    CHECK(Cyc::parse(f4, "-(1+z)^2") == Cyc(f4, -2) * Cyc::zeta(f4));
    CHECK(Cyc::parse(f4, "z^-1") == -Cyc::zeta(f4));
    CHECK(Cyc::parse(f4, " 7 ") == Cyc(f4, 7));
    CHECK_THROWS_AS(Cyc::parse(f4, "1 +"), InputError);
    CHECK_THROWS_AS(Cyc::parse(f4, "x"), InputError);
    CHECK_THROWS_AS(Cyc::parse(f4, "1/0"), InputError);
    CHECK_THROWS_WITH_AS(Cyc::parse(f4, "2 * q"), doctest::Contains("column 5"), InputError);

    std::mt19937 rng(5);
    for (unsigned n : {1u, 3u, 12u}) {
        const auto f = CyclotomicField::make(n);
        for (int trial = 0; trial < 30; ++trial) {
            const Cyc a = random_scalar(f, rng);
            CHECK(Cyc::parse(f, a.to_string()) == a);
        }
    }
    CHECK(Cyc(f4, std::vector<mpq_class>{-3, mpq_class(1, 2)}).to_string() == "1/2*z - 3");
}

TEST_CASE("kernel examples")
{
    const auto f = CyclotomicField::make(1);
    CHECK(kernel(Matrix::identity(f, 3)).is_zero());

    const Subspace k = kernel(int_matrix(f, {{1, 1}, {1, 1}}));
    CHECK(k == Subspace::span(f, 2, {int_vector(f, {1, -1})}));

    // Rank 3 by construction: two rows are combinations of the others.
    std::mt19937 rng(99);
    const auto f12 = CyclotomicField::make(12);
    const Matrix base = random_matrix(f12, rng, 3, 5);
    Matrix m(f12, 5, 5);
    for (std::size_t r = 0; r < 3; ++r) {
        m.set_row(r, base.row(r));
    }
    m.set_row(3, base.row(0) + scale(Cyc::zeta(f12), base.row(1)));
    m.set_row(4, base.row(2) - base.row(1));
    CHECK(minor_rank(m) == 3);
    const Subspace ker = kernel(m);
    CHECK(ker.dim() == 2);
    for (const auto& v : ker.basis_vectors()) {
        CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("rank-nullity and determinant agree with brute force")
{
    std::mt19937 rng(3);
    const auto f = CyclotomicField::make(5);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        Matrix m = random_matrix(f, rng, r, c, 1);
        if (trial % 3 == 0 && r > 1) {
            m.set_row(r - 1, m.row(0));
        }
        CHECK(kernel(m).dim() + rank(m) == c);
        CHECK(rank(m) == minor_rank(m));
        if (r == c) {
            CHECK(determinant(m) == leibniz_determinant(m));
        }
    }
}

TEST_CASE("inverse and solve")
{
    std::mt19937 rng(8);
    const auto f = CyclotomicField::make(12);
    const Matrix m = random_matrix(f, rng, 4, 4);
    REQUIRE_FALSE(determinant(m).is_zero());
    CHECK((m * inverse(m)).is_identity());
    const Vec b = random_matrix(f, rng, 4, 1).column(0);
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
    CHECK_THROWS_AS(inverse(int_matrix(CyclotomicField::make(1), {{1, 2}, {2, 4}})), InputError);
    CHECK_FALSE(solve(int_matrix(CyclotomicField::make(1), {{1, 1}, {1, 1}}),
                      int_vector(CyclotomicField::make(1), {1, 2}))
                    .has_value());
}

TEST_CASE("subspace operations")
{
    const auto f = CyclotomicField::make(1);
    const Subspace emf = Subspace::span(f, 3, {int_vector(f, {1, -1, 0})});
    const Subspace epf = Subspace::span(f, 3, {int_vector(f, {1, 1, 0})});
    CHECK(emf.intersect(epf).is_zero());
    CHECK((emf + epf) == Subspace::coordinate(f, 3, {0, 1}));
    const Subspace zero(f, 3);
    CHECK(emf + zero == emf);
    CHECK(emf == emf);
    CHECK_THROWS_AS(emf + Subspace(f, 2), InputError);
    CHECK(Subspace::full(f, 3).contains(emf));
    CHECK_FALSE(emf.contains(epf));
    CHECK(emf.coordinates(int_vector(f, {-2, 2, 0})) == int_vector(f, {-2}));
    CHECK_THROWS_AS(emf.coordinates(int_vector(f, {1, 0, 0})), InputError);
}

TEST_CASE("subspace equality matches mutual containment")
{
    std::mt19937 rng(21);
    const auto f = CyclotomicField::make(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(f, rng, 2, 4, 1);
        // Same span, different generators.
        Matrix b(f, 2, 4);
        b.set_row(0, a.row(0) + a.row(1));
        b.set_row(1, a.row(0) - scale(Cyc::zeta(f), a.row(1)));
        const Subspace sa = Subspace::row_space(a), sb = Subspace::row_space(b);
        CHECK(sa == sb);
        CHECK((sa.contains(sb) && sb.contains(sa)));
        const Subspace sc = Subspace::row_space(random_matrix(f, rng, 2, 4, 1));
        CHECK((sa == sc) == (sa.contains(sc) && sc.contains(sa)));
        CHECK(sa.intersect(sc).dim() + (sa + sc).dim() == sa.dim() + sc.dim());
    }
}

TEST_CASE("algebra closure")
{
    const auto f = CyclotomicField::make(1);
    CHECK(algebra_closure({Matrix::identity(f, 3)}, false).dim() == 1);

    const Matrix e = int_matrix(f, {{0, 1}, {0, 0}});
    const Matrix fm = int_matrix(f, {{0, 0}, {1, 0}});
    const Matrix h = int_matrix(f, {{1, 0}, {0, -1}});
    CHECK(algebra_closure({e, fm, h}, true).dim() == 4);

    const Matrix d1 = int_matrix(f, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    const Matrix d2 = int_matrix(f, {{5, 0, 0}, {0, 5, 0}, {0, 0, 7}});
    const Subspace diag = algebra_closure({d1, d2}, true);
    CHECK(diag.dim() == 3);

    // Idempotent: closing the closure gives the same subspace.
    for (const Subspace& s : {diag, algebra_closure({e, h}, true)}) {
        std::vector<Matrix> basis;
        for (const auto& v : s.basis_vectors()) {
            const std::size_t d = static_cast<std::size_t>(std::lround(std::sqrt(double(v.size()))));
            basis.push_back(Matrix::unflatten(f, d, d, v));
        }
        CHECK(algebra_closure(basis, true) == s);
    }
}
