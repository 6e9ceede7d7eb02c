#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tca {

class CyclotomicField;
using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// The cyclotomic field Q(z), z a primitive N-th root of unity, presented in
/// the power basis 1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic
/// polynomial.
class CyclotomicField {
public:
    static FieldPtr make(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    std::size_t degree() const { return modulus_.size() - 1; }

    /// Coefficients of Phi_N, lowest degree first. Monic.
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    /// Power-basis coordinates of z^k for phi(N) <= k <= 2 phi(N) - 2.
    const std::vector<mpz_class>& reduced_power(std::size_t k) const
    {
        return high_powers_[k - degree()];
    }

private:
    explicit CyclotomicField(unsigned conductor);

    unsigned conductor_;
    std::vector<mpz_class> modulus_;
    std::vector<std::vector<mpz_class>> high_powers_;
};

/// Integer polynomial Phi_n, lowest degree first.
std::vector<mpz_class> cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// Element of Q(zeta_N). Always fully reduced, so equality is coefficient-wise.
class Cyc {
public:
    explicit Cyc(FieldPtr field);
    Cyc(FieldPtr field, const mpq_class& value);
    Cyc(FieldPtr field, long value) : Cyc(std::move(field), mpq_class(value)) {}
    /// Arbitrary polynomial in z (lowest degree first); reduced on construction.
    Cyc(FieldPtr field, std::vector<mpq_class> poly);

    /// z^k for any integer k.
    static Cyc zeta(const FieldPtr& field, long k = 1);

    /// Parses the scalar grammar: rationals "a/b", the symbol z, integer
    /// powers, + - * / and parentheses. Example: "1/2*z^2 - 3".
    static Cyc parse(const FieldPtr& field, std::string_view text);

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Cyc inverse() const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& other);
    Cyc& operator-=(const Cyc& other);
    Cyc& operator*=(const Cyc& other);
    Cyc& operator/=(const Cyc& other);

    /// Adds a*b to *this without a temporary.
    void add_product(const Cyc& a, const Cyc& b);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

    bool operator==(const Cyc& other) const;
    bool operator!=(const Cyc& other) const { return !(*this == other); }

    /// Canonical text form, highest power first; parses back to the same value.
    std::string to_string() const;

    std::size_t hash() const;

private:
    void check_same_field(const Cyc& other) const;

    FieldPtr field_;
    std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& x);

} // namespace tca
