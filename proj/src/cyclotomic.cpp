#include "tca/cyclotomic.hpp"

#include "tca/errors.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace tca {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p)
{
    while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
    }
}

// Exact division by a monic integer polynomial.
IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
    trim(num);
    const std::size_t dn = den.size() - 1;
    if (num.size() - 1 < dn) {
        throw std::logic_error("divide_monic: degree too small");
    }
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const mpz_class c = num[k];
        quot[k - dn] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= dn; ++i) {
            num[k - dn + i] -= c * den[i];
        }
    }
    for (const auto& r : num) {
        if (r != 0) {
            throw std::logic_error("divide_monic: nonzero remainder");
        }
    }
    return quot;
}

} // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned n)
{
    if (n == 0) {
        throw InputError("cyclotomic order must be positive");
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = divide_monic(p, cyclotomic_polynomial(d));
        }
    }
    return p;
}

unsigned euler_phi(unsigned n)
{
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

CyclotomicField::CyclotomicField(unsigned conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor))
{
    const std::size_t deg = degree();
    // z^deg = -(Phi - z^deg); higher powers by shifting.
    IntPoly cur(deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        cur[i] = -modulus_[i];
    }
    const std::size_t top = deg == 0 ? 0 : 2 * deg - 2;
    for (std::size_t k = deg; k <= top || k == deg; ++k) {
        high_powers_.push_back(cur);
        IntPoly next(deg, 0);
        const mpz_class carry = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) {
            next[i] = cur[i - 1];
        }
        for (std::size_t i = 0; i < deg; ++i) {
            next[i] -= carry * modulus_[i];
        }
        cur = std::move(next);
        if (k >= top) {
            break;
        }
    }
}

FieldPtr CyclotomicField::make(unsigned conductor)
{
    if (conductor == 0) {
        throw InputError("cyclotomic order must be positive");
    }
    return FieldPtr(new CyclotomicField(conductor));
}

Cyc::Cyc(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree()) {}

Cyc::Cyc(FieldPtr field, const mpq_class& value) : Cyc(std::move(field))
{
    coeffs_[0] = value;
}

Cyc::Cyc(FieldPtr field, std::vector<mpq_class> poly) : Cyc(std::move(field))
{
    const auto& phi = field_->modulus();
    const std::size_t deg = field_->degree();
    // Long division remainder by the monic modulus.
    for (std::size_t k = poly.size(); k-- > deg;) {
        const mpq_class c = poly[k];
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= deg; ++i) {
            poly[k - deg + i] -= c * phi[i];
        }
    }
    for (std::size_t i = 0; i < deg && i < poly.size(); ++i) {
        coeffs_[i] = poly[i];
    }
}

Cyc Cyc::zeta(const FieldPtr& field, long k)
{
    const long n = static_cast<long>(field->conductor());
    long e = k % n;
    if (e < 0) {
        e += n;
    }
    std::vector<mpq_class> poly(static_cast<std::size_t>(e) + 1);
    poly[static_cast<std::size_t>(e)] = 1;
    return Cyc(field, std::move(poly));
}

bool Cyc::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool Cyc::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool Cyc::is_one() const
{
    return is_rational() && coeffs_[0] == 1;
}

void Cyc::check_same_field(const Cyc& other) const
{
    if (field_ != other.field_ && field_->conductor() != other.field_->conductor()) {
        throw FieldMismatch("scalars from Q(zeta_" + std::to_string(field_->conductor()) +
                            ") and Q(zeta_" + std::to_string(other.field_->conductor()) +
                            ") cannot be combined");
    }
}

Cyc Cyc::operator-() const
{
    Cyc r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Cyc& Cyc::operator+=(const Cyc& other)
{
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& other)
{
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

void Cyc::add_product(const Cyc& a, const Cyc& b)
{
    check_same_field(a);
    check_same_field(b);
    const std::size_t deg = coeffs_.size();
    if (b.is_rational()) {
        if (sgn(b.coeffs_[0]) == 0) {
            return;
        }
        for (std::size_t i = 0; i < deg; ++i) {
            if (sgn(a.coeffs_[i]) != 0) {
                coeffs_[i] += a.coeffs_[i] * b.coeffs_[0];
            }
        }
        return;
    }
    if (a.is_rational()) {
        add_product(b, a);
        return;
    }
    std::vector<mpq_class> raw(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < deg; ++j) {
            if (sgn(b.coeffs_[j]) != 0) {
                raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    for (std::size_t i = 0; i < deg; ++i) {
        if (sgn(raw[i]) != 0) {
            coeffs_[i] += raw[i];
        }
    }
    for (std::size_t k = deg; k < raw.size(); ++k) {
        if (sgn(raw[k]) == 0) {
            continue;
        }
        const auto& red = field_->reduced_power(k);
        for (std::size_t i = 0; i < deg; ++i) {
            if (red[i] != 0) {
                coeffs_[i] += raw[k] * red[i];
            }
        }
    }
}

Cyc& Cyc::operator*=(const Cyc& other)
{
    check_same_field(other);
    if (other.is_rational()) {
        for (auto& c : coeffs_) {
            c *= other.coeffs_[0];
        }
        return *this;
    }
    Cyc result(field_);
    result.add_product(*this, other);
    coeffs_ = std::move(result.coeffs_);
    return *this;
}

Cyc Cyc::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(field_->conductor()) + ")");
    }
    const std::size_t deg = coeffs_.size();
    if (is_rational()) {
        return Cyc(field_, mpq_class(1) / coeffs_[0]);
    }
    // Solve (multiplication-by-this) x = 1 over Q.
    std::vector<std::vector<mpq_class>> m(deg, std::vector<mpq_class>(deg + 1));
    Cyc col(field_, mpq_class(1));
    const Cyc z = zeta(field_, 1);
    for (std::size_t k = 0; k < deg; ++k) {
        const Cyc prod = *this * col;
        for (std::size_t i = 0; i < deg; ++i) {
            m[i][k] = prod.coeffs_[i];
        }
        col *= z;
    }
    m[0][deg] = 1;
    for (std::size_t c = 0; c < deg; ++c) {
        std::size_t p = c;
        while (p < deg && sgn(m[p][c]) == 0) {
            ++p;
        }
        std::swap(m[p], m[c]);
        const mpq_class piv = m[c][c];
        for (auto& v : m[c]) {
            v /= piv;
        }
        for (std::size_t r = 0; r < deg; ++r) {
            if (r == c || sgn(m[r][c]) == 0) {
                continue;
            }
            const mpq_class f = m[r][c];
            for (std::size_t j = c; j <= deg; ++j) {
                m[r][j] -= f * m[c][j];
            }
        }
    }
    Cyc r(field_);
    for (std::size_t i = 0; i < deg; ++i) {
        r.coeffs_[i] = m[i][deg];
    }
    return r;
}

Cyc& Cyc::operator/=(const Cyc& other)
{
    check_same_field(other);
    return *this *= other.inverse();
}

bool Cyc::operator==(const Cyc& other) const
{
    check_same_field(other);
    return coeffs_ == other.coeffs_;
}

std::size_t Cyc::hash() const
{
    std::size_t h = 0;
    for (const auto& c : coeffs_) {
        const std::size_t a = mpz_get_ui(c.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(c)) << 7);
        const std::size_t b = mpz_get_ui(c.get_den_mpz_t());
        h = h * 1000003u ^ (a * 31u + b);
    }
    return h;
}

std::string Cyc::to_string() const
{
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpq_class& c = coeffs_[k];
        if (sgn(c) == 0) {
            continue;
        }
        std::string term;
        if (k == 0) {
            term = c.get_str();
        } else {
            const std::string zp = k == 1 ? "z" : "z^" + std::to_string(k);
            if (c == 1) {
                term = zp;
            } else if (c == -1) {
                term = "-" + zp;
            } else {
                term = c.get_str() + "*" + zp;
            }
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyc& x)
{
    return os << x.to_string();
}

namespace {

class ScalarParser {
public:
    ScalarParser(const FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

    Cyc parse()
    {
        Cyc v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("scalar \"" + std::string(text_) + "\": " + what + " at column " +
                         std::to_string(pos_ + 1));
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Cyc expr()
    {
        Cyc acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Cyc term()
    {
        Cyc acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const Cyc d = unary();
                if (d.is_zero()) {
                    fail("division by zero");
                }
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    Cyc unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    Cyc power()
    {
        Cyc base = atom();
        if (!accept('^')) {
            return base;
        }
        bool negative = accept('-');
        skip_ws();
        const mpz_class e = integer();
        if (e > 100000) {
            fail("exponent too large");
        }
        Cyc r(field_, mpq_class(1));
        for (unsigned long i = 0; i < e.get_ui(); ++i) {
            r *= base;
        }
        if (negative) {
            if (r.is_zero()) {
                fail("division by zero");
            }
            r = r.inverse();
        }
        return r;
    }

    mpz_class integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Cyc atom()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Cyc v = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return Cyc::zeta(field_, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Cyc(field_, mpq_class(integer()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const FieldPtr& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Cyc Cyc::parse(const FieldPtr& field, std::string_view text)
{
    return ScalarParser(field, text).parse();
}

} // namespace tca
