#include "tca/subspace.hpp"

#include "tca/errors.hpp"

#include <algorithm>
#include <deque>

namespace tca {

Subspace::Subspace(FieldPtr field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), basis_(std::move(field), 0, ambient_dim)
{
}

Subspace::Subspace(FieldPtr field, std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
    : field_(std::move(field)), ambient_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots))
{
}

Subspace Subspace::row_space(const Matrix& m)
{
    Rref r = rref(m);
    return Subspace(m.field(), m.cols(), std::move(r.reduced), std::move(r.pivots));
}

Subspace Subspace::column_space(const Matrix& m)
{
    return row_space(m.transpose());
}

Subspace Subspace::span(const FieldPtr& field, std::size_t ambient_dim, const std::vector<Vec>& vectors)
{
    if (vectors.empty()) {
        return Subspace(field, ambient_dim);
    }
    return row_space(Matrix::from_rows(field, vectors, ambient_dim));
}

Subspace Subspace::full(const FieldPtr& field, std::size_t ambient_dim)
{
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        piv[i] = i;
    }
    return Subspace(field, ambient_dim, Matrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::coordinate(const FieldPtr& field, std::size_t ambient_dim,
                              const std::vector<std::size_t>& indices)
{
    std::vector<Vec> vs;
    for (std::size_t i : indices) {
        vs.push_back(unit_vector(field, ambient_dim, i));
    }
    return span(field, ambient_dim, vs);
}

std::vector<Vec> Subspace::basis_vectors() const
{
    std::vector<Vec> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        out.push_back(basis_.row(i));
    }
    return out;
}

Vec Subspace::residue(const Vec& v) const
{
    if (v.size() != ambient_) {
        throw InputError("vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                         std::to_string(ambient_));
    }
    Vec r(v);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Cyc c = r[pivots_[i]];
        if (c.is_zero()) {
            continue;
        }
        const Cyc neg = -c;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
            if (!basis_(i, j).is_zero()) {
                r[j].add_product(neg, basis_(i, j));
            }
        }
    }
    return r;
}

bool Subspace::contains(const Vec& v) const
{
    return tca::is_zero(residue(v));
}

bool Subspace::contains(const Subspace& other) const
{
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i))) {
            return false;
        }
    }
    return true;
}

Vec Subspace::coordinates(const Vec& v) const
{
    if (!contains(v)) {
        throw InputError("vector " + tca::to_string(v) + " is not in the subspace");
    }
    Vec c;
    c.reserve(dim());
    for (std::size_t p : pivots_) {
        c.push_back(v[p]);
    }
    return c;
}

Vec Subspace::from_coordinates(const Vec& c) const
{
    if (c.size() != dim()) {
        throw InputError("coordinate vector of length " + std::to_string(c.size()) + " for a subspace of dimension " +
                         std::to_string(dim()));
    }
    Vec v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (c[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (!basis_(i, j).is_zero()) {
                v[j].add_product(c[i], basis_(i, j));
            }
        }
    }
    return v;
}

std::vector<std::size_t> Subspace::non_pivots() const
{
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j) {
            ++k;
        } else {
            out.push_back(j);
        }
    }
    return out;
}

Matrix Subspace::quotient_map() const
{
    const auto np = non_pivots();
    Matrix q(field_, np.size(), ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
        const Vec r = residue(unit_vector(field_, ambient_, j));
        for (std::size_t k = 0; k < np.size(); ++k) {
            q(k, j) = r[np[k]];
        }
    }
    return q;
}

void Subspace::check_ambient(const Subspace& other) const
{
    if (ambient_ != other.ambient_) {
        throw InputError("subspaces of ambient dimensions " + std::to_string(ambient_) + " and " +
                         std::to_string(other.ambient_));
    }
}

Subspace Subspace::operator+(const Subspace& other) const
{
    check_ambient(other);
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return other;
    }
    return row_space(vstack({basis_, other.basis_}));
}

Subspace Subspace::annihilator() const
{
    if (is_zero()) {
        return full(field_, ambient_);
    }
    return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    check_ambient(other);
    return (annihilator() + other.annihilator()).annihilator();
}

Subspace Subspace::mapped(const Matrix& m) const
{
    if (m.cols() != ambient_) {
        throw InputError("map with " + std::to_string(m.cols()) + " columns applied to ambient dimension " +
                         std::to_string(ambient_));
    }
    std::vector<Vec> images;
    for (std::size_t i = 0; i < dim(); ++i) {
        images.push_back(m.apply(basis_.row(i)));
    }
    return span(field_, m.rows(), images);
}

bool Subspace::operator==(const Subspace& other) const
{
    return ambient_ == other.ambient_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

std::string Subspace::to_string() const
{
    std::string s = "span{";
    for (std::size_t i = 0; i < dim(); ++i) {
        s += (i ? ", " : "") + tca::to_string(basis_.row(i));
    }
    return s + "}";
}

Subspace kernel(const Matrix& m)
{
    const Rref r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v = zero_vector(m.field(), n);
        v[free] = Cyc(m.field(), 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            v[r.pivots[i]] = -r.reduced(i, free);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field(), n, basis);
}

EchelonBuilder::EchelonBuilder(FieldPtr field, std::size_t ambient_dim)
    : field_(std::move(field)), ambient_(ambient_dim)
{
}

Vec EchelonBuilder::reduce(const Vec& v) const
{
    Vec r(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Cyc c = r[pivots_[i]];
        if (c.is_zero()) {
            continue;
        }
        const Cyc neg = -c;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (!rows_[i][j].is_zero()) {
                r[j].add_product(neg, rows_[i][j]);
            }
        }
    }
    return r;
}

bool EchelonBuilder::contains(const Vec& v) const
{
    return tca::is_zero(reduce(v));
}

bool EchelonBuilder::add(const Vec& v)
{
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) {
        ++p;
    }
    if (p == ambient_) {
        return false;
    }
    const Cyc inv = r[p].inverse();
    for (auto& x : r) {
        if (!x.is_zero()) {
            x *= inv;
        }
    }
    for (auto& row : rows_) {
        const Cyc c = row[p];
        if (c.is_zero()) {
            continue;
        }
        const Cyc neg = -c;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (!r[j].is_zero()) {
                row[j].add_product(neg, r[j]);
            }
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

Subspace EchelonBuilder::to_subspace() const
{
    return Subspace::span(field_, ambient_, rows_);
}

Subspace algebra_closure(const std::vector<Matrix>& generators, bool include_identity)
{
    if (generators.empty() && !include_identity) {
        throw InputError("algebra_closure needs generators or the identity");
    }
    const FieldPtr field = generators.empty() ? nullptr : generators.front().field();
    if (!field) {
        throw InputError("algebra_closure: identity-only closure needs a size; pass the identity as a generator");
    }
    const std::size_t d = generators.front().rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != d) {
            throw InputError("algebra_closure: generators must be square of equal size");
        }
    }
    EchelonBuilder span(field, d * d);
    std::deque<Matrix> queue;
    auto push = [&](const Matrix& m) {
        if (span.add(m.flatten())) {
            queue.push_back(m);
        }
    };
    if (include_identity) {
        push(Matrix::identity(field, d));
    }
    for (const auto& g : generators) {
        push(g);
    }
    // Every word is reached by right-multiplying a shorter word by a generator.
    while (!queue.empty() && span.dim() < d * d) {
        const Matrix w = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            push(w * g);
        }
    }
    return span.to_subspace();
}

} // namespace tca
