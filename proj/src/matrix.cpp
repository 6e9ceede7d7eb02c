#include "tca/matrix.hpp"

#include "tca/errors.hpp"

#include <sstream>

namespace tca {

Vec zero_vector(const FieldPtr& field, std::size_t n)
{
    return Vec(n, Cyc(field));
}

Vec unit_vector(const FieldPtr& field, std::size_t n, std::size_t i)
{
    Vec v = zero_vector(field, n);
    v[i] = Cyc(field, 1);
    return v;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

Vec operator+(const Vec& a, const Vec& b)
{
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += b[i];
    }
    return r;
}

Vec operator-(const Vec& a, const Vec& b)
{
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
    }
    return r;
}

Vec scale(const Cyc& c, const Vec& v)
{
    Vec r(v);
    for (auto& x : r) {
        x *= c;
    }
    return r;
}

Cyc dot(const FieldPtr& field, const Vec& a, const Vec& b)
{
    Cyc s(field);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s.add_product(a[i], b[i]);
        }
    }
    return s;
}

std::string to_string(const Vec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += v[i].to_string();
    }
    return s + ")";
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Cyc(field_))
{
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Cyc(field, 1);
    }
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& field, const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, rows[r]);
    }
    return m;
}

Matrix Matrix::from_columns(const FieldPtr& field, const std::vector<Vec>& cols, std::size_t rows)
{
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        m.set_column(c, cols[c]);
    }
    return m;
}

Vec Matrix::row(std::size_t r) const
{
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const
{
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v.push_back((*this)(r, c));
    }
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v)
{
    if (v.size() != cols_) {
        throw InputError("row length " + std::to_string(v.size()) + " does not match " +
                         std::to_string(cols_) + " columns");
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        (*this)(r, c) = v[c];
    }
}

void Matrix::set_column(std::size_t c, const Vec& v)
{
    if (v.size() != rows_) {
        throw InputError("column length " + std::to_string(v.size()) + " does not match " +
                         std::to_string(rows_) + " rows");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != cols_) {
        throw InputError("vector length does not match matrix columns");
    }
    Vec out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) {
            continue;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            const Cyc& a = (*this)(r, c);
            if (!a.is_zero()) {
                out[r].add_product(a, v[c]);
            }
        }
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_identity() const
{
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Cyc& x = (*this)(r, c);
            if (r == c ? !x.is_one() : !x.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Cyc Matrix::trace() const
{
    Cyc t(field_);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_) {
        throw InputError("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " times " + std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    }
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyc& a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Cyc& b = other(k, j);
                if (!b.is_zero()) {
                    out(i, j).add_product(a, b);
                }
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InputError("matrix sum: shape mismatch");
    }
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += other.data_[i];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InputError("matrix difference: shape mismatch");
    }
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] -= other.data_[i];
    }
    return out;
}

Matrix Matrix::scaled(const Cyc& c) const
{
    Matrix out(*this);
    for (auto& x : out.data_) {
        x *= c;
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Vec Matrix::flatten() const
{
    return data_;
}

Matrix Matrix::unflatten(const FieldPtr& field, std::size_t rows, std::size_t cols, const Vec& v)
{
    if (v.size() != rows * cols) {
        throw InputError("unflatten: length mismatch");
    }
    Matrix m(field, rows, cols);
    m.data_ = v;
    return m;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) {
            os << (c ? ", " : "") << (*this)(r, c).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::size_t Matrix::hash() const
{
    std::size_t h = rows_ * 7919u + cols_;
    for (const auto& x : data_) {
        h = h * 1099511628211ull ^ x.hash();
    }
    return h;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Cyc& x = a(i, j);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (!b(k, l).is_zero()) {
                        out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
                    }
                }
            }
        }
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks)
{
    if (blocks.empty()) {
        throw InputError("vstack of nothing");
    }
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != blocks.front().cols()) {
            throw InputError("vstack: column mismatch");
        }
        rows += b.rows();
    }
    Matrix out(blocks.front().field(), rows, blocks.front().cols());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(off + r, c) = b(r, c);
            }
        }
        off += b.rows();
    }
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks)
{
    std::vector<Matrix> t;
    t.reserve(blocks.size());
    for (const auto& b : blocks) {
        t.push_back(b.transpose());
    }
    return vstack(t).transpose();
}

Rref rref(const Matrix& m)
{
    Matrix a(m);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        if (p != row) {
            for (std::size_t c = col; c < a.cols(); ++c) {
                std::swap(a(p, c), a(row, c));
            }
        }
        const Cyc inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) {
            if (!a(row, c).is_zero()) {
                a(row, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) {
                continue;
            }
            const Cyc f = -a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (!a(row, c).is_zero()) {
                    a(r, c).add_product(f, a(row, c));
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix reduced(m.field(), row, m.cols());
    for (std::size_t r = 0; r < row; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            reduced(r, c) = a(r, c);
        }
    }
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

Cyc determinant(const Matrix& m)
{
    if (!m.is_square()) {
        throw InputError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    const FieldPtr& f = m.field();
    if (n == 0) {
        return Cyc(f, 1);
    }
    Matrix a(m);
    Cyc prev(f, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) {
                ++p;
            }
            if (p == n) {
                return Cyc(f);
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(p, c), a(k, c));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square()) {
        throw InputError("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    const Rref r = rref(hstack({m, Matrix::identity(m.field(), n)}));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) {
        throw InputError("matrix is singular");
    }
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = r.reduced(i, n + j);
        }
    }
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    Matrix rhs(m.field(), m.rows(), 1);
    rhs.set_column(0, b);
    const Rref r = rref(hstack({m, rhs}));
    Vec x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) {
            return std::nullopt;
        }
        x[r.pivots[i]] = r.reduced(i, m.cols());
    }
    return x;
}

} // namespace tca
