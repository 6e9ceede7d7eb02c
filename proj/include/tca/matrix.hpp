#pragma once

#include "tca/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tca {

using Vec = std::vector<Cyc>;

Vec zero_vector(const FieldPtr& field, std::size_t n);
Vec unit_vector(const FieldPtr& field, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scale(const Cyc& c, const Vec& v);
Cyc dot(const FieldPtr& field, const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

/// Dense matrix over Q(zeta_N), row-major. Column j of a linear map holds the
/// image of basis vector j.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldPtr& field, std::size_t n);
    static Matrix from_rows(const FieldPtr& field, const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_columns(const FieldPtr& field, const std::vector<Vec>& cols, std::size_t rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Cyc& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Cyc& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);
    void set_column(std::size_t c, const Vec& v);

    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    Cyc trace() const;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Cyc& c) const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    /// Row-major flattening, the coordinates used for spaces of matrices.
    Vec flatten() const;
    static Matrix unflatten(const FieldPtr& field, std::size_t rows, std::size_t cols, const Vec& v);

    std::string to_string() const;
    std::size_t hash() const;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Cyc> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix hstack(const std::vector<Matrix>& blocks);

struct Rref {
    Matrix reduced;                  // rank rows, reduced row-echelon form
    std::vector<std::size_t> pivots; // pivot column of each row
};

/// Gauss-Jordan elimination; zero rows are dropped from the result.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Fraction-free (Bareiss) determinant.
Cyc determinant(const Matrix& m);
/// Throws InputError when the matrix is singular or not square.
Matrix inverse(const Matrix& m);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

} // namespace tca
