#pragma once

#include "tca/matrix.hpp"

#include <vector>

namespace tca {

/// Subspace of F^n stored as the rows of its reduced row-echelon basis, so
/// two subspaces are equal exactly when their bases are equal.
class Subspace {
public:
    Subspace(FieldPtr field, std::size_t ambient_dim);

    static Subspace span(const FieldPtr& field, std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace column_space(const Matrix& m);
    static Subspace full(const FieldPtr& field, std::size_t ambient_dim);
    /// span{e_i : i in indices}
    static Subspace coordinate(const FieldPtr& field, std::size_t ambient_dim, const std::vector<std::size_t>& indices);

    const FieldPtr& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return pivots_.size(); }
    bool is_zero() const { return pivots_.empty(); }
    bool is_full() const { return pivots_.size() == ambient_; }

    /// dim x ambient, reduced row-echelon.
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vec> basis_vectors() const;

    /// v minus its projection along the echelon basis; zero iff v is contained.
    Vec residue(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in basis(). Throws InputError if v is not in the subspace.
    Vec coordinates(const Vec& v) const;
    Vec from_coordinates(const Vec& c) const;
    /// Linear map ambient -> ambient/this, as coordinates on the non-pivot columns.
    Matrix quotient_map() const;
    std::vector<std::size_t> non_pivots() const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// { f : f(v) = 0 for all v in this } under the standard pairing.
    Subspace annihilator() const;
    /// Image of the subspace under a linear map with ambient_dim() columns.
    Subspace mapped(const Matrix& m) const;

    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    void check_ambient(const Subspace& other) const;
    Subspace(FieldPtr field, std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots);

    FieldPtr field_;
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Incrementally maintained reduced echelon basis.
class EchelonBuilder {
public:
    EchelonBuilder(FieldPtr field, std::size_t ambient_dim);

    /// Adds v; returns true if the span grew.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    Vec reduce(const Vec& v) const;
    std::size_t dim() const { return rows_.size(); }
    Subspace to_subspace() const;

private:
    FieldPtr field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

/// { v : m v = 0 }
Subspace kernel(const Matrix& m);

/// Smallest subspace of d x d matrices (flattened row-major) containing the
/// generators, and the identity when asked, closed under multiplication.
Subspace algebra_closure(const std::vector<Matrix>& generators, bool include_identity);

} // namespace tca
