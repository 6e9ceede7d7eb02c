#pragma once

#include "tca/subspace.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tca {

/// Finite-dimensional Lie algebra given by structure constants in a
/// distinguished basis x_1..x_d: structure(i, j) holds the coordinates of
/// [x_i, x_j].
class LieAlgebra {
public:
    /// table has dim*dim entries, row-major in (i, j). Not validated here; call validate().
    LieAlgebra(FieldPtr field, std::size_t dim, std::vector<Vec> table, std::vector<std::string> names,
               std::string label);

    static LieAlgebra abelian(const FieldPtr& field, std::size_t dim, std::string label = "abelian");

    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const std::vector<std::string>& names() const { return names_; }
    const Vec& structure(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec bracket(const Vec& x, const Vec& y) const;
    /// Matrix of y -> [x, y].
    Matrix ad(const Vec& x) const;
    Matrix ad_basis(std::size_t i) const;
    Vec basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }

    /// Antisymmetry and the Jacobi identity on every basis triple; throws
    /// InputError naming the first failing pair or triple.
    void validate() const;

    /// Linear combination of basis names, e.g. "e - 2*h".
    std::string format(const Vec& x) const;

    bool operator==(const LieAlgebra& other) const;

private:
    FieldPtr field_;
    std::size_t dim_;
    std::vector<Vec> table_;
    std::vector<std::string> names_;
    std::string label_;
};

using LiePtr = std::shared_ptr<const LieAlgebra>;

/// sl_n in the basis E_ij (i<j), E_ji (i<j), H_i = E_ii - E_(i+1)(i+1). For
/// n = 2 this is the Chevalley basis (e, f, h).
LieAlgebra build_sl(const FieldPtr& field, unsigned n);

/// n x n matrix of x_k in the defining representation of build_sl(n).
std::vector<Matrix> sl_defining_matrices(const FieldPtr& field, unsigned n);

Matrix killing_form(const LieAlgebra& a);

struct DerivedAndCenter {
    Subspace derived;
    Subspace center;
};
DerivedAndCenter derived_and_center(const LieAlgebra& a);

enum class ReductiveKind { semisimple, reductive, neither };
std::string to_string(ReductiveKind kind);

struct ReductiveReport {
    ReductiveKind kind;
    Subspace center;
    Subspace derived;
    std::size_t killing_rank;
};
ReductiveReport killing_semisimple_test(const LieAlgebra& a);

bool is_semisimple(const LieAlgebra& a);
/// Semisimple with irreducible adjoint action.
bool is_simple(const LieAlgebra& a);

bool is_subalgebra(const LieAlgebra& a, const Subspace& s);
bool is_ideal(const LieAlgebra& a, const Subspace& s);
/// f has dst.dim() rows and src.dim() columns.
bool is_lie_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& f);

/// Structure constants on the echelon basis of a bracket-closed subspace.
LieAlgebra subalgebra(const LieAlgebra& a, const Subspace& s, std::string label);

struct LieIdeal {
    LiePtr parent;
    Subspace space;
};
LieIdeal make_ideal(LiePtr parent, Subspace space);

struct Quotient {
    LieAlgebra algebra;
    /// dim(quotient) x dim(parent); a Lie homomorphism.
    Matrix projection;
    /// Parent basis indices spanning the chosen complement.
    std::vector<std::size_t> complement;
};
/// The complement is spanned by the basis vectors at the non-pivot columns of
/// the ideal's echelon basis.
Quotient quotient(const LieAlgebra& a, const Subspace& ideal);

/// Text table: "dim d", optional "names ...", then lines "i j : c1, ..., cd"
/// (1-based, i < j, nonzero brackets only).
std::string export_structure(const LieAlgebra& a);
LieAlgebra import_structure(const FieldPtr& field, const std::string& text, std::string label = "imported");

/// Finite-dimensional representation: one matrix per basis element of the algebra.
class LieRep {
public:
    LieRep(LiePtr algebra, std::size_t dim, std::vector<Matrix> matrices, std::string label);

    const LiePtr& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& matrices() const { return matrices_; }
    const Matrix& matrix(std::size_t i) const { return matrices_[i]; }
    const std::string& label() const { return label_; }

    /// rho(x) for a coordinate vector x.
    Matrix act(const Vec& x) const;

    bool is_homomorphism() const;
    /// Throws InputError naming the failing basis pair.
    void validate() const;
    /// One-dimensional with every matrix zero.
    bool is_trivial() const;

private:
    LiePtr algebra_;
    std::size_t dim_;
    std::vector<Matrix> matrices_;
    std::string label_;
};

/// V(m), the (m+1)-dimensional irreducible sl_2-module in the weight basis
/// v_0..v_m: h v_k = (m-2k) v_k, f v_k = v_(k+1), e v_k = k(m-k+1) v_(k-1).
/// The algebra must be build_sl(2).
LieRep sl2_irrep(LiePtr sl2, unsigned m);
LieRep trivial_rep(LiePtr algebra, std::size_t dim = 1);
LieRep adjoint_rep(LiePtr algebra);
LieRep dual_rep(const LieRep& rep);
LieRep tensor_product(const LieRep& a, const LieRep& b);
LieRep direct_sum(const LieRep& a, const LieRep& b);
/// rep composed with a linear map hom: source -> rep.algebra() (dim(target) x dim(source)).
LieRep pullback(const LieRep& rep, LiePtr source, const Matrix& hom, std::string label);

} // namespace tca
