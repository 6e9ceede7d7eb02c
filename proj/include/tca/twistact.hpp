#pragma once

#include "tca/liecore.hpp"
#include "tca/sitealg.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace tca {

/// g (x) k^n as a Lie algebra, basis x_i (x) e_j at index i*n + j.
LieAlgebra current_algebra(const LieAlgebra& g, std::size_t points);

/// A finite group of Lie automorphisms of g (x) S, listed as matrices in the
/// basis x_i (x) e_j (i-major). Element 0 is the identity; the group product
/// gamma*eta is the matrix product.
class TwistedAction {
public:
    TwistedAction(LiePtr g, SiteAlgebra site, LiePtr current, std::vector<Matrix> elements,
                  std::vector<std::size_t> generators, PointPermutationAction points);

    const LiePtr& g() const { return g_; }
    const SiteAlgebra& site() const { return site_; }
    const LiePtr& current() const { return current_; }
    const FieldPtr& field() const { return g_->field(); }
    std::size_t order() const { return elements_.size(); }
    std::size_t points() const { return site_.points(); }
    /// d * n
    std::size_t dim() const { return current_->dim(); }
    std::size_t index(std::size_t i, std::size_t point) const { return i * site_.points() + point; }

    const Matrix& element(std::size_t gamma) const { return elements_[gamma]; }
    const std::vector<Matrix>& elements() const { return elements_; }
    const std::vector<std::size_t>& generators() const { return generators_; }
    const GroupTable& table() const { return points_.group(); }
    const PointPermutationAction& point_action() const { return points_; }
    /// The point gamma M.
    std::size_t move(std::size_t gamma, std::size_t point) const { return points_.apply(gamma, point); }

    /// 1 (x) gamma on g (x) S: x (x) e_j -> x (x) e_(gamma j).
    Matrix scalar_operator(std::size_t gamma) const;
    /// Multiplication by s in S on g (x) S.
    Matrix multiplication_operator(const Vec& s) const;
    /// ev_M : g (x) S -> g, a d x dn matrix.
    Matrix evaluation(std::size_t point) const;

    /// Index of an element equal to m; throws InputError if absent.
    std::size_t find(const Matrix& m) const;

    /// "h⊗(1,-1,0) + ..." grouped by basis element of g.
    std::string format(const Vec& z) const;
    std::string element_label(std::size_t gamma) const;

private:
    LiePtr g_;
    SiteAlgebra site_;
    LiePtr current_;
    std::vector<Matrix> elements_;
    std::vector<std::size_t> generators_;
    PointPermutationAction points_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
};

using ActionPtr = std::shared_ptr<const TwistedAction>;

constexpr std::size_t default_group_cap = 10000;

/// Closes the generators under multiplication, checks every generator is a Lie
/// automorphism of g (x) S, and extracts the point permutations from the
/// images of the ideals g (x) M_j.
ActionPtr build_action(LiePtr g, SiteAlgebra site, const std::vector<Matrix>& generators,
                       std::size_t cap = default_group_cap);

/// The point permutation of an automorphism mapping each g (x) e_j onto some
/// g (x) e_k; throws InputError naming the offending point otherwise.
Permutation extract_point_permutation(const Matrix& m, std::size_t d, std::size_t points);

/// (1/|Gamma|) sum of all elements, the projection onto the fixed points.
Matrix reynolds_operator(const TwistedAction& act);

class FixedAlgebra {
public:
    FixedAlgebra(ActionPtr action, Subspace space, LiePtr algebra, InvariantSubalgebra invariants);

    const ActionPtr& action() const { return action_; }
    /// L inside g (x) S.
    const Subspace& space() const { return space_; }
    /// Structure constants on the echelon basis of space().
    const LiePtr& algebra() const { return algebra_; }
    std::size_t dim() const { return space_.dim(); }
    /// R = S^Gamma.
    const InvariantSubalgebra& invariants() const { return invariants_; }

    Vec embed(const Vec& coords) const { return space_.from_coordinates(coords); }
    Vec coordinates(const Vec& z) const { return space_.coordinates(z); }
    /// Multiplication by r in R restricted to L, in L coordinates.
    Matrix r_action(const Vec& r) const;
    /// ev_M restricted to L: d x dim L.
    Matrix evaluation(std::size_t point) const;

private:
    ActionPtr action_;
    Subspace space_;
    LiePtr algebra_;
    InvariantSubalgebra invariants_;
};

/// L = kernel of the stacked (gamma - 1); bracket closure and R-stability are checked.
FixedAlgebra fixed_point_algebra(ActionPtr action);

/// u_gamma = gamma o (1 (x) gamma^-1), one matrix per group element. The
/// S-linearity and crossed-homomorphism properties are verified and a
/// violation throws CheckFailure.
std::vector<Matrix> cocycle(const TwistedAction& act);

/// ^gamma phi = (1 (x) gamma) phi (1 (x) gamma^-1).
Matrix twisted_conjugate(const TwistedAction& act, std::size_t gamma, const Matrix& phi);

/// psi(M) x = (psi(x (x) 1))(M) for any endomorphism psi of g (x) S.
Matrix local_automorphism(const TwistedAction& act, const Matrix& psi, std::size_t point);
Matrix local_automorphism(const TwistedAction& act, std::size_t gamma, std::size_t point);

/// g^M = { x : gamma(M) x = x for gamma in Gamma^M }.
Subspace isotropy_space(const TwistedAction& act, std::size_t point);

struct IsotropyAlgebra {
    std::size_t point;
    std::vector<std::size_t> stabilizer;
    Subspace space;
    LiePtr algebra;
    ReductiveReport reductive;
};
/// Also verifies ev_M(L) = g^M and reductivity; throws CheckFailure otherwise.
IsotropyAlgebra isotropy_algebra(const FixedAlgebra& fa, std::size_t point);

struct IsotropyTransportResult {
    bool holds;
    std::size_t image_point; // gamma M
    Subspace lhs;            // g^M
    Subspace rhs;            // gamma^-1(M) g^(gamma M)
};
IsotropyTransportResult isotropy_transport_check(const TwistedAction& act, std::size_t gamma, std::size_t point);

struct IdentityCount {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
};
struct IdentityReport {
    std::vector<IdentityCount> counts;
    std::vector<std::string> failures; // first few counterexamples
    bool ok() const;
};
/// Every identity over every (gamma, eta, M): local twisted action, the three
/// inverse/transport identities, crossed homomorphism, S-linearity,
/// semilinearity, reconstruction and the isotropy transport lemma.
IdentityReport identity_suite(const TwistedAction& act);

/// Rank check of L -> g^(M_1) + ... + g^(M_r).
bool joint_evaluation_surjective(const FixedAlgebra& fa, const std::vector<std::size_t>& points);

struct Contraction {
    Subspace in_s; // { r in S : r L in m }
    Subspace in_r; // in_s intersected with R
    bool maximal_in_r;
};
/// m is a subspace of L in L coordinates; must be an R-stable ideal.
Contraction ideal_contraction(const FixedAlgebra& fa, const Subspace& m);

struct ProductWithIdeal {
    bool equals_l;
    Subspace product; // jL inside g (x) S
};
ProductWithIdeal ideal_times_l(const FixedAlgebra& fa, const Subspace& j);

struct EpimorphismResult {
    bool holds;
    std::size_t point;
    Matrix map; // sum of dim L/M_i rows, dim g^M columns (g^M echelon coordinates)
    std::size_t rank;
};
/// Factors the joint quotient map L -> prod L/M_i through ev_M for a point M
/// over i and checks the induced map from g^M is onto. Contraction mismatch
/// or a non-simple quotient throws InputError.
EpimorphismResult epimorphism_check(const FixedAlgebra& fa, const Subspace& i, const std::vector<Subspace>& ideals);

/// sl2 (x) k^3 with the Klein four-group generated by sigma_1 (x) swap(1,2)
/// and sigma_2 (x) swap(1,2).
ActionPtr klein_example();
/// sl2 (x) k^2 with omega (x) (1 2), omega the Chevalley involution.
ActionPtr swap_example();
/// sl2 (x) k^(2m) on the points t = z^k, with omega (x) (t -> t^-1).
ActionPtr onsager_example(unsigned m);

/// e -> -f, f -> -e, h -> -h on the basis (e, f, h).
Matrix chevalley_involution(const FieldPtr& field);

} // namespace tca
