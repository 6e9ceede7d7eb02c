#pragma once

#include "tca/subspace.hpp"

#include <string>
#include <vector>

namespace tca {

/// Images of points 0..n-1 (0-based internally; reports print 1-based).
using Permutation = std::vector<std::size_t>;

Permutation compose(const Permutation& a, const Permutation& b); // a after b
Permutation invert(const Permutation& p);
bool is_bijection(const Permutation& p, std::size_t n);

/// S = k^n, functions on n points with pointwise product. Element j of the
/// standard basis is the indicator e_j of point j.
class SiteAlgebra {
public:
    SiteAlgebra(FieldPtr field, std::size_t points, std::vector<std::string> labels = {});

    const FieldPtr& field() const { return field_; }
    std::size_t points() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t j) const { return labels_[j]; }

    Vec one() const;
    Vec product(const Vec& a, const Vec& b) const;
    /// M_j = { s : s(j) = 0 }.
    Subspace point_ideal(std::size_t j) const;
    /// n x n matrix of multiplication by s.
    Matrix multiplication(const Vec& s) const;

private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<std::string> labels_;
};

/// Multiplication table of a finite group on indices 0..order-1.
class GroupTable {
public:
    explicit GroupTable(std::vector<std::vector<std::size_t>> mul);

    std::size_t order() const { return mul_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

    /// The trivial group.
    static GroupTable trivial();

private:
    std::vector<std::vector<std::size_t>> mul_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// gamma -> permutation of the points, a homomorphism from the group table.
class PointPermutationAction {
public:
    /// Throws InputError if a map is not a bijection or composition disagrees
    /// with the table.
    PointPermutationAction(GroupTable table, std::vector<Permutation> perms, std::size_t points);

    static PointPermutationAction trivial(std::size_t points);

    const GroupTable& group() const { return table_; }
    std::size_t points() const { return n_; }
    const Permutation& perm(std::size_t g) const { return perms_[g]; }
    std::size_t apply(std::size_t g, std::size_t point) const { return perms_[g][point]; }

    /// Orbits sorted by their minimal point, each sorted ascending.
    const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }
    std::size_t orbit_index(std::size_t point) const { return orbit_of_[point]; }
    /// Minimal point of the orbit.
    std::size_t representative(std::size_t point) const { return orbits_[orbit_of_[point]].front(); }

private:
    GroupTable table_;
    std::vector<Permutation> perms_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> orbits_;
    std::vector<std::size_t> orbit_of_;
};

struct OrbitStabilizer {
    std::vector<std::size_t> orbit;
    std::vector<std::size_t> stabilizer; // group indices
};
OrbitStabilizer orbit_stabilizer(const PointPermutationAction& act, std::size_t point);

/// The permutation matrix of s -> (gamma s), (gamma s)(M) = s(gamma^-1 M),
/// i.e. e_j -> e_(gamma j).
Matrix scalar_action_matrix(const FieldPtr& field, const Permutation& p);
Vec induced_scalar_action(const PointPermutationAction& act, std::size_t g, const Vec& s);

/// R = S^Gamma, spanned by orbit indicators.
struct InvariantSubalgebra {
    Subspace space;
    std::vector<Vec> orbit_indicators; // in orbit order
};
InvariantSubalgebra invariants(const SiteAlgebra& s, const PointPermutationAction& act);

/// R-ideals are given as subspaces of S contained in R.
bool is_ideal_of_invariants(const InvariantSubalgebra& r, const Subspace& i);
/// The maximal R-ideal of functions vanishing on the given orbit.
Subspace orbit_ideal(const SiteAlgebra& s, const PointPermutationAction& act, std::size_t orbit);

struct IdealOver {
    std::vector<std::size_t> points; // maximal ideals of S containing i
    Subspace generated;              // iS
    Subspace radical;                // intersection of M_j over those points
};
IdealOver ideal_over(const SiteAlgebra& s, const PointPermutationAction& act, const Subspace& i);

} // namespace tca
