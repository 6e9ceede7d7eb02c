#include "tca/sitealg.hpp"

#include "tca/errors.hpp"

#include <algorithm>

namespace tca {

Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = a[b[i]];
    }
    return out;
}

Permutation invert(const Permutation& p)
{
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[p[i]] = i;
    }
    return out;
}

bool is_bijection(const Permutation& p, std::size_t n)
{
    if (p.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (std::size_t x : p) {
        if (x >= n || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

SiteAlgebra::SiteAlgebra(FieldPtr field, std::size_t points, std::vector<std::string> labels)
    : field_(std::move(field)), n_(points), labels_(std::move(labels))
{
    if (n_ == 0) {
        throw InputError("the point set must be nonempty");
    }
    if (labels_.empty()) {
        for (std::size_t j = 0; j < n_; ++j) {
            labels_.push_back("M" + std::to_string(j + 1));
        }
    }
    if (labels_.size() != n_) {
        throw InputError("got " + std::to_string(labels_.size()) + " point labels for " + std::to_string(n_) +
                         " points");
    }
}

Vec SiteAlgebra::one() const
{
    return Vec(n_, Cyc(field_, 1));
}

Vec SiteAlgebra::product(const Vec& a, const Vec& b) const
{
    if (a.size() != n_ || b.size() != n_) {
        throw InputError("site algebra element of the wrong length");
    }
    Vec out(n_, Cyc(field_));
    for (std::size_t j = 0; j < n_; ++j) {
        out[j] = a[j] * b[j];
    }
    return out;
}

Subspace SiteAlgebra::point_ideal(std::size_t j) const
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n_; ++k) {
        if (k != j) {
            idx.push_back(k);
        }
    }
    return Subspace::coordinate(field_, n_, idx);
}

Matrix SiteAlgebra::multiplication(const Vec& s) const
{
    Matrix m(field_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        m(j, j) = s[j];
    }
    return m;
}

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> mul) : mul_(std::move(mul))
{
    const std::size_t n = mul_.size();
    if (n == 0) {
        throw InputError("empty group table");
    }
    for (const auto& row : mul_) {
        if (!is_bijection(row, n)) {
            throw InputError("group table row is not a permutation");
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            ok = mul_[e][a] == a && mul_[a][e] == a;
        }
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) {
        throw InputError("group table has no identity");
    }
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (mul_[a][b] == identity_) {
                inverse_[a] = b;
            }
        }
    }
}

GroupTable GroupTable::trivial()
{
    return GroupTable(std::vector<std::vector<std::size_t>>{{0}});
}

PointPermutationAction::PointPermutationAction(GroupTable table, std::vector<Permutation> perms, std::size_t points)
    : table_(std::move(table)), perms_(std::move(perms)), n_(points)
{
    if (perms_.size() != table_.order()) {
        throw InputError("point action has " + std::to_string(perms_.size()) + " maps for a group of order " +
                         std::to_string(table_.order()));
    }
    for (std::size_t g = 0; g < perms_.size(); ++g) {
        if (!is_bijection(perms_[g], n_)) {
            throw InputError("point map of group element " + std::to_string(g) + " is not a bijection");
        }
    }
    for (std::size_t a = 0; a < perms_.size(); ++a) {
        for (std::size_t b = 0; b < perms_.size(); ++b) {
            if (perms_[table_.mul(a, b)] != compose(perms_[a], perms_[b])) {
                throw InputError("point maps do not respect the group table at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
            }
        }
    }
    orbit_of_.assign(n_, n_);
    for (std::size_t p = 0; p < n_; ++p) {
        if (orbit_of_[p] != n_) {
            continue;
        }
        std::vector<std::size_t> orbit;
        for (const auto& perm : perms_) {
            orbit.push_back(perm[p]);
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (std::size_t q : orbit) {
            orbit_of_[q] = orbits_.size();
        }
        orbits_.push_back(std::move(orbit));
    }
}

PointPermutationAction PointPermutationAction::trivial(std::size_t points)
{
    Permutation id(points);
    for (std::size_t i = 0; i < points; ++i) {
        id[i] = i;
    }
    return PointPermutationAction(GroupTable::trivial(), {id}, points);
}

OrbitStabilizer orbit_stabilizer(const PointPermutationAction& act, std::size_t point)
{
    if (point >= act.points()) {
        throw InputError("point " + std::to_string(point + 1) + " out of range 1.." + std::to_string(act.points()));
    }
    OrbitStabilizer out;
    out.orbit = act.orbits()[act.orbit_index(point)];
    for (std::size_t g = 0; g < act.group().order(); ++g) {
        if (act.apply(g, point) == point) {
            out.stabilizer.push_back(g);
        }
    }
    return out;
}

Matrix scalar_action_matrix(const FieldPtr& field, const Permutation& p)
{
    Matrix m(field, p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        m(p[j], j) = Cyc(field, 1);
    }
    return m;
}

Vec induced_scalar_action(const PointPermutationAction& act, std::size_t g, const Vec& s)
{
    if (s.size() != act.points()) {
        throw InputError("site algebra element of the wrong length");
    }
    Vec out(s);
    for (std::size_t j = 0; j < s.size(); ++j) {
        out[act.apply(g, j)] = s[j];
    }
    return out;
}

InvariantSubalgebra invariants(const SiteAlgebra& s, const PointPermutationAction& act)
{
    if (act.points() != s.points()) {
        throw InputError("point action and site algebra disagree on the number of points");
    }
    InvariantSubalgebra r{Subspace(s.field(), s.points()), {}};
    for (const auto& orbit : act.orbits()) {
        Vec v = zero_vector(s.field(), s.points());
        for (std::size_t p : orbit) {
            v[p] = Cyc(s.field(), 1);
        }
        r.orbit_indicators.push_back(std::move(v));
    }
    r.space = Subspace::span(s.field(), s.points(), r.orbit_indicators);
    return r;
}

bool is_ideal_of_invariants(const InvariantSubalgebra& r, const Subspace& i)
{
    if (!r.space.contains(i)) {
        return false;
    }
    for (const auto& v : i.basis_vectors()) {
        for (const auto& ind : r.orbit_indicators) {
            Vec prod(v);
            for (std::size_t j = 0; j < v.size(); ++j) {
                prod[j] = v[j] * ind[j];
            }
            if (!i.contains(prod)) {
                return false;
            }
        }
    }
    return true;
}

Subspace orbit_ideal(const SiteAlgebra& s, const PointPermutationAction& act, std::size_t orbit)
{
    const InvariantSubalgebra r = invariants(s, act);
    std::vector<Vec> gens;
    for (std::size_t o = 0; o < r.orbit_indicators.size(); ++o) {
        if (o != orbit) {
            gens.push_back(r.orbit_indicators[o]);
        }
    }
    return Subspace::span(s.field(), s.points(), gens);
}

IdealOver ideal_over(const SiteAlgebra& s, const PointPermutationAction& act, const Subspace& i)
{
    if (i.ambient_dim() != s.points() || !is_ideal_of_invariants(invariants(s, act), i)) {
        throw InputError("not an ideal of the invariant subalgebra: " + i.to_string());
    }
    IdealOver out{{}, Subspace(s.field(), s.points()), Subspace::full(s.field(), s.points())};
    std::vector<Vec> products;
    for (const auto& v : i.basis_vectors()) {
        for (std::size_t j = 0; j < s.points(); ++j) {
            products.push_back(s.product(v, unit_vector(s.field(), s.points(), j)));
        }
    }
    out.generated = Subspace::span(s.field(), s.points(), products);
    for (std::size_t j = 0; j < s.points(); ++j) {
        const Subspace mj = s.point_ideal(j);
        if (mj.contains(i)) {
            out.points.push_back(j);
            out.radical = out.radical.intersect(mj);
        }
    }
    return out;
}

} // namespace tca
