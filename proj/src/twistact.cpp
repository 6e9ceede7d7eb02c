#include "tca/twistact.hpp"

#include "tca/errors.hpp"

#include <algorithm>

namespace tca {

namespace {

Matrix point_indicator_operator(const TwistedAction& act, std::size_t point)
{
    return act.multiplication_operator(unit_vector(act.field(), act.points(), point));
}

Matrix basis_columns(const Subspace& s)
{
    return s.basis().transpose();
}

// u_gamma = G_gamma P_gamma^-1, without the property checks.
std::vector<Matrix> raw_cocycle(const TwistedAction& act)
{
    std::vector<Matrix> u;
    u.reserve(act.order());
    for (std::size_t g = 0; g < act.order(); ++g) {
        u.push_back(act.element(g) * act.scalar_operator(act.table().inverse(g)));
    }
    return u;
}

bool is_automorphism_of(const LieAlgebra& a, const Matrix& m, std::string* failing_pair)
{
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            if (m.apply(a.structure(i, j)) != a.bracket(m.column(i), m.column(j))) {
                if (failing_pair) {
                    *failing_pair = "[" + a.names()[i] + ", " + a.names()[j] + "]";
                }
                return false;
            }
        }
    }
    return true;
}

std::string point_name(const TwistedAction& act, std::size_t p)
{
    return act.site().label(p);
}

} // namespace

LieAlgebra current_algebra(const LieAlgebra& g, std::size_t points)
{
    const auto f = g.field();
    const std::size_t n = points;
    const std::size_t d = g.dim() * n;
    std::vector<Vec> table(d * d, zero_vector(f, d));
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t k = 0; k < g.dim(); ++k) {
            const Vec& c = g.structure(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                Vec& out = table[(i * n + j) * d + k * n + j];
                for (std::size_t l = 0; l < g.dim(); ++l) {
                    out[l * n + j] = c[l];
                }
            }
        }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            names.push_back(g.names()[i] + "⊗e" + std::to_string(j + 1));
        }
    }
    return LieAlgebra(f, d, std::move(table), std::move(names), g.label() + "⊗S");
}

TwistedAction::TwistedAction(LiePtr g, SiteAlgebra site, LiePtr current, std::vector<Matrix> elements,
                             std::vector<std::size_t> generators, PointPermutationAction points)
    : g_(std::move(g)), site_(std::move(site)), current_(std::move(current)), elements_(std::move(elements)),
      generators_(std::move(generators)), points_(std::move(points))
{
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        by_hash_[elements_[i].hash()].push_back(i);
    }
}

Matrix TwistedAction::scalar_operator(std::size_t gamma) const
{
    return kron(Matrix::identity(field(), g_->dim()), scalar_action_matrix(field(), points_.perm(gamma)));
}

Matrix TwistedAction::multiplication_operator(const Vec& s) const
{
    return kron(Matrix::identity(field(), g_->dim()), site_.multiplication(s));
}

Matrix TwistedAction::evaluation(std::size_t point) const
{
    Matrix m(field(), g_->dim(), dim());
    for (std::size_t i = 0; i < g_->dim(); ++i) {
        m(i, index(i, point)) = Cyc(field(), 1);
    }
    return m;
}

std::size_t TwistedAction::find(const Matrix& m) const
{
    if (const auto it = by_hash_.find(m.hash()); it != by_hash_.end()) {
        for (std::size_t i : it->second) {
            if (elements_[i] == m) {
                return i;
            }
        }
    }
    throw InputError("matrix is not an element of the group");
}

std::string TwistedAction::format(const Vec& z) const
{
    const std::size_t n = points();
    std::string out;
    for (std::size_t i = 0; i < g_->dim(); ++i) {
        bool nonzero = false;
        std::string s = "(";
        for (std::size_t j = 0; j < n; ++j) {
            const Cyc& c = z[index(i, j)];
            nonzero = nonzero || !c.is_zero();
            s += (j ? "," : "") + c.to_string();
        }
        if (nonzero) {
            out += (out.empty() ? "" : " + ") + g_->names()[i] + "⊗" + s + ")";
        }
    }
    return out.empty() ? "0" : out;
}

std::string TwistedAction::element_label(std::size_t gamma) const
{
    return "g" + std::to_string(gamma);
}

Permutation extract_point_permutation(const Matrix& m, std::size_t d, std::size_t points)
{
    const std::size_t n = points;
    Permutation p(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t target = n;
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t col = i * n + j;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (m(r, col).is_zero()) {
                    continue;
                }
                if (target == n) {
                    target = r % n;
                } else if (target != r % n) {
                    throw InputError("the image of g⊗e" + std::to_string(j + 1) +
                                     " is spread over several points, so g⊗M_j is not mapped to an ideal g⊗M_k");
                }
            }
        }
        if (target == n) {
            throw InputError("g⊗e" + std::to_string(j + 1) + " is mapped to zero");
        }
        p[j] = target;
    }
    if (!is_bijection(p, n)) {
        throw InputError("the ideals g⊗M_j are not permuted bijectively");
    }
    return p;
}

ActionPtr build_action(LiePtr g, SiteAlgebra site, const std::vector<Matrix>& generators, std::size_t cap)
{
    if (!g) {
        throw InputError("no Lie algebra given");
    }
    const FieldPtr field = g->field();
    const std::size_t d = g->dim(), n = site.points(), dn = d * n;
    auto current = std::make_shared<const LieAlgebra>(current_algebra(*g, n));
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const Matrix& m = generators[k];
        const std::string which = "generator " + std::to_string(k + 1);
        if (m.rows() != dn || m.cols() != dn) {
            throw InputError(which + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             ", expected " + std::to_string(dn) + "x" + std::to_string(dn));
        }
        if (rank(m) != dn) {
            throw InputError(which + " is not invertible");
        }
        std::string pair;
        if (!is_automorphism_of(*current, m, &pair)) {
            throw InputError(which + " is not a Lie automorphism: it fails on " + pair);
        }
        try {
            extract_point_permutation(m, d, n);
        } catch (const InputError& e) {
            throw InputError(which + ": " + e.what());
        }
    }

    // Breadth-first closure; right[x][k] is the index of element x times generator k.
    std::vector<Matrix> elements{Matrix::identity(field, dn)};
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash{{elements[0].hash(), {0}}};
    std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};
    std::vector<std::vector<std::size_t>> right;
    for (std::size_t x = 0; x < elements.size(); ++x) {
        right.emplace_back(generators.size());
        for (std::size_t k = 0; k < generators.size(); ++k) {
            Matrix p = elements[x] * generators[k];
            const std::size_t h = p.hash();
            std::size_t idx = elements.size();
            for (std::size_t c : by_hash[h]) {
                if (elements[c] == p) {
                    idx = c;
                    break;
                }
            }
            if (idx == elements.size()) {
                if (elements.size() >= cap) {
                    throw InputError("group not finite within cap " + std::to_string(cap));
                }
                by_hash[h].push_back(idx);
                elements.push_back(std::move(p));
                parent.emplace_back(x, k);
            }
            right[x][k] = idx;
        }
    }
    const std::size_t order = elements.size();
    // Every element b is parent(b) * generator, so a*b = (a*parent(b)) * generator.
    std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a) {
        mul[a][0] = a;
        for (std::size_t b = 1; b < order; ++b) {
            mul[a][b] = right[mul[a][parent[b].first]][parent[b].second];
        }
    }
    std::vector<std::size_t> gen_idx;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        gen_idx.push_back(right[0][k]);
    }
    std::vector<Permutation> perms;
    for (const auto& m : elements) {
        perms.push_back(extract_point_permutation(m, d, n));
    }
    PointPermutationAction points(GroupTable(std::move(mul)), std::move(perms), n);
    return std::make_shared<const TwistedAction>(std::move(g), std::move(site), std::move(current),
                                                 std::move(elements), std::move(gen_idx), std::move(points));
}

Matrix reynolds_operator(const TwistedAction& act)
{
    Matrix sum(act.field(), act.dim(), act.dim());
    for (const auto& m : act.elements()) {
        sum = sum + m;
    }
    return sum.scaled(Cyc(act.field(), static_cast<long>(act.order())).inverse());
}

FixedAlgebra::FixedAlgebra(ActionPtr action, Subspace space, LiePtr algebra, InvariantSubalgebra invariants)
    : action_(std::move(action)), space_(std::move(space)), algebra_(std::move(algebra)),
      invariants_(std::move(invariants))
{
}

Matrix FixedAlgebra::r_action(const Vec& r) const
{
    if (!invariants_.space.contains(r)) {
        throw InputError("element " + tca::to_string(r) + " is not in R");
    }
    const Matrix m = action_->multiplication_operator(r);
    Matrix out(action_->field(), dim(), dim());
    for (std::size_t l = 0; l < dim(); ++l) {
        out.set_column(l, coordinates(m.apply(space_.basis_vector(l))));
    }
    return out;
}

Matrix FixedAlgebra::evaluation(std::size_t point) const
{
    const Matrix ev = action_->evaluation(point);
    Matrix out(action_->field(), ev.rows(), dim());
    for (std::size_t l = 0; l < dim(); ++l) {
        out.set_column(l, ev.apply(space_.basis_vector(l)));
    }
    return out;
}

FixedAlgebra fixed_point_algebra(ActionPtr action)
{
    const auto& act = *action;
    const Matrix id = Matrix::identity(act.field(), act.dim());
    // Fixed by the generators means fixed by the whole group.
    std::vector<Matrix> blocks;
    for (std::size_t g : act.generators()) {
        blocks.push_back(act.element(g) - id);
    }
    Subspace space = blocks.empty() ? Subspace::full(act.field(), act.dim()) : kernel(vstack(blocks));
    if (!is_subalgebra(*act.current(), space)) {
        throw CheckFailure("fixed points are not closed under the bracket");
    }
    auto algebra = std::make_shared<const LieAlgebra>(subalgebra(*act.current(), space, "L"));
    InvariantSubalgebra r = invariants(act.site(), act.point_action());
    for (const auto& ind : r.orbit_indicators) {
        const Matrix m = act.multiplication_operator(ind);
        for (const auto& z : space.basis_vectors()) {
            if (!space.contains(m.apply(z))) {
                throw CheckFailure("L is not stable under multiplication by R");
            }
        }
    }
    return FixedAlgebra(std::move(action), std::move(space), std::move(algebra), std::move(r));
}

Matrix twisted_conjugate(const TwistedAction& act, std::size_t gamma, const Matrix& phi)
{
    if (phi.rows() != act.dim() || phi.cols() != act.dim()) {
        throw InputError("twisted conjugate of a matrix of the wrong size");
    }
    // 1 (x) gamma sends x_i (x) e_j to x_i (x) e_(gamma j), so conjugation only relabels entries.
    const std::size_t n = act.points();
    const Permutation& perm = act.point_action().perm(gamma);
    std::vector<std::size_t> sigma(act.dim());
    for (std::size_t k = 0; k < act.dim(); ++k) {
        sigma[k] = (k / n) * n + perm[k % n];
    }
    Matrix out(act.field(), act.dim(), act.dim());
    for (std::size_t r = 0; r < act.dim(); ++r) {
        for (std::size_t c = 0; c < act.dim(); ++c) {
            if (!phi(r, c).is_zero()) {
                out(sigma[r], sigma[c]) = phi(r, c);
            }
        }
    }
    return out;
}

std::vector<Matrix> cocycle(const TwistedAction& act)
{
    const auto u = raw_cocycle(act);
    for (std::size_t g = 0; g < act.order(); ++g) {
        for (std::size_t b = 0; b < act.points(); ++b) {
            const Matrix m = point_indicator_operator(act, b);
            if (u[g] * m != m * u[g]) {
                throw CheckFailure("u_" + act.element_label(g) + " is not S-linear");
            }
        }
        std::string pair;
        if (!is_automorphism_of(*act.current(), u[g], &pair)) {
            throw CheckFailure("u_" + act.element_label(g) + " is not a Lie automorphism on " + pair);
        }
    }
    for (std::size_t g = 0; g < act.order(); ++g) {
        for (std::size_t h = 0; h < act.order(); ++h) {
            if (u[act.table().mul(g, h)] != u[g] * twisted_conjugate(act, g, u[h])) {
                throw CheckFailure("crossed homomorphism identity fails at (" + act.element_label(g) + ", " +
                                   act.element_label(h) + ")");
            }
        }
    }
    return u;
}

Matrix local_automorphism(const TwistedAction& act, const Matrix& psi, std::size_t point)
{
    const std::size_t d = act.g()->dim(), n = act.points();
    if (psi.rows() != act.dim() || psi.cols() != act.dim()) {
        throw InputError("local automorphism of a matrix of the wrong size");
    }
    if (point >= n) {
        throw InputError("point " + std::to_string(point + 1) + " out of range");
    }
    Matrix out(act.field(), d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t col = act.index(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                const Cyc& c = psi(act.index(k, point), col);
                if (!c.is_zero()) {
                    out(k, i) += c;
                }
            }
        }
    }
    return out;
}

Matrix local_automorphism(const TwistedAction& act, std::size_t gamma, std::size_t point)
{
    return local_automorphism(act, act.element(gamma), point);
}

Subspace isotropy_space(const TwistedAction& act, std::size_t point)
{
    const auto os = orbit_stabilizer(act.point_action(), point);
    const std::size_t d = act.g()->dim();
    const Matrix id = Matrix::identity(act.field(), d);
    std::vector<Matrix> blocks;
    for (std::size_t g : os.stabilizer) {
        blocks.push_back(local_automorphism(act, g, point) - id);
    }
    return kernel(vstack(blocks));
}

IsotropyAlgebra isotropy_algebra(const FixedAlgebra& fa, std::size_t point)
{
    const auto& act = *fa.action();
    Subspace space = isotropy_space(act, point);
    if (!is_subalgebra(*act.g(), space)) {
        throw CheckFailure("g^M is not closed under the bracket at " + point_name(act, point));
    }
    auto algebra = std::make_shared<const LieAlgebra>(subalgebra(*act.g(), space, "g^" + point_name(act, point)));
    ReductiveReport red = killing_semisimple_test(*algebra);
    if (red.kind == ReductiveKind::neither) {
        throw CheckFailure("g^M is not reductive at " + point_name(act, point));
    }
    const Subspace image =
        fa.dim() == 0 ? Subspace(act.field(), act.g()->dim()) : Subspace::column_space(fa.evaluation(point));
    if (image != space) {
        throw CheckFailure("ev_M(L) differs from g^M at " + point_name(act, point));
    }
    return {point, orbit_stabilizer(act.point_action(), point).stabilizer, std::move(space), std::move(algebra),
            std::move(red)};
}

IsotropyTransportResult isotropy_transport_check(const TwistedAction& act, std::size_t gamma, std::size_t point)
{
    const std::size_t image = act.move(gamma, point);
    Subspace lhs = isotropy_space(act, point);
    Subspace rhs = isotropy_space(act, image).mapped(local_automorphism(act, act.table().inverse(gamma), point));
    const bool holds = lhs == rhs;
    return {holds, image, std::move(lhs), std::move(rhs)};
}

bool IdentityReport::ok() const
{
    return std::all_of(counts.begin(), counts.end(), [](const IdentityCount& c) { return c.failed == 0; });
}

IdentityReport identity_suite(const TwistedAction& act)
{
    const std::size_t order = act.order(), n = act.points();
    const auto& tab = act.table();
    std::vector<std::vector<Matrix>> local(order), local_inv(order);
    for (std::size_t g = 0; g < order; ++g) {
        for (std::size_t p = 0; p < n; ++p) {
            local[g].push_back(local_automorphism(act, g, p));
            local_inv[g].push_back(inverse(local[g].back()));
        }
    }
    std::vector<Matrix> scal;
    for (std::size_t g = 0; g < order; ++g) {
        scal.push_back(act.scalar_operator(g));
    }
    std::vector<Matrix> mult;
    for (std::size_t p = 0; p < n; ++p) {
        mult.push_back(point_indicator_operator(act, p));
    }
    const auto u = raw_cocycle(act);

    IdentityReport rep;
    rep.counts = {{"local twisted action"},    {"inverse of local automorphism"},
                  {"inverse at image point"},  {"transported conjugate"},
                  {"crossed homomorphism"},    {"S-linearity of u"},
                  {"semilinearity"},           {"action reconstruction"},
                  {"isotropy transport"}};
    auto tally = [&](std::size_t which, bool ok, const std::string& where) {
        ++rep.counts[which].checked;
        if (!ok) {
            ++rep.counts[which].failed;
            if (rep.failures.size() < 10) {
                rep.failures.push_back(rep.counts[which].name + " fails at " + where);
            }
        }
    };
    auto at = [&](std::size_t g, std::size_t h, std::size_t p) {
        return "(" + act.element_label(g) + ", " + act.element_label(h) + ", " + point_name(act, p) + ")";
    };

    for (std::size_t g = 0; g < order; ++g) {
        const std::size_t gi = tab.inverse(g);
        for (std::size_t p = 0; p < n; ++p) {
            const std::size_t gp = act.move(g, p), gip = act.move(gi, p);
            tally(1, local_inv[g][p] == local[gi][gip], at(g, g, p));
            tally(2, local[gi][p] == local_inv[g][gp], at(g, g, p));
            tally(8, isotropy_transport_check(act, g, p).holds, at(g, g, p));
        }
        for (std::size_t h = 0; h < order; ++h) {
            const Matrix conj = twisted_conjugate(act, g, act.element(h));
            const std::size_t gh = tab.mul(g, h);
            for (std::size_t p = 0; p < n; ++p) {
                tally(0, local[gh][p] == local[g][p] * local_automorphism(act, conj, p), at(g, h, p));
                tally(3, local_automorphism(act, conj, act.move(g, p)) == local[h][p], at(g, h, p));
            }
            tally(4, u[gh] == u[g] * twisted_conjugate(act, g, u[h]), at(g, h, 0));
        }
        for (std::size_t b = 0; b < n; ++b) {
            tally(5, u[g] * mult[b] == mult[b] * u[g], at(g, g, b));
            tally(6, act.element(g) * mult[b] == mult[act.move(g, b)] * act.element(g), at(g, g, b));
        }
        tally(7, act.element(g) == u[g] * scal[g], at(g, g, 0));
    }
    return rep;
}

bool joint_evaluation_surjective(const FixedAlgebra& fa, const std::vector<std::size_t>& points)
{
    const auto& act = *fa.action();
    std::vector<std::size_t> seen;
    std::size_t target = 0;
    std::vector<Matrix> blocks;
    for (std::size_t p : points) {
        const std::size_t o = act.point_action().orbit_index(p);
        if (std::find(seen.begin(), seen.end(), o) != seen.end()) {
            throw InputError("points " + point_name(act, p) + " and an earlier point lie in the same orbit");
        }
        seen.push_back(o);
        target += isotropy_space(act, p).dim();
        blocks.push_back(fa.evaluation(p));
    }
    if (blocks.empty() || fa.dim() == 0) {
        return target == 0;
    }
    return rank(vstack(blocks)) == target;
}

Contraction ideal_contraction(const FixedAlgebra& fa, const Subspace& m)
{
    const auto& act = *fa.action();
    const LieAlgebra& l = *fa.algebra();
    if (m.ambient_dim() != l.dim() || !is_ideal(l, m)) {
        throw InputError("not an ideal of L: " + m.to_string());
    }
    for (const auto& ind : fa.invariants().orbit_indicators) {
        const Matrix r = fa.r_action(ind);
        for (const auto& v : m.basis_vectors()) {
            if (!m.contains(r.apply(v))) {
                throw InputError("ideal of L is not stable under R");
            }
        }
    }
    const std::size_t n = act.points();
    Subspace in_s = Subspace::full(act.field(), n);
    if (fa.dim() > 0) {
        const Subspace big = m.mapped(basis_columns(fa.space()));
        const Matrix q = big.quotient_map();
        // Row block l: coordinates modulo m of e_j * z_l, one column per point j.
        std::vector<Matrix> blocks;
        for (const auto& z : fa.space().basis_vectors()) {
            Matrix block(act.field(), q.rows(), n);
            for (std::size_t j = 0; j < n; ++j) {
                block.set_column(j, q.apply(point_indicator_operator(act, j).apply(z)));
            }
            blocks.push_back(std::move(block));
        }
        const Matrix c = vstack(blocks);
        if (c.rows() > 0) {
            in_s = kernel(c);
        }
    }
    Subspace in_r = in_s.intersect(fa.invariants().space);
    const bool maximal =
        is_ideal_of_invariants(fa.invariants(), in_r) && in_r.dim() + 1 == fa.invariants().space.dim();
    if (m.dim() < l.dim() && is_simple(quotient(l, m).algebra) && !maximal) {
        throw CheckFailure("contraction of a maximal ideal of L is not maximal in R");
    }
    return {std::move(in_s), std::move(in_r), maximal};
}

ProductWithIdeal ideal_times_l(const FixedAlgebra& fa, const Subspace& j)
{
    const auto& act = *fa.action();
    if (j.ambient_dim() != act.points() || !is_ideal_of_invariants(fa.invariants(), j)) {
        throw InputError("not an ideal of R: " + j.to_string());
    }
    std::vector<Vec> prods;
    for (const auto& r : j.basis_vectors()) {
        const Matrix m = act.multiplication_operator(r);
        for (const auto& z : fa.space().basis_vectors()) {
            prods.push_back(m.apply(z));
        }
    }
    Subspace product = Subspace::span(act.field(), act.dim(), prods);
    const bool eq = product == fa.space();
    return {eq, std::move(product)};
}

EpimorphismResult epimorphism_check(const FixedAlgebra& fa, const Subspace& i, const std::vector<Subspace>& ideals)
{
    const auto& act = *fa.action();
    const auto& r = fa.invariants();
    if (i.ambient_dim() != act.points() || !is_ideal_of_invariants(r, i) || i.dim() + 1 != r.space.dim()) {
        throw InputError("not a maximal ideal of R: " + i.to_string());
    }
    const std::size_t point = ideal_over(act.site(), act.point_action(), i).points.front();
    const Subspace gm = isotropy_space(act, point);
    if (ideals.empty()) {
        return {true, point, Matrix(act.field(), 0, gm.dim()), 0};
    }
    const LieAlgebra& l = *fa.algebra();
    std::vector<Matrix> projections;
    std::size_t total = 0;
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        const Contraction c = ideal_contraction(fa, ideals[k]);
        if (c.in_r != i) {
            throw InputError("ideal " + std::to_string(k + 1) + " contracts to " + c.in_r.to_string() + ", not " +
                             i.to_string());
        }
        Quotient q = quotient(l, ideals[k]);
        if (!is_simple(q.algebra)) {
            throw InputError("ideal " + std::to_string(k + 1) + " does not have a simple quotient");
        }
        total += q.algebra.dim();
        projections.push_back(std::move(q.projection));
    }
    const Matrix pi = vstack(projections);
    // ev_M on L in g^M coordinates.
    const Matrix ev = fa.evaluation(point);
    Matrix e(act.field(), gm.dim(), fa.dim());
    for (std::size_t c = 0; c < fa.dim(); ++c) {
        e.set_column(c, gm.coordinates(ev.column(c)));
    }
    Matrix phi(act.field(), total, gm.dim());
    for (std::size_t k = 0; k < gm.dim(); ++k) {
        const auto x = solve(e, unit_vector(act.field(), gm.dim(), k));
        if (!x) {
            throw CheckFailure("ev_M does not map L onto g^M");
        }
        phi.set_column(k, pi.apply(*x));
    }
    const std::size_t rk = rank(phi);
    const bool holds = phi * e == pi && rk == total;
    return {holds, point, std::move(phi), rk};
}

Matrix chevalley_involution(const FieldPtr& field)
{
    Matrix w(field, 3, 3);
    w(1, 0) = Cyc(field, -1);
    w(0, 1) = Cyc(field, -1);
    w(2, 2) = Cyc(field, -1);
    return w;
}

ActionPtr klein_example()
{
    const auto f = CyclotomicField::make(1);
    auto g = std::make_shared<const LieAlgebra>(build_sl(f, 2));
    // sigma_l(e) = (-1)^l f, sigma_l(f) = (-1)^l e, sigma_l(h) = -h
    const Matrix s1 = chevalley_involution(f);
    Matrix s2(f, 3, 3);
    s2(1, 0) = Cyc(f, 1);
    s2(0, 1) = Cyc(f, 1);
    s2(2, 2) = Cyc(f, -1);
    const Matrix swap = scalar_action_matrix(f, {1, 0, 2});
    return build_action(g, SiteAlgebra(f, 3), {kron(s1, swap), kron(s2, swap)});
}

ActionPtr swap_example()
{
    const auto f = CyclotomicField::make(1);
    auto g = std::make_shared<const LieAlgebra>(build_sl(f, 2));
    return build_action(g, SiteAlgebra(f, 2), {kron(chevalley_involution(f), scalar_action_matrix(f, {1, 0}))});
}

ActionPtr onsager_example(unsigned m)
{
    if (m == 0) {
        throw InputError("onsager example needs m >= 1");
    }
    const auto f = CyclotomicField::make(1);
    auto g = std::make_shared<const LieAlgebra>(build_sl(f, 2));
    const std::size_t n = 2 * m;
    Permutation inv(n);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) {
        inv[k] = (n - k) % n;
        labels.push_back(k == 0 ? "1" : k == 1 ? "z" : "z^" + std::to_string(k));
    }
    return build_action(g, SiteAlgebra(f, n, labels),
                        {kron(chevalley_involution(f), scalar_action_matrix(f, inv))});
}

} // namespace tca
