#include "tca/repkit.hpp"

#include "tca/errors.hpp"

#include <algorithm>

namespace tca {

namespace {

bool next_subset(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

// Kernel of z -> (flattened) sum_l z_l columns[l], as a subspace of L coordinates.
Subspace kernel_of_columns(const FieldPtr& f, std::size_t dim_l, const std::vector<Vec>& columns, std::size_t rows)
{
    if (dim_l == 0) {
        return Subspace(f, 0);
    }
    if (rows == 0) {
        return Subspace::full(f, dim_l);
    }
    return kernel(Matrix::from_columns(f, columns, rows));
}

} // namespace

Abelianization abelianization(const FixedAlgebra& fa)
{
    Subspace derived = derived_and_center(*fa.algebra()).derived;
    Subspace chars = derived.annihilator();
    return {std::move(derived), std::move(chars)};
}

bool is_character(const FixedAlgebra& fa, const Vec& lambda)
{
    if (lambda.size() != fa.dim()) {
        return false;
    }
    return abelianization(fa).characters.contains(lambda);
}

LieRep character_rep(LiePtr algebra, const Vec& coeffs, std::string label)
{
    if (coeffs.size() != algebra->dim()) {
        throw InputError("character with " + std::to_string(coeffs.size()) + " coefficients on an algebra of dimension " +
                         std::to_string(algebra->dim()));
    }
    std::vector<Matrix> ms;
    for (const auto& c : coeffs) {
        Matrix m(algebra->field(), 1, 1);
        m(0, 0) = c;
        ms.push_back(std::move(m));
    }
    LieRep rep(std::move(algebra), 1, std::move(ms), std::move(label));
    rep.validate();
    return rep;
}

Subspace intertwiners(const LieRep& a, const LieRep& b)
{
    if (a.algebra()->dim() != b.algebra()->dim()) {
        throw InputError("intertwiners between representations of different algebras");
    }
    const auto& f = a.algebra()->field();
    const std::size_t da = a.dim(), db = b.dim(), unknowns = da * db;
    // T is db x da, unknown (r, c) at r * da + c.
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < a.matrices().size(); ++k) {
        const Matrix& am = a.matrix(k);
        const Matrix& bm = b.matrix(k);
        for (std::size_t r = 0; r < db; ++r) {
            for (std::size_t c = 0; c < da; ++c) {
                Vec row = zero_vector(f, unknowns);
                bool any = false;
                for (std::size_t s = 0; s < da; ++s) {
                    if (!am(s, c).is_zero()) {
                        row[r * da + s] += am(s, c);
                        any = true;
                    }
                }
                for (std::size_t s = 0; s < db; ++s) {
                    if (!bm(r, s).is_zero()) {
                        row[s * da + c] -= bm(r, s);
                        any = true;
                    }
                }
                if (any) {
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    if (rows.empty()) {
        return Subspace::full(f, unknowns);
    }
    return kernel(Matrix::from_rows(f, rows, unknowns));
}

bool burnside_irreducible(const LieRep& rep)
{
    const std::size_t d = rep.dim();
    if (d == 0) {
        return false;
    }
    if (rep.matrices().empty()) {
        return d == 1;
    }
    // A commutant bigger than the scalars rules irreducibility out cheaply.
    if (intertwiners(rep, rep).dim() != 1) {
        return false;
    }
    return algebra_closure(rep.matrices(), true).dim() == d * d;
}

bool iso_test(const LieRep& a, const LieRep& b)
{
    if (!burnside_irreducible(a) || !burnside_irreducible(b)) {
        throw InputError("iso_test needs irreducible representations (" + a.label() + ", " + b.label() + ")");
    }
    return a.dim() == b.dim() && !intertwiners(a, b).is_zero();
}

SectionBundle::SectionBundle(FixedAlgebra fa) : fa_(std::move(fa))
{
    for (std::size_t p = 0; p < fa_.action()->points(); ++p) {
        fibres_.push_back(isotropy_algebra(fa_, p));
    }
}

void SectionBundle::check_fibre(std::size_t point, const LieRep& rep) const
{
    if (point >= fibres_.size()) {
        throw InputError("point " + std::to_string(point + 1) + " out of range");
    }
    const LiePtr& alg = fibres_[point].algebra;
    if (rep.algebra() != alg && !(*rep.algebra() == *alg)) {
        throw InputError("representation " + rep.label() + " is not over the isotropy algebra at " +
                         action().site().label(point));
    }
}

LieRep SectionBundle::transport(std::size_t gamma, std::size_t point, const LieRep& phi) const
{
    const auto& act = action();
    const std::size_t source = act.move(act.table().inverse(gamma), point);
    check_fibre(source, phi);
    const Matrix back = inverse(local_automorphism(act, gamma, point));
    const Subspace& target_space = fibres_[point].space;
    const Subspace& source_space = fibres_[source].space;
    Matrix h(act.field(), source_space.dim(), target_space.dim());
    for (std::size_t k = 0; k < target_space.dim(); ++k) {
        const Vec image = back.apply(target_space.basis_vector(k));
        if (!source_space.contains(image)) {
            throw CheckFailure("(gamma(M))^-1 does not map g^M into g^(gamma^-1 M)");
        }
        h.set_column(k, source_space.coordinates(image));
    }
    return pullback(phi, fibres_[point].algebra, h, phi.label());
}

Section normalized(const Section& s)
{
    Section out;
    for (const auto& [p, rep] : s) {
        if (!rep.is_trivial()) {
            out.emplace(p, rep);
        }
    }
    return out;
}

std::vector<std::size_t> support(const Section& s)
{
    std::vector<std::size_t> out;
    for (const auto& [p, rep] : normalized(s)) {
        out.push_back(p);
    }
    return out;
}

Section section_action(const SectionBundle& b, std::size_t gamma, const Section& psi)
{
    Section out;
    for (const auto& [p, rep] : psi) {
        const std::size_t m = b.action().move(gamma, p);
        out.emplace(m, b.transport(gamma, m, rep));
    }
    return out;
}

bool same_class(const Section& a, const Section& b)
{
    const Section na = normalized(a), nb = normalized(b);
    if (support(na) != support(nb)) {
        return false;
    }
    for (const auto& [p, rep] : na) {
        if (!iso_test(rep, nb.at(p))) {
            return false;
        }
    }
    return true;
}

bool invariance_test(const SectionBundle& b, const Section& psi)
{
    for (std::size_t g : b.action().generators()) {
        if (!same_class(section_action(b, g, psi), psi)) {
            return false;
        }
    }
    return true;
}

Section complete_section(const SectionBundle& b, const std::vector<std::pair<std::size_t, LieRep>>& seeds)
{
    const auto& act = b.action();
    const auto& pa = act.point_action();
    Section out;
    std::vector<std::size_t> used;
    for (const auto& [p, rep] : seeds) {
        b.check_fibre(p, rep);
        const std::size_t o = pa.orbit_index(p);
        if (std::find(used.begin(), used.end(), o) != used.end()) {
            throw InputError("two section values given on the orbit of " + act.site().label(p));
        }
        used.push_back(o);
        if (rep.is_trivial()) {
            continue;
        }
        for (std::size_t q : pa.orbits()[o]) {
            std::size_t g = 0;
            while (act.move(g, p) != q) {
                ++g;
            }
            out.emplace(q, b.transport(g, q, rep));
        }
    }
    return out;
}

EvalModule build_eval_module(const SectionBundle& b, const std::vector<EvalComponent>& components, const Vec& lambda)
{
    const FixedAlgebra& fa = b.fixed();
    const auto& act = b.action();
    const FieldPtr& f = act.field();
    if (!is_character(fa, lambda)) {
        throw InputError("lambda is not a character of L (it must vanish on [L,L])");
    }
    std::vector<std::size_t> orbits;
    EvalModule out{{}, {}, lambda, LieRep(fa.algebra(), 1, std::vector<Matrix>(fa.dim(), Matrix(f, 1, 1)), "")};
    // Per component, phi_i(ev_(M_i) z_l) for every basis element z_l of L.
    std::vector<std::vector<Matrix>> pulled;
    std::size_t total = 1;
    std::string label;
    for (const auto& c : components) {
        b.check_fibre(c.point, c.rep);
        const std::size_t o = act.point_action().orbit_index(c.point);
        if (std::find(orbits.begin(), orbits.end(), o) != orbits.end()) {
            throw InputError("points of an evaluation module must lie in distinct orbits; " +
                             act.site().label(c.point) + " repeats an orbit");
        }
        orbits.push_back(o);
        const Subspace& gm = b.fibre(c.point).space;
        const Matrix ev = fa.evaluation(c.point);
        std::vector<Matrix> ms;
        for (std::size_t l = 0; l < fa.dim(); ++l) {
            ms.push_back(c.rep.act(gm.coordinates(ev.column(l))));
        }
        pulled.push_back(std::move(ms));
        total *= c.rep.dim();
        label += (label.empty() ? "" : " ⊗ ") + c.rep.label() + "@" + act.site().label(c.point);
        out.points.push_back(c.point);
        out.components.push_back(c.rep);
    }
    std::vector<Matrix> mats;
    for (std::size_t l = 0; l < fa.dim(); ++l) {
        Matrix m = Matrix::identity(f, total).scaled(lambda[l]);
        std::size_t before = 1;
        for (std::size_t i = 0; i < components.size(); ++i) {
            const std::size_t di = components[i].rep.dim();
            const std::size_t after = total / (before * di);
            m = m + kron(kron(Matrix::identity(f, before), pulled[i][l]), Matrix::identity(f, after));
            before *= di;
        }
        mats.push_back(std::move(m));
    }
    bool zero = true;
    for (const auto& x : lambda) {
        zero = zero && x.is_zero();
    }
    if (!zero) {
        label = "W" + to_string(lambda) + (label.empty() ? "" : " ⊗ " + label);
    }
    out.rep = LieRep(fa.algebra(), total, std::move(mats), label.empty() ? "trivial" : label);
    if (!out.rep.is_homomorphism()) {
        throw CheckFailure("evaluation module is not a representation of L");
    }
    return out;
}

EvalModule t_map_at(const SectionBundle& b, const Section& psi, const std::vector<std::size_t>& representatives)
{
    if (!invariance_test(b, psi)) {
        throw InputError("section is not invariant");
    }
    const Section s = normalized(psi);
    const auto& pa = b.action().point_action();
    std::vector<std::size_t> needed;
    for (const auto& [p, rep] : s) {
        needed.push_back(pa.orbit_index(p));
    }
    std::sort(needed.begin(), needed.end());
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
    std::vector<std::size_t> got;
    std::vector<EvalComponent> comps;
    for (std::size_t p : representatives) {
        if (!s.count(p)) {
            throw InputError("representative " + b.action().site().label(p) + " is outside the support");
        }
        got.push_back(pa.orbit_index(p));
        comps.push_back({p, s.at(p)});
    }
    std::vector<std::size_t> sorted = got;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != needed) {
        throw InputError("representatives must pick exactly one point from each orbit of the support");
    }
    return build_eval_module(b, comps, zero_vector(b.action().field(), b.fixed().dim()));
}

EvalModule t_map(const SectionBundle& b, const Section& psi)
{
    const auto& pa = b.action().point_action();
    std::vector<std::size_t> reps;
    for (std::size_t p : support(psi)) {
        const std::size_t r = pa.representative(p);
        if (std::find(reps.begin(), reps.end(), r) == reps.end()) {
            reps.push_back(r);
        }
    }
    std::sort(reps.begin(), reps.end());
    return t_map_at(b, psi, reps);
}

Catalog builtin_catalog(const SectionBundle& b, unsigned max_sl2)
{
    const auto& g = *b.action().g();
    const FieldPtr& f = g.field();
    unsigned n = 2;
    while ((n * n - 1) < g.dim()) {
        ++n;
    }
    const bool is_sl = n * n - 1 == g.dim() && g == build_sl(f, n);
    Catalog out;
    if (!is_sl) {
        return out;
    }
    for (std::size_t p = 0; p < b.action().points(); ++p) {
        if (!b.fibre(p).space.is_full()) {
            continue;
        }
        const LiePtr& alg = b.algebra(p);
        if (n == 2) {
            for (unsigned m = 1; m <= max_sl2; ++m) {
                out.push_back({p, "V(" + std::to_string(m) + ")", sl2_irrep(alg, m)});
            }
        } else {
            const LieRep nat(alg, n, sl_defining_matrices(f, n), "natural");
            out.push_back({p, "natural", nat});
            out.push_back({p, "dual", dual_rep(nat)});
            out.push_back({p, "adjoint", adjoint_rep(alg)});
        }
    }
    return out;
}

KernelChecks kernel_conditions(const FixedAlgebra& fa, const Vec& lambda, const LieRep& rho_psi)
{
    const FieldPtr& f = fa.action()->field();
    const std::size_t dl = fa.dim(), d = rho_psi.dim();
    std::vector<Vec> rho_cols, sum_cols, lambda_cols;
    const Vec id = Matrix::identity(f, d).flatten();
    for (std::size_t l = 0; l < dl; ++l) {
        const Vec r = rho_psi.matrix(l).flatten();
        rho_cols.push_back(r);
        sum_cols.push_back(r + scale(lambda[l], id));
        lambda_cols.push_back(Vec{lambda[l]});
    }
    Subspace kr = kernel_of_columns(f, dl, rho_cols, d * d);
    Subspace kl = kernel_of_columns(f, dl, lambda_cols, 1);
    Subspace ks = kernel_of_columns(f, dl, sum_cols, d * d);
    const bool vanishes = is_character(fa, lambda);
    bool semisimple = false;
    if (is_ideal(*fa.algebra(), kr)) {
        semisimple = killing_semisimple_test(quotient(*fa.algebra(), kr).algebra).kind == ReductiveKind::semisimple;
    }
    const bool inter = ks == kl.intersect(kr);
    return {vanishes, semisimple, inter, std::move(kr), std::move(kl), std::move(ks)};
}

Classification classify(const SectionBundle& b, const LieRep& rep, const Catalog& catalog, std::size_t support_bound)
{
    const FixedAlgebra& fa = b.fixed();
    const auto& act = b.action();
    const FieldPtr& f = act.field();
    if (!(*rep.algebra() == *fa.algebra())) {
        throw InputError("classify needs a representation of L");
    }
    if (!burnside_irreducible(rep)) {
        throw InputError("classify needs an irreducible representation");
    }
    const std::size_t d = rep.dim();
    Classification out;
    // All central action goes into lambda; the trace of rho - lambda vanishes.
    out.lambda = zero_vector(f, fa.dim());
    const Cyc inv_d = Cyc(f, static_cast<long>(d)).inverse();
    std::vector<Matrix> shifted;
    for (std::size_t l = 0; l < fa.dim(); ++l) {
        out.lambda[l] = rep.matrix(l).trace() * inv_d;
        shifted.push_back(rep.matrix(l) - Matrix::identity(f, d).scaled(out.lambda[l]));
    }
    if (!is_character(fa, out.lambda)) {
        throw CheckFailure("normalized trace of an irreducible representation is not a character");
    }
    const LieRep target(fa.algebra(), d, std::move(shifted), rep.label() + " - lambda");

    const auto& orbits = act.point_action().orbits();
    const Vec zero = zero_vector(f, fa.dim());
    for (std::size_t size = 0; size <= std::min(support_bound, orbits.size()); ++size) {
        std::vector<std::size_t> chosen(size);
        for (std::size_t i = 0; i < size; ++i) {
            chosen[i] = i;
        }
        do {
            std::vector<std::vector<const CatalogEntry*>> options;
            for (std::size_t o : chosen) {
                std::vector<const CatalogEntry*> here;
                for (const auto& e : catalog) {
                    if (e.point == orbits[o].front() && !e.rep.is_trivial()) {
                        here.push_back(&e);
                    }
                }
                options.push_back(std::move(here));
            }
            if (std::any_of(options.begin(), options.end(), [](const auto& v) { return v.empty(); })) {
                continue;
            }
            std::vector<std::size_t> pick(size, 0);
            for (;;) {
                std::size_t dim = 1;
                for (std::size_t i = 0; i < size; ++i) {
                    dim *= options[i][pick[i]]->rep.dim();
                }
                if (dim == d) {
                    ++out.candidates_tried;
                    std::vector<EvalComponent> comps;
                    for (std::size_t i = 0; i < size; ++i) {
                        comps.push_back({options[i][pick[i]]->point, options[i][pick[i]]->rep});
                    }
                    const EvalModule m = build_eval_module(b, comps, zero);
                    // target is irreducible; a nonzero map from an equal-dimensional module is an isomorphism.
                    if (!intertwiners(m.rep, target).is_zero()) {
                        std::vector<std::pair<std::size_t, LieRep>> seeds;
                        for (std::size_t i = 0; i < size; ++i) {
                            seeds.emplace_back(comps[i].point, comps[i].rep);
                            out.representatives.push_back(comps[i].point);
                            out.labels.push_back(options[i][pick[i]]->label);
                        }
                        out.section = complete_section(b, seeds);
                        out.module = t_map(b, out.section);
                        out.checks = kernel_conditions(fa, out.lambda, out.module->rep);
                        if (!out.checks->all()) {
                            throw CheckFailure("classified pair violates the kernel conditions");
                        }
                        out.found = true;
                        return out;
                    }
                }
                std::size_t i = 0;
                while (i < size && ++pick[i] == options[i].size()) {
                    pick[i++] = 0;
                }
                if (i == size) {
                    break;
                }
            }
        } while (next_subset(chosen, orbits.size()));
    }
    return out;
}

} // namespace tca
