// Acceptance suite: one PASS/FAIL line per criterion. Exact arithmetic
// throughout, so every comparison has zero tolerance; only the runtime
// limits below are pinned numbers.

#include "corpus_modules.hpp"
#include "irreducibility_oracle.hpp"
#include "random_actions.hpp"
#include "test_support.hpp"

#include "tca/errors.hpp"
#include "tca/repkit.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace tca;
using namespace tca::testing;

namespace {

constexpr double klein_limit_seconds = 1.0;
constexpr double identity_limit_seconds = 60.0;
constexpr std::size_t random_action_count = 100;
constexpr unsigned random_seed = 20240611;
constexpr std::size_t support_bound = 2;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << s << " s";
    return out.str();
}

Vec zeros(const SectionBundle& b)
{
    return zero_vector(b.action().field(), b.fixed().dim());
}

LieRep chi(const SectionBundle& b, std::size_t point, long c)
{
    return character_rep(b.algebra(point), int_vector(b.action().field(), {c}), "chi(" + std::to_string(c) + ")");
}

/// Seeds of every invariant section with at most two support orbits whose
/// values come from the catalog, keeping the module dimension at most max_dim.
std::vector<std::vector<std::pair<std::size_t, LieRep>>> catalog_seeds(const SectionBundle& b, const Catalog& cat,
                                                                       std::size_t max_dim)
{
    const auto& pa = b.action().point_action();
    std::vector<std::vector<std::pair<std::size_t, LieRep>>> seeds{{}};
    for (const auto& e : cat) {
        if (e.point == pa.representative(e.point)) {
            seeds.push_back({{e.point, e.rep}});
        }
    }
    for (std::size_t i = 0; i < cat.size(); ++i) {
        for (std::size_t j = i + 1; j < cat.size(); ++j) {
            const auto& a = cat[i];
            const auto& c = cat[j];
            if (a.point != pa.representative(a.point) || c.point != pa.representative(c.point) ||
                pa.orbit_index(a.point) == pa.orbit_index(c.point) || a.rep.dim() * c.rep.dim() > max_dim) {
                continue;
            }
            seeds.push_back({{a.point, a.rep}, {c.point, c.rep}});
        }
    }
    return seeds;
}

/// Every choice of one point per support orbit, in orbit order.
std::vector<std::vector<std::size_t>> representative_choices(const TwistedAction& act, const Section& psi)
{
    const auto& pa = act.point_action();
    std::vector<std::size_t> orbits;
    for (const std::size_t p : support(psi)) {
        const std::size_t o = pa.orbit_index(p);
        if (std::find(orbits.begin(), orbits.end(), o) == orbits.end()) {
            orbits.push_back(o);
        }
    }
    std::sort(orbits.begin(), orbits.end());
    std::vector<std::vector<std::size_t>> out{{}};
    for (const std::size_t o : orbits) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& prefix : out) {
            for (const std::size_t p : pa.orbits()[o]) {
                auto v = prefix;
                v.push_back(p);
                next.push_back(v);
            }
        }
        out = std::move(next);
    }
    return out;
}

bool same_matrices(const LieRep& a, const LieRep& b)
{
    return a.dim() == b.dim() && a.matrices() == b.matrices();
}

struct Classified {
    std::string name;
    KernelChecks checks;
};

// Filled by criterion 4 and read by criterion 5.
std::vector<Classified> classified_pairs;

Outcome criterion_klein()
{
    Outcome o;
    const auto start = Clock::now();
    const ActionPtr act = klein_example();
    const FixedAlgebra fa = fixed_point_algebra(act);
    const FieldPtr f = act->field();
    o.require(fa.dim() == 1, "dim L = " + std::to_string(fa.dim()));
    // h (x) (1,-1,0) sits at h = basis index 2, i.e. coordinates 6 and 7 of 9.
    Vec expected = zero_vector(f, 9);
    expected[6] = Cyc(f, 1);
    expected[7] = Cyc(f, -1);
    o.require(fa.space() == Subspace::span(f, 9, {expected}), "L is not span{h⊗(1,-1,0)}");
    const Subspace r = Subspace::span(f, 3, {int_vector(f, {1, 1, 0}), int_vector(f, {0, 0, 1})});
    o.require(fa.invariants().space == r, "R is not {(a,a,b)}");
    const Subspace j = Subspace::span(f, 3, {int_vector(f, {1, 1, 0})});
    o.require(ideal_times_l(fa, j).equals_l, "J·L != L for J = {(a,a,0)}");
    const double t = seconds_since(start);
    o.require(t < klein_limit_seconds, "runtime " + fmt_seconds(t));
    if (o.ok) {
        o.detail = "dim L = 1, R = {(a,a,b)}, J·L = L in " + fmt_seconds(t);
    }
    return o;
}

std::size_t check_identities(Outcome& o, const ActionPtr& act, const std::string& name)
{
    const IdentityReport rep = identity_suite(*act);
    o.require(rep.ok(), name + ": " + (rep.failures.empty() ? std::string("identity failure") : rep.failures.front()));
    // isotropy_algebra throws CheckFailure unless ev_M(L) = g^M.
    const FixedAlgebra fa = fixed_point_algebra(act);
    for (std::size_t p = 0; p < act->points(); ++p) {
        isotropy_algebra(fa, p);
    }
    std::size_t checked = 0;
    for (const auto& c : rep.counts) {
        checked += c.checked;
    }
    return checked;
}

Outcome criterion_identities()
{
    Outcome o;
    const auto start = Clock::now();
    check_identities(o, klein_example(), "klein");
    check_identities(o, swap_example(), "swap");
    check_identities(o, onsager_example(2), "onsager(2)");
    std::mt19937 rng(random_seed);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < random_action_count; ++i) {
        const ActionPtr act = random_twisted_action(rng);
        o.require(act->field()->conductor() == 12, "random action not over Q(zeta_12)");
        checked += check_identities(o, act, "random action " + std::to_string(i));
    }
    const double t = seconds_since(start);
    o.require(t < identity_limit_seconds, "runtime " + fmt_seconds(t));
    if (o.ok) {
        o.detail = "3 builtins + " + std::to_string(random_action_count) + " random actions over Q(zeta_12), " +
                   std::to_string(checked) + " identity instances on the random actions, in " + fmt_seconds(t);
    }
    return o;
}

void check_dense(Outcome& o, const LieRep& rep, const std::string& name)
{
    const std::size_t d = rep.dim();
    o.require(algebra_closure(rep.matrices(), true).dim() == d * d, name + ": closure dimension below d^2");
    o.require(burnside_irreducible(rep), name + ": burnside_irreducible false");
}

Outcome criterion_evaluation_irreducible()
{
    Outcome o;
    std::size_t modules = 0;
    const SectionBundle sw(fixed_point_algebra(swap_example()));
    for (unsigned m = 1; m <= 4; ++m) {
        for (const std::size_t p : {std::size_t{0}, std::size_t{1}}) {
            const EvalModule e = build_eval_module(sw, {{p, sl2_irrep(sw.algebra(p), m)}}, zeros(sw));
            o.require(e.rep.dim() == m + 1, "swap V(m) has the wrong dimension");
            check_dense(o, e.rep, "swap V(" + std::to_string(m) + ")");
            ++modules;
        }
    }
    const SectionBundle on(fixed_point_algebra(onsager_example(2)));
    const std::vector<std::vector<EvalComponent>> two_orbit{
        {{0, chi(on, 0, 1)}, {1, sl2_irrep(on.algebra(1), 2)}},
        {{1, sl2_irrep(on.algebra(1), 1)}, {2, chi(on, 2, 1)}},
        {{0, chi(on, 0, 2)}, {3, sl2_irrep(on.algebra(3), 3)}},
        {{0, chi(on, 0, 1)}, {2, chi(on, 2, -1)}},
    };
    for (const auto& comps : two_orbit) {
        const EvalModule e = build_eval_module(on, comps, zeros(on));
        check_dense(o, e.rep, "onsager(2) " + e.rep.label());
        o.require(joint_evaluation_surjective(on.fixed(), e.points), "onsager(2): joint evaluation not onto");
        ++modules;
    }
    std::size_t rank_checks = 0;
    for (const auto& act : {klein_example(), swap_example(), onsager_example(2), onsager_example(3)}) {
        const FixedAlgebra fa = fixed_point_algebra(act);
        std::vector<std::size_t> reps;
        for (const auto& orbit : act->point_action().orbits()) {
            reps.push_back(orbit.front());
            o.require(joint_evaluation_surjective(fa, {orbit.back()}), "single-point evaluation not onto");
            ++rank_checks;
        }
        o.require(joint_evaluation_surjective(fa, reps), "joint evaluation on all orbit representatives not onto");
        ++rank_checks;
    }
    if (o.ok) {
        o.detail = std::to_string(modules) + " evaluation modules dense, " + std::to_string(rank_checks) +
                   " surjectivity rank checks exact";
    }
    return o;
}

Outcome criterion_t_map()
{
    Outcome o;
    std::size_t sections = 0;
    std::size_t alternates = 0;
    std::size_t pairs = 0;
    struct Case {
        std::string name;
        ActionPtr act;
        unsigned max_sl2;
        std::size_t max_dim;
    };
    const std::vector<Case> cases{
        {"klein", klein_example(), 4, 16},
        {"swap", swap_example(), 4, 16},
        {"onsager(2)", onsager_example(2), 4, 16},
        {"onsager(3)", onsager_example(3), 3, 9},
    };
    for (const auto& c : cases) {
        const SectionBundle b(fixed_point_algebra(c.act));
        const Catalog cat = builtin_catalog(b, c.max_sl2);
        std::vector<std::pair<Section, EvalModule>> built;
        for (const auto& seed : catalog_seeds(b, cat, c.max_dim)) {
            const Section psi = complete_section(b, seed);
            o.require(invariance_test(b, psi), c.name + ": completed section not invariant");
            const EvalModule t = t_map(b, psi);
            for (const auto& reps : representative_choices(*c.act, psi)) {
                o.require(same_matrices(t_map_at(b, psi, reps).rep, t.rep),
                          c.name + ": T map depends on representatives for " + t.rep.label());
                ++alternates;
            }
            const Classification cl = classify(b, t.rep, cat, support_bound);
            o.require(cl.found, c.name + ": classify found nothing for " + t.rep.label());
            if (cl.found) {
                o.require(cl.lambda == zeros(b), c.name + ": nonzero lambda for " + t.rep.label());
                o.require(same_class(cl.section, psi), c.name + ": recovered section differs for " + t.rep.label());
                classified_pairs.push_back({c.name + " " + t.rep.label(), *cl.checks});
            }
            built.emplace_back(psi, t);
            ++sections;
        }
        for (std::size_t i = 0; i < built.size(); ++i) {
            for (std::size_t j = i + 1; j < built.size(); ++j) {
                if (support(built[i].first) == support(built[j].first)) {
                    continue;
                }
                o.require(intertwiners(built[i].second.rep, built[j].second.rep).dim() == 0,
                          c.name + ": intertwiner between different supports");
                ++pairs;
            }
        }
    }
    if (o.ok) {
        o.detail = std::to_string(sections) + " sections, " + std::to_string(alternates) +
                   " representative choices identical, " + std::to_string(pairs) + " cross-support pairs with Hom = 0";
    }
    return o;
}

Outcome criterion_kernel_conditions()
{
    Outcome o;
    // Modules with a nonzero character part, on top of the T map images.
    const SectionBundle kl(fixed_point_algebra(klein_example()));
    const SectionBundle on(fixed_point_algebra(onsager_example(2)));
    const SectionBundle sw(fixed_point_algebra(swap_example()));
    const FieldPtr q = kl.action().field();
    std::vector<std::pair<std::string, std::pair<const SectionBundle*, LieRep>>> extra{
        {"klein chi(3)", {&kl, character_rep(kl.fixed().algebra(), int_vector(q, {3}), "chi(3)")}},
        {"klein eval chi at M1", {&kl, eval_at(kl, {{0, chi(kl, 0, 1)}})}},
        {"onsager chi@1 ⊗ V(1)@z", {&on, eval_at(on, {{0, chi(on, 0, 2)}, {1, sl2_irrep(on.algebra(1), 1)}})}},
        {"onsager chi@1 ⊗ chi@z^2", {&on, eval_at(on, {{0, chi(on, 0, 1)}, {2, chi(on, 2, 3)}})}},
        {"swap V(3)@M2", {&sw, eval_at(sw, {{1, sl2_irrep(sw.algebra(1), 3)}})}},
    };
    std::vector<Classified> all = classified_pairs;
    for (const auto& [name, item] : extra) {
        const auto& [b, rep] = item;
        const Classification cl = classify(*b, rep, builtin_catalog(*b), support_bound);
        o.require(cl.found, name + ": not classified");
        if (cl.found) {
            all.push_back({name, *cl.checks});
        }
    }
    o.require(!classified_pairs.empty(), "no T map classifications available");
    for (const auto& c : all) {
        o.require(c.checks.lambda_vanishes_on_derived, c.name + ": lambda nonzero on [L,L]");
        o.require(c.checks.quotient_semisimple, c.name + ": L/ker rho not semisimple");
        o.require(c.checks.kernel_intersection, c.name + ": ker(lambda+rho) != ker lambda ∩ ker rho");
    }
    if (o.ok) {
        o.detail = std::to_string(all.size()) + " classified pairs satisfy all three conditions";
    }
    return o;
}

/// dn minus the rank of every (gamma - 1) stacked, over all group elements.
std::size_t fixed_dim_oracle(const TwistedAction& act)
{
    std::vector<Matrix> blocks;
    for (const auto& e : act.elements()) {
        blocks.push_back(e - Matrix::identity(act.field(), act.dim()));
    }
    return act.dim() - rank(vstack(blocks));
}

Outcome criterion_dimensions()
{
    Outcome o;
    for (unsigned m = 2; m <= 4; ++m) {
        const ActionPtr act = onsager_example(m);
        const std::size_t d = fixed_point_algebra(act).dim();
        o.require(d == 3 * m - 1, "onsager(" + std::to_string(m) + "): dim L = " + std::to_string(d));
        o.require(fixed_dim_oracle(*act) == d, "onsager(" + std::to_string(m) + "): oracle disagrees");
    }
    const FieldPtr q = CyclotomicField::make(1);
    const auto sl2 = std::make_shared<const LieAlgebra>(build_sl(q, 2));
    for (std::size_t n = 1; n <= 6; ++n) {
        const ActionPtr act = build_action(sl2, SiteAlgebra(q, n), {});
        const std::size_t d = fixed_point_algebra(act).dim();
        o.require(d == 3 * n, "trivial group, n = " + std::to_string(n) + ": dim L = " + std::to_string(d));
        o.require(fixed_dim_oracle(*act) == d, "trivial group: oracle disagrees");
    }
    if (o.ok) {
        o.detail = "onsager m = 2,3,4 give 5, 8, 11; trivial group n <= 6 gives 3n; oracle agrees";
    }
    return o;
}

Outcome criterion_oracle()
{
    Outcome o;
    std::size_t n = 0;
    std::size_t irreducible = 0;
    for (const auto& m : corpus_modules()) {
        if (m.rep.dim() > 4) {
            continue;
        }
        const OracleResult r = irreducibility_oracle(m.rep);
        const bool b = burnside_irreducible(m.rep);
        o.require(b == (r.verdict == OracleVerdict::irreducible),
                  m.name + ": burnside " + (b ? "true" : "false") + ", oracle " + to_string(r.verdict));
        irreducible += b ? 1 : 0;
        ++n;
    }
    if (o.ok) {
        o.detail = std::to_string(n) + " corpus modules agree (" + std::to_string(irreducible) + " irreducible)";
    }
    return o;
}

Outcome criterion_contraction()
{
    Outcome o;
    std::size_t constructed = 0;
    const FieldPtr q = CyclotomicField::make(1);
    const auto sl2 = std::make_shared<const LieAlgebra>(build_sl(q, 2));
    const auto sl3 = std::make_shared<const LieAlgebra>(build_sl(q, 3));
    const std::vector<std::pair<std::string, ActionPtr>> builtins{
        {"klein", klein_example()},
        {"swap", swap_example()},
        {"onsager(2)", onsager_example(2)},
        {"onsager(3)", onsager_example(3)},
        {"trivial sl2 x 2", build_action(sl2, SiteAlgebra(q, 2), {})},
        {"trivial sl3 x 1", build_action(sl3, SiteAlgebra(q, 1), {})},
    };
    for (const auto& [name, act] : builtins) {
        const FixedAlgebra fa = fixed_point_algebra(act);
        const std::size_t dim_r = fa.invariants().space.dim();
        for (std::size_t p = 0; p < act->points(); ++p) {
            const IsotropyAlgebra iso = isotropy_algebra(fa, p);
            const Subspace& derived = iso.reductive.derived;
            if (derived.is_zero() || !is_simple(subalgebra(*iso.algebra, derived, "derived"))) {
                continue;
            }
            // m = { z in L : ev_M z lies in the center of g^M }, so L/m = [g^M, g^M].
            std::vector<Vec> center;
            for (const Vec& c : iso.reductive.center.basis_vectors()) {
                center.push_back(iso.space.from_coordinates(c));
            }
            const Subspace center_in_g = Subspace::span(act->field(), act->g()->dim(), center);
            const Subspace m = kernel(center_in_g.quotient_map() * fa.evaluation(p));
            const std::string where = name + " at point " + std::to_string(p);
            o.require(is_ideal(*fa.algebra(), m), where + ": m is not an ideal");
            o.require(is_simple(quotient(*fa.algebra(), m).algebra), where + ": L/m is not simple");
            const Contraction c = ideal_contraction(fa, m);
            o.require(c.maximal_in_r, where + ": contraction not maximal");
            o.require(c.in_r.dim() + 1 == dim_r, where + ": contraction has codimension != 1 in R");
            o.require(c.in_r.dim() == c.in_s.intersect(fa.invariants().space).dim(), where + ": in_r != in_s ∩ R");
            ++constructed;
        }
    }
    o.require(constructed > 0, "no maximal ideal constructed");
    if (o.ok) {
        o.detail = std::to_string(constructed) + " maximal ideals with simple quotient contract to maximal ideals of R";
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Klein example", criterion_klein},
        {"identity suite", criterion_identities},
        {"evaluation modules irreducible", criterion_evaluation_irreducible},
        {"T map and classification", criterion_t_map},
        {"kernel conditions", criterion_kernel_conditions},
        {"dimension formulas", criterion_dimensions},
        {"Burnside vs oracle", criterion_oracle},
        {"ideal contraction", criterion_contraction},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
