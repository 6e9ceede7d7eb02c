#include "commands.hpp"

#include "tca/errors.hpp"
#include "tca/repkit.hpp"

#include <fstream>
#include <sstream>

namespace tca::cli {

namespace {

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? sep : "") + xs[i];
    }
    return out;
}

std::string point_set(const TwistedAction& act, const std::vector<std::size_t>& pts)
{
    std::vector<std::string> names;
    for (std::size_t p : pts) {
        names.push_back(act.site().label(p));
    }
    return "{" + join(names, ", ") + "}";
}

std::string element_set(const TwistedAction& act, const std::vector<std::size_t>& elems)
{
    std::vector<std::string> names;
    for (std::size_t g : elems) {
        names.push_back(act.element_label(g));
    }
    return "{" + join(names, ", ") + "}";
}

std::vector<std::string> g_basis(const LieAlgebra& g, const Subspace& s)
{
    std::vector<std::string> out;
    for (const auto& v : s.basis_vectors()) {
        out.push_back(g.format(v));
    }
    return out;
}

// Basis of a subspace given in coordinates of s, formatted in g.
std::vector<std::string> g_basis_in(const LieAlgebra& g, const Subspace& s, const Subspace& sub)
{
    std::vector<std::string> out;
    for (const auto& v : sub.basis_vectors()) {
        out.push_back(g.format(s.from_coordinates(v)));
    }
    return out;
}

std::vector<std::string> l_basis(const FixedAlgebra& fa)
{
    std::vector<std::string> out;
    for (const auto& v : fa.space().basis_vectors()) {
        out.push_back(fa.action()->format(v));
    }
    return out;
}

std::string vec_text(const Vec& v)
{
    return to_string(v);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

std::size_t parse_point(const TwistedAction& act, const std::string& text, const std::string& what)
{
    for (std::size_t p = 0; p < act.points(); ++p) {
        if (act.site().label(p) == text) {
            return p;
        }
    }
    std::size_t idx = 0;
    try {
        std::size_t used = 0;
        idx = std::stoul(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw InputError(what + ": unknown point '" + text + "'");
    }
    if (idx < 1 || idx > act.points()) {
        throw InputError(what + ": point index " + text + " out of range 1.." + std::to_string(act.points()));
    }
    return idx - 1;
}

Vec parse_scalars(const FieldPtr& f, const std::string& text, std::size_t expected, const std::string& what)
{
    Vec out;
    if (!text.empty()) {
        for (const auto& s : split(text, ',')) {
            out.push_back(Cyc::parse(f, s));
        }
    }
    if (out.size() != expected) {
        throw InputError(what + ": expected " + std::to_string(expected) + " coordinates, got " +
                         std::to_string(out.size()));
    }
    return out;
}

Catalog full_catalog(const SectionBundle& b, const SpecDocument& doc)
{
    Catalog cat = builtin_catalog(b);
    for (std::size_t k = 0; k < doc.catalog.size(); ++k) {
        const auto& e = doc.catalog[k];
        const std::string path = "catalog[" + std::to_string(k) + "]";
        const LiePtr& alg = b.algebra(e.point);
        if (e.matrices.size() != alg->dim()) {
            throw InputError(path + ": g^M at " + b.action().site().label(e.point) + " has dimension " +
                             std::to_string(alg->dim()) + ", got " + std::to_string(e.matrices.size()) + " matrices");
        }
        const std::size_t d = e.matrices.empty() ? 1 : e.matrices.front().rows();
        LieRep rep(alg, d, e.matrices, e.label);
        try {
            rep.validate();
        } catch (const InputError& err) {
            throw InputError(path + ": " + err.what());
        }
        cat.push_back({e.point, e.label, std::move(rep)});
    }
    return cat;
}

LieRep component_rep(const SectionBundle& b, const Catalog& cat, std::size_t point, const std::string& label)
{
    for (const auto& e : cat) {
        if (e.point == point && e.label == label) {
            return e.rep;
        }
    }
    if (label.rfind("chi(", 0) == 0 && label.back() == ')') {
        const Vec c = parse_scalars(b.action().field(), label.substr(4, label.size() - 5), b.algebra(point)->dim(),
                                    label);
        return character_rep(b.algebra(point), c, label);
    }
    std::vector<std::string> known;
    for (const auto& e : cat) {
        if (e.point == point) {
            known.push_back(e.label);
        }
    }
    throw InputError("no component '" + label + "' at " + b.action().site().label(point) +
                     (known.empty() ? std::string(" (catalog is empty there)") : " (available: " + join(known, ", ") + ")"));
}

struct ModuleInput {
    std::vector<EvalComponent> components;
    Vec lambda;
    bool given = false;
};

ModuleInput module_input(const Options& opt, const SpecDocument& doc, const SectionBundle& b, const Catalog& cat)
{
    const auto& act = b.action();
    ModuleInput in;
    in.lambda = zero_vector(act.field(), b.fixed().dim());
    if (!opt.at.empty()) {
        in.given = true;
        for (const auto& spec : opt.at) {
            const auto colon = spec.find(':');
            if (colon == std::string::npos) {
                throw InputError("--at expects POINT:LABEL, got '" + spec + "'");
            }
            const std::size_t p = parse_point(act, spec.substr(0, colon), "--at");
            in.components.push_back({p, component_rep(b, cat, p, spec.substr(colon + 1))});
        }
    } else if (doc.module) {
        in.given = true;
        for (const auto& c : doc.module->components) {
            in.components.push_back({c.point, component_rep(b, cat, c.point, c.label)});
        }
        if (doc.module->lambda) {
            if (doc.module->lambda->size() != b.fixed().dim()) {
                throw InputError("module.lambda: expected " + std::to_string(b.fixed().dim()) + " coordinates");
            }
            in.lambda = *doc.module->lambda;
        }
    }
    if (!opt.lambda.empty()) {
        in.given = true;
        in.lambda = parse_scalars(act.field(), opt.lambda, b.fixed().dim(), "--lambda");
    }
    return in;
}

void describe_rep(ReportSection& s, const FixedAlgebra& fa, const LieRep& rep)
{
    const auto names = l_basis(fa);
    std::vector<std::string> rows;
    for (std::size_t l = 0; l < rep.matrices().size(); ++l) {
        rows.push_back(names[l] + " -> " + rep.matrix(l).to_string());
    }
    s.add_list("matrices", rows);
}

Report fixed_report(const FixedAlgebra& fa)
{
    const auto& act = *fa.action();
    Report r;
    const auto basis = l_basis(fa);
    r.summary = "dim L = " + std::to_string(fa.dim()) + "; basis: " + (basis.empty() ? "(none)" : join(basis, ", "));
    auto& s = r.section("fixed-point algebra L");
    s.add("dim g (x) S", std::to_string(act.dim()));
    s.add("dim L", std::to_string(fa.dim()));
    s.add_list("basis", basis);
    const auto k = killing_semisimple_test(*fa.algebra());
    s.add("type", to_string(k.kind));
    s.add("dim [L,L]", std::to_string(k.derived.dim()));
    s.add("dim center", std::to_string(k.center.dim()));
    auto& ri = r.section("invariants R = S^Gamma");
    ri.add("dim R", std::to_string(fa.invariants().space.dim()));
    std::vector<std::string> rb;
    for (const auto& v : fa.invariants().space.basis_vectors()) {
        rb.push_back(vec_text(v));
    }
    ri.add_list("basis", rb);
    return r;
}

Report verify_report(const FixedAlgebra& fa)
{
    const auto& act = *fa.action();
    Report r;
    auto& s = r.section("action");
    s.add("g", act.g()->label() + ", dim " + std::to_string(act.g()->dim()));
    s.add("points", std::to_string(act.points()));
    s.add("group order", std::to_string(act.order()));
    std::vector<std::string> gens;
    for (std::size_t g : act.generators()) {
        std::vector<std::string> images;
        for (std::size_t p = 0; p < act.points(); ++p) {
            images.push_back(act.site().label(p) + "->" + act.site().label(act.move(g, p)));
        }
        gens.push_back(act.element_label(g) + ": " + join(images, " "));
    }
    s.add_list("generators (point action)", gens);
    auto& c = r.section("checks");
    c.add("generators are Lie automorphisms", "yes");
    c.add("point action is a homomorphism", "yes");
    c.add("cocycle laws", cocycle(act).size() == act.order() ? "yes" : "no");
    const Matrix rey = reynolds_operator(act);
    const bool idem = rey * rey == rey;
    const bool image = Subspace::column_space(rey) == fa.space();
    c.add("Reynolds operator is a projection onto L", yes_no(idem && image));
    c.add("L closed under the bracket and R", "yes");
    r.summary = "action valid: group of order " + std::to_string(act.order()) + " on " + std::to_string(act.points()) +
                " points, dim L = " + std::to_string(fa.dim());
    if (!idem || !image) {
        r.status = 1;
    }
    return r;
}

Report orbits_report(const FixedAlgebra& fa)
{
    const auto& act = *fa.action();
    const auto& pa = act.point_action();
    Report r;
    auto& s = r.section("orbits");
    std::vector<std::string> rows;
    for (const auto& o : pa.orbits()) {
        const auto os = orbit_stabilizer(pa, o.front());
        rows.push_back(point_set(act, o) + ", stabilizer of " + act.site().label(o.front()) + " " +
                       element_set(act, os.stabilizer));
    }
    s.add("count", std::to_string(pa.orbits().size()));
    s.add_list("orbits", rows);
    auto& ri = r.section("invariants R = S^Gamma");
    std::vector<std::string> rb;
    for (const auto& v : fa.invariants().orbit_indicators) {
        rb.push_back(vec_text(v));
    }
    ri.add("dim R", std::to_string(fa.invariants().space.dim()));
    ri.add_list("orbit indicators", rb);
    r.summary = std::to_string(pa.orbits().size()) + " orbits on " + std::to_string(act.points()) + " points";
    return r;
}

Report isotropy_report(const FixedAlgebra& fa, std::size_t point)
{
    const auto& act = *fa.action();
    const IsotropyAlgebra iso = isotropy_algebra(fa, point);
    Report r;
    r.subject = act.site().label(point);
    auto& s = r.section("isotropy at " + act.site().label(point));
    s.add("stabilizer", element_set(act, iso.stabilizer));
    s.add("dim g^M", std::to_string(iso.space.dim()));
    s.add_list("basis of g^M", g_basis(*act.g(), iso.space));
    s.add("type", to_string(iso.reductive.kind));
    s.add_list("center", g_basis_in(*act.g(), iso.space, iso.reductive.center));
    s.add_list("derived", g_basis_in(*act.g(), iso.space, iso.reductive.derived));
    s.add("ev_M(L) = g^M", "yes");
    r.summary = "g^M at " + act.site().label(point) + ": dim " + std::to_string(iso.space.dim()) + ", " +
                to_string(iso.reductive.kind);
    return r;
}

Report identities_report(const TwistedAction& act)
{
    const IdentityReport ir = identity_suite(act);
    Report r;
    auto& s = r.section("identities");
    std::size_t total = 0, failed = 0;
    for (const auto& c : ir.counts) {
        s.add(c.name, std::to_string(c.checked) + " checked, " + std::to_string(c.failed) + " failed");
        total += c.checked;
        failed += c.failed;
    }
    if (!ir.failures.empty()) {
        r.section("violations").add_list("first counterexamples", ir.failures);
    }
    r.summary = failed == 0 ? "all " + std::to_string(total) + " identity instances hold"
                            : std::to_string(failed) + " of " + std::to_string(total) + " identity instances fail";
    r.status = ir.ok() ? 0 : 1;
    return r;
}

Report cocycle_report(const TwistedAction& act)
{
    const auto u = cocycle(act);
    Report r;
    auto& s = r.section("cocycle u_gamma = gamma o (1 (x) gamma^-1)");
    std::vector<std::string> rows;
    for (std::size_t g = 0; g < act.order(); ++g) {
        rows.push_back(act.element_label(g) + ": " + u[g].to_string());
    }
    s.add_list("u", rows);
    const IdentityReport ir = identity_suite(act);
    auto& c = r.section("checks");
    bool ok = true;
    for (const auto& cnt : ir.counts) {
        if (cnt.name == "crossed homomorphism" || cnt.name == "S-linearity of u" || cnt.name == "action reconstruction" ||
            cnt.name == "semilinearity") {
            c.add(cnt.name, std::to_string(cnt.checked) + " checked, " + std::to_string(cnt.failed) + " failed");
            ok = ok && cnt.failed == 0;
        }
    }
    r.summary = std::string("cocycle of a group of order ") + std::to_string(act.order()) +
                (ok ? ": crossed homomorphism holds" : ": violations found");
    r.status = ok ? 0 : 1;
    return r;
}

Report evaluate_report(const Options& opt, const SpecDocument& doc, const SectionBundle& b)
{
    const auto& act = b.action();
    const Catalog cat = full_catalog(b, doc);
    const ModuleInput in = module_input(opt, doc, b, cat);
    const EvalModule m = build_eval_module(b, in.components, in.lambda);
    Report r;
    auto& s = r.section("evaluation module");
    std::vector<std::string> comps;
    for (const auto& c : in.components) {
        comps.push_back(c.rep.label() + " at " + act.site().label(c.point));
    }
    s.add_list("components", comps);
    s.add("lambda", vec_text(in.lambda));
    s.add("dim", std::to_string(m.rep.dim()));
    const bool irr = burnside_irreducible(m.rep);
    s.add("irreducible (Burnside)", yes_no(irr));
    s.add("joint evaluation surjective", yes_no(joint_evaluation_surjective(b.fixed(), m.points)));
    describe_rep(s, b.fixed(), m.rep);
    r.summary = "module of dimension " + std::to_string(m.rep.dim()) + (irr ? ", irreducible" : ", reducible");
    return r;
}

Report classify_report(const Options& opt, const SpecDocument& doc, const SectionBundle& b)
{
    const auto& act = b.action();
    const FixedAlgebra& fa = b.fixed();
    const Catalog cat = full_catalog(b, doc);
    LieRep rep = trivial_rep(fa.algebra());
    if (opt.at.empty() && opt.lambda.empty() && doc.representation) {
        const auto& sr = *doc.representation;
        if (sr.matrices.size() != fa.dim()) {
            throw InputError("representation.matrices: L has dimension " + std::to_string(fa.dim()) + ", got " +
                             std::to_string(sr.matrices.size()) + " matrices");
        }
        rep = LieRep(fa.algebra(), sr.matrices.empty() ? 1 : sr.matrices.front().rows(), sr.matrices, sr.label);
        try {
            rep.validate();
        } catch (const InputError& e) {
            throw InputError(std::string("representation: ") + e.what());
        }
    } else {
        const ModuleInput in = module_input(opt, doc, b, cat);
        if (!in.given) {
            throw InputError("classify needs a representation: use --at, --lambda, or a representation/module in the spec");
        }
        rep = build_eval_module(b, in.components, in.lambda).rep;
    }
    const Classification c = classify(b, rep, cat, opt.support_bound);
    Report r;
    auto& s = r.section("classification");
    s.add("input", rep.label().empty() ? "rho" : rep.label());
    s.add("dim", std::to_string(rep.dim()));
    s.add("support bound", std::to_string(opt.support_bound));
    s.add("candidates tried", std::to_string(c.candidates_tried));
    s.add("found", yes_no(c.found));
    if (!c.found) {
        r.summary = "not found in catalog";
        return r;
    }
    std::vector<std::string> row_parts;
    const auto& pa = act.point_action();
    for (std::size_t i = 0; i < c.representatives.size(); ++i) {
        const std::size_t rp = c.representatives[i];
        row_parts.push_back("orbit " + point_set(act, pa.orbits()[pa.orbit_index(rp)]) + " class " + c.labels[i]);
    }
    const std::string row = "lambda = " + vec_text(c.lambda) + " | " +
                            (row_parts.empty() ? std::string("empty section") : join(row_parts, "; "));
    s.add_list("table", {row});
    auto& k = r.section("kernel conditions");
    k.add("lambda vanishes on [L,L]", yes_no(c.checks->lambda_vanishes_on_derived));
    k.add("L / ker rho_psi semisimple", yes_no(c.checks->quotient_semisimple));
    k.add("ker(lambda + rho_psi) = ker lambda meet ker rho_psi", yes_no(c.checks->kernel_intersection));
    k.add("dim ker rho_psi", std::to_string(c.checks->kernel_rho.dim()));
    r.summary = row;
    return r;
}

} // namespace

SpecDocument load_document(const Options& opt)
{
    if (!opt.spec_path.empty() && !opt.builtin.empty()) {
        throw InputError("give either a spec file or --builtin, not both");
    }
    if (!opt.spec_path.empty()) {
        std::ifstream in(opt.spec_path);
        if (!in) {
            throw InputError("cannot read spec file '" + opt.spec_path + "'");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            return parse_spec(ss.str(), conductor_from_environment());
        } catch (const InputError& e) {
            throw InputError(opt.spec_path + ": " + e.what());
        }
    }
    if (opt.builtin.empty()) {
        throw InputError("no input: give a spec file or --builtin klein|swap|onsager");
    }
    SpecDocument doc;
    doc.action = builtin_action(opt.builtin, opt.m);
    doc.name = opt.builtin == "onsager" ? "onsager (truncated, m = " + std::to_string(opt.m) + ")" : opt.builtin;
    return doc;
}

Report run_command(const Options& opt, const SpecDocument& doc)
{
    const ActionPtr& act = doc.action;
    Report r;
    if (opt.command == "identities") {
        r = identities_report(*act);
    } else if (opt.command == "cocycle") {
        r = cocycle_report(*act);
    } else {
        const FixedAlgebra fa = fixed_point_algebra(act);
        if (opt.command == "verify") {
            r = verify_report(fa);
        } else if (opt.command == "fixed") {
            r = fixed_report(fa);
        } else if (opt.command == "orbits") {
            r = orbits_report(fa);
        } else if (opt.command == "isotropy") {
            if (opt.point.empty()) {
                throw InputError("isotropy needs --point");
            }
            r = isotropy_report(fa, parse_point(*act, opt.point, "--point"));
        } else if (opt.command == "evaluate" || opt.command == "classify") {
            const SectionBundle b(fa);
            r = opt.command == "evaluate" ? evaluate_report(opt, doc, b) : classify_report(opt, doc, b);
        } else {
            throw InputError("unknown command '" + opt.command + "'");
        }
    }
    r.command = opt.command;
    r.subject = doc.name + (r.subject.empty() ? "" : ", " + r.subject);
    return r;
}

} // namespace tca::cli
