#pragma once

#include "tca/twistact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tca {

/// [L, L] and the space of functionals on L vanishing on it.
struct Abelianization {
    Subspace derived;    // in L coordinates
    Subspace characters; // in the dual coordinates
};
Abelianization abelianization(const FixedAlgebra& fa);
bool is_character(const FixedAlgebra& fa, const Vec& lambda);

/// One-dimensional representation x -> coeffs . x of an algebra.
LieRep character_rep(LiePtr algebra, const Vec& coeffs, std::string label);

/// T with T a(x) = b(x) T for all basis x, as flattened b.dim() x a.dim() matrices.
Subspace intertwiners(const LieRep& a, const LieRep& b);
/// Closure of the representation matrices with identity is the full matrix algebra.
bool burnside_irreducible(const LieRep& rep);
/// Schur: irreducible a and b are isomorphic iff a nonzero intertwiner exists.
/// Throws InputError unless both are irreducible.
bool iso_test(const LieRep& a, const LieRep& b);

/// The isotropy algebras g^M for every point, shared by sections and catalogs.
class SectionBundle {
public:
    explicit SectionBundle(FixedAlgebra fa);

    const FixedAlgebra& fixed() const { return fa_; }
    const TwistedAction& action() const { return *fa_.action(); }
    const IsotropyAlgebra& fibre(std::size_t point) const { return fibres_.at(point); }
    const LiePtr& algebra(std::size_t point) const { return fibres_.at(point).algebra; }

    /// Throws InputError unless rep is a representation of g^M (matching structure constants).
    void check_fibre(std::size_t point, const LieRep& rep) const;
    /// phi o (gamma(M))^-1 as a representation of g^M, for phi a representation of g^(gamma^-1 M).
    LieRep transport(std::size_t gamma, std::size_t point, const LieRep& phi) const;

private:
    FixedAlgebra fa_;
    std::vector<IsotropyAlgebra> fibres_;
};

/// Finitely supported section: point -> representation of g^M. Points that are
/// absent carry the trivial class.
using Section = std::map<std::size_t, LieRep>;

/// Drops entries isomorphic to the trivial one-dimensional module.
Section normalized(const Section& s);
std::vector<std::size_t> support(const Section& s);

/// (gamma . psi)(M) = psi(gamma^-1 M) o (gamma(M))^-1
Section section_action(const SectionBundle& b, std::size_t gamma, const Section& psi);
/// Same support and pointwise isomorphic components.
bool same_class(const Section& a, const Section& b);
/// gamma . psi has the class of psi for every generator.
bool invariance_test(const SectionBundle& b, const Section& psi);
/// The invariant section with the given values at orbit representatives,
/// transported along each orbit. Throws InputError if two seeds share an orbit.
Section complete_section(const SectionBundle& b, const std::vector<std::pair<std::size_t, LieRep>>& seeds);

struct EvalComponent {
    std::size_t point;
    LieRep rep; // a representation of g^M
};

struct EvalModule {
    std::vector<std::size_t> points;
    std::vector<LieRep> components;
    Vec lambda;
    LieRep rep; // of L on W (x) V_1 (x) ... (x) V_r
};
/// z -> lambda(z) id + sum_i 1 (x) .. (x) phi_i(ev_(M_i) z) (x) .. (x) 1.
/// Same-orbit points and components over the wrong algebra throw InputError.
EvalModule build_eval_module(const SectionBundle& b, const std::vector<EvalComponent>& components, const Vec& lambda);

/// The evaluation module of an invariant section at the minimal point of each
/// orbit in its support, with lambda = 0.
EvalModule t_map(const SectionBundle& b, const Section& psi);
/// Same, with the listed points as orbit representatives (one per support orbit).
EvalModule t_map_at(const SectionBundle& b, const Section& psi, const std::vector<std::size_t>& representatives);

struct CatalogEntry {
    std::size_t point;
    std::string label;
    LieRep rep;
};
using Catalog = std::vector<CatalogEntry>;

/// For each point whose g^M is all of g: V(1)..V(max_sl2) when g = sl2, and
/// the natural, dual and adjoint modules when g = sl_n, n >= 3.
Catalog builtin_catalog(const SectionBundle& b, unsigned max_sl2 = 4);

struct KernelChecks {
    bool lambda_vanishes_on_derived;
    bool quotient_semisimple;
    bool kernel_intersection;
    Subspace kernel_rho;    // ker rho_psi in L coordinates
    Subspace kernel_lambda; // ker lambda
    Subspace kernel_sum;    // ker (lambda + rho_psi)
    bool all() const { return lambda_vanishes_on_derived && quotient_semisimple && kernel_intersection; }
};
KernelChecks kernel_conditions(const FixedAlgebra& fa, const Vec& lambda, const LieRep& rho_psi);

struct Classification {
    bool found = false;
    Vec lambda;
    Section section;
    std::vector<std::size_t> representatives;
    std::vector<std::string> labels; // catalog labels at the representatives
    std::optional<EvalModule> module;
    std::optional<KernelChecks> checks;
    std::size_t candidates_tried = 0;
};
/// lambda = trace / dim, then a search over supports of at most support_bound
/// orbits (lexicographic in the orbit index) and catalog assignments for a
/// module isomorphic to rep - lambda. The rep must be irreducible.
Classification classify(const SectionBundle& b, const LieRep& rep, const Catalog& catalog, std::size_t support_bound);

} // namespace tca
