#include "tca/liecore.hpp"

#include "tca/errors.hpp"

#include <sstream>

namespace tca {

namespace {

std::string basis_name(const std::vector<std::string>& names, std::size_t i)
{
    return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
}

Matrix commutator(const Matrix& a, const Matrix& b)
{
    return a * b - b * a;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

LieAlgebra::LieAlgebra(FieldPtr field, std::size_t dim, std::vector<Vec> table, std::vector<std::string> names,
                       std::string label)
    : field_(std::move(field)), dim_(dim), table_(std::move(table)), names_(std::move(names)),
      label_(std::move(label))
{
    if (table_.size() != dim_ * dim_) {
        throw InputError("structure table has " + std::to_string(table_.size()) + " entries, expected " +
                         std::to_string(dim_ * dim_));
    }
    for (const auto& v : table_) {
        if (v.size() != dim_) {
            throw InputError("structure constant vector of length " + std::to_string(v.size()) + " in dimension " +
                             std::to_string(dim_));
        }
    }
    if (names_.empty()) {
        for (std::size_t i = 0; i < dim_; ++i) {
            names_.push_back(basis_name({}, i));
        }
    }
    if (names_.size() != dim_) {
        throw InputError("got " + std::to_string(names_.size()) + " basis names for dimension " +
                         std::to_string(dim_));
    }
}

LieAlgebra LieAlgebra::abelian(const FieldPtr& field, std::size_t dim, std::string label)
{
    return LieAlgebra(field, dim, std::vector<Vec>(dim * dim, zero_vector(field, dim)), {}, std::move(label));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const
{
    if (x.size() != dim_ || y.size() != dim_) {
        throw InputError("bracket of vectors not in dimension " + std::to_string(dim_));
    }
    Vec out = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) {
                continue;
            }
            const Cyc c = x[i] * y[j];
            const Vec& s = structure(i, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!s[k].is_zero()) {
                    out[k].add_product(c, s[k]);
                }
            }
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& x) const
{
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        m.set_column(j, bracket(x, basis_vector(j)));
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const
{
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        m.set_column(j, structure(i, j));
    }
    return m;
}

void LieAlgebra::validate() const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!tca::is_zero(structure(i, i))) {
            throw InputError("[" + names_[i] + ", " + names_[i] + "] is not zero");
        }
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if (structure(i, j) != scale(Cyc(field_, -1), structure(j, i))) {
                throw InputError("antisymmetry fails for [" + names_[i] + ", " + names_[j] + "]");
            }
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            for (std::size_t k = j + 1; k < dim_; ++k) {
                const Vec a = bracket(basis_vector(i), structure(j, k));
                const Vec b = bracket(basis_vector(j), structure(k, i));
                const Vec c = bracket(basis_vector(k), structure(i, j));
                if (!tca::is_zero(a + b + c)) {
                    throw InputError("Jacobi identity fails for (" + names_[i] + ", " + names_[j] + ", " +
                                     names_[k] + ")");
                }
            }
        }
    }
}

std::string LieAlgebra::format(const Vec& x) const
{
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        std::string c = x[i].to_string();
        bool negative = false;
        if (x[i].is_rational() && c.front() == '-') {
            negative = true;
            c.erase(0, 1);
        }
        if (!out.empty()) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += "-";
        }
        if (c == "1") {
            out += names_[i];
        } else if (x[i].is_rational()) {
            out += c + "*" + names_[i];
        } else {
            out += "(" + c + ")*" + names_[i];
        }
    }
    return out.empty() ? "0" : out;
}

bool LieAlgebra::operator==(const LieAlgebra& other) const
{
    return dim_ == other.dim_ && table_ == other.table_;
}

LieAlgebra build_sl(const FieldPtr& field, unsigned n)
{
    if (n < 2) {
        throw InputError("sl_n needs n >= 2, got " + std::to_string(n));
    }
    const auto mats = sl_defining_matrices(field, n);
    const std::size_t d = mats.size();
    // Coordinates in the basis are read off from the matrix entries directly.
    std::vector<std::pair<std::size_t, std::size_t>> upper, lower;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            upper.emplace_back(i, j);
            lower.emplace_back(j, i);
        }
    }
    auto coords = [&](const Matrix& m) {
        Vec v = zero_vector(field, d);
        std::size_t k = 0;
        for (const auto& [r, c] : upper) {
            v[k++] = m(r, c);
        }
        for (const auto& [r, c] : lower) {
            v[k++] = m(r, c);
        }
        // diag(m) = sum_i a_i H_i with H_i = E_ii - E_(i+1)(i+1), so a_i = m_00 + ... + m_ii.
        Cyc run(field);
        for (unsigned i = 0; i + 1 < n; ++i) {
            run += m(i, i);
            v[k++] = run;
        }
        return v;
    };
    std::vector<Vec> table;
    table.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            table.push_back(coords(commutator(mats[i], mats[j])));
        }
    }
    std::vector<std::string> names;
    if (n == 2) {
        names = {"e", "f", "h"};
    } else {
        for (const auto& [r, c] : upper) {
            names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
        }
        for (const auto& [r, c] : lower) {
            names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
        }
        for (unsigned i = 0; i + 1 < n; ++i) {
            names.push_back("H" + std::to_string(i + 1));
        }
    }
    return LieAlgebra(field, d, std::move(table), std::move(names), "sl" + std::to_string(n));
}

std::vector<Matrix> sl_defining_matrices(const FieldPtr& field, unsigned n)
{
    if (n < 2) {
        throw InputError("sl_n needs n >= 2, got " + std::to_string(n));
    }
    std::vector<Matrix> out;
    const Cyc one(field, 1);
    for (int pass = 0; pass < 2; ++pass) {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                Matrix m(field, n, n);
                if (pass == 0) {
                    m(i, j) = one;
                } else {
                    m(j, i) = one;
                }
                out.push_back(std::move(m));
            }
        }
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
        Matrix m(field, n, n);
        m(i, i) = one;
        m(i + 1, i + 1) = -one;
        out.push_back(std::move(m));
    }
    return out;
}

Matrix killing_form(const LieAlgebra& a)
{
    const std::size_t d = a.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < d; ++i) {
        ads.push_back(a.ad_basis(i));
    }
    Matrix k(a.field(), d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            k(i, j) = (ads[i] * ads[j]).trace();
            k(j, i) = k(i, j);
        }
    }
    return k;
}

DerivedAndCenter derived_and_center(const LieAlgebra& a)
{
    const std::size_t d = a.dim();
    std::vector<Vec> brackets;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (!tca::is_zero(a.structure(i, j))) {
                brackets.push_back(a.structure(i, j));
            }
        }
    }
    Subspace derived = Subspace::span(a.field(), d, brackets);
    if (d == 0) {
        return {derived, Subspace(a.field(), 0)};
    }
    // x is central iff ad(x_j) x = 0 for every basis element x_j.
    std::vector<Matrix> ads;
    for (std::size_t j = 0; j < d; ++j) {
        ads.push_back(a.ad_basis(j));
    }
    return {std::move(derived), kernel(vstack(ads))};
}

std::string to_string(ReductiveKind kind)
{
    switch (kind) {
    case ReductiveKind::semisimple:
        return "semisimple";
    case ReductiveKind::reductive:
        return "reductive";
    case ReductiveKind::neither:
        break;
    }
    return "neither";
}

ReductiveReport killing_semisimple_test(const LieAlgebra& a)
{
    auto [derived, center] = derived_and_center(a);
    const std::size_t krank = a.dim() == 0 ? 0 : rank(killing_form(a));
    ReductiveKind kind = ReductiveKind::neither;
    if (krank == a.dim()) {
        kind = ReductiveKind::semisimple;
    } else if (center.intersect(derived).is_zero() && (center + derived).is_full()) {
        const LieAlgebra d = subalgebra(a, derived, a.label() + "'");
        if (d.dim() == 0 || rank(killing_form(d)) == d.dim()) {
            kind = ReductiveKind::reductive;
        }
    }
    return {kind, std::move(center), std::move(derived), krank};
}

bool is_semisimple(const LieAlgebra& a)
{
    return a.dim() == 0 || rank(killing_form(a)) == a.dim();
}

bool is_simple(const LieAlgebra& a)
{
    if (a.dim() == 0 || !is_semisimple(a)) {
        return false;
    }
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        ads.push_back(a.ad_basis(i));
    }
    // Ideals are exactly the ad-invariant subspaces.
    return algebra_closure(ads, true).dim() == a.dim() * a.dim();
}

bool is_subalgebra(const LieAlgebra& a, const Subspace& s)
{
    const auto b = s.basis_vectors();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!s.contains(a.bracket(b[i], b[j]))) {
                return false;
            }
        }
    }
    return true;
}

bool is_ideal(const LieAlgebra& a, const Subspace& s)
{
    if (s.ambient_dim() != a.dim()) {
        return false;
    }
    for (const auto& v : s.basis_vectors()) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!s.contains(a.bracket(a.basis_vector(i), v))) {
                return false;
            }
        }
    }
    return true;
}

bool is_lie_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& f)
{
    if (f.rows() != dst.dim() || f.cols() != src.dim()) {
        return false;
    }
    for (std::size_t i = 0; i < src.dim(); ++i) {
        for (std::size_t j = i + 1; j < src.dim(); ++j) {
            if (f.apply(src.structure(i, j)) != dst.bracket(f.column(i), f.column(j))) {
                return false;
            }
        }
    }
    return true;
}

LieAlgebra subalgebra(const LieAlgebra& a, const Subspace& s, std::string label)
{
    if (s.ambient_dim() != a.dim()) {
        throw InputError("subspace ambient dimension does not match the algebra");
    }
    const auto b = s.basis_vectors();
    const std::size_t d = b.size();
    std::vector<Vec> table;
    table.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vec br = a.bracket(b[i], b[j]);
            if (!s.contains(br)) {
                throw InputError("subspace is not closed under the bracket: [" + a.format(b[i]) + ", " +
                                 a.format(b[j]) + "] = " + a.format(br));
            }
            table.push_back(s.coordinates(br));
        }
    }
    std::vector<std::string> names;
    for (const auto& v : b) {
        names.push_back(a.format(v));
    }
    return LieAlgebra(a.field(), d, std::move(table), std::move(names), std::move(label));
}

LieIdeal make_ideal(LiePtr parent, Subspace space)
{
    if (!parent) {
        throw InputError("ideal without a parent algebra");
    }
    for (const auto& v : space.basis_vectors()) {
        for (std::size_t i = 0; i < parent->dim(); ++i) {
            const Vec br = parent->bracket(parent->basis_vector(i), v);
            if (!space.contains(br)) {
                throw InputError("not an ideal: [" + parent->names()[i] + ", " + parent->format(v) + "] = " +
                                 parent->format(br) + " leaves the subspace");
            }
        }
    }
    return {std::move(parent), std::move(space)};
}

Quotient quotient(const LieAlgebra& a, const Subspace& ideal)
{
    if (!is_ideal(a, ideal)) {
        throw InputError("quotient by a subspace that is not an ideal of " + a.label());
    }
    const auto comp = ideal.non_pivots();
    Matrix proj = ideal.quotient_map();
    const std::size_t d = comp.size();
    std::vector<Vec> table;
    table.reserve(d * d);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) {
        names.push_back(a.names()[comp[i]]);
        for (std::size_t j = 0; j < d; ++j) {
            table.push_back(proj.apply(a.structure(comp[i], comp[j])));
        }
    }
    LieAlgebra q(a.field(), d, std::move(table), std::move(names), a.label() + "/I");
    if (!is_lie_homomorphism(a, q, proj)) {
        throw CheckFailure("quotient projection is not a Lie homomorphism");
    }
    return {std::move(q), std::move(proj), comp};
}

std::string export_structure(const LieAlgebra& a)
{
    std::ostringstream os;
    os << "dim " << a.dim() << "\n";
    os << "names";
    for (const auto& n : a.names()) {
        os << " " << n;
    }
    os << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            const Vec& v = a.structure(i, j);
            if (tca::is_zero(v)) {
                continue;
            }
            os << i + 1 << " " << j + 1 << " :";
            for (std::size_t k = 0; k < v.size(); ++k) {
                os << (k ? ", " : " ") << v[k].to_string();
            }
            os << "\n";
        }
    }
    return os.str();
}

LieAlgebra import_structure(const FieldPtr& field, const std::string& text, std::string label)
{
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    bool have_dim = false;
    std::vector<std::string> names;
    std::vector<Vec> table;
    auto fail = [&](const std::string& msg) -> InputError {
        return InputError("structure table line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        if (line.rfind("dim", 0) == 0) {
            std::string kw;
            long d = -1;
            ls >> kw >> d;
            if (!ls || d < 0 || have_dim) {
                throw fail("expected a single 'dim <n>'");
            }
            dim = static_cast<std::size_t>(d);
            have_dim = true;
            table.assign(dim * dim, zero_vector(field, dim));
            continue;
        }
        if (!have_dim) {
            throw fail("'dim' must come first");
        }
        if (line.rfind("names", 0) == 0) {
            std::string kw, n;
            ls >> kw;
            names.clear();
            while (ls >> n) {
                names.push_back(n);
            }
            if (names.size() != dim) {
                throw fail("expected " + std::to_string(dim) + " names");
            }
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw fail("expected 'i j : c1, ..., cd'");
        }
        std::istringstream idx(line.substr(0, colon));
        long i = 0, j = 0;
        idx >> i >> j;
        std::string rest;
        if (!idx || (idx >> rest) || i < 1 || j < 1 || static_cast<std::size_t>(i) > dim ||
            static_cast<std::size_t>(j) > dim || i == j) {
            throw fail("bad index pair");
        }
        Vec v;
        std::string coords = line.substr(colon + 1);
        std::size_t start = 0;
        while (true) {
            const auto comma = coords.find(',', start);
            const std::string tok = trim(coords.substr(start, comma == std::string::npos ? comma : comma - start));
            try {
                v.push_back(Cyc::parse(field, tok));
            } catch (const InputError& e) {
                throw fail(e.what());
            }
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        if (v.size() != dim) {
            throw fail("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
        }
        const std::size_t a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
        table[a * dim + b] = v;
        table[b * dim + a] = scale(Cyc(field, -1), v);
    }
    if (!have_dim) {
        throw InputError("structure table has no 'dim' line");
    }
    LieAlgebra out(field, dim, std::move(table), std::move(names), std::move(label));
    out.validate();
    return out;
}

LieRep::LieRep(LiePtr algebra, std::size_t dim, std::vector<Matrix> matrices, std::string label)
    : algebra_(std::move(algebra)), dim_(dim), matrices_(std::move(matrices)), label_(std::move(label))
{
    if (!algebra_) {
        throw InputError("representation without an algebra");
    }
    if (matrices_.size() != algebra_->dim()) {
        throw InputError("representation " + label_ + " has " + std::to_string(matrices_.size()) +
                         " matrices for an algebra of dimension " + std::to_string(algebra_->dim()));
    }
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        if (matrices_[i].rows() != dim_ || matrices_[i].cols() != dim_) {
            throw InputError("representation " + label_ + ": matrix " + std::to_string(i + 1) + " is not " +
                             std::to_string(dim_) + "x" + std::to_string(dim_));
        }
    }
}

Matrix LieRep::act(const Vec& x) const
{
    Matrix m(algebra_->field(), dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) {
            m = m + matrices_[i].scaled(x[i]);
        }
    }
    return m;
}

bool LieRep::is_homomorphism() const
{
    try {
        validate();
    } catch (const InputError&) {
        return false;
    }
    return true;
}

void LieRep::validate() const
{
    const auto& a = *algebra_;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            if (act(a.structure(i, j)) != commutator(matrices_[i], matrices_[j])) {
                throw InputError("representation " + label_ + " is not a homomorphism on [" + a.names()[i] + ", " +
                                 a.names()[j] + "]");
            }
        }
    }
}

bool LieRep::is_trivial() const
{
    if (dim_ != 1) {
        return false;
    }
    for (const auto& m : matrices_) {
        if (!m.is_zero()) {
            return false;
        }
    }
    return true;
}

LieRep sl2_irrep(LiePtr sl2, unsigned m)
{
    if (!sl2 || !(*sl2 == build_sl(sl2->field(), 2))) {
        throw InputError("sl2_irrep needs the algebra built by build_sl(2)");
    }
    const auto& f = sl2->field();
    const std::size_t d = m + 1;
    Matrix e(f, d, d), fm(f, d, d), h(f, d, d);
    for (std::size_t k = 0; k < d; ++k) {
        h(k, k) = Cyc(f, static_cast<long>(m) - 2 * static_cast<long>(k));
        if (k + 1 < d) {
            fm(k + 1, k) = Cyc(f, 1);
        }
        if (k > 0) {
            e(k - 1, k) = Cyc(f, static_cast<long>(k) * (static_cast<long>(m) - static_cast<long>(k) + 1));
        }
    }
    return LieRep(std::move(sl2), d, {e, fm, h}, "V(" + std::to_string(m) + ")");
}

LieRep trivial_rep(LiePtr algebra, std::size_t dim)
{
    const std::size_t n = algebra->dim();
    const auto f = algebra->field();
    return LieRep(std::move(algebra), dim, std::vector<Matrix>(n, Matrix(f, dim, dim)), "trivial");
}

LieRep adjoint_rep(LiePtr algebra)
{
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        ms.push_back(algebra->ad_basis(i));
    }
    const std::size_t d = algebra->dim();
    return LieRep(std::move(algebra), d, std::move(ms), "adjoint");
}

LieRep dual_rep(const LieRep& rep)
{
    std::vector<Matrix> ms;
    const Cyc minus(rep.algebra()->field(), -1);
    for (const auto& m : rep.matrices()) {
        ms.push_back(m.transpose().scaled(minus));
    }
    return LieRep(rep.algebra(), rep.dim(), std::move(ms), rep.label() + "*");
}

LieRep tensor_product(const LieRep& a, const LieRep& b)
{
    if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra())) {
        throw InputError("tensor product of representations of different algebras");
    }
    const auto& f = a.algebra()->field();
    const Matrix ia = Matrix::identity(f, a.dim()), ib = Matrix::identity(f, b.dim());
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < a.matrices().size(); ++i) {
        ms.push_back(kron(a.matrix(i), ib) + kron(ia, b.matrix(i)));
    }
    return LieRep(a.algebra(), a.dim() * b.dim(), std::move(ms), a.label() + "(x)" + b.label());
}

LieRep direct_sum(const LieRep& a, const LieRep& b)
{
    if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra())) {
        throw InputError("direct sum of representations of different algebras");
    }
    const auto& f = a.algebra()->field();
    const std::size_t d = a.dim() + b.dim();
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < a.matrices().size(); ++i) {
        Matrix m(f, d, d);
        for (std::size_t r = 0; r < a.dim(); ++r) {
            for (std::size_t c = 0; c < a.dim(); ++c) {
                m(r, c) = a.matrix(i)(r, c);
            }
        }
        for (std::size_t r = 0; r < b.dim(); ++r) {
            for (std::size_t c = 0; c < b.dim(); ++c) {
                m(a.dim() + r, a.dim() + c) = b.matrix(i)(r, c);
            }
        }
        ms.push_back(std::move(m));
    }
    return LieRep(a.algebra(), d, std::move(ms), a.label() + "+" + b.label());
}

LieRep pullback(const LieRep& rep, LiePtr source, const Matrix& hom, std::string label)
{
    if (hom.rows() != rep.algebra()->dim() || hom.cols() != source->dim()) {
        throw InputError("pullback map has the wrong shape");
    }
    std::vector<Matrix> ms;
    for (std::size_t i = 0; i < source->dim(); ++i) {
        ms.push_back(rep.act(hom.column(i)));
    }
    return LieRep(std::move(source), rep.dim(), std::move(ms), std::move(label));
}

} // namespace tca
