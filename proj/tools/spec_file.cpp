#include "spec_file.hpp"

#include "tca/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <set>

namespace tca::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw InputError(path + ": " + msg);
}

std::string at(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

const json& require(const json& obj, const std::string& path, const std::string& key)
{
    if (!obj.is_object() || !obj.contains(key)) {
        fail(at(path, key), "missing");
    }
    return obj.at(key);
}

std::size_t natural(const json& v, const std::string& path)
{
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(path, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::string text(const json& v, const std::string& path)
{
    if (!v.is_string()) {
        fail(path, "expected a string");
    }
    return v.get<std::string>();
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys)
{
    if (!obj.is_object()) {
        fail(path.empty() ? "document" : path, "expected an object");
    }
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items()) {
        if (!allowed.count(k)) {
            fail(at(path, k), "unknown field");
        }
    }
}

Cyc scalar(const FieldPtr& f, const json& v, const std::string& path)
{
    if (v.is_number_integer()) {
        return Cyc(f, static_cast<long>(v.get<long long>()));
    }
    if (v.is_string()) {
        try {
            return Cyc::parse(f, v.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an exact scalar (integer or string such as \"1/2*z - 1\")");
}

Vec vector_of(const FieldPtr& f, const json& v, const std::string& path, std::size_t expected)
{
    if (!v.is_array()) {
        fail(path, "expected an array");
    }
    if (v.size() != expected) {
        fail(path, "expected " + std::to_string(expected) + " entries, got " + std::to_string(v.size()));
    }
    Vec out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(scalar(f, v[i], at(path, i)));
    }
    return out;
}

Matrix matrix_of(const FieldPtr& f, const json& v, const std::string& path, std::size_t n, const std::string& what)
{
    if (!v.is_array()) {
        fail(path, "expected an array of rows");
    }
    const std::size_t cols = v.empty() || !v[0].is_array() ? 0 : v[0].size();
    bool rect = true;
    for (const auto& row : v) {
        rect = rect && row.is_array() && row.size() == cols;
    }
    if (!rect) {
        fail(path, what + " has ragged rows");
    }
    if (v.size() != n || cols != n) {
        fail(path, what + " is " + std::to_string(v.size()) + "x" + std::to_string(cols) + ", expected " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = scalar(f, v[r][c], at(at(path, r), c));
        }
    }
    return m;
}

// Matrices of arbitrary square size, one per basis element.
std::vector<Matrix> matrix_list(const FieldPtr& f, const json& v, const std::string& path)
{
    if (!v.is_array()) {
        fail(path, "expected an array of matrices");
    }
    std::vector<Matrix> out;
    const std::size_t n = v.empty() ? 0 : v[0].size();
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(matrix_of(f, v[k], at(path, k), n, "matrix " + std::to_string(k + 1)));
    }
    return out;
}

LiePtr parse_lie(const FieldPtr& f, const json& j)
{
    const std::string path = "lie_algebra";
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    const std::string type = j.contains("type") ? text(j.at("type"), at(path, "type")) : "structure";
    if (type == "sl") {
        only_keys(j, path, {"type", "rank", "n"});
        std::size_t n = 0;
        if (j.contains("rank")) {
            n = natural(j.at("rank"), at(path, "rank")) + 1;
        } else {
            n = natural(require(j, path, "n"), at(path, "n"));
        }
        if (n < 2) {
            fail(path, "sl_n needs n >= 2");
        }
        return std::make_shared<const LieAlgebra>(build_sl(f, static_cast<unsigned>(n)));
    }
    if (type != "structure") {
        fail(at(path, "type"), "unknown type '" + type + "' (expected \"sl\" or \"structure\")");
    }
    only_keys(j, path, {"type", "dim", "names", "brackets", "label"});
    const std::size_t d = natural(require(j, path, "dim"), at(path, "dim"));
    std::vector<std::string> names;
    if (j.contains("names")) {
        const auto& jn = j.at("names");
        if (!jn.is_array() || jn.size() != d) {
            fail(at(path, "names"), "expected " + std::to_string(d) + " names");
        }
        for (std::size_t i = 0; i < d; ++i) {
            names.push_back(text(jn[i], at(at(path, "names"), i)));
        }
    }
    std::vector<Vec> table(d * d, zero_vector(f, d));
    if (j.contains("brackets")) {
        const auto& jb = j.at("brackets");
        if (!jb.is_array()) {
            fail(at(path, "brackets"), "expected an array of [i, j, [coordinates]]");
        }
        for (std::size_t k = 0; k < jb.size(); ++k) {
            const std::string p = at(at(path, "brackets"), k);
            const auto& e = jb[k];
            if (!e.is_array() || e.size() != 3) {
                fail(p, "expected [i, j, [coordinates]]");
            }
            const std::size_t a = natural(e[0], at(p, 0)), b = natural(e[1], at(p, 1));
            if (a < 1 || a > d || b < 1 || b > d) {
                fail(p, "basis index out of range 1.." + std::to_string(d));
            }
            const Vec c = vector_of(f, e[2], at(p, 2), d);
            table[(a - 1) * d + (b - 1)] = c;
            Vec neg;
            for (const auto& x : c) {
                neg.push_back(-x);
            }
            table[(b - 1) * d + (a - 1)] = neg;
        }
    }
    const std::string label = j.contains("label") ? text(j.at("label"), at(path, "label")) : "g";
    auto g = std::make_shared<const LieAlgebra>(f, d, std::move(table), std::move(names), label);
    try {
        g->validate();
    } catch (const InputError& e) {
        fail(path, e.what());
    }
    return g;
}

SiteAlgebra parse_points(const FieldPtr& f, const json& j)
{
    const std::string path = "points";
    if (j.is_number_integer()) {
        const std::size_t n = natural(j, path);
        if (n == 0) {
            fail(path, "need at least one point");
        }
        return SiteAlgebra(f, n);
    }
    only_keys(j, path, {"count", "labels"});
    const std::size_t n = natural(require(j, path, "count"), at(path, "count"));
    if (n == 0) {
        fail(at(path, "count"), "need at least one point");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const auto& jl = j.at("labels");
        if (!jl.is_array() || jl.size() != n) {
            fail(at(path, "labels"), "expected " + std::to_string(n) + " labels");
        }
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(text(jl[i], at(at(path, "labels"), i)));
        }
    }
    return SiteAlgebra(f, n, std::move(labels));
}

std::size_t point_index(const json& v, const std::string& path, const SiteAlgebra& site)
{
    if (v.is_string()) {
        for (std::size_t p = 0; p < site.points(); ++p) {
            if (site.label(p) == v.get<std::string>()) {
                return p;
            }
        }
        fail(path, "no point labelled '" + v.get<std::string>() + "'");
    }
    const std::size_t p = natural(v, path);
    if (p < 1 || p > site.points()) {
        fail(path, "point index out of range 1.." + std::to_string(site.points()));
    }
    return p - 1;
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ordered_json matrix_json(const Matrix& m)
{
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

SpecDocument parse_spec(const std::string& source, unsigned default_conductor)
{
    json j;
    try {
        j = json::parse(source);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_and_column(source, e.byte);
        std::string what = e.what();
        const auto cut = what.find("syntax error");
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         (cut == std::string::npos ? what : what.substr(cut)));
    }
    only_keys(j, "", {"name", "description", "field", "lie_algebra", "points", "group", "catalog", "module",
                      "representation", "commands"});

    unsigned conductor = default_conductor;
    if (j.contains("field")) {
        only_keys(j.at("field"), "field", {"cyclotomic_order"});
        const std::size_t n = natural(require(j.at("field"), "field", "cyclotomic_order"), "field.cyclotomic_order");
        if (n == 0 || n > 1000) {
            fail("field.cyclotomic_order", "conductor must lie in 1..1000");
        }
        conductor = static_cast<unsigned>(n);
    }
    const FieldPtr f = CyclotomicField::make(conductor);

    SpecDocument doc;
    doc.name = j.contains("name") ? text(j.at("name"), "name") : "spec";
    const LiePtr g = parse_lie(f, require(j, "", "lie_algebra"));
    SiteAlgebra site = parse_points(f, require(j, "", "points"));

    const json& jg = require(j, "", "group");
    only_keys(jg, "group", {"generators", "cap"});
    const std::size_t cap = jg.contains("cap") ? natural(jg.at("cap"), "group.cap") : default_group_cap;
    const json& gens = require(jg, "group", "generators");
    if (!gens.is_array()) {
        fail("group.generators", "expected an array of matrices");
    }
    const std::size_t n = g->dim() * site.points();
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        mats.push_back(matrix_of(f, gens[k], at("group.generators", k), n, "generator " + std::to_string(k + 1)));
    }
    const SiteAlgebra site_copy = site;
    try {
        doc.action = build_action(g, std::move(site), mats, cap);
    } catch (const InputError& e) {
        fail("group.generators", e.what());
    }

    if (j.contains("catalog")) {
        const json& jc = j.at("catalog");
        if (!jc.is_array()) {
            fail("catalog", "expected an array");
        }
        for (std::size_t k = 0; k < jc.size(); ++k) {
            const std::string p = at("catalog", k);
            only_keys(jc[k], p, {"point", "label", "matrices"});
            doc.catalog.push_back({point_index(require(jc[k], p, "point"), at(p, "point"), site_copy),
                                   text(require(jc[k], p, "label"), at(p, "label")),
                                   matrix_list(f, require(jc[k], p, "matrices"), at(p, "matrices"))});
        }
    }
    if (j.contains("module")) {
        const json& jm = j.at("module");
        only_keys(jm, "module", {"lambda", "components"});
        SpecModule m;
        if (jm.contains("lambda")) {
            const json& jl = jm.at("lambda");
            if (!jl.is_array()) {
                fail("module.lambda", "expected an array");
            }
            Vec l;
            for (std::size_t i = 0; i < jl.size(); ++i) {
                l.push_back(scalar(f, jl[i], at("module.lambda", i)));
            }
            m.lambda = std::move(l);
        }
        const json comps = jm.contains("components") ? jm.at("components") : json::array();
        if (!comps.is_array()) {
            fail("module.components", "expected an array");
        }
        for (std::size_t k = 0; k < comps.size(); ++k) {
            const std::string p = at("module.components", k);
            only_keys(comps[k], p, {"point", "label"});
            m.components.push_back({point_index(require(comps[k], p, "point"), at(p, "point"), site_copy),
                                    text(require(comps[k], p, "label"), at(p, "label"))});
        }
        doc.module = std::move(m);
    }
    if (j.contains("representation")) {
        const json& jr = j.at("representation");
        only_keys(jr, "representation", {"label", "matrices"});
        doc.representation = SpecRepresentation{
            jr.contains("label") ? text(jr.at("label"), "representation.label") : "rho",
            matrix_list(f, require(jr, "representation", "matrices"), "representation.matrices")};
    }
    return doc;
}

unsigned conductor_from_environment()
{
    const char* v = std::getenv("TCA_CONDUCTOR");
    if (!v || !*v) {
        return 1;
    }
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 1000) {
        throw InputError(std::string("TCA_CONDUCTOR must be an integer in 1..1000, got '") + v + "'");
    }
    return static_cast<unsigned>(n);
}

std::string spec_text(const TwistedAction& act, const std::string& name)
{
    ordered_json j;
    j["name"] = name;
    j["field"]["cyclotomic_order"] = act.field()->conductor();
    const LieAlgebra& g = *act.g();
    unsigned n = 2;
    while (n * n - 1 < g.dim()) {
        ++n;
    }
    if (n * n - 1 == g.dim() && g == build_sl(act.field(), n)) {
        j["lie_algebra"] = {{"type", "sl"}, {"rank", n - 1}};
    } else {
        ordered_json lie;
        lie["type"] = "structure";
        lie["dim"] = g.dim();
        lie["names"] = g.names();
        lie["brackets"] = ordered_json::array();
        for (std::size_t a = 0; a < g.dim(); ++a) {
            for (std::size_t b = a + 1; b < g.dim(); ++b) {
                const Vec& c = g.structure(a, b);
                bool zero = true;
                ordered_json coords = ordered_json::array();
                for (const auto& x : c) {
                    zero = zero && x.is_zero();
                    coords.push_back(x.to_string());
                }
                if (!zero) {
                    lie["brackets"].push_back(ordered_json::array({a + 1, b + 1, coords}));
                }
            }
        }
        j["lie_algebra"] = lie;
    }
    j["points"] = {{"count", act.points()}, {"labels", act.site().labels()}};
    ordered_json gens = ordered_json::array();
    for (std::size_t k : act.generators()) {
        gens.push_back(matrix_json(act.element(k)));
    }
    j["group"]["generators"] = gens;
    return j.dump(2) + "\n";
}

ActionPtr builtin_action(const std::string& name, unsigned m)
{
    if (name == "klein") {
        return klein_example();
    }
    if (name == "swap") {
        return swap_example();
    }
    if (name == "onsager") {
        if (m == 0) {
            throw InputError("onsager needs --m >= 1");
        }
        return onsager_example(m);
    }
    throw InputError("unknown builtin '" + name + "' (expected klein, swap or onsager)");
}

} // namespace tca::cli
