#include "hopfcheck/io.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "hopfcheck/errors.hpp"

namespace hopfcheck::io {

namespace {

const json& require(const json& j, const char* key)
{
    if (!j.is_object()) throw SchemaError("top level: expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field '" + std::string(key) + "'");
    return *it;
}

std::size_t to_index(const json& j, const std::string& field)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw SchemaError("field '" + field + "': expected a non-negative integer");
    return j.get<std::size_t>();
}

Vector vector_from_json(const json& j, std::size_t n, const std::string& field)
{
    if (!j.is_array() || j.size() != n)
        throw SchemaError("field '" + field + "': expected an array of " + std::to_string(n) + " scalars");
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& field)
{
    if (!j.is_array() || j.size() != rows)
        throw SchemaError("field '" + field + "': expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vector_from_json(j[r], cols, field + "[" + std::to_string(r) + "]"));
    return m;
}

std::vector<Triple> triples_from_json(const json& j, std::size_t d, const std::string& field, bool allow_dense)
{
    if (!j.is_array()) throw SchemaError("field '" + field + "': expected an array");
    std::vector<Triple> out;
    // dense form: m[i][j] is a vector of d scalars
    if (allow_dense && j.size() == d && !j.empty() && j[0].is_array() && j[0].size() == d && j[0][0].is_array()) {
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const std::string f = field + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
                if (!j[a].is_array() || j[a].size() != d) throw SchemaError("field '" + field + "': ragged dense tensor");
                Vector v = vector_from_json(j[a][b], d, f);
                for (std::size_t k = 0; k < d; ++k)
                    if (!v[k].is_zero()) out.push_back({a, b, k, v[k]});
            }
        return out;
    }
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string f = field + "[" + std::to_string(n) + "]";
        const json& t = j[n];
        if (!t.is_array() || t.size() != 4) throw SchemaError("field '" + f + "': expected [i, j, k, scalar]");
        Triple tr{to_index(t[0], f), to_index(t[1], f), to_index(t[2], f), scalar_from_json(t[3], f)};
        if (tr.i >= d || tr.j >= d || tr.k >= d) throw SchemaError("field '" + f + "': index out of range");
        out.push_back(std::move(tr));
    }
    return out;
}

json triples_to_json(std::vector<Triple> ts)
{
    std::sort(ts.begin(), ts.end(), [](const Triple& a, const Triple& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    json out = json::array();
    for (const auto& t : ts)
        if (!t.value.is_zero()) out.push_back(json::array({t.i, t.j, t.k, scalar_to_json(t.value)}));
    return out;
}

}  // namespace

json scalar_to_json(const Scalar& s)
{
    if (s.is_rational()) return to_string(s.rational());
    json c = json::array();
    for (const auto& q : s.coeffs()) c.push_back(to_string(q));
    return json{{"order", s.order()}, {"coeffs", c}};
}

Scalar scalar_from_json(const json& j, const std::string& field)
{
    try {
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
        if (j.is_object()) {
            const json& o = require(j, "order");
            const json& c = require(j, "coeffs");
            if (!o.is_number_integer() || o.get<long>() < 1) throw SchemaError("order must be a positive integer");
            int n = o.get<int>();
            if (!c.is_array() || static_cast<int>(c.size()) != euler_phi(n))
                throw SchemaError("coeffs must have length phi(order) = " + std::to_string(euler_phi(n)));
            std::vector<Rational> qs;
            for (const auto& x : c) {
                if (x.is_number_integer()) qs.emplace_back(x.get<long>());
                else if (x.is_string()) qs.push_back(parse_rational(x.get<std::string>()));
                else throw SchemaError("coefficient must be an integer or a \"p/q\" string");
            }
            return Scalar::from_coeffs(n, std::move(qs));
        }
    } catch (const SchemaError& e) {
        throw SchemaError("field '" + field + "': " + e.what());
    }
    throw SchemaError("field '" + field + "': expected a scalar (integer, \"p/q\" string or {order, coeffs})");
}

json vector_to_json(const Vector& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

json matrix_to_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

json algebra_to_json(const HopfStarAlgebra& h)
{
    const auto& sc = h.structure();
    return json{{"dim", sc.dim},
                {"field_order", sc.field_order},
                {"basis_labels", sc.labels},
                {"mult", triples_to_json(sc.mult)},
                {"unit", vector_to_json(sc.unit)},
                {"comult", triples_to_json(sc.comult)},
                {"counit", vector_to_json(sc.counit)},
                {"antipode", matrix_to_json(sc.antipode)},
                {"star", matrix_to_json(sc.star)}};
}

HopfStarAlgebra algebra_from_json(const json& j)
{
    StructureConstants sc;
    sc.dim = to_index(require(j, "dim"), "dim");
    if (sc.dim == 0) throw SchemaError("field 'dim': must be positive");
    const json& fo = require(j, "field_order");
    if (!fo.is_number_integer() || fo.get<long>() < 1) throw SchemaError("field 'field_order': expected a positive integer");
    sc.field_order = fo.get<int>();
    const std::size_t d = sc.dim;
    if (auto it = j.find("basis_labels"); it != j.end()) {
        if (!it->is_array() || it->size() != d) throw SchemaError("field 'basis_labels': expected " + std::to_string(d) + " strings");
        for (const auto& l : *it) {
            if (!l.is_string()) throw SchemaError("field 'basis_labels': expected strings");
            sc.labels.push_back(l.get<std::string>());
        }
    }
    sc.mult = triples_from_json(require(j, "mult"), d, "mult", true);
    sc.unit = vector_from_json(require(j, "unit"), d, "unit");
    sc.comult = triples_from_json(require(j, "comult"), d, "comult", false);
    sc.counit = vector_from_json(require(j, "counit"), d, "counit");
    sc.antipode = matrix_from_json(require(j, "antipode"), d, d, "antipode");
    sc.star = matrix_from_json(require(j, "star"), d, d, "star");
    auto check = [&](const Scalar& s, const char* field) {
        if (!s.is_rational() && s.order() != sc.field_order)
            throw SchemaError(std::string("field '") + field + "': scalar of order " + std::to_string(s.order()) +
                              " does not match field_order " + std::to_string(sc.field_order));
    };
    for (const auto& t : sc.mult) check(t.value, "mult");
    for (const auto& t : sc.comult) check(t.value, "comult");
    for (const auto& s : sc.unit) check(s, "unit");
    for (const auto& s : sc.counit) check(s, "counit");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            check(sc.antipode(a, b), "antipode");
            check(sc.star(a, b), "star");
        }
    return HopfStarAlgebra(std::move(sc));
}

json group_to_json(const FiniteGroup& g)
{
    return json{{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

FiniteGroup group_from_json(const json& j)
{
    std::size_t n = to_index(require(j, "order"), "order");
    const json& t = require(j, "table");
    if (!t.is_array() || t.size() != n) throw SchemaError("field 'table': expected " + std::to_string(n) + " rows");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t r = 0; r < n; ++r) {
        const std::string f = "table[" + std::to_string(r) + "]";
        if (!t[r].is_array() || t[r].size() != n) throw SchemaError("field '" + f + "': expected " + std::to_string(n) + " entries");
        std::vector<std::size_t> row;
        for (const auto& x : t[r]) row.push_back(to_index(x, f));
        table.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array()) throw SchemaError("field 'labels': expected an array of strings");
        for (const auto& l : *it) {
            if (!l.is_string()) throw SchemaError("field 'labels': expected strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return FiniteGroup(std::move(table), std::move(labels));
}

GroupAction action_from_json(const json& j)
{
    GroupAction a;
    a.group = group_from_json(require(j, "group"));
    const json& maps = require(j, "maps");
    if (!maps.is_array() || maps.size() != a.group.order())
        throw SchemaError("field 'maps': expected one matrix per group element");
    for (std::size_t g = 0; g < maps.size(); ++g) {
        const std::string f = "maps[" + std::to_string(g) + "]";
        if (!maps[g].is_array() || maps[g].empty()) throw SchemaError("field '" + f + "': expected a square matrix");
        const std::size_t d = maps[g].size();
        a.maps.push_back(matrix_from_json(maps[g], d, d, f));
    }
    return a;
}

json action_to_json(const GroupAction& a)
{
    json maps = json::array();
    for (const auto& m : a.maps) maps.push_back(matrix_to_json(m));
    return json{{"group", group_to_json(a.group)}, {"maps", maps}};
}

Subspace ideal_from_json(const json& j, const HopfStarAlgebra& h)
{
    const std::size_t d = h.dim();
    if (j.is_object() && j.contains("ideal")) {
        const json& rows = j["ideal"];
        if (!rows.is_array()) throw SchemaError("field 'ideal': expected a list of vectors");
        std::vector<Vector> vs;
        for (std::size_t r = 0; r < rows.size(); ++r)
            vs.push_back(vector_from_json(rows[r], d, "ideal[" + std::to_string(r) + "]"));
        return Subspace::span(vs, d);
    }
    if (j.is_object() && j.contains("subgroup")) {
        const json& els = j["subgroup"];
        if (!els.is_array()) throw SchemaError("field 'subgroup': expected a list of element labels");
        for (std::size_t i = 0; i < d; ++i)
            if (h.product(i, i) != h.basis(i))
                throw SchemaError("field 'subgroup': only meaningful for function algebras (basis of idempotents)");
        std::vector<bool> in(d, false);
        for (const auto& e : els) {
            if (!e.is_string()) throw SchemaError("field 'subgroup': expected label strings");
            const std::string l = e.get<std::string>();
            bool found = false;
            for (std::size_t i = 0; i < d; ++i)
                if (h.labels()[i] == l || h.labels()[i] == "delta_" + l) {
                    in[i] = true;
                    found = true;
                }
            if (!found) throw SchemaError("field 'subgroup': unknown element '" + l + "'");
        }
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < d; ++i)
            if (!in[i]) vs.push_back(h.basis(i));
        return Subspace::span(vs, d);
    }
    throw SchemaError("ideal file: expected field 'ideal' or 'subgroup'");
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

HopfStarAlgebra load_algebra(const std::string& path)
{
    json j = read_json_file(path);
    try {
        return algebra_from_json(j);
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void save_algebra(const HopfStarAlgebra& h, const std::string& path) { write_json_file(path, algebra_to_json(h)); }

}  // namespace hopfcheck::io
