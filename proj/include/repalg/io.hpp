#pragma once

// Text formats: the JSON module format, classification reports, lifts and
// orbit graphs (DOT and JSON adjacency lists).

#include <json.hpp>

#include <string>

#include "deformation.hpp"
#include "orbit.hpp"

namespace repalg {

using Json = nlohmann::json;

template <FieldScalar K>
Json matrix_to_json(const Matrix<K>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Truncated entries as coefficient lists, lowest degree first.
template <FieldScalar K>
Json matrix_to_json(const RingMatrix<K>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Json coeffs = Json::array();
            for (const auto& c : m(i, j).coeffs()) coeffs.push_back(c.to_string());
            row.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// {"field", "window", "dims", "mats"}; zero dims and zero matrices are omitted.
template <FieldScalar K>
Json module_to_json(const Representation<K>& m) {
    Json dims = Json::object(), mats = Json::object();
    for (const auto& [v, d] : m.dim_vector()) dims[v.to_string()] = d;
    for (const auto& [a, x] : m.stored_mats()) mats[a.name()] = matrix_to_json(x);
    return {{"field", m.field().to_string()},
            {"window", {m.window().z_min(), m.window().z_max()}},
            {"dims", dims},
            {"mats", mats}};
}

template <FieldScalar K>
K scalar_from_json(const Json& j, const Field& f) {
    if (j.is_string()) return ScalarTraits<K>::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return ScalarTraits<K>::from_int(j.get<long>(), f);
    throw ParseError("bad-module", "scalar must be a string or an integer, got " + j.dump());
}

inline Field field_from_module_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j["field"].is_string())
        throw ParseError("bad-module", "module JSON needs a string \"field\"");
    return Field::parse(j["field"].get<std::string>());
}

template <FieldScalar K>
Representation<K> module_from_json(const Json& j) {
    Field field = field_from_module_json(j);
    require_field<K>(field);
    if (!j.contains("window") || !j["window"].is_array() || j["window"].size() != 2 ||
        !j["window"][0].is_number_integer() || !j["window"][1].is_number_integer())
        throw ParseError("bad-module", "\"window\" must be [z_min, z_max]");
    QuiverWindow w(j["window"][0].get<int>(), j["window"][1].get<int>());
    DimVector dims;
    if (j.contains("dims")) {
        if (!j["dims"].is_object()) throw ParseError("bad-module", "\"dims\" must be an object");
        for (const auto& [key, val] : j["dims"].items()) {
            auto v = parse_vertex(key);
            if (!v) throw ParseError("bad-module", "bad vertex name '" + key + "'");
            if (!val.is_number_unsigned() && !(val.is_number_integer() && val.template get<long>() >= 0))
                throw ParseError("bad-module", "dimension of " + key + " must be a nonnegative integer");
            dims[*v] = val.template get<std::size_t>();
        }
    }
    std::map<Arrow, Matrix<K>> mats;
    if (j.contains("mats")) {
        if (!j["mats"].is_object()) throw ParseError("bad-module", "\"mats\" must be an object");
        for (const auto& [key, val] : j["mats"].items()) {
            auto a = parse_arrow(key);
            if (!a) throw ParseError("bad-module", "bad arrow name '" + key + "'");
            if (!val.is_array()) throw ParseError("bad-module", "matrix of " + key + " must be an array of rows");
            std::size_t rows = val.size();
            std::size_t cols = rows ? val[0].size() : (dims.count(a->source()) ? dims[a->source()] : 0);
            Matrix<K> m(rows, cols);
            for (std::size_t r = 0; r < rows; ++r) {
                if (!val[r].is_array() || val[r].size() != cols)
                    throw ShapeError("matrix of " + key + " has ragged rows");
                for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json<K>(val[r][c], field);
            }
            mats.emplace(*a, std::move(m));
        }
    }
    return Representation<K>(field, w, dims, std::move(mats));
}

/// Parses JSON text, turning syntax errors into ParseError with line:column.
inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("bad-json", origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

template <FieldScalar K>
Json report_to_json(const ClassificationReport<K>& r, const std::string& module_label) {
    Json ob = nullptr;
    if (r.obstruction) {
        Json residual = Json::array();
        for (const auto& x : r.obstruction->residual) residual.push_back(x.to_string());
        ob = {{"order", r.obstruction->order}, {"residual", residual}};
    }
    return {{"module", module_label},
            {"stable_end_dim", r.stable_end_dim},
            {"ext1_dim", r.ext1_dim},
            {"verdict", r.verdict},
            {"universal", r.universal()},
            {"test_order", r.test_order},
            {"lift_order_reached", r.lift_order_reached},
            {"obstruction", ob}};
}

template <FieldScalar K>
Json lift_to_json(const Lift<K>& l) {
    Json mats = Json::object();
    for (const auto& [a, m] : l.mats)
        if (!m.is_zero()) mats[a.name()] = matrix_to_json(m);
    return {{"order", l.order}, {"mats", mats}};
}

template <FieldScalar K>
Json cocycle_to_json(const FirstOrderClass<K>& c) {
    Json mats = Json::object();
    for (const auto& [a, m] : c.cocycle)
        if (!m.is_zero()) mats[a.name()] = matrix_to_json(m);
    return mats;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

/// DOT digraph; nodes n0, n1, ... in discovery order, edges labeled Ω, Ω⁻¹, ν, τ.
template <FieldScalar K>
std::string emit_dot(const OrbitGraph<K>& g) {
    std::string s = "digraph orbit {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        s += "  n" + std::to_string(i) + " [label=\"" + dot_escape(g.nodes[i].label()) + "\"";
        if (g.nodes[i].undecided) s += ", style=dashed";
        s += "];\n";
    }
    for (const auto& e : g.edges)
        s += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + op_symbol(e.op) + "\"];\n";
    return s + "}\n";
}

template <FieldScalar K>
Json orbit_to_json(const OrbitGraph<K>& g) {
    Json nodes = Json::array(), edges = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        Json dims = Json::object();
        for (const auto& [v, d] : n.module.dim_vector()) dims[v.to_string()] = d;
        Json out = Json::array();
        for (const auto& e : g.edges)
            if (e.from == i) out.push_back({{"to", e.to}, {"op", op_name(e.op)}});
        nodes.push_back({{"id", i},
                         {"label", n.label()},
                         {"word", n.word ? Json(n.word->to_string()) : Json(nullptr)},
                         {"dims", dims},
                         {"depth", n.depth},
                         {"undecided", n.undecided},
                         {"out", out}});
    }
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"op", op_name(e.op)}});
    return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace repalg
