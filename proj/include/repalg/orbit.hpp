#pragma once

// Bounded exploration of a stable AR-component: nodes are isomorphism
// classes reached by Ω, Ω^{-1}, ν and τ.

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "frobenius.hpp"
#include "strings.hpp"

namespace repalg {

enum class OrbitOp { omega, omega_inv, nu, tau };

inline std::string op_symbol(OrbitOp op) {
    switch (op) {
        case OrbitOp::omega: return "Ω";
        case OrbitOp::omega_inv: return "Ω⁻¹";
        case OrbitOp::nu: return "ν";
        default: return "τ";
    }
}

inline std::string op_name(OrbitOp op) {
    switch (op) {
        case OrbitOp::omega: return "omega";
        case OrbitOp::omega_inv: return "omega_inv";
        case OrbitOp::nu: return "nu";
        default: return "tau";
    }
}

inline std::string dim_vector_label(const DimVector& d) {
    std::string s = "(";
    for (const auto& [v, n] : d) s += (s.size() > 1 ? ", " : "") + v.to_string() + ":" + std::to_string(n);
    return s + ")";
}

/// The canonical word of a string module isomorphic to M, searched among
/// strings on M's support of length dim M - 1. Gives up above `max_dim`.
template <FieldScalar K>
std::optional<StringWord> identify_string(const Representation<K>& m, std::size_t max_dim = 9) {
    std::size_t n = m.total_dim();
    if (n == 0 || n > max_dim) return std::nullopt;
    for (const auto& w : enumerate_strings(m.support_window(), n - 1)) {
        if (w.length() != n - 1) continue;
        auto s = string_module<K>(w, m.field());
        if (s.dim_vector() != m.dim_vector()) continue;
        if (is_isomorphic(s, m).isomorphic()) return w;
    }
    return std::nullopt;
}

template <FieldScalar K>
struct OrbitNode {
    Representation<K> module;
    std::optional<StringWord> word;
    bool undecided = false;  // some isomorphism test against an earlier node was undecided
    std::size_t depth = 0;

    std::string label() const { return word ? word->to_string() : dim_vector_label(module.dim_vector()); }
};

struct OrbitEdge {
    std::size_t from;
    std::size_t to;
    OrbitOp op;
};

template <FieldScalar K>
struct OrbitGraph {
    std::vector<OrbitNode<K>> nodes;
    std::vector<OrbitEdge> edges;
};

/// Breadth-first, applying Ω, Ω^{-1}, ν, τ in that order to every node of
/// depth < radius. Node and edge order is therefore deterministic.
template <FieldScalar K>
OrbitGraph<K> orbit_graph(const Representation<K>& m, std::size_t radius) {
    if (is_projective(m) || m.is_zero()) throw DomainError("orbit graph needs a non-projective module");
    OrbitGraph<K> g;
    g.nodes.push_back({m.trimmed(), identify_string(m), false, 0});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (g.nodes[cur].depth >= radius) continue;
        for (auto op : {OrbitOp::omega, OrbitOp::omega_inv, OrbitOp::nu, OrbitOp::tau}) {
            const auto& src = g.nodes[cur].module;
            Representation<K> img = src;
            switch (op) {
                case OrbitOp::omega: img = syzygy(src); break;
                case OrbitOp::omega_inv: img = cosyzygy(src); break;
                case OrbitOp::nu: img = nakayama_shift(src, 1); break;
                case OrbitOp::tau: img = ar_translate(src); break;
            }
            if (img.is_zero()) continue;
            std::optional<std::size_t> found;
            bool undecided = false;
            for (std::size_t i = 0; i < g.nodes.size() && !found; ++i) {
                auto r = is_isomorphic(g.nodes[i].module, img);
                if (r.status == Decision::yes) found = i;
                if (r.status == Decision::undecided) undecided = true;
            }
            if (!found) {
                std::size_t depth = g.nodes[cur].depth + 1;
                g.nodes.push_back({img.trimmed(), identify_string(img), undecided, depth});
                found = g.nodes.size() - 1;
                queue.push_back(*found);
            }
            g.edges.push_back({cur, *found, op});
        }
    }
    return g;
}

}  // namespace repalg
