#pragma once

// Frobenius-category structure of the repetitive Kronecker algebra:
// projective-injectives, covers and hulls, syzygies, the Nakayama shift,
// the Auslander-Reiten translate, stable Hom and Ext^1.

#include <string>
#include <utility>
#include <vector>

#include "representation.hpp"

namespace repalg {

namespace detail {

/// Basis of P_v: each vector is the image of the top generator under a path
/// (arrows in walking order). Order matches the matrices built below.
inline std::vector<std::pair<Vertex, std::vector<Arrow>>> projective_paths(const Vertex& v) {
    int z = v.z;
    if (v.layer == 1)
        return {{Vertex::one(z), {}},
                {Vertex::two(z), {Arrow::alpha(z)}},
                {Vertex::two(z), {Arrow::beta(z)}},
                {Vertex::one(z - 1), {Arrow::alpha(z), Arrow::alpha_star(z)}}};
    return {{Vertex::two(z), {}},
            {Vertex::one(z - 1), {Arrow::alpha_star(z)}},
            {Vertex::one(z - 1), {Arrow::beta_star(z)}},
            {Vertex::two(z - 1), {Arrow::alpha_star(z), Arrow::alpha(z - 1)}}};
}

}  // namespace detail

/// P_{1_z}:  1_z --a,b--> 2_z ⊕ 2_z --A,B--> 1_{z-1}, with A a = B b spanning the socle.
/// P_{2_z}:  2_z --A,B--> 1_{z-1} ⊕ 1_{z-1} --a,b--> 2_{z-1}, with a A = b B spanning the socle.
template <FieldScalar K>
Representation<K> indecomposable_projective(const Vertex& v, const Field& field) {
    int z = v.z;
    QuiverWindow w(z - 1, z);
    Matrix<K> first{{K(1)}, {K(0)}}, second{{K(0)}, {K(1)}};
    Matrix<K> to_socle_a{{K(1), K(0)}}, to_socle_b{{K(0), K(1)}};
    if (v.layer == 1)
        return Representation<K>(field, w, {{Vertex::one(z), 1}, {Vertex::two(z), 2}, {Vertex::one(z - 1), 1}},
                                 {{Arrow::alpha(z), first},
                                  {Arrow::beta(z), second},
                                  {Arrow::alpha_star(z), to_socle_a},
                                  {Arrow::beta_star(z), to_socle_b}});
    return Representation<K>(field, w, {{Vertex::two(z), 1}, {Vertex::one(z - 1), 2}, {Vertex::two(z - 1), 1}},
                             {{Arrow::alpha_star(z), first},
                              {Arrow::beta_star(z), second},
                              {Arrow::alpha(z - 1), to_socle_a},
                              {Arrow::beta(z - 1), to_socle_b}});
}

template <FieldScalar K>
Matrix<K> path_matrix(const Representation<K>& m, const std::vector<Arrow>& path, const Vertex& start) {
    auto acc = Matrix<K>::identity(m.dim(start));
    for (const auto& a : path) acc = m.mat(a) * acc;
    return acc;
}

template <FieldScalar K>
struct TopData {
    DimVector dims;                               // dim of (M / rad M)_v, nonzero only
    std::map<Vertex, Matrix<K>> quotient;         // M_v -> (M / rad M)_v
    std::map<Vertex, std::vector<std::size_t>> generators;  // standard basis vectors of M_v spanning a complement of rad
};

/// rad M_v is the sum of the images of the arrows ending at v.
template <FieldScalar K>
TopData<K> top(const Representation<K>& m) {
    TopData<K> t;
    for (const auto& [v, d] : m.dim_vector()) {
        Matrix<K> rad(d, 0);
        for (const auto& a : m.window().incoming(v)) rad = hstack(rad, m.mat(a));
        auto q = kernel_basis(rad.transpose()).transpose();
        if (q.rows() == 0) continue;
        t.dims[v] = q.rows();
        t.quotient[v] = q;
        std::size_t r = rank(rad);
        for (std::size_t i = 0; i < d && t.generators[v].size() < q.rows(); ++i) {
            Matrix<K> e(d, 1);
            e(i, 0) = K(1);
            auto extended = hstack(rad, e);
            if (rank(extended) > r) {
                rad = std::move(extended);
                ++r;
                t.generators[v].push_back(i);
            }
        }
    }
    return t;
}

/// Dimension vectors of rad^k M / rad^{k+1} M for k = 0, 1, ... until rad^k M = 0.
template <FieldScalar K>
std::vector<DimVector> radical_layers(const Representation<K>& m) {
    std::map<Vertex, Matrix<K>> span;  // columns spanning (rad^k M)_v
    for (const auto& [v, d] : m.dim_vector()) span[v] = Matrix<K>::identity(d);
    std::vector<DimVector> layers;
    while (true) {
        std::map<Vertex, Matrix<K>> next;
        for (const auto& [v, d] : m.dim_vector()) {
            Matrix<K> acc(d, 0);
            for (const auto& a : m.window().incoming(v))
                if (auto it = span.find(a.source()); it != span.end()) acc = hstack(acc, m.mat(a) * it->second);
            next[v] = std::move(acc);
        }
        DimVector layer;
        bool any = false;
        for (const auto& [v, s] : span) {
            std::size_t here = rank(s), below = rank(next[v]);
            if (here > 0) any = true;
            if (here > below) layer[v] = here - below;
        }
        if (!any) break;
        layers.push_back(std::move(layer));
        span = std::move(next);
    }
    return layers;
}

/// soc M_v: vectors killed by every arrow leaving v.
template <FieldScalar K>
DimVector socle(const Representation<K>& m) {
    DimVector out;
    for (const auto& [v, d] : m.dim_vector()) {
        Matrix<K> stacked(0, d);
        for (const auto& a : m.window().outgoing(v)) stacked = vstack(stacked, m.mat(a));
        if (auto k = kernel_basis(stacked).cols()) out[v] = k;
    }
    return out;
}

template <FieldScalar K>
struct CoverData {
    std::shared_ptr<const Representation<K>> cover;
    Morphism<K> map;           // cover -> M, surjective
    Morphism<K> kernel_embed;  // Ω M -> cover

    const Representation<K>& kernel() const { return *kernel_embed.source; }
};

namespace detail {

/// The kernel of a morphism f: P -> M (surjective or not) as a submodule of P.
template <FieldScalar K>
Morphism<K> kernel_of(const Morphism<K>& f) {
    const auto& p = *f.source;
    const auto& w = p.window();
    std::map<Vertex, Matrix<K>> basis;
    DimVector dims;
    for (const auto& v : w.vertices()) {
        basis[v] = kernel_basis(f.at(v));
        dims[v] = basis[v].cols();
    }
    std::map<Arrow, Matrix<K>> mats;
    for (const auto& a : w.arrows()) {
        auto image = p.mat(a) * basis[a.source()];
        auto x = solve(basis[a.target()], image);
        if (!x) throw InvariantBreach("kernel is not closed under arrow " + a.name());
        mats[a] = x->particular;
    }
    auto ker = share(Representation<K>(p.field(), w, dims, std::move(mats)));
    Morphism<K> embed{ker, f.source, {}};
    for (auto& [v, b] : basis)
        if (!b.empty()) embed.comps[v] = std::move(b);
    return embed;
}

}  // namespace detail

/// Minimal projective cover ⊕ P_v^{top multiplicity} -> M and its kernel.
template <FieldScalar K>
CoverData<K> projective_cover(const Representation<K>& m_in) {
    auto w = m_in.window().grown(1, 0);
    auto m = share(m_in.embedded(w));
    auto t = top(*m);

    Representation<K> cover = Representation<K>::zero(m->field(), w);
    std::map<Vertex, Matrix<K>> comps;
    for (const auto& v : w.vertices()) comps[v] = Matrix<K>(m->dim(v), 0);
    for (const auto& [v, gens] : t.generators) {
        for (auto g : gens) {
            cover = direct_sum(cover, indecomposable_projective<K>(v, m->field()));
            Matrix<K> x(m->dim(v), 1);
            x(g, 0) = K(1);
            for (const auto& [u, path] : detail::projective_paths(v)) comps[u] = hstack(comps[u], path_matrix(*m, path, v) * x);
        }
    }
    auto cov = share(cover.embedded(w));
    Morphism<K> map{cov, m, {}};
    for (auto& [v, c] : comps) {
        if (rank(c) != m->dim(v)) throw InvariantBreach("projective cover is not surjective at " + v.to_string());
        if (!c.empty()) map.comps[v] = std::move(c);
    }
    auto embed = detail::kernel_of(map);
    return {cov, std::move(map), std::move(embed)};
}

/// Ω M: kernel of the projective cover, on its own support window.
template <FieldScalar K>
Representation<K> syzygy(const Representation<K>& m) {
    if (m.is_zero()) return m;
    return projective_cover(m).kernel().trimmed();
}

template <FieldScalar K>
bool is_projective(const Representation<K>& m) {
    return !m.is_zero() && projective_cover(m).kernel().is_zero();
}

// Duality D = Hom_k(-, k) followed by the fixed relabeling of the opposite
// quiver onto itself:
//   1_z <-> 2_{-z},  a_z <-> a_{-z},  b_z <-> b_{-z},  A_z <-> A_{1-z},  B_z <-> B_{1-z}.
// The relabeling is an involution, so dualize(dualize(M)) == M exactly.

inline Vertex dual_vertex(const Vertex& v) { return {3 - v.layer, -v.z}; }

inline Arrow dual_arrow(const Arrow& a) { return {a.kind, a.is_starred() ? 1 - a.z : -a.z}; }

inline QuiverWindow dual_window(const QuiverWindow& w) { return {-w.z_max(), -w.z_min()}; }

template <FieldScalar K>
Representation<K> dualize(const Representation<K>& m) {
    DimVector dims;
    for (const auto& [v, d] : m.dim_vector()) dims[dual_vertex(v)] = d;
    std::map<Arrow, Matrix<K>> mats;
    for (const auto& [a, x] : m.stored_mats()) mats[dual_arrow(a)] = x.transpose();
    return Representation<K>(m.field(), dual_window(m.window()), dims, std::move(mats));
}

/// D f : D N -> D M for f : M -> N.
template <FieldScalar K>
Morphism<K> dualize(const Morphism<K>& f) {
    Morphism<K> g{share(dualize(*f.target)), share(dualize(*f.source)), {}};
    for (const auto& [v, c] : f.comps) g.comps[dual_vertex(v)] = c.transpose();
    return g;
}

template <FieldScalar K>
struct HullData {
    std::shared_ptr<const Representation<K>> hull;
    Morphism<K> map;            // M -> hull, injective
    Morphism<K> cokernel_proj;  // hull -> Ω^{-1} M

    const Representation<K>& cokernel() const { return *cokernel_proj.target; }
};

/// D(cover of D M).
template <FieldScalar K>
HullData<K> injective_hull(const Representation<K>& m) {
    auto c = projective_cover(dualize(m));
    auto map = dualize(c.map);
    auto proj = dualize(c.kernel_embed);
    return {map.target, std::move(map), std::move(proj)};
}

/// Ω^{-1} M: cokernel of the injective hull.
template <FieldScalar K>
Representation<K> cosyzygy(const Representation<K>& m) {
    if (m.is_zero()) return m;
    return injective_hull(m).cokernel().trimmed();
}

/// ν^k: relabels z -> z + k; (ν V)_i = V_{i+1} with the tuple index i = -z.
template <FieldScalar K>
Representation<K> nakayama_shift(const Representation<K>& m, int k) {
    DimVector dims;
    for (const auto& [v, d] : m.dim_vector()) dims[{v.layer, v.z + k}] = d;
    std::map<Arrow, Matrix<K>> mats;
    for (const auto& [a, x] : m.stored_mats()) mats[{a.kind, a.z + k}] = x;
    QuiverWindow w(m.window().z_min() + k, m.window().z_max() + k);
    return Representation<K>(m.field(), w, dims, std::move(mats));
}

/// τ M = ν Ω² M. Projective input is an error; decomposable or undecidable
/// input is computed anyway and noted in `warnings`.
template <FieldScalar K>
Representation<K> ar_translate(const Representation<K>& m, std::vector<std::string>* warnings = nullptr) {
    auto omega = syzygy(m);
    if (m.is_zero() || omega.is_zero()) throw DomainError("AR translate is undefined on projective modules");
    auto ind = is_indecomposable(m);
    if (warnings && ind == Decision::no) warnings->push_back("tau applied to a decomposable module");
    if (warnings && ind == Decision::undecided) warnings->push_back("tau applied to a module of undecided indecomposability");
    return nakayama_shift(syzygy(omega), 1);
}

struct StableHomCount {
    std::size_t hom = 0;         // dim Hom(M, N)
    std::size_t via_hull = 0;    // dim of maps factoring through M -> I(M)
    std::size_t via_cover = 0;   // dim of maps factoring through P(N) -> N

    std::size_t stable() const { return hom - via_hull; }
};

/// Both characterizations of the projectively-trivial maps, uncompared.
template <FieldScalar K>
StableHomCount stable_hom_routes(const Representation<K>& m, const Representation<K>& n) {
    require_same_field(m, n);
    StableHomCount c;
    c.hom = hom_dim(m, n);
    if (c.hom == 0) return c;

    auto hull = injective_hull(m);
    std::vector<Morphism<K>> through_hull;
    for (const auto& g : hom_basis(*hull.hull, n)) through_hull.push_back(compose(g, hull.map));
    c.via_hull = span_dim(through_hull);

    auto cover = projective_cover(n);
    std::vector<Morphism<K>> through_cover;
    for (const auto& f : hom_basis(m, *cover.cover)) through_cover.push_back(compose(cover.map, f));
    c.via_cover = span_dim(through_cover);
    return c;
}

/// dim of Hom(M, N) modulo maps factoring through a projective; both routes
/// are computed and must agree.
template <FieldScalar K>
std::size_t stable_hom_dim(const Representation<K>& m, const Representation<K>& n) {
    auto c = stable_hom_routes(m, n);
    if (c.via_hull != c.via_cover)
        throw InvariantBreach("projectively trivial maps: " + std::to_string(c.via_hull) + " via injective hull, " +
                              std::to_string(c.via_cover) + " via projective cover");
    return c.stable();
}

/// dim Ext^1(M, N) = dim stable Hom(Ω M, N).
template <FieldScalar K>
std::size_t ext1_dim(const Representation<K>& m, const Representation<K>& n) {
    return stable_hom_dim(syzygy(m), n);
}

}  // namespace repalg
