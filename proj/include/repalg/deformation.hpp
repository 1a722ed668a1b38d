#pragma once

// Deformations over k[t]/(t^n).
//
// A lift of V over k[t]/(t^n) is stored with its reduction identification
// normalized to the identity: every arrow matrix is C_0 + C_1 t + ... with
// C_0 equal to V's matrix. Two such lifts are equivalent iff they differ by a
// gauge transformation g_v = I + t(...), so the tangent space is
//   { first-order cocycles } / { h_t(a) V_a - V_a h_s(a) }  ≅  Ext^1(V, V).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobenius.hpp"
#include "truncated.hpp"

namespace repalg {

template <FieldScalar K>
using RingMatrix = Matrix<Truncated<K>>;

template <FieldScalar K>
struct Lift {
    std::size_t order = 1;
    std::shared_ptr<const Representation<K>> base;
    std::map<Arrow, RingMatrix<K>> mats;  // every arrow of the base window with a nonempty shape

    Matrix<K> coefficient(const Arrow& a, std::size_t k) const {
        std::size_t r = base->dim(a.target()), c = base->dim(a.source());
        Matrix<K> out(r, c);
        auto it = mats.find(a);
        if (it == mats.end() || k >= order) return out;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const auto& e = it->second(i, j);  // literal entries are constants
                if (k < e.order()) out(i, j) = e.coeff(k);
            }
        return out;
    }

    RingMatrix<K> mat(const Arrow& a) const {
        auto it = mats.find(a);
        if (it != mats.end()) return it->second;
        return lift_matrix(Matrix<K>(base->dim(a.target()), base->dim(a.source())), order);
    }

    /// The reduction isomorphism k ⊗ M -> V, the identity by normalization.
    Morphism<K> reduction_iso() const { return identity_morphism(base); }

    static RingMatrix<K> lift_matrix(const Matrix<K>& m, std::size_t order) {
        RingMatrix<K> out(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Truncated<K>::constant(m(i, j), order);
        return out;
    }
};

namespace detail {

template <FieldScalar K>
std::map<Arrow, std::vector<Matrix<K>>> coefficient_lists(const Lift<K>& l) {
    std::map<Arrow, std::vector<Matrix<K>>> out;
    for (const auto& a : l.base->window().arrows()) {
        if (l.base->dim(a.source()) * l.base->dim(a.target()) == 0) continue;
        for (std::size_t k = 0; k < l.order; ++k) out[a].push_back(l.coefficient(a, k));
    }
    return out;
}

template <FieldScalar K>
Lift<K> from_coefficients(std::shared_ptr<const Representation<K>> base,
                          const std::map<Arrow, std::vector<Matrix<K>>>& coeffs, std::size_t order) {
    Lift<K> l{order, base, {}};
    for (const auto& [a, cs] : coeffs) {
        RingMatrix<K> m(cs.front().rows(), cs.front().cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::vector<K> c(order, K(0));
                for (std::size_t k = 0; k < order && k < cs.size(); ++k) c[k] = cs[k](i, j);
                m(i, j) = Truncated<K>(std::move(c));
            }
        l.mats.emplace(a, std::move(m));
    }
    return l;
}

/// Unknown layout for one matrix per arrow (dims target x source).
template <FieldScalar K>
class ArrowLayout {
public:
    explicit ArrowLayout(const Representation<K>& m) {
        for (const auto& a : m.window().arrows()) {
            std::size_t r = m.dim(a.target()), c = m.dim(a.source());
            if (r * c == 0) continue;
            blocks_[a] = {size_, r, c};
            size_ += r * c;
        }
    }
    std::size_t size() const { return size_; }
    bool has(const Arrow& a) const { return blocks_.count(a) != 0; }
    std::size_t index(const Arrow& a, std::size_t i, std::size_t j) const {
        const auto& b = blocks_.at(a);
        return b.offset + i * b.cols + j;
    }
    template <class Column>
    std::map<Arrow, Matrix<K>> unflatten(const Column& col) const {
        std::map<Arrow, Matrix<K>> out;
        for (const auto& [a, b] : blocks_) {
            Matrix<K> m(b.rows, b.cols);
            for (std::size_t i = 0; i < b.rows; ++i)
                for (std::size_t j = 0; j < b.cols; ++j) m(i, j) = col(b.offset + i * b.cols + j);
            out.emplace(a, std::move(m));
        }
        return out;
    }

private:
    struct Block {
        std::size_t offset, rows, cols;
    };
    std::map<Arrow, Block> blocks_;
    std::size_t size_ = 0;
};

/// Rows of the linearized relation map δ -> Σ sign (δ(second) V(first) + V(second) δ(first)),
/// one row per entry of each relation in the window.
template <FieldScalar K>
Matrix<K> linearized_relations(const Representation<K>& m, const ArrowLayout<K>& layout) {
    auto rels = m.window().relations();
    std::size_t rows = 0;
    for (const auto& r : rels) {
        const auto& p = r.terms.front().path;
        rows += m.dim(p.second.target()) * m.dim(p.first.source());
    }
    Matrix<K> d(rows, layout.size());
    std::size_t row = 0;
    for (const auto& r : rels) {
        const auto& p0 = r.terms.front().path;
        std::size_t nt = m.dim(p0.second.target()), ns = m.dim(p0.first.source());
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < ns; ++j, ++row)
                for (const auto& t : r.terms) {
                    const Arrow &f = t.path.first, &s = t.path.second;
                    std::size_t mid = m.dim(f.target());
                    K sign(t.sign);
                    auto vf = m.mat(f), vs = m.mat(s);
                    for (std::size_t k = 0; k < mid; ++k) {
                        if (!vf(k, j).is_zero()) d(row, layout.index(s, i, k)) += sign * vf(k, j);
                        if (!vs(i, k).is_zero()) d(row, layout.index(f, k, j)) += sign * vs(i, k);
                    }
                }
    }
    return d;
}

/// Columns: images of the elementary infinitesimal automorphisms h -> h_t V_a - V_a h_s.
template <FieldScalar K>
Matrix<K> coboundary_matrix(const Representation<K>& m, const ArrowLayout<K>& layout) {
    std::vector<std::pair<Vertex, std::size_t>> vblocks;
    std::size_t nvars = 0;
    for (const auto& [v, d] : m.dim_vector()) {
        vblocks.push_back({v, nvars});
        nvars += d * d;
    }
    Matrix<K> b(layout.size(), nvars);
    for (const auto& [v, off] : vblocks) {
        std::size_t d = m.dim(v);
        for (const auto& a : m.window().arrows()) {
            if (!layout.has(a)) continue;
            auto va = m.mat(a);
            std::size_t r = va.rows(), c = va.cols();
            // (h_v V_a)(i, j) = Σ_k h_v(i, k) V_a(k, j)  when v = target(a)
            if (a.target() == v)
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j)
                        for (std::size_t k = 0; k < d; ++k)
                            if (!va(k, j).is_zero()) b(layout.index(a, i, j), off + i * d + k) += va(k, j);
            // (V_a h_v)(i, j) = Σ_k V_a(i, k) h_v(k, j)  when v = source(a)
            if (a.source() == v)
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j)
                        for (std::size_t k = 0; k < d; ++k)
                            if (!va(i, k).is_zero()) b(layout.index(a, i, j), off + k * d + j) -= va(i, k);
        }
    }
    return b;
}

}  // namespace detail

template <FieldScalar K>
struct FirstOrderClass {
    std::map<Arrow, Matrix<K>> cocycle;  // the t-coefficient of each arrow
};

/// Basis of the tangent space: cocycles of the linearized relations, taken
/// modulo coboundaries. Representatives are kernel-basis cocycles chosen in
/// order whenever they enlarge the span of the coboundaries.
template <FieldScalar K>
std::vector<FirstOrderClass<K>> first_order_lifts(const Representation<K>& m) {
    detail::ArrowLayout<K> layout(m);
    auto cocycles = kernel_basis(detail::linearized_relations(m, layout));
    auto span = detail::coboundary_matrix(m, layout);
    std::size_t r = rank(span);
    std::vector<FirstOrderClass<K>> out;
    for (std::size_t c = 0; c < cocycles.cols(); ++c) {
        auto extended = hstack(span, cocycles.column(c));
        if (rank(extended) == r) continue;
        span = std::move(extended);
        ++r;
        out.push_back({layout.unflatten([&](std::size_t i) { return cocycles(i, c); })});
    }
    return out;
}

template <FieldScalar K>
Lift<K> trivial_lift(const Representation<K>& m, std::size_t order) {
    if (order == 0) throw DomainError("lift order must be at least 1");
    auto base = share(m);
    Lift<K> l{order, base, {}};
    for (const auto& a : m.window().arrows())
        if (m.dim(a.source()) * m.dim(a.target()) != 0) l.mats.emplace(a, Lift<K>::lift_matrix(m.mat(a), order));
    return l;
}

/// The lift V + t δ over the dual numbers.
template <FieldScalar K>
Lift<K> first_order_lift(const Representation<K>& m, const FirstOrderClass<K>& cls) {
    auto l = trivial_lift(m, 2);
    auto coeffs = detail::coefficient_lists(l);
    for (const auto& [a, d] : cls.cocycle) coeffs.at(a)[1] = d;
    return detail::from_coefficients(l.base, coeffs, 2);
}

/// All relations hold exactly over k[t]/(t^n).
template <FieldScalar K>
bool satisfies_relations(const Lift<K>& l) {
    for (const auto& rel : l.base->window().relations()) {
        const auto& p0 = rel.terms.front().path;
        RingMatrix<K> acc(l.base->dim(p0.second.target()), l.base->dim(p0.first.source()));
        for (const auto& t : rel.terms) {
            auto prod = l.mat(t.path.second) * l.mat(t.path.first);
            acc = t.sign > 0 ? acc + prod : acc - prod;
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

template <FieldScalar K>
bool reduces_to_base(const Lift<K>& l) {
    for (const auto& a : l.base->window().arrows())
        if (!(l.coefficient(a, 0) == l.base->mat(a))) return false;
    return true;
}

/// Coefficient truncation k[t]/(t^m) -> k[t]/(t^n).
template <FieldScalar K>
Lift<K> truncate(const Lift<K>& l, std::size_t n) {
    if (n == 0 || n > l.order) throw DomainError("truncate: order " + std::to_string(n) + " out of range");
    return detail::from_coefficients(l.base, detail::coefficient_lists(l), n);
}

/// Conjugates by g_v = I + t^k h_v: M'(a) = g_target M(a) g_source^{-1}.
template <FieldScalar K>
Lift<K> apply_gauge(const Lift<K>& l, const std::map<Vertex, Matrix<K>>& h, std::size_t k) {
    std::map<Vertex, RingMatrix<K>> g, ginv;
    for (const auto& [v, d] : l.base->dim_vector()) {
        RingMatrix<K> gv = Lift<K>::lift_matrix(Matrix<K>::identity(d), l.order);
        if (auto it = h.find(v); it != h.end()) {
            if (it->second.rows() != d || it->second.cols() != d) throw ShapeError("gauge at " + v.to_string());
            auto tk = Truncated<K>::t_power(k, l.order);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    gv(i, j) = gv(i, j) + tk * Truncated<K>::constant(it->second(i, j), l.order);
        }
        // (I + N)^{-1} = Σ (-N)^j with N nilpotent (entries in t k[t]).
        auto nil = gv - Lift<K>::lift_matrix(Matrix<K>::identity(d), l.order);
        RingMatrix<K> inv = Lift<K>::lift_matrix(Matrix<K>::identity(d), l.order), term = inv;
        for (std::size_t j = 1; j < l.order; ++j) {
            term = -(term * nil);
            inv = inv + term;
        }
        g.emplace(v, std::move(gv));
        ginv.emplace(v, std::move(inv));
    }
    Lift<K> out{l.order, l.base, {}};
    for (const auto& [a, m] : l.mats) out.mats.emplace(a, g.at(a.target()) * m * ginv.at(a.source()));
    return detail::from_coefficients(out.base, detail::coefficient_lists(out), out.order);
}

template <FieldScalar K>
struct Obstruction {
    std::size_t order;          // no lift exists over k[t]/(t^order) extending the input
    std::vector<K> residual;    // nonzero entries of the reduced inconsistent right-hand side
};

/// Extends L order by order: at each step the next coefficient C_k solves
///   Σ sign (C_k(second) V(first) + V(second) C_k(first)) = -Σ sign Σ_{0<i<k} C_i(second) C_{k-i}(first).
/// Gauge moves at order k shift solutions by coboundaries and never change
/// consistency, so the first inconsistent system is an obstruction.
template <FieldScalar K>
std::variant<Lift<K>, Obstruction<K>> extend_lift(const Lift<K>& l, std::size_t target_order) {
    if (!reduces_to_base(l) || !satisfies_relations(l))
        throw DomainError("extend_lift: input is not a lift at order " + std::to_string(l.order));
    if (target_order < l.order) throw DomainError("extend_lift: target order below the input order");
    const auto& m = *l.base;
    detail::ArrowLayout<K> layout(m);
    auto d = detail::linearized_relations(m, layout);
    auto coeffs = detail::coefficient_lists(l);
    auto rels = m.window().relations();

    auto c = [&](const Arrow& a, std::size_t k) -> Matrix<K> {
        auto it = coeffs.find(a);
        if (it == coeffs.end()) return Matrix<K>(m.dim(a.target()), m.dim(a.source()));
        return it->second[k];
    };

    for (std::size_t k = l.order; k < target_order; ++k) {
        Matrix<K> rhs(d.rows(), 1);
        std::size_t row = 0;
        for (const auto& rel : rels) {
            const auto& p0 = rel.terms.front().path;
            Matrix<K> acc(m.dim(p0.second.target()), m.dim(p0.first.source()));
            for (const auto& t : rel.terms)
                for (std::size_t i = 1; i < k; ++i) {
                    auto prod = c(t.path.second, i) * c(t.path.first, k - i);
                    acc = t.sign > 0 ? acc + prod : acc - prod;
                }
            for (std::size_t i = 0; i < acc.rows(); ++i)
                for (std::size_t j = 0; j < acc.cols(); ++j) rhs(row++, 0) = -acc(i, j);
        }
        auto sol = solve(d, rhs);
        if (!sol) return Obstruction<K>{k + 1, inconsistency_residual(d, rhs)};
        auto next = layout.unflatten([&](std::size_t i) { return sol->particular(i, 0); });
        for (auto& [a, cs] : coeffs) cs.push_back(next.at(a));
    }
    return detail::from_coefficients(l.base, coeffs, target_order);
}

inline const std::string verdict_field = "k";
inline const std::string verdict_power_series = "k[[t]]";
inline const std::string verdict_undetermined = "versal: quotient of k[[t_1..t_r]] (undetermined)";

template <FieldScalar K>
struct ClassificationReport {
    std::size_t stable_end_dim = 0;
    std::size_t ext1_dim = 0;
    std::string verdict;
    std::size_t test_order = 0;
    std::size_t lift_order_reached = 0;
    std::optional<Obstruction<K>> obstruction;

    /// Stable End = k: the versal ring is universal.
    bool universal() const { return stable_end_dim == 1; }
};

/// r = dim Ext^1(M, M), cross-checked against the tangent space; each tangent
/// direction is lifted to `test_order`. Verdict "k" iff r = 0; "k[[t]]" iff
/// r = 1 and the lift is unobstructed up to test_order.
template <FieldScalar K>
ClassificationReport<K> classify_versal_ring(const Representation<K>& m, std::size_t test_order = 6) {
    if (test_order == 0) throw DomainError("test order must be at least 1");
    ClassificationReport<K> rep;
    rep.test_order = test_order;
    rep.stable_end_dim = stable_hom_dim(m, m);
    rep.ext1_dim = ext1_dim(m, m);
    auto tangent = first_order_lifts(m);
    if (tangent.size() != rep.ext1_dim)
        throw InvariantBreach("tangent space has dimension " + std::to_string(tangent.size()) + " but Ext^1 has " +
                              std::to_string(rep.ext1_dim));
    rep.lift_order_reached = test_order;
    if (test_order >= 2)
        for (const auto& cls : tangent) {
            auto res = extend_lift(first_order_lift(m, cls), test_order);
            if (auto* ob = std::get_if<Obstruction<K>>(&res)) {
                rep.lift_order_reached = std::min(rep.lift_order_reached, ob->order - 1);
                if (!rep.obstruction || ob->order < rep.obstruction->order) rep.obstruction = *ob;
            }
        }
    if (rep.ext1_dim == 0)
        rep.verdict = verdict_field;
    else if (rep.ext1_dim == 1 && !rep.obstruction)
        rep.verdict = verdict_power_series;
    else
        rep.verdict = verdict_undetermined;
    return rep;
}

template <FieldScalar K>
struct InvarianceReport {
    std::vector<std::pair<std::string, ClassificationReport<K>>> entries;
    std::vector<std::string> notes;
    std::vector<std::string> diffs;

    bool passed() const { return diffs.empty(); }
};

/// Classifies M, Ω M, ν M, τ M and M ⊕ P_{1_z} and reports every disagreement
/// in verdict, Ext^1 dimension or stable End dimension.
template <FieldScalar K>
InvarianceReport<K> verify_deformation_invariance(const Representation<K>& m, std::size_t test_order = 6) {
    if (stable_hom_dim(m, m) != 1)
        throw DomainError("invariance check needs stable End(M) = k; got dimension " +
                          std::to_string(stable_hom_dim(m, m)));
    InvarianceReport<K> rep;
    rep.entries.push_back({"M", classify_versal_ring(m, test_order)});
    rep.entries.push_back({"Omega M", classify_versal_ring(syzygy(m), test_order)});
    rep.entries.push_back({"nu M", classify_versal_ring(nakayama_shift(m, 1), test_order)});
    auto ind = is_indecomposable(m);
    if (ind == Decision::no) {
        rep.notes.push_back("tau skipped: M is decomposable");
    } else {
        if (ind == Decision::undecided) rep.notes.push_back("tau computed on a module of undecided indecomposability");
        rep.entries.push_back({"tau M", classify_versal_ring(ar_translate(m), test_order)});
    }
    auto p = indecomposable_projective<K>(Vertex::one(m.support_window().z_max()), m.field());
    rep.entries.push_back({"M + P", classify_versal_ring(direct_sum(m, p), test_order)});

    const auto& ref = rep.entries.front().second;
    for (const auto& [name, r] : rep.entries) {
        if (r.verdict != ref.verdict) rep.diffs.push_back(name + ": verdict '" + r.verdict + "' vs '" + ref.verdict + "'");
        if (r.ext1_dim != ref.ext1_dim)
            rep.diffs.push_back(name + ": Ext^1 dim " + std::to_string(r.ext1_dim) + " vs " + std::to_string(ref.ext1_dim));
        if (r.stable_end_dim != ref.stable_end_dim)
            rep.diffs.push_back(name + ": stable End dim " + std::to_string(r.stable_end_dim) + " vs " +
                                std::to_string(ref.stable_end_dim));
    }
    return rep;
}

}  // namespace repalg
