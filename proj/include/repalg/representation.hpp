#pragma once

// Finite-dimensional modules over the repetitive Kronecker algebra as
// representations of a QuiverWindow, and the morphisms between them.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "quiver.hpp"
#include "scalar.hpp"

namespace repalg {

using DimVector = std::map<Vertex, std::size_t>;

template <FieldScalar K>
class Representation {
public:
    /// Missing dims are 0 and missing arrows are zero maps. Throws ShapeError
    /// if a matrix has the wrong shape or support leaves the window.
    Representation(Field field, QuiverWindow window, const DimVector& dims, std::map<Arrow, Matrix<K>> mats = {})
        : field_(field), window_(window) {
        require_field<K>(field_);
        for (const auto& [v, d] : dims) {
            if (d == 0) continue;
            if (!window_.contains(v))
                throw ShapeError("vertex " + v.to_string() + " has dimension " + std::to_string(d) +
                                 " outside window [" + std::to_string(window_.z_min()) + ", " +
                                 std::to_string(window_.z_max()) + "]");
            dims_[v] = d;
        }
        for (auto& [a, m] : mats) {
            std::size_t r = dim(a.target()), c = dim(a.source());
            if (!window_.contains(a)) {
                if (r * c != 0 || m.rows() != r || m.cols() != c)
                    throw ShapeError("arrow " + a.name() + " lies outside the window");
                continue;
            }
            if (m.rows() != r || m.cols() != c)
                throw ShapeError("arrow " + a.name() + " needs a " + std::to_string(r) + "x" + std::to_string(c) +
                                 " matrix, got " + m.shape());
            if (r * c != 0 && !m.is_zero()) mats_.emplace(a, std::move(m));
        }
    }

    static Representation zero(Field field, QuiverWindow window) { return Representation(field, window, {}); }

    const Field& field() const { return field_; }
    const QuiverWindow& window() const { return window_; }

    std::size_t dim(const Vertex& v) const {
        auto it = dims_.find(v);
        return it == dims_.end() ? 0 : it->second;
    }

    Matrix<K> mat(const Arrow& a) const {
        auto it = mats_.find(a);
        if (it != mats_.end()) return it->second;
        return Matrix<K>(dim(a.target()), dim(a.source()));
    }

    /// Nonzero entries only.
    const DimVector& dim_vector() const { return dims_; }
    const std::map<Arrow, Matrix<K>>& stored_mats() const { return mats_; }

    std::size_t total_dim() const {
        std::size_t n = 0;
        for (const auto& [v, d] : dims_) n += d;
        return n;
    }

    bool is_zero() const { return dims_.empty(); }

    /// Same module on a larger window.
    Representation embedded(const QuiverWindow& w) const {
        if (!w.contains(window_)) throw DomainError("embedded: target window does not contain the current one");
        return Representation(field_, w, dims_, mats_);
    }

    /// Smallest window holding the support (the current window's lower end if zero).
    QuiverWindow support_window() const {
        if (dims_.empty()) return {window_.z_min(), window_.z_min()};
        int lo = dims_.begin()->first.z, hi = lo;
        for (const auto& [v, d] : dims_) {
            lo = std::min(lo, v.z);
            hi = std::max(hi, v.z);
        }
        return {lo, hi};
    }

    Representation trimmed() const { return Representation(field_, support_window(), dims_, mats_); }

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.field_ == b.field_ && a.dims_ == b.dims_ && a.mats_ == b.mats_;
    }

private:
    Field field_;
    QuiverWindow window_;
    DimVector dims_;
    std::map<Arrow, Matrix<K>> mats_;
};

template <FieldScalar K>
void require_same_field(const Representation<K>& m, const Representation<K>& n) {
    if (!(m.field() == n.field()))
        throw FieldMismatch("modules over " + m.field().to_string() + " and " + n.field().to_string());
}

template <FieldScalar K>
struct Morphism {
    std::shared_ptr<const Representation<K>> source;
    std::shared_ptr<const Representation<K>> target;
    std::map<Vertex, Matrix<K>> comps;

    /// Component at v, dim target(v) x dim source(v); zero if not stored.
    Matrix<K> at(const Vertex& v) const {
        auto it = comps.find(v);
        if (it != comps.end()) return it->second;
        return Matrix<K>(target->dim(v), source->dim(v));
    }
};

template <FieldScalar K>
std::shared_ptr<const Representation<K>> share(Representation<K> m) {
    return std::make_shared<const Representation<K>>(std::move(m));
}

/// One violation of a relation.
struct Violation {
    std::string relation;
    std::string detail;
};

inline std::string describe(const Relation& r) {
    std::string s;
    for (const auto& t : r.terms) {
        if (!s.empty() || t.sign < 0) s += t.sign < 0 ? " - " : " + ";
        s += t.path.second.name() + " " + t.path.first.name();
    }
    return s + " = 0";
}

template <FieldScalar K>
Matrix<K> relation_value(const Representation<K>& m, const Relation& r) {
    const auto& p0 = r.terms.front().path;
    Matrix<K> acc(m.dim(p0.second.target()), m.dim(p0.first.source()));
    for (const auto& t : r.terms) {
        auto prod = m.mat(t.path.second) * m.mat(t.path.first);
        acc = t.sign > 0 ? acc + prod : acc - prod;
    }
    return acc;
}

/// Relation violations of M. Shape problems never reach here: the
/// Representation constructor rejects them with ShapeError.
template <FieldScalar K>
std::vector<Violation> validate(const Representation<K>& m) {
    std::vector<Violation> out;
    for (const auto& rel : m.window().relations()) {
        auto v = relation_value(m, rel);
        if (!v.is_zero()) out.push_back({describe(rel), "composite is nonzero"});
    }
    return out;
}

template <FieldScalar K>
bool is_morphism(const Morphism<K>& f) {
    const auto& s = *f.source;
    const auto& t = *f.target;
    auto w = s.window().merged(t.window());
    for (const auto& a : w.arrows())
        if (!(f.at(a.target()) * s.mat(a) == t.mat(a) * f.at(a.source()))) return false;
    return true;
}

template <FieldScalar K>
Morphism<K> identity_morphism(std::shared_ptr<const Representation<K>> m) {
    Morphism<K> f{m, m, {}};
    for (const auto& [v, d] : m->dim_vector()) f.comps[v] = Matrix<K>::identity(d);
    return f;
}

/// g ∘ f
template <FieldScalar K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {
    Morphism<K> h{f.source, g.target, {}};
    auto w = f.source->window().merged(g.target->window());
    for (const auto& v : w.vertices()) {
        auto c = g.at(v) * f.at(v);
        if (!c.empty()) h.comps[v] = std::move(c);
    }
    return h;
}

/// Coordinates of Hom_k(M_v, N_v) over all vertices of a window, row-major per vertex.
template <FieldScalar K>
class HomLayout {
public:
    HomLayout(const Representation<K>& m, const Representation<K>& n, const QuiverWindow& w) {
        for (const auto& v : w.vertices()) {
            std::size_t rows = n.dim(v), cols = m.dim(v);
            if (rows * cols == 0) continue;
            blocks_.push_back({v, size_, rows, cols});
            size_ += rows * cols;
        }
    }

    std::size_t size() const { return size_; }

    std::vector<K> flatten(const Morphism<K>& f) const {
        std::vector<K> x(size_, K(0));
        for (const auto& b : blocks_) {
            auto c = f.at(b.v);
            for (std::size_t i = 0; i < b.rows; ++i)
                for (std::size_t j = 0; j < b.cols; ++j) x[b.offset + i * b.cols + j] = c(i, j);
        }
        return x;
    }

    template <class Column>
    Morphism<K> unflatten(const Column& col, std::shared_ptr<const Representation<K>> m,
                          std::shared_ptr<const Representation<K>> n) const {
        Morphism<K> f{std::move(m), std::move(n), {}};
        for (const auto& b : blocks_) {
            Matrix<K> c(b.rows, b.cols);
            for (std::size_t i = 0; i < b.rows; ++i)
                for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = col(b.offset + i * b.cols + j);
            f.comps[b.v] = std::move(c);
        }
        return f;
    }

    /// Index of entry (i, j) of the block at v, or nullopt if the block is empty.
    std::optional<std::size_t> index(const Vertex& v, std::size_t i, std::size_t j) const {
        for (const auto& b : blocks_)
            if (b.v == v) return b.offset + i * b.cols + j;
        return std::nullopt;
    }

private:
    struct Block {
        Vertex v;
        std::size_t offset, rows, cols;
    };
    std::vector<Block> blocks_;
    std::size_t size_ = 0;
};

/// Basis of Hom(M, N): the solution space of h_t(a) M_a = N_a h_s(a) for all
/// arrows a. Morphisms refer to copies of M and N on the merged window.
template <FieldScalar K>
std::vector<Morphism<K>> hom_basis(const Representation<K>& m_in, const Representation<K>& n_in) {
    require_same_field(m_in, n_in);
    auto w = m_in.window().merged(n_in.window());
    auto m = share(m_in.embedded(w));
    auto n = share(n_in.embedded(w));
    HomLayout<K> layout(*m, *n, w);

    std::size_t eqs = 0;
    for (const auto& a : w.arrows()) eqs += n->dim(a.target()) * m->dim(a.source());
    Matrix<K> sys(eqs, layout.size());
    std::size_t row = 0;
    for (const auto& a : w.arrows()) {
        auto s = a.source(), t = a.target();
        std::size_t nt = n->dim(t), ms = m->dim(s), mt = m->dim(t), ns = n->dim(s);
        if (nt * ms == 0) continue;
        auto ma = m->mat(a), na = n->mat(a);
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < ms; ++j, ++row) {
                // (h_t M_a)(i, j) = sum_k h_t(i, k) M_a(k, j)
                for (std::size_t k = 0; k < mt; ++k)
                    if (!ma(k, j).is_zero()) sys(row, *layout.index(t, i, k)) += ma(k, j);
                // (N_a h_s)(i, j) = sum_k N_a(i, k) h_s(k, j)
                for (std::size_t k = 0; k < ns; ++k)
                    if (!na(i, k).is_zero()) sys(row, *layout.index(s, k, j)) -= na(i, k);
            }
    }
    auto ker = kernel_basis(sys);
    std::vector<Morphism<K>> out;
    for (std::size_t c = 0; c < ker.cols(); ++c)
        out.push_back(layout.unflatten([&](std::size_t i) { return ker(i, c); }, m, n));
    return out;
}

template <FieldScalar K>
std::size_t hom_dim(const Representation<K>& m, const Representation<K>& n) {
    return hom_basis(m, n).size();
}

/// Dimension of the span of a family of morphisms M -> N.
template <FieldScalar K>
std::size_t span_dim(const std::vector<Morphism<K>>& fs) {
    if (fs.empty()) return 0;
    auto w = fs.front().source->window().merged(fs.front().target->window());
    HomLayout<K> layout(*fs.front().source, *fs.front().target, w);
    std::vector<std::vector<K>> cols;
    for (const auto& f : fs) cols.push_back(layout.flatten(f));
    return rank(columns_to_matrix(cols, layout.size()));
}

/// M ⊕ N with block-diagonal structure maps, M's basis first.
template <FieldScalar K>
Representation<K> direct_sum(const Representation<K>& m, const Representation<K>& n) {
    require_same_field(m, n);
    auto w = m.window().merged(n.window());
    DimVector dims;
    for (const auto& v : w.vertices()) dims[v] = m.dim(v) + n.dim(v);
    std::map<Arrow, Matrix<K>> mats;
    for (const auto& a : w.arrows()) mats[a] = block_diag(m.mat(a), n.mat(a));
    return Representation<K>(m.field(), w, dims, std::move(mats));
}

/// End(M) on the basis hom_basis(M, M): basis[i] ∘ basis[j] = Σ_k table[i][j][k] basis[k].
template <FieldScalar K>
struct EndAlgebra {
    std::vector<Morphism<K>> basis;
    std::vector<std::vector<std::vector<K>>> table;

    std::size_t dim() const { return basis.size(); }
};

template <FieldScalar K>
EndAlgebra<K> end_algebra(const Representation<K>& m) {
    EndAlgebra<K> e;
    e.basis = hom_basis(m, m);
    std::size_t d = e.basis.size();
    if (d == 0) return e;
    const auto& src = *e.basis.front().source;
    HomLayout<K> layout(src, src, src.window());
    std::vector<std::vector<K>> cols;
    for (const auto& f : e.basis) cols.push_back(layout.flatten(f));
    auto b = columns_to_matrix(cols, layout.size());

    // All products in one solve.
    Matrix<K> rhs(layout.size(), d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto v = layout.flatten(compose(e.basis[i], e.basis[j]));
            for (std::size_t r = 0; r < v.size(); ++r) rhs(r, i * d + j) = v[r];
        }
    auto sol = solve(b, rhs);
    if (!sol) throw InvariantBreach("composite of endomorphisms left the endomorphism space");
    e.table.assign(d, std::vector<std::vector<K>>(d, std::vector<K>(d, K(0))));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) e.table[i][j][k] = sol->particular(k, i * d + j);
    return e;
}

enum class Decision { yes, no, undecided };

inline std::string to_string(Decision d) {
    switch (d) {
        case Decision::yes: return "yes";
        case Decision::no: return "no";
        default: return "undecided";
    }
}

template <FieldScalar K>
struct IsoResult {
    Decision status = Decision::undecided;
    std::optional<Morphism<K>> witness;

    bool isomorphic() const { return status == Decision::yes; }
};

namespace detail {

template <FieldScalar K>
std::optional<Morphism<K>> try_combination(const std::vector<Morphism<K>>& basis, const std::vector<long>& coeffs,
                                           const Field& field) {
    const auto& m = *basis.front().source;
    Morphism<K> f{basis.front().source, basis.front().target, {}};
    for (const auto& [v, d] : m.dim_vector()) {
        Matrix<K> c(d, d);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coeffs[i] != 0) c = c + ScalarTraits<K>::from_int(coeffs[i], field) * basis[i].at(v);
        if (!is_invertible(c)) return std::nullopt;
        f.comps[v] = std::move(c);
    }
    return f;
}

}  // namespace detail

/// Searches Hom(M, N) for an isomorphism. See the README for the search order.
template <FieldScalar K>
IsoResult<K> is_isomorphic(const Representation<K>& m, const Representation<K>& n) {
    require_same_field(m, n);
    if (m.dim_vector() != n.dim_vector()) return {Decision::no, std::nullopt};
    auto basis = hom_basis(m, n);
    if (m.is_zero()) {
        auto w = m.window().merged(n.window());
        return {Decision::yes, Morphism<K>{share(m.embedded(w)), share(n.embedded(w)), {}}};
    }
    // Hom(M, N) ≅ End(M) ≅ End(N) as vector spaces whenever M ≅ N.
    if (basis.empty() || basis.size() != hom_dim(m, m) || basis.size() != hom_dim(n, n))
        return {Decision::no, std::nullopt};

    const Field& field = m.field();
    std::size_t d = basis.size();
    std::vector<long> coeffs(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        std::fill(coeffs.begin(), coeffs.end(), 0);
        coeffs[i] = 1;
        if (auto f = detail::try_combination(basis, coeffs, field)) return {Decision::yes, std::move(f)};
    }
    std::mt19937 gen(0x5eed);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& c : coeffs) c = dist(gen);
        if (auto f = detail::try_combination(basis, coeffs, field)) return {Decision::yes, std::move(f)};
    }
    if (field.is_rationals()) return {Decision::undecided, std::nullopt};

    // Exhaustive over F_p when the search space is at most 10^6.
    std::uint64_t p = field.characteristic(), space = 1;
    for (std::size_t i = 0; i < d && space <= 1000000; ++i) space *= p;
    if (space > 1000000) return {Decision::undecided, std::nullopt};
    std::fill(coeffs.begin(), coeffs.end(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < d && coeffs[i] == static_cast<long>(p) - 1) coeffs[i++] = 0;
        if (i == d) break;
        ++coeffs[i];
        if (auto f = detail::try_combination(basis, coeffs, field)) return {Decision::yes, std::move(f)};
    }
    return {Decision::no, std::nullopt};
}

/// Local-endomorphism-ring test: End(M)/rad End(M) is one-dimensional, with the
/// radical computed as the kernel of the trace form tr(L_{xy}). Sound in
/// characteristic 0 and for p > dim End(M); undecided otherwise.
template <FieldScalar K>
Decision is_indecomposable(const Representation<K>& m) {
    if (m.is_zero()) return Decision::no;
    auto e = end_algebra(m);
    std::size_t d = e.dim();
    if (!m.field().is_rationals() && m.field().characteristic() <= d) return Decision::undecided;
    // tr(L_{e_k}) = Σ_j table[k][j][j]
    std::vector<K> trace(d, K(0));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) trace[k] += e.table[k][j][j];
    Matrix<K> form(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) form(i, j) += e.table[i][j][k] * trace[k];
    return rank(form) == 1 ? Decision::yes : Decision::no;
}

}  // namespace repalg
