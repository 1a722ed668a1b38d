#pragma once

// Finite windows of the repetitive Kronecker quiver
//
//   vertices 1_z, 2_z             (z in Z)
//   a_z, b_z   : 1_z -> 2_z
//   A_z, B_z   : 2_z -> 1_{z-1}   (the starred arrows a*_z, b*_z)
//
// with relations, for every z,
//   commutativity  A_z a_z = B_z b_z,          a_{z-1} A_z = b_{z-1} B_z
//   zero           A_z b_z,  B_z a_z,  a_{z-1} B_z,  b_{z-1} A_z.
//
// Paths are composed right to left: "A_z a_z" walks a_z first.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace repalg {

struct Vertex {
    int layer = 1;  // 1 or 2
    int z = 0;

    auto operator<=>(const Vertex&) const = default;

    std::string to_string() const { return std::to_string(layer) + "@" + std::to_string(z); }

    static Vertex one(int z) { return {1, z}; }
    static Vertex two(int z) { return {2, z}; }
};

enum class ArrowKind { alpha, beta, alpha_star, beta_star };

struct Arrow {
    ArrowKind kind = ArrowKind::alpha;
    int z = 0;

    auto operator<=>(const Arrow&) const = default;

    static Arrow alpha(int z) { return {ArrowKind::alpha, z}; }
    static Arrow beta(int z) { return {ArrowKind::beta, z}; }
    static Arrow alpha_star(int z) { return {ArrowKind::alpha_star, z}; }
    static Arrow beta_star(int z) { return {ArrowKind::beta_star, z}; }

    bool is_starred() const { return kind == ArrowKind::alpha_star || kind == ArrowKind::beta_star; }

    Vertex source() const { return is_starred() ? Vertex::two(z) : Vertex::one(z); }
    Vertex target() const { return is_starred() ? Vertex::one(z - 1) : Vertex::two(z); }

    /// Text name: a{z}, b{z}, A{z}, B{z}.
    std::string name() const {
        static constexpr char letters[] = {'a', 'b', 'A', 'B'};
        return std::string(1, letters[static_cast<int>(kind)]) + std::to_string(z);
    }
};

/// Parses "a0", "B-3", ...; nullopt if the text is not an arrow name.
inline std::optional<Arrow> parse_arrow(const std::string& s) {
    if (s.size() < 2) return std::nullopt;
    ArrowKind k;
    switch (s[0]) {
        case 'a': k = ArrowKind::alpha; break;
        case 'b': k = ArrowKind::beta; break;
        case 'A': k = ArrowKind::alpha_star; break;
        case 'B': k = ArrowKind::beta_star; break;
        default: return std::nullopt;
    }
    std::string digits = s.substr(1);
    std::size_t i = digits[0] == '-' ? 1 : 0;
    if (i == digits.size() || digits.size() > 10) return std::nullopt;
    for (std::size_t j = i; j < digits.size(); ++j)
        if (digits[j] < '0' || digits[j] > '9') return std::nullopt;
    return Arrow{k, std::stoi(digits)};
}

/// Parses "1@0", "2@-1"; nullopt otherwise.
inline std::optional<Vertex> parse_vertex(const std::string& s) {
    if (s.size() < 3 || (s[0] != '1' && s[0] != '2') || s[1] != '@') return std::nullopt;
    std::string digits = s.substr(2);
    std::size_t i = digits[0] == '-' ? 1 : 0;
    if (i == digits.size() || digits.size() > 10) return std::nullopt;
    for (std::size_t j = i; j < digits.size(); ++j)
        if (digits[j] < '0' || digits[j] > '9') return std::nullopt;
    return Vertex{s[0] - '0', std::stoi(digits)};
}

/// A length-2 path: `first` is walked first, the composite is second∘first.
struct Path2 {
    Arrow first;
    Arrow second;
    auto operator<=>(const Path2&) const = default;
};

struct Relation {
    enum class Kind { commutativity, zero };
    struct Term {
        int sign;
        Path2 path;
    };
    Kind kind;
    std::vector<Term> terms;  // sum of sign * path = 0
};

/// The six relations whose paths pass through 2_z (the middle of P_{1_z})
/// and 1_{z-1} (the middle of P_{2_z}).
inline std::vector<Relation> relations_at(int z) {
    using K = Relation::Kind;
    auto a = Arrow::alpha, b = Arrow::beta, A = Arrow::alpha_star, B = Arrow::beta_star;
    return {
        {K::commutativity, {{1, {a(z), A(z)}}, {-1, {b(z), B(z)}}}},
        {K::commutativity, {{1, {A(z), a(z - 1)}}, {-1, {B(z), b(z - 1)}}}},
        {K::zero, {{1, {b(z), A(z)}}}},
        {K::zero, {{1, {a(z), B(z)}}}},
        {K::zero, {{1, {B(z), a(z - 1)}}}},
        {K::zero, {{1, {A(z), b(z - 1)}}}},
    };
}

/// True if second∘first is a zero relation or one side of a commutativity
/// relation. For this quiver that is every composable pair.
inline bool is_relation_path(const Path2& p) {
    if (p.first.target() != p.second.source()) return false;
    int z = p.first.is_starred() ? p.first.z : p.second.z;
    for (const auto& rel : relations_at(z))
        for (const auto& t : rel.terms)
            if (t.path == p) return true;
    return false;
}

/// Vertices 1_z, 2_z for z_min <= z <= z_max and all arrows between them.
class QuiverWindow {
public:
    QuiverWindow(int z_min, int z_max) : zmin_(z_min), zmax_(z_max) {
        if (z_min > z_max)
            throw DomainError("window [" + std::to_string(z_min) + ", " + std::to_string(z_max) + "] is empty");
    }

    int z_min() const { return zmin_; }
    int z_max() const { return zmax_; }

    bool contains(const Vertex& v) const { return v.z >= zmin_ && v.z <= zmax_; }
    bool contains(const Arrow& a) const { return contains(a.source()) && contains(a.target()); }
    bool contains(const QuiverWindow& w) const { return w.zmin_ >= zmin_ && w.zmax_ <= zmax_; }

    /// Ordered by z, then layer.
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (int z = zmin_; z <= zmax_; ++z) {
            out.push_back(Vertex::one(z));
            out.push_back(Vertex::two(z));
        }
        return out;
    }

    std::vector<Arrow> arrows() const {
        std::vector<Arrow> out;
        for (int z = zmin_; z <= zmax_; ++z) {
            out.push_back(Arrow::alpha(z));
            out.push_back(Arrow::beta(z));
            if (z - 1 >= zmin_) {
                out.push_back(Arrow::alpha_star(z));
                out.push_back(Arrow::beta_star(z));
            }
        }
        return out;
    }

    std::vector<Arrow> outgoing(const Vertex& v) const {
        std::vector<Arrow> out;
        for (const auto& a : arrows())
            if (a.source() == v) out.push_back(a);
        return out;
    }

    std::vector<Arrow> incoming(const Vertex& v) const {
        std::vector<Arrow> out;
        for (const auto& a : arrows())
            if (a.target() == v) out.push_back(a);
        return out;
    }

    /// Every relation all of whose arrows lie in the window.
    std::vector<Relation> relations() const {
        std::vector<Relation> out;
        for (int z = zmin_ + 1; z <= zmax_; ++z)
            for (auto& r : relations_at(z)) out.push_back(std::move(r));
        return out;
    }

    QuiverWindow merged(const QuiverWindow& o) const {
        return {std::min(zmin_, o.zmin_), std::max(zmax_, o.zmax_)};
    }

    QuiverWindow grown(int below, int above) const { return {zmin_ - below, zmax_ + above}; }

    bool operator==(const QuiverWindow&) const = default;

private:
    int zmin_;
    int zmax_;
};

inline QuiverWindow make_window(int z_min, int z_max) { return {z_min, z_max}; }

/// Every ordered composable pair of arrows in the window.
inline std::vector<Path2> paths_of_length_2(const QuiverWindow& w) {
    std::vector<Path2> out;
    auto arrows = w.arrows();
    for (const auto& first : arrows)
        for (const auto& second : arrows)
            if (first.target() == second.source()) out.push_back({first, second});
    return out;
}

}  // namespace repalg
