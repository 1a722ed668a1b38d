#pragma once

// String combinatorics for the repetitive Kronecker algebra.
//
// A word is written in composition order, like a path: "A0 a0" means walk a0
// first, then A0. A letter is an arrow or its formal inverse ("b0^-1").
// Trivial words ("1@0") carry their vertex explicitly.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "representation.hpp"

namespace repalg {

struct Letter {
    Arrow arrow;
    bool inverted = false;

    auto operator<=>(const Letter&) const = default;

    /// Start of the letter when walked.
    Vertex source() const { return inverted ? arrow.target() : arrow.source(); }
    Vertex target() const { return inverted ? arrow.source() : arrow.target(); }

    Letter inverse() const { return {arrow, !inverted}; }

    std::string token() const { return arrow.name() + (inverted ? "^-1" : ""); }
};

class StringWord {
public:
    /// Trivial word at a vertex.
    static StringWord trivial(const Vertex& v) { return StringWord(v, {}); }

    /// Letters in composition order; throws ParseError if not a valid string.
    static StringWord from_letters(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_trivial() const { return letters_.empty(); }

    /// Walk vertices v_0 .. v_n; v_0 is the source of the rightmost letter.
    std::vector<Vertex> walk() const {
        if (letters_.empty()) return {base_};
        std::vector<Vertex> out{letters_.back().source()};
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->target());
        return out;
    }

    /// Reversed walk: reverse the letters and invert each.
    StringWord inverse() const {
        std::vector<Letter> inv;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
        return StringWord(base_, std::move(inv));
    }

    std::vector<std::string> tokens() const {
        if (letters_.empty()) return {base_.to_string()};
        std::vector<std::string> out;
        for (const auto& l : letters_) out.push_back(l.token());
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& t : tokens()) s += (s.empty() ? "" : " ") + t;
        return s;
    }

    /// Lexicographically least of {word, inverse word}, compared token by token.
    StringWord canonical() const {
        auto inv = inverse();
        return inv.tokens() < tokens() ? inv : *this;
    }

    bool operator==(const StringWord& o) const { return to_string() == o.to_string(); }

private:
    StringWord(Vertex base, std::vector<Letter> letters) : base_(base), letters_(std::move(letters)) {
        if (!letters_.empty()) base_ = letters_.back().source();
    }

    Vertex base_;
    std::vector<Letter> letters_;
};

namespace detail {

/// Checks the junction between `later` (written left) and `earlier` (written
/// right, walked first). Returns an error kind and message, or empty.
inline std::pair<std::string, std::string> junction_error(const Letter& later, const Letter& earlier) {
    if (earlier.target() != later.source())
        return {"non-composable", earlier.token() + " ends at " + earlier.target().to_string() + " but " +
                                      later.token() + " starts at " + later.source().to_string()};
    if (later == earlier.inverse())
        return {"not-reduced", later.token() + " " + earlier.token() + " cancels"};
    if (!later.inverted && !earlier.inverted && is_relation_path({earlier.arrow, later.arrow}))
        return {"relation-violation", "subword " + later.token() + " " + earlier.token() + " lies in a relation"};
    if (later.inverted && earlier.inverted && is_relation_path({later.arrow, earlier.arrow}))
        return {"relation-violation",
                "inverse of subword " + later.token() + " " + earlier.token() + " lies in a relation"};
    return {};
}

}  // namespace detail

inline StringWord StringWord::from_letters(std::vector<Letter> letters) {
    if (letters.empty()) throw ParseError("empty-word", "a nonempty word needs at least one letter");
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        auto [kind, msg] = detail::junction_error(letters[i], letters[i + 1]);
        if (!kind.empty())
            throw ParseError(kind, "at tokens " + std::to_string(i + 1) + "-" + std::to_string(i + 2) + ": " + msg);
    }
    Vertex start = letters.back().source();
    return StringWord(start, std::move(letters));
}

/// Grammar: whitespace-separated letters `a0`, `B-1`, each optionally
/// followed by `^-1`; or a single vertex `1@z` / `2@z`.
inline StringWord parse_string(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    if (toks.empty()) throw ParseError("empty-word", "no tokens in '" + text + "'");
    if (toks.size() == 1)
        if (auto v = parse_vertex(toks[0])) return StringWord::trivial(*v);
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        std::string t = toks[i];
        bool inverted = t.size() > 3 && t.ends_with("^-1");
        if (inverted) t.resize(t.size() - 3);
        auto a = parse_arrow(t);
        if (!a) {
            std::string why = parse_vertex(t) ? " (a vertex must stand alone)" : "";
            throw ParseError("bad-token", "token " + std::to_string(i + 1) + " '" + toks[i] + "' is not a letter" + why);
        }
        letters.push_back({*a, inverted});
    }
    return StringWord::from_letters(std::move(letters));
}

/// M[C]: one basis vector per walk vertex; each letter puts a 1 in its arrow's
/// matrix, from the walk vertex at its source end to the one at its target end.
template <FieldScalar K>
Representation<K> string_module(const StringWord& w, const Field& field) {
    auto walk = w.walk();
    DimVector dims;
    std::vector<std::size_t> slot;
    int lo = walk.front().z, hi = lo;
    for (const auto& v : walk) {
        slot.push_back(dims[v]++);
        lo = std::min(lo, v.z);
        hi = std::max(hi, v.z);
    }
    std::map<Arrow, Matrix<K>> mats;
    const auto& letters = w.letters();
    for (std::size_t step = 0; step < letters.size(); ++step) {
        const Letter& l = letters[letters.size() - 1 - step];  // walked step-th
        std::size_t from = step, to = step + 1;
        if (l.inverted) std::swap(from, to);  // the arrow itself runs against the walk
        const Arrow& a = l.arrow;
        auto& m = mats.try_emplace(a, dims[a.target()], dims[a.source()]).first->second;
        m(slot[to], slot[from]) = K(1);
    }
    return Representation<K>(field, {lo, hi}, dims, std::move(mats));
}

template <FieldScalar K>
Representation<K> simple(const Vertex& v, const Field& field) {
    return Representation<K>(field, {v.z, v.z}, {{v, 1}});
}

/// All valid words of length <= max_len supported in the window, one
/// canonical representative per {word, inverse word} pair, ordered by length
/// then token sequence.
inline std::vector<StringWord> enumerate_strings(const QuiverWindow& window, std::size_t max_len) {
    std::vector<StringWord> out;
    std::set<std::vector<std::string>> seen;
    auto emit = [&](const StringWord& w) {
        auto c = w.canonical();
        if (seen.insert(c.tokens()).second) out.push_back(c);
    };
    for (const auto& v : window.vertices()) emit(StringWord::trivial(v));

    // Walks grow at their far end; letters are kept in walking order here.
    std::vector<std::vector<Letter>> frontier;
    for (const auto& a : window.arrows()) {
        frontier.push_back({{a, false}});
        frontier.push_back({{a, true}});
    }
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& walk : frontier) {
            emit(StringWord::from_letters({walk.rbegin(), walk.rend()}));
            if (len == max_len) continue;
            Vertex end = walk.back().target();
            for (const auto& a : window.outgoing(end)) {
                Letter l{a, false};
                if (detail::junction_error(l, walk.back()).first.empty()) {
                    next.push_back(walk);
                    next.back().push_back(l);
                }
            }
            for (const auto& a : window.incoming(end)) {
                Letter l{a, true};
                if (detail::junction_error(l, walk.back()).first.empty()) {
                    next.push_back(walk);
                    next.back().push_back(l);
                }
            }
        }
        frontier = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [](const StringWord& a, const StringWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.tokens() < b.tokens();
    });
    return out;
}

}  // namespace repalg
