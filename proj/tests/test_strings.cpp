#include <catch_amalgamated.hpp>

#include <repalg/repalg.hpp>

using namespace repalg;

namespace {

const Field q = Field::rationals();

std::string error_kind(const std::string& text) {
    try {
        parse_string(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    return "";
}

}  // namespace

TEST_CASE("word grammar") {
    auto w = parse_string("b0^-1 a0");
    CHECK(w.length() == 2);
    CHECK(w.to_string() == "b0^-1 a0");
    CHECK(w.walk() == std::vector<Vertex>{Vertex::one(0), Vertex::two(0), Vertex::one(0)});
    CHECK(parse_string("  1@-2 ").is_trivial());
    CHECK(parse_string("B-1").walk().front() == Vertex::two(-1));

    CHECK(error_kind("") == "empty-word");
    CHECK(error_kind("a0 B0^-1") == "non-composable");
    CHECK(error_kind("a0 a0^-1") == "not-reduced");
    CHECK(error_kind("A0 a0") == "relation-violation");
    CHECK(error_kind("a0^-1 A0^-1") == "relation-violation");
    CHECK(error_kind("B0 a0") == "relation-violation");
    CHECK(error_kind("c0") == "bad-token");
    CHECK(error_kind("a0 1@0") == "bad-token");
}

TEST_CASE("string modules") {
    auto m = string_module<Rational>(parse_string("a0 b0^-1"), q);
    CHECK(m.total_dim() == 3);
    CHECK(m.dim(Vertex::one(0)) == 1);
    CHECK(m.dim(Vertex::two(0)) == 2);
    CHECK(validate(m).empty());
    CHECK(rank(m.mat(Arrow::alpha(0))) == 1);
    CHECK(rank(m.mat(Arrow::beta(0))) == 1);

    auto s = simple<Rational>(Vertex::two(3), q);
    CHECK(s.total_dim() == 1);
    CHECK(hom_dim(s, s) == 1);
    CHECK(s == string_module<Rational>(parse_string("2@3"), q));
    CHECK(top(indecomposable_projective<Rational>(Vertex::one(0), q)).dims == simple<Rational>(Vertex::one(0), q).dim_vector());
}

TEST_CASE("a word and its inverse give isomorphic modules") {
    for (const auto& w : enumerate_strings(QuiverWindow(-1, 0), 3)) {
        auto a = string_module<Rational>(w, q), b = string_module<Rational>(w.inverse(), q);
        CHECK(is_isomorphic(a, b).status == Decision::yes);
    }
}

TEST_CASE("enumeration") {
    QuiverWindow w0(0, 0);
    auto count = [](const std::vector<StringWord>& ws, std::size_t len) {
        return std::count_if(ws.begin(), ws.end(), [&](const StringWord& w) { return w.length() == len; });
    };
    auto small = enumerate_strings(w0, 1);
    CHECK(count(small, 0) == 2);
    CHECK(count(small, 1) == 2);
    CHECK(small[2].to_string() == "a0");
    CHECK(small[3].to_string() == "b0");

    auto corpus = enumerate_strings(QuiverWindow(-2, 2), 4);
    // Per pair of adjacent vertices there are 2 words of each length 1..4.
    CHECK(count(corpus, 0) == 10);
    for (std::size_t len = 1; len <= 4; ++len) CHECK(count(corpus, len) == 18);
    CHECK(corpus.size() == 82);

    std::set<std::string> seen;
    for (const auto& w : corpus) {
        CHECK(seen.insert(w.to_string()).second);
        CHECK(parse_string(w.to_string()) == w);
        CHECK(w.canonical() == w);
        // Re-scan every adjacent pair for a relation subword.
        const auto& ls = w.letters();
        for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
            if (ls[i].inverted == ls[i + 1].inverted) {
                Path2 p = ls[i].inverted ? Path2{ls[i].arrow, ls[i + 1].arrow} : Path2{ls[i + 1].arrow, ls[i].arrow};
                CHECK_FALSE(is_relation_path(p));
            }
        }
        auto m = string_module<Rational>(w, q);
        CHECK(validate(m).empty());
        CHECK(m.total_dim() == w.length() + 1);
    }
}

TEST_CASE("orbit graphs") {
    auto a0 = string_module<Rational>(parse_string("a0"), q);
    auto g0 = orbit_graph(a0, 0);
    CHECK(g0.nodes.size() == 1);
    CHECK(g0.edges.empty());

    auto g = orbit_graph(a0, 1);
    bool tau_loop = false;
    for (const auto& e : g.edges) tau_loop = tau_loop || (e.op == OrbitOp::tau && e.from == 0 && e.to == 0);
    CHECK(tau_loop);
    CHECK(g.nodes[0].label() == "a0");

    // The Ω-edge out of S_{1@0} lands on rad P_{1@0}, whose top is two copies of S_{2@0}.
    auto s = simple<Rational>(Vertex::one(0), q);
    auto gs = orbit_graph(s, 1);
    std::optional<std::size_t> omega_target;
    for (const auto& e : gs.edges)
        if (e.op == OrbitOp::omega && e.from == 0) omega_target = e.to;
    REQUIRE(omega_target);
    const auto& target = gs.nodes[*omega_target];
    CHECK(is_isomorphic(target.module, syzygy(s)).status == Decision::yes);
    CHECK(target.label() == "A0^-1 B0");
    CHECK(top(target.module).dims == DimVector{{Vertex::two(0), 2}});
    CHECK(stable_hom_dim(target.module, simple<Rational>(Vertex::two(0), q)) == 2);

    CHECK_THROWS_AS(orbit_graph(indecomposable_projective<Rational>(Vertex::one(0), q), 1), DomainError);
}
