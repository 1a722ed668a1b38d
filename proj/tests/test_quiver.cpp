#include <catch_amalgamated.hpp>

#include <repalg/repalg.hpp>

using namespace repalg;

TEST_CASE("arrow and vertex names round-trip") {
    for (const auto& a : QuiverWindow(-2, 2).arrows()) {
        auto parsed = parse_arrow(a.name());
        REQUIRE(parsed);
        CHECK(*parsed == a);
    }
    CHECK(parse_arrow("A-1")->source() == Vertex::two(-1));
    CHECK(parse_arrow("A-1")->target() == Vertex::one(-2));
    CHECK(parse_arrow("b3")->target() == Vertex::two(3));
    CHECK_FALSE(parse_arrow("c0"));
    CHECK_FALSE(parse_arrow("a"));
    CHECK(parse_vertex("2@-3") == Vertex::two(-3));
    CHECK_FALSE(parse_vertex("3@0"));
}

TEST_CASE("window contents") {
    QuiverWindow w(-1, 0);
    CHECK(w.vertices().size() == 4);
    CHECK(w.arrows().size() == 6);
    CHECK(w.relations().size() == 6);
    CHECK_THROWS_AS(QuiverWindow(1, 0), DomainError);
}

TEST_CASE("length-2 paths and relations") {
    // Counted by hand from the arrows of window(-1, 0): 1@0 -> 2@0 -> 1@-1 (4 paths)
    // and 2@0 -> 1@-1 -> 2@-1 (4 paths).
    auto paths = paths_of_length_2(QuiverWindow(-1, 0));
    CHECK(paths.size() == 8);
    for (const auto& p : paths) CHECK(is_relation_path(p));

    auto rels = relations_at(0);
    std::size_t zero = 0, comm = 0;
    for (const auto& r : rels) (r.terms.size() == 1 ? zero : comm)++;
    CHECK(zero == 4);
    CHECK(comm == 2);
}
