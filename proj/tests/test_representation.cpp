#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace repalg;

namespace {

Representation<Rational> q_word(const std::string& s) { return string_module<Rational>(parse_string(s), Field::rationals()); }
Representation<Zp> f3_word(const std::string& s) { return string_module<Zp>(parse_string(s), oracle::f3); }

}  // namespace

TEST_CASE("construction checks shapes and window") {
    Field q = Field::rationals();
    QuiverWindow w(0, 0);
    DimVector dims{{Vertex::one(0), 1}, {Vertex::two(0), 2}};
    CHECK_THROWS_AS(Representation<Rational>(q, w, dims, {{Arrow::alpha(0), Matrix<Rational>(1, 1)}}), ShapeError);
    CHECK_THROWS_AS(Representation<Rational>(q, w, {{Vertex::one(1), 1}}), ShapeError);
    CHECK_THROWS_AS(Representation<Zp>(q, w, dims), FieldMismatch);
    Representation<Rational> ok(q, w, dims, {{Arrow::alpha(0), Matrix<Rational>{{1}, {0}}}});
    CHECK(ok.total_dim() == 3);
    CHECK(ok.mat(Arrow::beta(0)).is_zero());
}

TEST_CASE("validate reports violated relations") {
    Field q = Field::rationals();
    // 1@0 -> 2@0 -> 1@-1 along a0 then A0 with nothing along b0, B0: the
    // commutativity relation A0 a0 = B0 b0 fails.
    Representation<Rational> bad(q, {-1, 0}, {{Vertex::one(0), 1}, {Vertex::two(0), 1}, {Vertex::one(-1), 1}},
                                 {{Arrow::alpha(0), Matrix<Rational>{{1}}}, {Arrow::alpha_star(0), Matrix<Rational>{{1}}}});
    auto vs = validate(bad);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].relation.find("A0 a0") != std::string::npos);
    CHECK(validate(q_word("b0^-1 a0")).empty());
}

TEST_CASE("Hom dimensions agree with brute-force enumeration over F3") {
    std::vector<std::string> words{"1@0", "2@0", "a0", "b0", "b0^-1 a0", "a0 b0^-1", "B0", "A0^-1 B0", "a0 b0^-1 a0"};
    for (const auto& x : words)
        for (const auto& y : words) {
            auto m = f3_word(x), n = f3_word(y);
            if (m.total_dim() * n.total_dim() > 9) continue;
            INFO(x << " -> " << y);
            CHECK(hom_dim(m, n) == oracle::hom_dim(m, n));
        }
    auto p0 = indecomposable_projective<Zp>(Vertex::one(0), oracle::f3);
    auto p1 = indecomposable_projective<Zp>(Vertex::one(-1), oracle::f3);
    CHECK(hom_dim(p0, p0) == oracle::hom_dim(p0, p0));
    CHECK(hom_dim(p1, p0) == oracle::hom_dim(p1, p0));
    CHECK(hom_dim(p0, p1) == oracle::hom_dim(p0, p1));
}

TEST_CASE("Hom and isomorphism for known pairs") {
    CHECK(hom_dim(q_word("a0"), q_word("a0")) == 1);
    CHECK(hom_dim(q_word("1@0"), q_word("a0")) == 0);
    CHECK(hom_dim(q_word("a0"), q_word("1@0")) == 1);
    CHECK(hom_dim(q_word("2@0"), q_word("a0")) == 1);

    auto iso = is_isomorphic(q_word("b0^-1 a0"), q_word("a0^-1 b0"));
    CHECK(iso.status == Decision::yes);
    REQUIRE(iso.witness);
    CHECK(is_morphism(*iso.witness));
    CHECK(is_isomorphic(q_word("a0"), q_word("b0")).status == Decision::no);
    CHECK(is_isomorphic(q_word("a0"), q_word("1@0")).status == Decision::no);
}

TEST_CASE("endomorphism algebra and indecomposability") {
    auto m = q_word("b0^-1 a0");
    auto e = end_algebra(m);
    CHECK(e.dim() == hom_dim(m, m));
    CHECK(is_indecomposable(m) == Decision::yes);
    CHECK(is_indecomposable(direct_sum(q_word("a0"), q_word("b0"))) == Decision::no);
    CHECK(is_indecomposable(q_word("1@0")) == Decision::yes);
}

TEST_CASE("composition and identity") {
    auto m = share(q_word("a0 b0^-1"));
    auto id = identity_morphism(m);
    CHECK(is_morphism(id));
    auto twice = compose(id, id);
    for (const auto& [v, d] : m->dim_vector()) CHECK(twice.at(v) == Matrix<Rational>::identity(d));
}

TEST_CASE("direct sums add dimensions and Hom") {
    auto a = q_word("a0"), s = q_word("1@0");
    auto sum = direct_sum(a, s);
    CHECK(sum.total_dim() == 3);
    CHECK(validate(sum).empty());
    CHECK(hom_dim(sum, s) == hom_dim(a, s) + hom_dim(s, s));
}
