#include <catch_amalgamated.hpp>

#include <random>

#include <repalg/repalg.hpp>

using namespace repalg;

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK((a - b).to_string() == "1/6");
    CHECK((a * Rational(3)).to_string() == "1");
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("prime field arithmetic") {
    Zp a(3, 5), b(4, 5);
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == 2);
    CHECK((a - b).value() == 4);
    CHECK(a.inverse().value() == 2);
    CHECK(Zp(-1, 101).value() == 100);
    CHECK(a + Zp(1) == Zp(4, 5));
    CHECK_THROWS_AS(Zp(0, 5).inverse(), DomainError);
    CHECK_THROWS_AS(Zp(1, 5) + Zp(1, 7), FieldMismatch);
}

TEST_CASE("field names") {
    CHECK(Field::parse("Q").is_rationals());
    CHECK(Field::parse("F101").characteristic() == 101);
    CHECK(Field::parse("F5").to_string() == "F5");
    CHECK_THROWS_AS(Field::parse("F4"), DomainError);
    CHECK_THROWS_AS(Field::parse("R"), ParseError);
    CHECK_THROWS_AS(require_field<Rational>(Field::prime(5)), FieldMismatch);
}

TEST_CASE("truncated polynomial rings") {
    using T = Truncated<Rational>;
    auto t = T::t_power(1, 4);
    auto x = T::constant(1, 4) + t;  // 1 + t
    auto inv = x.inverse();           // 1 - t + t^2 - t^3
    CHECK(inv.coeff(1) == Rational(-1));
    CHECK(inv.coeff(3) == Rational(-1));
    CHECK(x * inv == T::constant(1, 4));
    CHECK((t * t * t * t).is_zero());
    CHECK_THROWS_AS(t.inverse(), DomainError);
    CHECK_THROWS_AS(t + T::t_power(1, 3), MixedRings);
    CHECK(T(2) * t == T::t_power(1, 4) + T::t_power(1, 4));

    SECTION("reduction mod t^k is a ring homomorphism") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> d(-5, 5);
        auto random = [&] {
            std::vector<Rational> c;
            for (int i = 0; i < 5; ++i) c.push_back(d(rng));
            return T(c);
        };
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random(), b = random();
            for (std::size_t k = 1; k <= 5; ++k) {
                CHECK(reduce_mod_t(a * b, k) == reduce_mod_t(a, k) * reduce_mod_t(b, k));
                CHECK(reduce_mod_t(a + b, k) == reduce_mod_t(a, k) + reduce_mod_t(b, k));
            }
        }
    }
}

TEST_CASE("matrix shapes are checked") {
    Matrix<Rational> a(2, 3), b(2, 2);
    CHECK_THROWS_AS(a * a, ShapeError);
    CHECK_THROWS_AS(a + b, ShapeError);
    CHECK((b * a).shape() == "2x3");
    CHECK(hstack(a, b).cols() == 5);
    CHECK_THROWS_AS(vstack(a, b), ShapeError);
    CHECK(block_diag(a, b).shape() == "4x5");
}

TEST_CASE("kernel of a fixed matrix") {
    // [1 2 3; 2 4 6] has kernel spanned by (-2, 1, 0) and (-3, 0, 1).
    Matrix<Rational> a{{1, 2, 3}, {2, 4, 6}};
    CHECK(rank(a) == 1);
    auto k = kernel_basis(a);
    REQUIRE(k.cols() == 2);
    CHECK(k == Matrix<Rational>{{-2, -3}, {1, 0}, {0, 1}});
    CHECK((a * k).is_zero());
}

TEMPLATE_TEST_CASE("rank-nullity and solve on random matrices", "", Rational, Zp) {
    Field f = std::is_same_v<TestType, Rational> ? Field::rationals() : Field::prime(7);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> d(-3, 3), shape(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = shape(rng), c = shape(rng);
        Matrix<TestType> a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (d(rng) > 0) a(i, j) = ScalarTraits<TestType>::from_int(d(rng), f);
        auto k = kernel_basis(a);
        CHECK(rank(a) + k.cols() == c);
        CHECK((a * k).is_zero());
        CHECK(rank(k) == k.cols());

        Matrix<TestType> x(c, 1);
        for (std::size_t j = 0; j < c; ++j) x(j, 0) = ScalarTraits<TestType>::from_int(d(rng), f);
        auto b = a * x;
        auto sol = solve(a, b);
        REQUIRE(sol);
        CHECK(a * sol->particular == b);
        CHECK(inconsistency_residual(a, b).empty());
    }
}

TEST_CASE("inconsistent systems report a residual") {
    Matrix<Rational> a{{1, 1}, {2, 2}};
    Matrix<Rational> b{{1}, {3}};
    CHECK_FALSE(solve(a, b));
    auto res = inconsistency_residual(a, b);
    REQUIRE(res.size() == 1);
    CHECK(res[0] == Rational(1));
}

TEST_CASE("truncated matrices only support field-level linear algebra") {
    Matrix<Truncated<Rational>> m(1, 1);
    m(0, 0) = Truncated<Rational>::t_power(1, 2);
    CHECK_THROWS_AS(rank(m), UnsupportedRing);
    Matrix<Truncated<Rational>> n(1, 1);
    n(0, 0) = Truncated<Rational>::constant(2, 1);
    CHECK(rank(n) == 1);
}
