#include <doctest.h>

#include <random>

#include "logcontact/parse.hpp"
#include "logcontact/polynomial.hpp"

using namespace logcontact;

namespace {
const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& text) {
    RationalFunction f = parse_rational(text, XY);
    REQUIRE(f.den().is_constant());
    return f.num() * (Rational(1) / f.den().constant_value());
}
} // namespace

TEST_CASE("graded-lex ordering picks the right leading term") {
    Polynomial p = P("x + y^2");
    auto [e, c] = p.leading_term();
    CHECK(e == std::vector<int>{0, 2});
    CHECK(c == 1);

    Polynomial q = P("x*y + y^2");   // same degree: x*y > y^2 lexicographically
    auto [e2, c2] = q.leading_term();
    CHECK(e2 == std::vector<int>{1, 1});
}

TEST_CASE("arithmetic and normalization") {
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    CHECK(P("x - x") == Polynomial(XY));
    CHECK(P("x - x").is_zero());
    CHECK(P("2*x + 3*y") * Rational(1, 2) == P("x + 3/2*y"));
    CHECK(P("x^2").total_degree() == 2);
    CHECK(P("7").is_constant());
}

TEST_CASE("derivative") {
    CHECK(P("x^2*y").derivative(0) == P("2*x*y"));
    CHECK(P("x^2*y").derivative(1) == P("x^2"));
    CHECK(P("5").derivative(0).is_zero());
}

TEST_CASE("content and primitive part") {
    Polynomial p = P("4*x + 6*y");
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == P("2*x + 3*y"));
    Polynomial q = P("1/2*x + 1/3*y");
    CHECK(q.content() == Rational(1, 6));
    CHECK(q.primitive_part() == P("3*x + 2*y"));
    CHECK(P("-2*x").normalized_primitive() == P("x"));
}

TEST_CASE("exact division") {
    auto q = Polynomial::divide_exact(P("x^2 - y^2"), P("x - y"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x + y"));
    CHECK(!Polynomial::divide_exact(P("x^2 + y"), P("x - y")).has_value());
}

TEST_CASE("multivariate gcd") {
    CHECK(Polynomial::gcd_poly(P("x^2 - y^2"), P("x^2 - 2*x*y + y^2")) == P("x - y"));
    CHECK(Polynomial::gcd_poly(P("x*y"), P("x^2")) == P("x"));
    CHECK(Polynomial::gcd_poly(P("x + 1"), P("y + 1")) == P("1"));
    CHECK(Polynomial::gcd_poly(P("0"), P("-3*x")) == P("x"));
    // gcd of products with a common unit-free factor
    CHECK(Polynomial::gcd_poly(P("(x+y)^2*(x-y)"), P("(x+y)*(x+2*y)")) == P("x + y"));
}

TEST_CASE("gcd is symmetric and divides both arguments on random inputs") {
    std::mt19937_64 rng(7);
    auto rnd = [&](int terms) {
        Polynomial p(XY);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e = {int(rng() % 3), int(rng() % 3)};
            p.add_term(e, Rational(int(rng() % 7) - 3));
        }
        return p;
    };
    for (int i = 0; i < 60; ++i) {
        Polynomial a = rnd(3), b = rnd(3), m = rnd(2);
        Polynomial g = Polynomial::gcd_poly(a * m, b * m);
        if ((a * m).is_zero() || (b * m).is_zero()) continue;
        CHECK(Polynomial::divide_exact(a * m, g).has_value());
        CHECK(Polynomial::divide_exact(b * m, g).has_value());
        if (!m.is_zero() && !m.is_constant())
            CHECK(Polynomial::divide_exact(g, m.normalized_primitive()).has_value());
    }
}
