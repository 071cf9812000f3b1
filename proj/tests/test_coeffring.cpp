#include <doctest.h>

#include "gen.hpp"
#include "prefund/coeffring.hpp"

using namespace prefund;
using prefund::testing::Gen;

namespace {

LaurentPoly P(std::string_view s) { return parse_coefficient(s).component(0); }

i64 binomial(int m, int k) {
    i64 b = 1;
    for (int j = 1; j <= k; ++j) b = b * (m - k + j) / j;
    return b;
}

}  // namespace

TEST_CASE("q_integer examples") {
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(1) == LaurentPoly::constant(1));
    CHECK(q_integer(2) == P("q + q^-1"));
    CHECK(q_integer(3) == P("q^2 + 1 + q^-2"));
}

TEST_CASE("q_binomial examples") {
    for (int m = 0; m < 6; ++m) CHECK(q_binomial(m, 0) == LaurentPoly::constant(1));
    CHECK(q_binomial(3, 1) == q_integer(3));
    CHECK(q_binomial(4, 2) == P("q^4 + q^2 + 2 + q^-2 + q^-4"));
    CHECK_THROWS_AS(q_binomial(2, 3), std::invalid_argument);
}

TEST_CASE("exact_divide examples") {
    CHECK(exact_divide(P("q^2 - q^-2"), q_integer(2)) == q_minus_qinv());
    const Coefficient a = Coefficient::monomial(1, 0, 1);
    CHECK(exact_divide(Coefficient(q_integer(2)) * a, q_integer(2)) == a);
    CHECK_THROWS_AS(exact_divide(P("q + 1"), q_integer(2)), NotDivisible);
    CHECK_THROWS_AS(exact_divide(Coefficient::from(2, P("q + 1")) + a, q_integer(2)), NotDivisible);
}

TEST_CASE("q-integers specialize to integers and are bar invariant") {
    Gen g(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = g.uniform(0, 30);
        const int k = g.uniform(0, m);
        CHECK(q_integer(m).at_one() == m);
        CHECK(q_binomial(m, k).at_one() == binomial(m, k));
        CHECK(q_integer(m).bar() == q_integer(m));
        CHECK(q_binomial(m, k).bar() == q_binomial(m, k));
        CHECK(q_binomial(m, k) == q_binomial(m, m - k));
        CHECK(q_minus_qinv() * q_integer(m) == LaurentPoly::q_power(m) - LaurentPoly::q_power(-m));
    }
}

TEST_CASE("ring axioms on random coefficients") {
    Gen g(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = g.coeff(), y = g.coeff(), z = g.coeff();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK((x - x).is_zero());
        CHECK(x * Coefficient::one() == x);
    }
}

TEST_CASE("a-degree is additive and division inverts multiplication") {
    Gen g(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = g.coeff();
        const auto p = g.poly();
        if (x.is_zero() || p.is_zero()) continue;
        const auto prod = x * Coefficient(p);
        CHECK(exact_divide(prod, p) == x);
        const auto y = Coefficient::monomial(1, g.uniform(-3, 3), g.uniform(0, 3));
        CHECK((x * y).components().back().first == x.components().back().first + y.components().back().first);
    }
}

TEST_CASE("text form") {
    CHECK(to_string(Coefficient{}) == "0");
    CHECK(to_string(Coefficient::monomial(-1, -2, 1)) == "-q^-2*a");
    CHECK(to_string(Coefficient::monomial(1, 1, 0)) == "q");
    CHECK(to_string(Coefficient::monomial(3, 0, 2)) == "3*a^2");
    CHECK(to_string(q_integer(3)) == "q^-2 + 1 + q^2");
    CHECK(parse_coefficient("-1*q^-2*a^1") == Coefficient::monomial(-1, -2, 1));
    CHECK(parse_coefficient("q^-1*a^0") == Coefficient::monomial(1, -1, 0));
    CHECK_THROWS_AS(parse_coefficient("q^^2"), ParseError);

    Gen g(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = g.coeff(3);
        CHECK(parse_coefficient(to_string(x)) == x);
    }
}
