#include <doctest.h>

#include "gen.hpp"
#include "prefund/opalg.hpp"

using namespace prefund;
using prefund::testing::Gen;

namespace {

OperatorExpr W(std::vector<int> w, const Coefficient& c = Coefficient::one()) { return OperatorExpr::word(w, c); }
Coefficient qi(int m) { return Coefficient(q_integer(m)); }

OperatorExpr random_expr(Gen& g, int n, int max_len = 4) {
    OperatorExpr x;
    const int terms = g.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> w(g.uniform(0, max_len));
        for (auto& l : w) l = g.uniform(0, n);
        auto term = W(w, g.coeff(1));
        if (g.uniform(0, 2) == 0) term = OperatorExpr::k(g.uniform(0, n), g.uniform(0, 1) ? 1 : -1) * term;
        x += term;
    }
    return x;
}

}  // namespace

TEST_CASE("evaluate examples") {
    LatticeModule m({Family::A, 2, 1});
    Gen g(41);
    const auto v = g.element(m, 4);
    CHECK(evaluate(OperatorExpr::identity(), m, v) == v);
    CHECK(evaluate(OperatorExpr::e(1), m, m.basis(m.string_datum(1))) == m.vacuum());
    const auto x = m.basis(m.parse_datum("{e1-e3:1}"));
    CHECK(evaluate(q_bracket(OperatorExpr::e(1), OperatorExpr::e(2)), m, x) == m.vacuum());
}

TEST_CASE("serre_expr examples") {
    RootSystemData a3({Family::A, 3, 2});
    CHECK(serre_expr(a3, 1, 3) == W({1, 3}) - W({3, 1}));
    CHECK(serre_expr(a3, 1, 2) == W({1, 1, 2}) - W({1, 2, 1}, qi(2)) + W({2, 1, 1}));
    RootSystemData a1({Family::A, 1, 1});
    CHECK(serre_expr(a1, 0, 1) == W({0, 0, 0, 1}) - W({0, 0, 1, 0}, qi(3)) + W({0, 1, 0, 0}, qi(3)) - W({1, 0, 0, 0}));
}

TEST_CASE("evaluation is linear and multiplicative") {
    Gen g(42);
    for (const auto& t : supported_types(3, 4, 4)) {
        LatticeModule m(t);
        for (int trial = 0; trial < 15; ++trial) {
            const auto x = random_expr(g, t.n), y = random_expr(g, t.n);
            const auto u = g.element(m, 3), v = g.element(m, 3);
            const auto s = g.coeff(1);
            CHECK(evaluate(x, m, u + v.scaled(s)) == evaluate(x, m, u) + evaluate(x, m, v).scaled(s));
            CHECK(evaluate(x + y, m, u) == evaluate(x, m, u) + evaluate(y, m, u));
            CHECK(evaluate(x * y, m, u) == evaluate(x, m, evaluate(y, m, u)));
            CHECK(evaluate(s * x, m, u) == evaluate(x, m, u).scaled(s));
        }
    }
}

TEST_CASE("pow, substitute and relabel") {
    const auto x = OperatorExpr::e(1) + OperatorExpr::e(2);
    CHECK(x.pow(0) == OperatorExpr::identity());
    CHECK(x.pow(2) == W({1, 1}) + W({1, 2}) + W({2, 1}) + W({2, 2}));
    const auto sub = W({1, 2}).substitute([](int i) { return i == 1 ? q_bracket(OperatorExpr::e(3), OperatorExpr::e(1)) : OperatorExpr::e(i); });
    CHECK(sub == W({3, 1, 2}) - W({1, 3, 2}, Coefficient::monomial(1, -1, 0)));
    CHECK(W({0, 1}).relabel([](int i) { return i + 2; }) == W({2, 3}));
}

TEST_CASE("check_identity_on_basis") {
    LatticeModule m({Family::A, 3, 2});
    const auto ok = check_identity_on_basis("serre", serre_expr(m.rs(), 1, 2), m, {2, 2, 2});
    CHECK(ok.pass);
    CHECK(ok.checked > 0);
    CHECK(ok.line() == "CHECK serre PASS");
    for (const auto& t : supported_types(4, 4, 5)) {
        LatticeModule mt(t);
        CHECK(check_identity_on_basis("serre0r", serre_expr(mt.rs(), 0, t.r), mt, mt.box(2)).pass);
        CHECK(check_identity_on_basis("serrer0", serre_expr(mt.rs(), t.r, 0), mt, mt.box(2)).pass);
    }
    const auto bad = check_identity_on_basis("e1", OperatorExpr::e(2), m, {1, 1, 1});
    CHECK_FALSE(bad.pass);
    CHECK(bad.line().rfind("CHECK e1 FAIL ", 0) == 0);
    LatticeModule p({Family::A, 3, 2});
    p.set_perturbation(true);
    CHECK_FALSE(check_identity_on_basis("serre02", serre_expr(p.rs(), 0, 2), p, p.box(2)).pass);
}

TEST_CASE("relation suite passes on a small box for every type up to rank 5") {
    SweepOptions opt;
    opt.extra_random = 20;
    for (const auto& t : supported_types(5, 4, 5)) {
        LatticeModule m(t);
        for (const auto& r : check_relations(relation_suite(m.rs()), m, m.box(2), opt)) {
            CAPTURE(to_string(t));
            CAPTURE(r.line());
            CHECK(r.pass);
        }
    }
}

TEST_CASE("text form") {
    const auto x = W({3, 0, 2}, Coefficient::monomial(1, -1, 0)) + W({}, Coefficient::monomial(-2, 0, 1)) +
                   OperatorExpr::k(2, -1) * W({1}, Coefficient(q_integer(2)));
    CHECK(parse_operator(to_string(x)) == x);
    CHECK(parse_operator("q^-1*a^0 * e3.e0.e2") == W({3, 0, 2}, Coefficient::monomial(1, -1, 0)));
    CHECK(to_string(W({3, 0, 2}, Coefficient::monomial(1, -1, 0))) == "q^-1 * e3.e0.e2");
    Gen g(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto y = random_expr(g, 4);
        CHECK(parse_operator(to_string(y)) == y);
    }
}
