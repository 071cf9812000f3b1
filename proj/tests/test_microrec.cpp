#include <doctest.h>

#include "prefund/microrec.hpp"

using namespace prefund;

namespace {

Coefficient sq(int s, int e, int adeg = 0) { return Coefficient::monomial(s, e, adeg); }
const Coefficient kQQ = Coefficient(q_minus_qinv());

Coefficient power(const Coefficient& x, int k) {
    Coefficient p = Coefficient::one();
    for (int j = 0; j < k; ++j) p = p * x;
    return p;
}

StringElement F(int m, const Coefficient& c = Coefficient::one()) { return StringElement(m, c); }

// Closed forms of gamma_k in the minus model, written out by hand.
Coefficient gamma_A(int n, int k) {
    const int sign = ((k * n - 1) % 2 == 0) ? 1 : -1;
    return sq(sign, -k * (n + 1) + 2, k) * power(kQQ, k - 1);
}
Coefficient gamma_D(int n, int k) { return sq(k % 2 ? 1 : -1, -2 * k * (n - 1) + 2, k) * power(kQQ, k - 1); }

}  // namespace

TEST_CASE("rank-one action examples") {
    CHECK(rank_one_apply("e1", Model::Minus, F(3)) == F(2, sq(1, -2) * Coefficient(q_integer(3))));
    CHECK(rank_one_apply("e0", Model::Plus, F(0)) == F(1, sq(1, 0, 1)));
    CHECK(rank_one_apply("e0", Model::Minus, F(2)) == F(3, sq(1, 0, 1)));
    CHECK(rank_one_apply("e0", Model::Plus, F(2)) == F(3, sq(1, 4, 1)));
    CHECK(rank_one_apply("k1", Model::Plus, F(2)) == F(2, sq(1, -4)));
    CHECK(rank_one_apply("k0^-1", Model::Minus, F(2)) == F(2, sq(1, -4)));
    CHECK(rank_one_apply("e1", Model::Plus, F(0)).is_zero());
    CHECK_THROWS_AS(rank_one_apply("e2", Model::Plus, F(0)), std::invalid_argument);
    CHECK(to_string(F(2, sq(1, -1) + sq(1, 1))) == "(q^-1 + q) * f^2");
}

TEST_CASE("rank-one Serre relations") {
    RootSystemData a1({Family::A, 1, 1});
    for (Model model : {Model::Plus, Model::Minus}) {
        RankOneModule mod(model);
        for (int m = 0; m <= 8; ++m) {
            CHECK(evaluate(serre_expr(a1, 0, 1), mod, mod.power(m)).is_zero());
            CHECK(evaluate(serre_expr(a1, 1, 0), mod, mod.power(m)).is_zero());
            const auto conj = OperatorExpr::k(0) * OperatorExpr::e(1) * OperatorExpr::k(0, -1);
            CHECK(evaluate(conj, mod, mod.power(m)) == mod.apply_e(1, mod.power(m)).scaled(sq(1, -2)));
        }
    }
    for (const auto& r : rank_one_serre_check(20)) {
        CAPTURE(r.line());
        CHECK(r.pass);
    }
}

TEST_CASE("string model data") {
    for (int n = 1; n <= 6; ++n) {
        const AffineType t{Family::A, n, 1};
        const auto plus = string_model_data(t, Model::Plus);
        CHECK(plus.E1 == level_one_on_vacuum(t));
        CHECK(plus.E2 == level_one_on_f(t));
        const auto minus = string_model_data(t, Model::Minus);
        CHECK(minus.E1 == sq((n - 1) % 2 ? -1 : 1, -n + 1, 1));
        CHECK(minus.E2 == minus.E1);
    }
    for (int n = 4; n <= 6; ++n) {
        const auto minus = string_model_data({Family::D, n, n}, Model::Minus);
        CHECK(minus.E1 == sq(1, -2 * n + 4, 1));
        CHECK(minus.E2 == minus.E1);
    }
}

TEST_CASE("string recurrence closed forms") {
    for (const auto& t : supported_types(6, 4, 6)) {
        CAPTURE(to_string(t));
        const auto minus = string_recurrence(t, Model::Minus, 10);
        const auto plus = string_recurrence(t, Model::Plus, 10);
        REQUIRE(minus.size() == 11);
        for (int k = 1; k <= 10; ++k) {
            CHECK(minus[k] == (t.family == Family::A ? gamma_A(t.n, k) : gamma_D(t.n, k)));
            CHECK(minus[k] == negative_gamma_closed_form(t, k));
            CHECK(plus[k] == (k == 1 ? level_one_on_vacuum(t) : Coefficient{}));
        }
    }
}

TEST_CASE("negative ell-weights") {
    RootSystemData a1({Family::A, 1, 1});
    const int o1 = a1.sign(1);
    const auto w = negative_ell_weight({Family::A, 1, 1}, 8);
    CHECK(w.psi[0] == Coefficient::one());
    CHECK(w.form == ClosedForm::Geometric);
    for (int k = 1; k <= 8; ++k) CHECK(w.psi[k] == power(sq(-o1, -2, 1) * kQQ, k));

    RootSystemData d4({Family::D, 4, 4});
    const auto wd = negative_ell_weight({Family::D, 4, 4}, 8);
    for (int k = 1; k <= 8; ++k) CHECK(wd.psi[k] == power(sq(-d4.sign(4), -6, 1) * kQQ, k));
    CHECK(wd.expected_ratio == -(sq(1, 0, 1) * c_r(d4)));

    for (const auto& t : supported_types(6, 4, 6)) {
        CAPTURE(to_string(t));
        CHECK(negative_ell_weight(t, 10).form == ClosedForm::Geometric);
    }
}

TEST_CASE("rank-one computations from the actual generators") {
    const auto gm = rank_one_gamma(Model::Minus, 20);
    for (int k = 1; k <= 20; ++k)
        CHECK(gm[k] == sq(k % 2 ? 1 : -1, -2 * (k - 1), k) * power(kQQ, k - 1));
    const auto gp = rank_one_gamma(Model::Plus, 6);
    CHECK(gp[1] == sq(1, 0, 1));
    for (int k = 2; k <= 6; ++k) CHECK(gp[k].is_zero());

    RootSystemData a1({Family::A, 1, 1});
    const auto psi = rank_one_psi(Model::Minus, 20, a1.sign(1));
    const auto w = negative_ell_weight({Family::A, 1, 1}, 20);
    CHECK(psi == w.psi);
    const auto psi_plus = rank_one_psi(Model::Plus, 6, a1.sign(1));
    CHECK(psi_plus[1] == -(sq(1, 0, 1) * c_r(a1)));
    for (int k = 2; k <= 6; ++k) CHECK(psi_plus[k].is_zero());
}

TEST_CASE("the string span is closed under the recurrence") {
    StringSpan span(string_model_data({Family::A, 3, 2}, Model::Minus));
    CHECK_NOTHROW(span.level_one(1));
    CHECK_THROWS_AS(span.level_one(2), DomainViolation);
    CHECK(span.apply_e(2, F(2)) == F(1, Coefficient(q_integer(2)) * sq(1, -1)));
    CHECK_THROWS(span.apply_e(1, F(1)));
}
