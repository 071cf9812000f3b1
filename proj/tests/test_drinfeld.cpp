#include <doctest.h>

#include "prefund/microrec.hpp"

using namespace prefund;

namespace {

const Coefficient kA = Coefficient::monomial(1, 0, 1);
Coefficient sq(int s, int e, int adeg = 0) { return Coefficient::monomial(s, e, adeg); }
const Coefficient kQQ = Coefficient(q_minus_qinv());

// c_r written out independently of the library.
Coefficient expected_c(const AffineType& t, int o) {
    if (t.family == Family::A) return kQQ * sq((t.n % 2 == 1 ? 1 : -1) * o, -(t.n + 1));
    return kQQ * sq(o, -2 * (t.n - 1));
}

}  // namespace

TEST_CASE("E_k examples") {
    LatticeModule a1({Family::A, 1, 1});
    auto t1 = lattice_tower(a1, 1);
    CHECK(t1.E(1, a1.vacuum()) == a1.basis(a1.string_datum(1)).scaled(kA));
    CHECK(t1.E(2, a1.vacuum()).is_zero());
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            LatticeModule m({Family::A, n, r});
            auto tr = lattice_tower(m, r);
            CHECK(tr.E(2, m.vacuum()).is_zero());
            CHECK(tr.E(3, m.vacuum()).is_zero());
            for (int i = 1; i <= n; ++i) {
                if (i == r) continue;
                auto ti = lattice_tower(m, i);
                for (int k = 1; k <= 3; ++k) CHECK(ti.E(k, m.vacuum()).is_zero());
            }
        }
    CHECK_THROWS_AS(t1.E(0, a1.vacuum()), std::invalid_argument);
}

TEST_CASE("psi_plus examples") {
    LatticeModule a1({Family::A, 1, 1});
    auto t1 = lattice_tower(a1, 1);
    const int o1 = a1.rs().sign(1);
    CHECK(psi_plus(t1, o1, 1, a1.vacuum()) == a1.vacuum().scaled(sq(-o1, -2, 1) * kQQ));
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            LatticeModule m({Family::A, n, r});
            auto tr = lattice_tower(m, r);
            const int o = m.rs().sign(r);
            CHECK(psi_plus(tr, o, 1, m.vacuum()) == m.vacuum().scaled(sq((n % 2 ? -1 : 1) * o, -n - 1, 1) * kQQ));
        }
    LatticeModule a3({Family::A, 3, 2});
    for (int i : {1, 3}) {
        auto ti = lattice_tower(a3, i);
        for (int k = 1; k <= 4; ++k) CHECK(psi_plus(ti, a3.rs().sign(i), k, a3.vacuum()).is_zero());
    }
}

TEST_CASE("ell-weight of the vacuum") {
    for (const auto& t : supported_types(5, 4, 5)) {
        CAPTURE(to_string(t));
        LatticeModule m(t);
        const auto w = ell_weight_of_vacuum(m, 4);
        const auto c = expected_c(t, m.rs().sign(t.r));
        CHECK(c_r(m.rs()) == c);
        CHECK(w.gamma == kA * c);
        for (int i = 1; i <= t.n; ++i) {
            REQUIRE(w.psi[i].size() == 5);
            CHECK(w.psi[i][0] == Coefficient::one());
            CHECK(w.psi[i][1] == (i == t.r ? -(kA * c) : Coefficient{}));
            for (int k = 2; k <= 4; ++k) CHECK(w.psi[i][k].is_zero());
            CHECK(w.form[i] == (i == t.r ? ClosedForm::Polynomial : ClosedForm::Trivial));
        }
    }
    // 1 - o(2)(q - q^-1) q^-4 a z for A_3, r = 2
    LatticeModule a3({Family::A, 3, 2});
    const auto w = ell_weight_of_vacuum(a3, 3);
    CHECK(w.psi[2][1] == -(kQQ * sq(a3.rs().sign(2), -4, 1)));
    // 1 - o(1)(q - q^-1) q^-2 a z for A_1
    LatticeModule a1({Family::A, 1, 1});
    CHECK(ell_weight_of_vacuum(a1, 6).psi[1][1] == -(kQQ * sq(a1.rs().sign(1), -2, 1)));
}

TEST_CASE("leading words give the same ell-weight as full operators in type A") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= n; ++r) {
            LatticeModule m({Family::A, n, r});
            CHECK(ell_weight_of_vacuum(m, 3).psi == ell_weight_of_vacuum(m, 3, true).psi);
        }
}

TEST_CASE("x_minus on the vacuum") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= n; ++r) {
            LatticeModule m({Family::A, n, r});
            const int o = m.rs().sign(r);
            const auto f = m.basis(m.string_datum(1));
            // -o(r) k_r (-q^-1)^{n-1} a f_r, and k_r f_r = q^-2 f_r
            CHECK(x_minus_on_vacuum(m, r, 1) == f.scaled(sq(-o * ((n - 1) % 2 ? -1 : 1), -(n - 1) - 2, 1)));
            CHECK(x_minus_on_vacuum(m, r, 2).is_zero());
            for (int i = 1; i <= n; ++i)
                if (i != r) CHECK(x_minus_on_vacuum(m, i, 1).is_zero());
        }
}

TEST_CASE("plus-model string recurrence matches the lattice computation") {
    for (const auto& t : supported_types(5, 4, 6)) {
        CAPTURE(to_string(t));
        LatticeModule m(t);
        auto tower = lattice_tower(m, t.r);
        const auto gam = string_recurrence(t, Model::Plus, 5);
        const auto f = m.string_datum(1);
        for (int k = 1; k <= 5; ++k) {
            const auto image = tower.E(k, m.vacuum());
            CHECK(image == m.basis(f).scaled(gam[k]));
        }
    }
}

TEST_CASE("leading-only towers refuse data outside their span") {
    LatticeModule d({Family::D, 4, 4});
    auto tower = lattice_tower(d, 4);
    CHECK_NOTHROW(tower.E(1, d.basis(d.string_datum(2))));
    Datum outside = d.vacuum_datum();
    outside[d.theta_index()] = 1;
    CHECK_THROWS_AS(tower.E(1, d.basis(outside)), DomainViolation);
    auto other = lattice_tower(d, 2);
    CHECK(other.E(1, d.vacuum()).is_zero());
    CHECK_THROWS_AS(other.E(1, d.basis(d.string_datum(1))), DomainViolation);
}

TEST_CASE("classify") {
    const Coefficient g = sq(1, -2, 1);
    CHECK(classify({Coefficient::one(), {}, {}}, g) == ClosedForm::Trivial);
    CHECK(classify({Coefficient::one(), -g, {}}, g) == ClosedForm::Polynomial);
    CHECK(classify({Coefficient::one(), -g, g * g, -(g * g * g)}, g) == ClosedForm::Geometric);
    CHECK(classify({Coefficient::one(), g}, g) == ClosedForm::None);
    CHECK(classify({sq(2, 0)}, g) == ClosedForm::None);
}

TEST_CASE("divide_elementwise") {
    LatticeModule m({Family::A, 2, 1});
    const auto v = m.basis(m.string_datum(1)).scaled(Coefficient(q_integer(2)) * kA);
    CHECK(divide_elementwise(v, q_integer(2)) == m.basis(m.string_datum(1)).scaled(kA));
    CHECK_THROWS_AS(divide_elementwise(m.vacuum(), q_integer(2)), NotDivisible);
}
