#include <doctest.h>

#include "gen.hpp"
#include "prefund/drinfeld.hpp"

using namespace prefund;

TEST_CASE("serial and parallel kernels find the same first failure") {
    prefund::testing::Gen g(61);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t count = static_cast<std::size_t>(g.uniform(0, 5000));
        std::vector<char> bad(count, 0);
        const int marks = g.uniform(0, 4);
        for (int k = 0; k < marks && count > 0; ++k) bad[g.uniform(0, static_cast<int>(count) - 1)] = 1;
        auto pred = [&](std::size_t k) { return bad[k] != 0; };
        CHECK(first_failure_serial(count, pred) == first_failure_parallel(count, pred));
        CHECK(first_failure(SweepMode::Serial, count, pred) == first_failure(SweepMode::Parallel, count, pred));
    }
}

TEST_CASE("relation reports do not depend on the sweep mode") {
    SweepOptions serial, parallel;
    serial.mode = SweepMode::Serial;
    parallel.mode = SweepMode::Parallel;
    serial.extra_random = parallel.extra_random = 50;
    for (bool perturb : {false, true}) {
        LatticeModule m({Family::D, 4, 1});
        m.set_perturbation(perturb);
        const auto suite = relation_suite(m.rs());
        const auto a = check_relations(suite, m, m.box(2), serial);
        const auto b = check_relations(suite, m, m.box(2), parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].line() == b[k].line());
    }
}

TEST_CASE("random data are reproducible") {
    LatticeModule m({Family::A, 4, 2});
    CHECK(prefund::random_data(m, 20, 7, 10) == prefund::random_data(m, 20, 7, 10));
    CHECK(prefund::random_data(m, 20, 7, 10) != prefund::random_data(m, 20, 8, 10));
    for (const auto& d : prefund::random_data(m, 50, 9, 10))
        for (int x : d) CHECK((x >= 0 && x <= 10));
}

TEST_CASE("root vector memo is safe under concurrent use") {
    LatticeModule m({Family::A, 3, 2});
    auto tower = lattice_tower(m, 2);
    const auto data = m.enumerate_basis(m.box(2));
    std::vector<ModuleElement> par(data.size()), ser(data.size());
    const long long n = static_cast<long long>(data.size());
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < n; ++k) par[k] = tower.E(2, m.basis(data[k]));
    auto fresh = lattice_tower(m, 2);
    for (std::size_t k = 0; k < data.size(); ++k) ser[k] = fresh.E(2, m.basis(data[k]));
    CHECK(par == ser);
}
