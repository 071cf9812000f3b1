#include "prefund/rootvec.hpp"

namespace prefund {

namespace {

Coefficient sign_q(int sign, int qexp, int adeg = 0) { return Coefficient::monomial(sign, qexp, adeg); }

OperatorExpr leading_word(const AffineType& t) {
    const int n = t.n, r = t.r;
    std::vector<int> w;
    if (t.family == Family::A) {
        for (int k = r + 1; k <= n; ++k) w.push_back(k);
        for (int k = r - 1; k >= 1; --k) w.push_back(k);
        w.push_back(0);
        return OperatorExpr::word(w, sign_q(n % 2 == 1 ? 1 : -1, -(n - 1)));
    }
    if (r == 1) {
        for (int k = 2; k <= n - 1; ++k) w.push_back(k);
        w.push_back(n);
        for (int k = n - 2; k >= 2; --k) w.push_back(k);
    } else {
        for (int k = n - 2; k >= 1; --k) w.push_back(k);
        w.push_back(r == n ? n - 1 : n);
        for (int k = n - 2; k >= 2; --k) w.push_back(k);
    }
    w.push_back(0);
    return OperatorExpr::word(w, sign_q(1, -2 * n + 4));
}

}  // namespace

OperatorExpr leading_E(const AffineType& t, int i) {
    validate(t);
    if (i < 1 || i > t.n) throw std::invalid_argument("leading_E needs i in I");
    if (i != t.r) return {};
    return leading_word(t);
}

OperatorExpr x_word_typeA(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("x_word_typeA needs 1 <= r <= n");
    if (r == 1) {
        OperatorExpr x = OperatorExpr::e(n);
        for (int k = n - 1; k >= 1; --k) x = q_bracket(x, OperatorExpr::e(k));
        return x;
    }
    if (r == n) {
        OperatorExpr x = OperatorExpr::e(1);
        for (int k = 2; k <= n; ++k) x = q_bracket(x, OperatorExpr::e(k));
        return x;
    }
    // The braid image of the rank n-1 vector: e_{n-r} -> [e_{n+1-r}, e_{n-r}]_q, higher letters shift up.
    return x_word_typeA(n - 1, r).substitute([n, r](int k) {
        if (k < n - r) return OperatorExpr::e(k);
        if (k == n - r) return q_bracket(OperatorExpr::e(n + 1 - r), OperatorExpr::e(n - r));
        return OperatorExpr::e(k + 1);
    });
}

OperatorExpr full_E_typeA(int n, int r) {
    return x_word_typeA(n, r).relabel([n, r](int i) { return (i + r) % (n + 1); });
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::LeadingOnly: return "leading-only";
        case Provenance::Recursion: return "recursion";
        case Provenance::Hardcoded: return "hardcoded";
    }
    return "?";
}

HardcodedE hardcoded_full_E(const AffineType& t) {
    validate(t);
    const Coefficient one = Coefficient::one(), m1 = sign_q(-1, -1), p2 = sign_q(1, -2);
    auto four = [&](std::vector<int> a, std::vector<int> b, std::vector<int> c, std::vector<int> d) {
        return OperatorExpr::word(a, one) + OperatorExpr::word(b, m1) + OperatorExpr::word(c, m1) +
               OperatorExpr::word(d, p2);
    };
    if (t.family == Family::A && t.n == 3) {
        switch (t.r) {
            case 1: return {four({0, 3, 2}, {3, 0, 2}, {2, 0, 3}, {2, 3, 0}), true};
            case 2: return {four({0, 1, 3}, {1, 0, 3}, {3, 0, 1}, {3, 1, 0}), true};
            default: return {four({0, 1, 2}, {1, 0, 2}, {2, 0, 1}, {2, 1, 0}), true};
        }
    }
    if (t.family == Family::D && t.n == 4 && t.r == 1)
        return {OperatorExpr::word({2, 3, 4, 2, 0}, sign_q(1, -4)), false};
    if (t.family == Family::D && t.n == 4 && t.r == 4)
        return {OperatorExpr::word({2, 1, 3, 2, 0}, sign_q(1, -4)), false};
    if (t.family == Family::D && t.n == 5 && t.r == 5)
        return {OperatorExpr::word({3, 2, 1, 4, 3, 2, 0}, sign_q(1, -6)), false};
    throw Unsupported("no hard-coded root vector for " + to_string(t));
}

std::vector<CatalogEntry> root_vector_catalog(const AffineType& t) {
    validate(t);
    std::vector<CatalogEntry> out;
    for (int i = 1; i <= t.n; ++i) {
        CatalogEntry e;
        e.i = i;
        e.leading = leading_E(t, i);
        if (t.family == Family::A) {
            e.full = full_E_typeA(t.n, i);
            e.provenance = Provenance::Recursion;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string catalog_dump(const AffineType& t) {
    std::string s;
    for (const auto& e : root_vector_catalog(t)) {
        s += "E[delta-alpha_" + std::to_string(e.i) + "] " + to_string(e.provenance) + "\n";
        s += "  leading: " + to_string(e.leading) + "\n";
        if (e.full) s += "  full: " + to_string(*e.full) + "\n";
    }
    return s;
}

Coefficient level_one_on_vacuum(const AffineType& t) {
    validate(t);
    if (t.family == Family::A) return sign_q(t.n % 2 == 1 ? 1 : -1, -(t.n - 1), 1);
    return sign_q(1, -2 * t.n + 4, 1);
}

Coefficient level_one_on_f(const AffineType& t) {
    validate(t);
    if (t.family == Family::A) return sign_q(t.n % 2 == 1 ? 1 : -1, -(t.n - 1) + 2, 1);
    return sign_q(1, -2 * t.n + 6, 1);
}

std::vector<CheckReport> verified_domain_check(const AffineType& t) {
    LatticeModule m(t);
    const std::string tag = "[" + to_string(t) + "]";
    const OperatorExpr lead = leading_E(t, t.r);
    const ModuleElement vac = m.vacuum(), f1 = m.basis(m.string_datum(1)), f2raw = m.basis(m.string_datum(2));
    // f_r * f_r = q^{-1} [2 at alpha_r]
    const ModuleElement f_sq = f2raw.scaled(Coefficient::monomial(1, -1, 0));
    std::vector<CheckReport> out;
    auto expect = [&](const std::string& name, const ModuleElement& got, const ModuleElement& want) {
        CheckReport rep;
        rep.name = name + tag;
        rep.checked = 1;
        if (!(got == want)) {
            rep.pass = false;
            rep.detail = "got " + m.element_to_string(got) + " want " + m.element_to_string(want);
        }
        out.push_back(rep);
    };
    expect("E_on_vacuum", evaluate(lead, m, vac), f1.scaled(level_one_on_vacuum(t)));
    expect("E_on_f", evaluate(lead, m, f1), f_sq.scaled(level_one_on_f(t)));
    if (t.family == Family::A) {
        const OperatorExpr full = full_E_typeA(t.n, t.r);
        for (int k = 0; k <= 2; ++k) {
            const auto v = m.basis(m.string_datum(k));
            expect("full_vs_leading_f" + std::to_string(k), evaluate(full, m, v), evaluate(lead, m, v));
        }
    }
    return out;
}

}  // namespace prefund
