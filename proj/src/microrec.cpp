#include "prefund/microrec.hpp"

namespace prefund {

namespace {

Coefficient qmon(i64 c, int e, int a = 0) { return Coefficient::monomial(c, e, a); }

// e_r on f^m: q^{-m+1}[m] f^{m-1}
StringElement derive(const StringElement& v) {
    StringElement out;
    for (const auto& [m, c] : v.terms())
        if (m > 0) out.add(m - 1, c * Coefficient(q_integer(m).shifted(-m + 1)));
    return out;
}

StringElement shift_up(const StringElement& v, int by) {
    StringElement out;
    for (const auto& [m, c] : v.terms()) out.add(m + by, c);
    return out;
}

}  // namespace

std::string to_string(Model m) { return m == Model::Plus ? "pos" : "neg"; }

StringElement RankOneModule::apply_e(int i, const StringElement& v) const {
    if (i == 1) return derive(v);
    if (i != 0) throw std::invalid_argument("A_1^(1) has generators e_0, e_1");
    StringElement out;
    for (const auto& [m, c] : v.terms()) {
        // (theta, -m alpha_1) = -2m
        const int exp = model_ == Model::Plus ? 2 * m : 0;
        out.add(m + 1, c * qmon(1, exp, 1));
    }
    return out;
}

StringElement RankOneModule::apply_k(int i, int exponent, const StringElement& v) const {
    if (i != 0 && i != 1) throw std::invalid_argument("A_1^(1) has generators k_0, k_1");
    StringElement out;
    for (const auto& [m, c] : v.terms()) out.add(m, c * qmon(1, exponent * (i == 1 ? -2 * m : 2 * m)));
    return out;
}

StringElement rank_one_apply(const std::string& op, Model model, const StringElement& v) {
    RankOneModule mod(model);
    if (op == "e0") return mod.apply_e(0, v);
    if (op == "e1") return mod.apply_e(1, v);
    if (op == "k0") return mod.apply_k(0, 1, v);
    if (op == "k1") return mod.apply_k(1, 1, v);
    if (op == "k0^-1") return mod.apply_k(0, -1, v);
    if (op == "k1^-1") return mod.apply_k(1, -1, v);
    throw std::invalid_argument("unknown rank-one generator " + op);
}

std::string to_string(const StringElement& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : v.terms()) {
        if (!s.empty()) s += " + ";
        std::string coeff = to_string(c);
        if (c.monomial_count() > 1) coeff = "(" + coeff + ")";
        s += coeff + " * f^" + std::to_string(m);
    }
    return s;
}

std::vector<CheckReport> rank_one_serre_check(int max_m) {
    std::vector<CheckReport> out;
    RootSystemData rs(AffineType{Family::A, 1, 1});
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        CheckReport r;
        r.name = name;
        r.pass = ok;
        r.checked = static_cast<std::size_t>(max_m + 1);
        if (!ok) r.detail = detail;
        out.push_back(r);
    };
    for (Model model : {Model::Plus, Model::Minus}) {
        RankOneModule mod(model);
        for (const auto& rel : relation_suite(rs)) {
            bool ok = true;
            std::string detail;
            for (int m = 0; m <= max_m && ok; ++m) {
                auto v = evaluate(rel.expr, mod, mod.power(m));
                if (!v.is_zero()) {
                    ok = false;
                    detail = "on f^" + std::to_string(m) + " -> " + to_string(v);
                }
            }
            add("rank1_" + to_string(model) + "_" + rel.name, ok, detail);
        }
    }

    // Four-line expansions of the Serre words, probed with u = f^m: s = (theta, beta) = -2m, t = (beta, alpha_1) = -2m.
    const Coefficient a3 = qmon(1, 0, 3), a1 = qmon(1, 0, 1);
    auto w = [](std::vector<int> letters) { return OperatorExpr::word(letters); };
    struct Line {
        std::string name;
        Model model;
        OperatorExpr op;
        std::function<StringElement(int)> rhs;
    };
    std::vector<Line> lines;
    auto e1u = [](int m) { return derive(StringElement(m, Coefficient::one())); };
    auto e1u2 = [](int m) { return derive(derive(StringElement(m, Coefficient::one()))); };
    auto e1u3 = [](int m) { return derive(derive(derive(StringElement(m, Coefficient::one())))); };
    auto u = [](int m) { return StringElement(m, Coefficient::one()); };
    auto P = [](std::initializer_list<int> exps) {
        LaurentPoly p;
        for (int e : exps) p += LaurentPoly::q_power(e);
        return Coefficient(p);
    };
    // Case (0,1), plus model.
    lines.push_back({"expansion_pos01_1", Model::Plus, w({0, 0, 0, 1}), [=](int m) {
                         const int s = -2 * m;
                         return shift_up(e1u(m), 3).scaled(a3 * qmon(1, -3 * s));
                     }});
    lines.push_back({"expansion_pos01_2", Model::Plus, w({0, 0, 1, 0}), [=](int m) {
                         const int s = -2 * m, t = -2 * m;
                         return shift_up(e1u(m), 3).scaled(a3 * qmon(1, -3 * s + 2)) +
                                shift_up(u(m), 2).scaled(a3 * qmon(1, -3 * s + t + 2));
                     }});
    lines.push_back({"expansion_pos01_3", Model::Plus, w({0, 1, 0, 0}), [=](int m) {
                         const int s = -2 * m, t = -2 * m;
                         return shift_up(e1u(m), 3).scaled(a3 * qmon(1, -3 * s + 4)) +
                                shift_up(u(m), 2).scaled(a3 * qmon(1, -3 * s + t + 2) * P({0, 2}));
                     }});
    lines.push_back({"expansion_pos01_4", Model::Plus, w({1, 0, 0, 0}), [=](int m) {
                         const int s = -2 * m, t = -2 * m;
                         return shift_up(e1u(m), 3).scaled(a3 * qmon(1, -3 * s + 6)) +
                                shift_up(u(m), 2).scaled(a3 * qmon(1, -3 * s + t + 2) * P({0, 2, 4}));
                     }});
    // Case (1,0), plus model; the words are e_1^3 e_0, e_1^2 e_0 e_1, e_1 e_0 e_1^2, e_0 e_1^3.
    lines.push_back({"expansion_pos10_1", Model::Plus, w({1, 1, 1, 0}), [=](int m) {
                         const int s = -2 * m, t = -2 * m;
                         return shift_up(e1u3(m), 1).scaled(a1 * qmon(1, -s)) +
                                e1u2(m).scaled(a1 * qmon(1, -s + t) * P({0, 2, 4}));
                     }});
    lines.push_back({"expansion_pos10_2", Model::Plus, w({1, 1, 0, 1}), [=](int m) {
                         const int s = -2 * m, t = -2 * m;
                         return shift_up(e1u3(m), 1).scaled(a1 * qmon(1, -s - 2)) +
                                e1u2(m).scaled(a1 * qmon(1, -s + t) * P({0, 2}));
                     }});
    lines.push_back({"expansion_pos10_3", Model::Plus, w({1, 0, 1, 1}), [=](int m) {
                         const int s = -2 * m, t = -2 * m;
                         return shift_up(e1u3(m), 1).scaled(a1 * qmon(1, -s - 4)) +
                                e1u2(m).scaled(a1 * qmon(1, -s + t));
                     }});
    lines.push_back({"expansion_pos10_4", Model::Plus, w({0, 1, 1, 1}), [=](int m) {
                         const int s = -2 * m;
                         return shift_up(e1u3(m), 1).scaled(a1 * qmon(1, -s - 6));
                     }});
    // Case (0,1), minus model.
    lines.push_back({"expansion_neg01_1", Model::Minus, w({0, 0, 0, 1}),
                     [=](int m) { return shift_up(e1u(m), 3).scaled(a3); }});
    lines.push_back({"expansion_neg01_2", Model::Minus, w({0, 0, 1, 0}), [=](int m) {
                         return shift_up(u(m), 2).scaled(a3) + shift_up(e1u(m), 3).scaled(a3 * qmon(1, -2));
                     }});
    lines.push_back({"expansion_neg01_3", Model::Minus, w({0, 1, 0, 0}), [=](int m) {
                         return shift_up(u(m), 2).scaled(a3 * P({-2, 0})) +
                                shift_up(e1u(m), 3).scaled(a3 * qmon(1, -4));
                     }});
    lines.push_back({"expansion_neg01_4", Model::Minus, w({1, 0, 0, 0}), [=](int m) {
                         return shift_up(u(m), 2).scaled(a3 * P({-4, -2, 0})) +
                                shift_up(e1u(m), 3).scaled(a3 * qmon(1, -6));
                     }});
    for (const auto& line : lines) {
        RankOneModule mod(line.model);
        bool ok = true;
        std::string detail;
        for (int m = 0; m <= max_m && ok; ++m) {
            auto got = evaluate(line.op, mod, mod.power(m));
            auto want = line.rhs(m);
            if (!(got == want)) {
                ok = false;
                detail = "on f^" + std::to_string(m) + ": got " + to_string(got) + " want " + to_string(want);
            }
        }
        add("rank1_" + line.name, ok, detail);
    }
    return out;
}

StringModelData string_model_data(const AffineType& t, Model model) {
    validate(t);
    StringModelData d;
    d.model = model;
    d.r = t.r;
    const int n = t.n;
    if (model == Model::Plus) {
        d.E1 = level_one_on_vacuum(t);
        d.E2 = level_one_on_f(t);
    } else if (t.family == Family::A) {
        d.E1 = d.E2 = qmon(n % 2 == 1 ? 1 : -1, -n + 1, 1);
    } else {
        d.E1 = d.E2 = qmon(1, -2 * n + 4, 1);
    }
    return d;
}

StringElement StringSpan::apply_e(int i, const StringElement& v) const {
    if (i != d_.r) throw std::invalid_argument("the string span carries e_r only");
    return derive(v);
}

StringElement StringSpan::apply_k(int i, int exponent, const StringElement& v) const {
    if (i != d_.r) throw std::invalid_argument("the string span carries k_r only");
    StringElement out;
    for (const auto& [m, c] : v.terms()) out.add(m, c * qmon(1, -2 * m * exponent));
    return out;
}

StringElement StringSpan::level_one(int m) const {
    if (m == 0) return StringElement(1, d_.E1);
    if (m == 1) return StringElement(2, d_.E2);
    throw DomainViolation("string recurrence left span{1, f_r, f_r^2}");
}

namespace {

RootVectorTower<StringSpan> span_tower(const StringSpan& span) {
    return {span, span.data().r, [&span](const int& m) { return span.level_one(m); }};
}

Coefficient gamma_from(const StringElement& v) {
    for (const auto& [m, c] : v.terms())
        if (m != 1) throw DomainViolation("E_k 1 is not a multiple of f_r: " + to_string(v));
    return v.coeff(1);
}

}  // namespace

std::vector<Coefficient> string_recurrence(const AffineType& t, Model model, int K) {
    StringSpan span(string_model_data(t, model));
    auto tower = span_tower(span);
    std::vector<Coefficient> out{Coefficient{}};
    for (int k = 1; k <= K; ++k) out.push_back(gamma_from(tower.E(k, StringElement(0, Coefficient::one()))));
    return out;
}

Coefficient negative_gamma_closed_form(const AffineType& t, int k) {
    validate(t);
    const int n = t.n;
    Coefficient p = Coefficient::one();
    for (int j = 1; j < k; ++j) p = p * Coefficient(q_minus_qinv());
    if (t.family == Family::A) {
        const int sign = ((k * n - 1) % 2 == 0) ? 1 : -1;
        return p * qmon(sign, -k * (n + 1) + 2, k);
    }
    return p * qmon(k % 2 == 1 ? 1 : -1, -2 * k * (n - 1) + 2, k);
}

NegativeEllWeight negative_ell_weight(const AffineType& t, int K) {
    RootSystemData rs(t);
    StringSpan span(string_model_data(t, Model::Minus));
    auto tower = span_tower(span);
    NegativeEllWeight w;
    w.expected_ratio = -(qmon(1, 0, 1) * c_r(rs));
    w.gamma.push_back(Coefficient{});
    w.psi.push_back(Coefficient::one());
    const StringElement one(0, Coefficient::one());
    for (int k = 1; k <= K; ++k) {
        w.gamma.push_back(gamma_from(tower.E(k, one)));
        auto v = psi_plus(tower, rs.sign(t.r), k, one);
        if (!(v == one.scaled(v.coeff(0))))
            throw NotEigenvector("psi+_{r," + std::to_string(k) + "} moves 1: " + to_string(v));
        w.psi.push_back(v.coeff(0));
    }
    w.form = classify(w.psi, qmon(1, 0, 1) * c_r(rs));
    return w;
}

namespace {

RootVectorTower<RankOneModule> rank_one_tower(const RankOneModule& mod) {
    // E_{delta - alpha_1} = e_0 in A_1^(1).
    return {mod, 1, [&mod](const int& m) { return mod.apply_e(0, mod.power(m)); }};
}

}  // namespace

std::vector<Coefficient> rank_one_gamma(Model model, int K) {
    RankOneModule mod(model);
    auto tower = rank_one_tower(mod);
    std::vector<Coefficient> out{Coefficient{}};
    for (int k = 1; k <= K; ++k) {
        auto v = tower.E(k, mod.power(0));
        if (v.is_zero()) {
            out.push_back(Coefficient{});
            continue;
        }
        out.push_back(gamma_from(v));
    }
    return out;
}

std::vector<Coefficient> rank_one_psi(Model model, int K, int sign) {
    RankOneModule mod(model);
    auto tower = rank_one_tower(mod);
    std::vector<Coefficient> out{Coefficient::one()};
    const StringElement one = mod.power(0);
    for (int k = 1; k <= K; ++k) {
        auto v = psi_plus(tower, sign, k, one);
        if (!(v == one.scaled(v.coeff(0))))
            throw NotEigenvector("rank-one psi+_{1," + std::to_string(k) + "} moves 1: " + to_string(v));
        out.push_back(v.coeff(0));
    }
    return out;
}

}  // namespace prefund
