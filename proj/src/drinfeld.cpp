#include "prefund/drinfeld.hpp"

#include <memory>
#include <algorithm>

namespace prefund {

std::string to_string(ClosedForm f) {
    switch (f) {
        case ClosedForm::Trivial: return "1";
        case ClosedForm::Polynomial: return "1 - gamma*z";
        case ClosedForm::Geometric: return "1/(1 + gamma*z)";
        case ClosedForm::None: return "unmatched";
    }
    return "?";
}

Coefficient c_r(const RootSystemData& rs) {
    const auto& t = rs.type();
    const int o = rs.sign(t.r);
    if (t.family == Family::A) {
        const int sign = ((t.n + 1) % 2 == 0 ? 1 : -1) * o;
        return Coefficient(q_minus_qinv()) * Coefficient::monomial(sign, -(t.n + 1), 0);
    }
    return Coefficient(q_minus_qinv()) * Coefficient::monomial(o, -2 * (t.n - 1), 0);
}

ClosedForm classify(const std::vector<Coefficient>& s, const Coefficient& gamma) {
    if (s.empty() || !(s[0] == Coefficient::one())) return ClosedForm::None;
    const bool rest_zero = std::all_of(s.begin() + 1, s.end(), [](const Coefficient& c) { return c.is_zero(); });
    if (rest_zero) return ClosedForm::Trivial;
    if (s.size() >= 2 && s[1] == -gamma &&
        std::all_of(s.begin() + 2, s.end(), [](const Coefficient& c) { return c.is_zero(); }))
        return ClosedForm::Polynomial;
    Coefficient p = Coefficient::one();
    for (std::size_t k = 1; k < s.size(); ++k) {
        p = p * (-gamma);
        if (!(s[k] == p)) return ClosedForm::None;
    }
    return ClosedForm::Geometric;
}

std::string EllWeight::report() const {
    std::string out;
    for (std::size_t i = 1; i < psi.size(); ++i) {
        out += "Psi_" + std::to_string(i) + ": form " + to_string(form[i]) + "\n";
        for (std::size_t k = 0; k < psi[i].size(); ++k)
            out += "  k=" + std::to_string(k) + " " + to_string(psi[i][k]) + "\n";
    }
    out += "gamma = a*c_r = " + to_string(gamma) + "\n";
    return out;
}

RootVectorTower<LatticeModule> lattice_tower(const LatticeModule& m, int i, bool leading_only) {
    const auto& t = m.type();
    if (t.family == Family::A && !leading_only) {
        auto op = std::make_shared<OperatorExpr>(full_E_typeA(t.n, i));
        return {m, i, [&m, op](const Datum& b) { return evaluate(*op, m, m.basis(b)); }};
    }
    auto lead = std::make_shared<OperatorExpr>(leading_E(t, i));
    const bool is_r = i == t.r;
    const int ar = m.alpha_r_index();
    return {m, i, [&m, lead, is_r, ar](const Datum& b) {
                // Tail words end in a letter of I other than r; they kill the alpha_r string.
                for (std::size_t k = 0; k < b.size(); ++k)
                    if (b[k] != 0 && (!is_r || static_cast<int>(k) != ar))
                        throw DomainViolation("leading-only root vector applied outside its verified span at [" +
                                              m.datum_to_string(b) + "]");
                return evaluate(*lead, m, m.basis(b));
            }};
}

EllWeight ell_weight_of_vacuum(const LatticeModule& m, int K, bool leading_only) {
    const auto& rs = m.rs();
    const int n = rs.n();
    EllWeight w;
    w.type = m.type();
    w.gamma = Coefficient::monomial(1, 0, 1) * c_r(rs);
    w.psi.assign(n + 1, {});
    w.form.assign(n + 1, ClosedForm::None);
    const ModuleElement vac = m.vacuum();
    for (int i = 1; i <= n; ++i) {
        auto tower = lattice_tower(m, i, leading_only);
        std::vector<Coefficient> series{Coefficient::one()};
        for (int k = 1; k <= K; ++k) {
            ModuleElement v = psi_plus(tower, rs.sign(i), k, vac);
            Coefficient ev = v.coeff(m.vacuum_datum());
            if (!(v == vac.scaled(ev)))
                throw NotEigenvector("psi+_{" + std::to_string(i) + "," + std::to_string(k) +
                                     "} moves the vacuum: " + m.element_to_string(v));
            series.push_back(ev);
        }
        w.form[i] = classify(series, w.gamma);
        w.psi[i] = std::move(series);
    }
    return w;
}

ModuleElement x_minus_on_vacuum(const LatticeModule& m, int i, int k) {
    auto tower = lattice_tower(m, i);
    return x_minus(tower, m.rs().sign(i), k, m.vacuum());
}

}  // namespace prefund
