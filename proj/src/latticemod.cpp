#include "prefund/latticemod.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace prefund {

namespace {

const LaurentPoly& qint(int m) {
    static const std::vector<LaurentPoly> table = [] {
        std::vector<LaurentPoly> t;
        for (int k = 0; k < 512; ++k) t.push_back(q_integer(k));
        return t;
    }();
    if (m < static_cast<int>(table.size())) return table[m];
    thread_local LaurentPoly big;
    big = q_integer(m);
    return big;
}

// s * a^adeg * q^exp * [c[from]] added at c - 1_from + 1_to.
void emit(ModuleElement& out, const Coefficient& s, const Datum& c, int exp, int from, int to) {
    const int mult = c[from];
    if (mult == 0) return;
    Datum d = c;
    --d[from];
    if (to >= 0) ++d[to];
    out.add(d, s * Coefficient(qint(mult).shifted(exp)));
}

}  // namespace

LatticeModule::LatticeModule(const AffineType& t) : rs_(t) {
    const int n = t.n;
    const auto word = reduced_word_wr(t);
    const auto order = convex_order(rs_, word);
    auto listing = positive_roots_wr(t);
    for (const auto& a : order) {
        auto it = std::find_if(listing.begin(), listing.end(), [&](const Root& b) { return b.alpha == a; });
        if (it == listing.end()) throw std::logic_error("convex order leaves Delta+(w_r)");
        roots_.push_back(*it);
    }
    alpha_r_ = 0;
    theta_ = static_cast<int>(roots_.size()) - 1;

    const int dim = static_cast<int>(rs_.eps_dim());
    plus_.assign(dim + 2, std::vector<int>(dim + 2, -1));
    minus_.assign(dim + 2, std::vector<int>(dim + 2, -1));
    // Labels for D with r = n-1 come from r = n; the two convex orders agree position by position.
    std::vector<Root> labels = roots_;
    if (t.family == Family::D && t.r == n - 1) {
        for (auto& b : labels) b.eps[n - 1] = -b.eps[n - 1];
    }
    for (int k = 0; k < static_cast<int>(labels.size()); ++k) {
        const auto& e = labels[k].eps;
        int i = -1, j = -1;
        for (int x = 0; x < dim; ++x)
            if (e[x] != 0) (i < 0 ? i : j) = x + 1;
        (e[j - 1] > 0 ? plus_ : minus_)[i][j] = k;
    }
}

int LatticeModule::index_of(const Root& b) const {
    for (std::size_t k = 0; k < roots_.size(); ++k)
        if (roots_[k].alpha == b.alpha) return static_cast<int>(k);
    return -1;
}

Datum LatticeModule::string_datum(int m) const {
    Datum d = vacuum_datum();
    d[alpha_r_] = m;
    return d;
}

bool LatticeModule::in_cone(const Datum& c) const {
    return c.size() == roots_.size() && std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

RootVec LatticeModule::wt(const Datum& c) const {
    RootVec w(rs_.n(), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k])
            for (int j = 0; j < rs_.n(); ++j) w[j] -= c[k] * roots_[k].alpha[j];
    return w;
}

int LatticeModule::height(const Datum& c) const {
    int h = 0;
    for (int x : wt(c)) h -= x;
    return h;
}

ModuleElement LatticeModule::apply_e(int i, const ModuleElement& v) const {
    ModuleElement out;
    for (const auto& [c, s] : v.terms()) apply_e_basis(i, c, s, out);
    return out;
}

ModuleElement LatticeModule::apply_k(int i, int exponent, const ModuleElement& v) const {
    ModuleElement out;
    for (const auto& [c, s] : v.terms())
        out.add(c, s * Coefficient(LaurentPoly::q_power(exponent * rs_.pair_simple(i, wt(c)))));
    return out;
}

void LatticeModule::apply_e_basis(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const {
    if (i < 0 || i > rs_.n()) throw std::invalid_argument("generator index out of range");
    if (type().family == Family::A)
        e_type_a(i, c, s, out);
    else if (type().r == 1)
        e_type_d1(i, c, s, out);
    else
        e_type_dn(type().r == rs_.n() ? i : rs_.sigma(i), c, s, out);
}

void LatticeModule::e_type_a(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const {
    const int n = rs_.n(), r = type().r;
    auto m = [&](int x, int y) { return c[minus_[x][y]]; };
    if (i == 0) {
        int exp = 0;
        for (int k = 2; k <= r; ++k) exp += m(k, n + 1);
        for (int l = r + 1; l <= n + 1; ++l) exp += m(1, l);
        if (perturb_) exp += c[alpha_r_];
        Datum d = c;
        ++d[theta_];
        out.add(d, s * Coefficient::monomial(1, exp, 1));
        return;
    }
    if (i < r) {
        int exp = 0;  // a_{i,l-1}(c), accumulated as l grows
        for (int l = r + 1; l <= n + 1; ++l) {
            emit(out, s, c, exp, minus_[i][l], minus_[i + 1][l]);
            exp += m(i + 1, l) - m(i, l);
        }
    } else if (i == r) {
        emit(out, s, c, 0, minus_[r][r + 1], -1);
    } else {
        for (int k = 1; k <= r; ++k) {
            int exp = 0;  // b_{k,i}(c)
            for (int t = k + 1; t <= r; ++t) exp += m(t, i) - m(t, i + 1);
            emit(out, s, c, exp, minus_[k][i + 1], minus_[k][i]);
        }
    }
}

void LatticeModule::e_type_d1(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const {
    const int n = rs_.n();
    auto M = [&](int x) { return minus_[1][x]; };
    auto P = [&](int x) { return plus_[1][x]; };
    if (i == 0) {
        int exp = c[P(2)];
        for (int k = 3; k <= n; ++k) exp += c[M(k)] + c[P(k)];
        if (perturb_) exp += c[alpha_r_];
        Datum d = c;
        ++d[theta_];
        out.add(d, s * Coefficient::monomial(1, exp, 1));
    } else if (i == 1) {
        emit(out, s, c, 0, M(2), -1);
    } else if (i < n) {
        emit(out, s, c, 0, M(i + 1), M(i));
        emit(out, s, c, c[M(i)] - c[M(i + 1)], P(i), P(i + 1));
    } else {
        emit(out, s, c, 0, P(n), M(n - 1));
        emit(out, s, c, c[M(n - 1)] - c[P(n)], P(n - 1), M(n));
    }
}

// Type D, r = n, in the e_i + e_j labelling; r = n-1 arrives here through sigma.
void LatticeModule::e_type_dn(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const {
    const int n = rs_.n();
    auto C = [&](int x, int y) { return c[plus_[x][y]]; };
    if (i == 0) {
        int exp = 0;
        for (int j = 2; j <= n; ++j) exp += C(1, j);
        for (int j = 3; j <= n; ++j) exp += C(2, j);
        if (perturb_) exp += c[alpha_r_];
        Datum d = c;
        ++d[theta_];
        out.add(d, s * Coefficient::monomial(1, exp, 1));
        return;
    }
    if (i == n) {
        emit(out, s, c, 0, plus_[n - 1][n], -1);
        return;
    }
    // e_i + e_l -> e_{i+1} + e_l for l > i+1.
    for (int l = i + 2; l <= n; ++l) {
        int exp = 0;
        for (int p = l + 1; p <= n; ++p) exp += C(i + 1, p) - C(i, p);
        emit(out, s, c, exp, plus_[i][l], plus_[i + 1][l]);
    }
    // e_m + e_i -> e_m + e_{i+1} for m < i.
    int tail = 0;
    for (int p = i + 2; p <= n; ++p) tail += C(i + 1, p) - C(i, p);
    for (int m = 1; m < i; ++m) {
        int exp = tail;
        for (int x = m + 1; x < i; ++x) exp += C(x, i + 1) - C(x, i);
        emit(out, s, c, exp, plus_[m][i], plus_[m][i + 1]);
    }
}

void LatticeModule::for_each_basis(const RootVec& bound, const std::function<void(const Datum&)>& f) const {
    if (static_cast<int>(bound.size()) != rs_.n()) throw std::invalid_argument("bound has wrong dimension");
    if (std::any_of(bound.begin(), bound.end(), [](int x) { return x < 0; })) return;
    Datum c = vacuum_datum();
    RootVec room = bound;
    auto fits = [&](const RootVec& a) {
        for (int j = 0; j < rs_.n(); ++j)
            if (a[j] > room[j]) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == roots_.size()) {
            f(c);
            return;
        }
        const RootVec& a = roots_[k].alpha;
        int used = 0;
        while (true) {
            self(self, k + 1);
            if (!fits(a)) break;
            for (int j = 0; j < rs_.n(); ++j) room[j] -= a[j];
            ++c[k];
            ++used;
        }
        for (int j = 0; j < rs_.n(); ++j) room[j] += used * a[j];
        c[k] = 0;
    };
    rec(rec, 0);
}

std::vector<Datum> LatticeModule::enumerate_basis(const RootVec& bound) const {
    std::vector<Datum> out;
    for_each_basis(bound, [&](const Datum& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

std::string LatticeModule::datum_to_string(const Datum& c) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!first) s += ", ";
        s += rs_.label(roots_[k]) + ":" + std::to_string(c[k]);
        first = false;
    }
    return s + "}";
}

Datum LatticeModule::parse_datum(const std::string& text) const {
    auto open = text.find('{'), close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("datum must be enclosed in braces: " + text);
    Datum c = vacuum_datum();
    std::stringstream in(text.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("missing multiplicity in " + item);
        int k = index_of(rs_.parse_root(item.substr(0, colon)));
        if (k < 0) throw ParseError("root outside Delta+(w_r): " + item);
        int mult = std::stoi(item.substr(colon + 1));
        if (mult < 0) throw ParseError("negative multiplicity in " + item);
        c[k] += mult;
    }
    return c;
}

std::string LatticeModule::element_to_string(const ModuleElement& v) const {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [c, k] : v.terms()) {
        if (!s.empty()) s += " + ";
        std::string coeff = to_string(k);
        if (k.monomial_count() > 1) coeff = "(" + coeff + ")";
        s += coeff + " * [" + datum_to_string(c) + "]";
    }
    return s;
}

ModuleElement LatticeModule::parse_element(const std::string& text) const {
    ModuleElement v;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (text.substr(pos) == "0") return v;
    while (pos < text.size()) {
        skip();
        std::string coeff;
        if (text[pos] == '(') {
            auto close = text.find(')', pos);
            if (close == std::string::npos) throw ParseError("unbalanced parenthesis");
            coeff = text.substr(pos + 1, close - pos - 1);
            pos = close + 1;
            skip();
            if (pos >= text.size() || text[pos] != '*') throw ParseError("expected '*' after coefficient");
            ++pos;
        } else {
            auto mark = text.find("* [", pos);
            if (mark == std::string::npos) mark = text.find("*[", pos);
            if (mark == std::string::npos) throw ParseError("expected '* [' in element");
            coeff = text.substr(pos, mark - pos);
            pos = mark + 1;
        }
        skip();
        if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['");
        auto close = text.find(']', pos);
        if (close == std::string::npos) throw ParseError("unbalanced bracket");
        v.add(parse_datum(text.substr(pos + 1, close - pos - 1)), parse_coefficient(coeff));
        pos = close + 1;
        skip();
        if (pos < text.size()) {
            if (text[pos] != '+') throw ParseError("expected '+' between terms");
            ++pos;
        }
    }
    return v;
}

}  // namespace prefund
