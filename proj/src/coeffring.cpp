#include "prefund/coeffring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace prefund {

namespace {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

// Merge two sorted term lists with b scaled by sign.
template <class K, class V, class Add, class Zero>
std::vector<std::pair<K, V>> merge_terms(const std::vector<std::pair<K, V>>& a,
                                         const std::vector<std::pair<K, V>>& b, Add add, Zero zero) {
    std::vector<std::pair<K, V>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, add(V{}, b[j].second));
            ++j;
        } else {
            V v = add(a[i].second, b[j].second);
            if (!zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::monomial(i64 c, int e) {
    LaurentPoly p;
    if (c != 0) p.t_.emplace_back(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_sorted(std::vector<Term> t) {
    LaurentPoly p;
    p.t_ = std::move(t);
    return p;
}

i64 LaurentPoly::coeff(int e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e, [](const Term& x, int v) { return x.first < v; });
    return (it != t_.end() && it->first == e) ? it->second : 0;
}

i64 LaurentPoly::at_one() const {
    i64 s = 0;
    for (const auto& [e, c] : t_) s = checked_add(s, c);
    return s;
}

LaurentPoly LaurentPoly::bar() const {
    std::vector<Term> t;
    t.reserve(t_.size());
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) t.emplace_back(-it->first, it->second);
    return from_sorted(std::move(t));
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly p = *this;
    for (auto& term : p.t_) term.first += e;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    t_ = merge_terms(t_, o.t_, checked_add, [](i64 v) { return v == 0; });
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly p = a;
    for (auto& term : p.t_) term.second = checked_mul(term.second, -1);
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.t_.size() == 1) {
        LaurentPoly p = a;
        for (auto& term : p.t_) {
            term.first += b.t_[0].first;
            term.second = checked_mul(term.second, b.t_[0].second);
        }
        return p;
    }
    if (a.t_.size() == 1) return b * a;
    // Dense accumulation over the exponent span.
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<i64> acc(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
            slot = checked_add(slot, checked_mul(ca, cb));
        }
    std::vector<LaurentPoly::Term> t;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0) t.emplace_back(lo + static_cast<int>(k), acc[k]);
    return LaurentPoly::from_sorted(std::move(t));
}

// ---- Coefficient ----

Coefficient Coefficient::from(int adeg, const LaurentPoly& p) {
    if (adeg < 0) throw std::invalid_argument("negative a-degree");
    Coefficient c;
    if (!p.is_zero()) c.t_.emplace_back(adeg, p);
    return c;
}

LaurentPoly Coefficient::component(int adeg) const {
    for (const auto& [d, p] : t_)
        if (d == adeg) return p;
    return {};
}

std::size_t Coefficient::monomial_count() const {
    std::size_t n = 0;
    for (const auto& comp : t_) n += comp.second.terms().size();
    return n;
}

Coefficient Coefficient::bar() const {
    Coefficient c = *this;
    for (auto& comp : c.t_) comp.second = comp.second.bar();
    return c;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    t_ = merge_terms(
        t_, o.t_, [](const LaurentPoly& x, const LaurentPoly& y) { return x + y; },
        [](const LaurentPoly& v) { return v.is_zero(); });
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) { return *this += -o; }

Coefficient operator-(const Coefficient& a) {
    Coefficient c = a;
    for (auto& comp : c.t_) comp.second = -comp.second;
    return c;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    std::map<int, LaurentPoly> acc;
    for (const auto& [da, pa] : a.t_)
        for (const auto& [db, pb] : b.t_) acc[da + db] += pa * pb;
    Coefficient c;
    for (auto& [d, p] : acc)
        if (!p.is_zero()) c.t_.emplace_back(d, std::move(p));
    return c;
}

// ---- q-combinatorics ----

LaurentPoly q_integer(int m) {
    if (m < 0) throw std::invalid_argument("q_integer: negative argument");
    LaurentPoly p;
    for (int k = 0; k < m; ++k) p += LaurentPoly::q_power(m - 1 - 2 * k);
    return p;
}

LaurentPoly q_binomial(int m, int k) {
    if (m < 0 || k < 0 || k > m) throw std::invalid_argument("q_binomial: need 0 <= k <= m");
    k = std::min(k, m - k);
    LaurentPoly num = LaurentPoly::constant(1), den = LaurentPoly::constant(1);
    for (int j = 0; j < k; ++j) {
        num = num * q_integer(m - j);
        den = den * q_integer(j + 1);
    }
    return exact_divide(num, den);
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    LaurentPoly rem = num;
    LaurentPoly quot;
    const auto [dtop, dlead] = den.terms().back();
    // Every quotient exponent is at least this floor.
    const int floor = num.is_zero() ? 0 : num.min_exp() - den.min_exp();
    while (!rem.is_zero()) {
        const auto [rtop, rlead] = rem.terms().back();
        if (rtop - dtop < floor || rlead % dlead != 0)
            throw NotDivisible("not divisible: (" + to_string(num) + ") / (" + to_string(den) + ")");
        LaurentPoly step = LaurentPoly::monomial(rlead / dlead, rtop - dtop);
        quot += step;
        rem -= step * den;
    }
    return quot;
}

Coefficient exact_divide(const Coefficient& num, const LaurentPoly& den) {
    Coefficient out;
    for (const auto& [d, p] : num.components()) out += Coefficient::from(d, exact_divide(p, den));
    return out;
}

// ---- text form ----

namespace {

void append_monomial(std::string& s, bool first, i64 c, int qe, int ad) {
    if (c < 0)
        s += first ? "-" : " - ";
    else if (!first)
        s += " + ";
    const i64 mag = c < 0 ? -c : c;
    std::vector<std::string> factors;
    if (mag != 1 || (qe == 0 && ad == 0)) factors.push_back(std::to_string(mag));
    if (qe != 0) factors.push_back(qe == 1 ? std::string("q") : "q^" + std::to_string(qe));
    if (ad != 0) factors.push_back(ad == 1 ? std::string("a") : "a^" + std::to_string(ad));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) s += '*';
        s += factors[k];
    }
}

}  // namespace

std::string to_string(const LaurentPoly& p) { return to_string(Coefficient(p)); }

std::string to_string(const Coefficient& c) {
    if (c.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, p] : c.components())
        for (const auto& [e, k] : p.terms()) {
            append_monomial(s, first, k, e, d);
            first = false;
        }
    return s;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char ch) {
        skip();
        if (i < s.size() && s[i] == ch) {
            ++i;
            return true;
        }
        return false;
    }
    bool at_end() {
        skip();
        return i == s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    i64 integer(bool allow_sign) {
        skip();
        std::size_t start = i;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw ParseError("expected integer at offset " + std::to_string(start));
        return std::stoll(std::string(s.substr(start, i - start)));
    }
};

}  // namespace

Coefficient parse_coefficient(std::string_view text) {
    Cursor cur{text};
    Coefficient out;
    if (cur.at_end()) throw ParseError("empty coefficient");
    bool first = true;
    while (!cur.at_end()) {
        i64 sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (!cur.eat('+') && !first)
            throw ParseError("expected + or - between monomials");
        first = false;
        i64 c = 1;
        int qe = 0, ad = 0;
        bool any = false;
        do {
            char ch = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                c *= cur.integer(false);
            } else if (ch == 'q' || ch == 'a') {
                ++cur.i;
                int e = 1;
                if (cur.eat('^')) e = static_cast<int>(cur.integer(true));
                (ch == 'q' ? qe : ad) += e;
            } else {
                throw ParseError(std::string("unexpected character '") + ch + "'");
            }
            any = true;
        } while (cur.eat('*'));
        if (!any) throw ParseError("empty monomial");
        out += Coefficient::monomial(sign * c, qe, ad);
    }
    return out;
}

}  // namespace prefund
