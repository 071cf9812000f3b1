#include "prefund/opalg.hpp"

#include <random>
#include <sstream>

namespace prefund {

OperatorExpr OperatorExpr::scalar(const Coefficient& c) {
    OperatorExpr x;
    x.t_.add(Word{}, c);
    return x;
}

OperatorExpr OperatorExpr::e(int i) {
    OperatorExpr x;
    x.t_.add(Word{Letter{'e', i, 1}}, Coefficient::one());
    return x;
}

OperatorExpr OperatorExpr::k(int i, int exp) {
    if (exp != 1 && exp != -1) throw std::invalid_argument("k exponent must be +-1");
    OperatorExpr x;
    x.t_.add(Word{Letter{'k', i, exp}}, Coefficient::one());
    return x;
}

OperatorExpr OperatorExpr::word(const std::vector<int>& e_letters, const Coefficient& c) {
    Word w;
    for (int i : e_letters) w.push_back(Letter{'e', i, 1});
    OperatorExpr x;
    x.t_.add(w, c);
    return x;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
    t_ += o.t_;
    return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
    t_ -= o.t_;
    return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    OperatorExpr x;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            x.t_.add(w, ca * cb);
        }
    return x;
}

OperatorExpr operator*(const Coefficient& c, const OperatorExpr& a) {
    OperatorExpr x;
    x.t_ = a.t_.scaled(c);
    return x;
}

OperatorExpr OperatorExpr::pow(int m) const {
    OperatorExpr x = identity();
    for (int k = 0; k < m; ++k) x = x * *this;
    return x;
}

OperatorExpr OperatorExpr::substitute(const std::function<OperatorExpr(int)>& image) const {
    OperatorExpr out;
    for (const auto& [w, c] : terms()) {
        OperatorExpr acc = scalar(c);
        for (const auto& l : w) acc = acc * (l.kind == 'e' ? image(l.index) : k(l.index, l.exp));
        out += acc;
    }
    return out;
}

OperatorExpr OperatorExpr::relabel(const std::function<int(int)>& f) const {
    OperatorExpr out;
    for (const auto& [w, c] : terms()) {
        Word v = w;
        for (auto& l : v) l.index = f(l.index);
        out.t_.add(v, c);
    }
    return out;
}

OperatorExpr q_bracket(const OperatorExpr& x, const OperatorExpr& y) {
    return x * y - Coefficient::monomial(1, -1, 0) * (y * x);
}

std::string to_string(const OperatorExpr& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        std::string coeff = to_string(c);
        if (c.monomial_count() > 1) coeff = "(" + coeff + ")";
        std::string word;
        for (const auto& l : w) {
            if (!word.empty()) word += '.';
            word += l.kind + std::to_string(l.index);
            if (l.kind == 'k' && l.exp == -1) word += "^-1";
        }
        s += coeff + " * " + (word.empty() ? "1" : word);
    }
    return s;
}

OperatorExpr parse_operator(const std::string& text) {
    OperatorExpr out;
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '(') ++depth;
        if (text[k] == ')') --depth;
        if (depth == 0 && text.compare(k, 3, " + ") == 0) {
            parts.push_back(text.substr(start, k - start));
            start = k + 3;
        }
    }
    parts.push_back(text.substr(start));
    if (parts.size() == 1) {
        std::string t = parts[0];
        t.erase(0, t.find_first_not_of(' '));
        t.erase(t.find_last_not_of(' ') + 1);
        if (t == "0") return out;
    }
    for (auto part : parts) {
        auto mark = part.rfind(" * ");
        if (mark == std::string::npos) throw ParseError("operator term needs '<coeff> * <word>': " + part);
        std::string coeff = part.substr(0, mark), word = part.substr(mark + 3);
        coeff.erase(0, coeff.find_first_not_of(' '));
        if (!coeff.empty() && coeff.front() == '(') {
            auto close = coeff.rfind(')');
            if (close == std::string::npos) throw ParseError("unbalanced parenthesis: " + part);
            coeff = coeff.substr(1, close - 1);
        }
        word.erase(0, word.find_first_not_of(' '));
        word.erase(word.find_last_not_of(' ') + 1);
        OperatorExpr w = OperatorExpr::identity();
        if (word != "1") {
            std::stringstream in(word);
            std::string tok;
            while (std::getline(in, tok, '.')) {
                if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'k')) throw ParseError("bad letter: " + tok);
                int exp = 1;
                auto caret = tok.find('^');
                if (caret != std::string::npos) {
                    exp = std::stoi(tok.substr(caret + 1));
                    tok = tok.substr(0, caret);
                }
                int idx = std::stoi(tok.substr(1));
                if (tok[0] == 'e' && exp != 1) throw ParseError("e letters take no exponent: " + tok);
                w = w * (tok[0] == 'e' ? OperatorExpr::e(idx) : OperatorExpr::k(idx, exp));
            }
        }
        out += parse_coefficient(coeff) * w;
    }
    return out;
}

OperatorExpr serre_expr(const RootSystemData& rs, int i, int j) {
    if (i == j) throw std::invalid_argument("serre_expr needs i != j");
    const int top = 1 - rs.cartan(i, j);
    OperatorExpr ei = OperatorExpr::e(i), ej = OperatorExpr::e(j);
    OperatorExpr x;
    for (int m = 0; m <= top; ++m) {
        Coefficient c(q_binomial(top, m));
        if (m % 2) c = -c;
        x += c * (ei.pow(top - m) * ej * ei.pow(m));
    }
    return x;
}

std::vector<NamedRelation> relation_suite(const RootSystemData& rs) {
    const int n = rs.n();
    std::vector<NamedRelation> out;
    for (int i = 0; i <= n; ++i) {
        out.push_back({"kinv(" + std::to_string(i) + ")",
                       OperatorExpr::k(i) * OperatorExpr::k(i, -1) - OperatorExpr::identity()});
        for (int j = i + 1; j <= n; ++j)
            out.push_back({"kk(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           OperatorExpr::k(i) * OperatorExpr::k(j) - OperatorExpr::k(j) * OperatorExpr::k(i)});
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            out.push_back({"kek(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           OperatorExpr::k(i) * OperatorExpr::e(j) * OperatorExpr::k(i, -1) -
                               Coefficient::monomial(1, rs.cartan(i, j), 0) * OperatorExpr::e(j)});
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j)
                out.push_back({"serre(" + std::to_string(i) + "," + std::to_string(j) + ")", serre_expr(rs, i, j)});
    OperatorExpr central = OperatorExpr::k(0);
    for (int i = 1; i <= n; ++i) central = central * OperatorExpr::k(i).pow(rs.mark(i));
    out.push_back({"central", central - OperatorExpr::identity()});
    return out;
}

std::string CheckReport::line() const {
    std::string s = "CHECK " + name + (pass ? " PASS" : " FAIL");
    if (!detail.empty()) s += " " + detail;
    return s;
}

std::vector<Datum> random_data(const LatticeModule& m, std::size_t count, std::uint64_t seed, int max_entry) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, max_entry);
    std::vector<Datum> out(count, m.vacuum_datum());
    for (auto& d : out)
        for (auto& x : d) x = dist(rng);
    return out;
}

namespace {

std::vector<Datum> test_vectors(const LatticeModule& m, const RootVec& bound, const SweepOptions& opt) {
    auto data = m.enumerate_basis(bound);
    auto extra = random_data(m, opt.extra_random, opt.seed, opt.random_max);
    data.insert(data.end(), extra.begin(), extra.end());
    return data;
}

CheckReport run_one(const NamedRelation& rel, const LatticeModule& m, const std::vector<Datum>& data,
                    const SweepOptions& opt) {
    CheckReport rep;
    rep.name = rel.name;
    rep.checked = data.size();
    auto bad = first_failure(opt.mode, data.size(),
                             [&](std::size_t k) { return !evaluate(rel.expr, m, m.basis(data[k])).is_zero(); });
    if (bad) {
        rep.pass = false;
        rep.detail = "on [" + m.datum_to_string(data[*bad]) +
                     "] -> " + m.element_to_string(evaluate(rel.expr, m, m.basis(data[*bad]))) +
                     " (seed " + std::to_string(opt.seed) + ")";
    }
    return rep;
}

}  // namespace

CheckReport check_identity_on_basis(const std::string& name, const OperatorExpr& x, const LatticeModule& m,
                                    const RootVec& bound, const SweepOptions& opt) {
    return run_one({name, x}, m, test_vectors(m, bound, opt), opt);
}

std::vector<CheckReport> check_relations(const std::vector<NamedRelation>& rels, const LatticeModule& m,
                                         const RootVec& bound, const SweepOptions& opt) {
    const auto data = test_vectors(m, bound, opt);
    std::vector<CheckReport> out;
    for (const auto& rel : rels) out.push_back(run_one(rel, m, data, opt));
    return out;
}

}  // namespace prefund
