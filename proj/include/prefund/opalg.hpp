// Noncommutative operator expressions in e_i and k_i^{+-1}, evaluated on modules.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prefund/coeffring.hpp"
#include "prefund/latticemod.hpp"
#include "prefund/sparsevec.hpp"
#include "prefund/sweep.hpp"

namespace prefund {

struct Letter {
    char kind = 'e';  // 'e' or 'k'
    int index = 0;
    int exp = 1;  // +-1 for k
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Words are written left to right and act right to left.
class OperatorExpr {
public:
    OperatorExpr() = default;
    static OperatorExpr identity() { return scalar(Coefficient::one()); }
    static OperatorExpr scalar(const Coefficient& c);
    static OperatorExpr e(int i);
    static OperatorExpr k(int i, int exp = 1);
    static OperatorExpr word(const std::vector<int>& e_letters, const Coefficient& c = Coefficient::one());

    bool is_zero() const { return t_.is_zero(); }
    const SparseVec<Word>::Map& terms() const { return t_.terms(); }

    OperatorExpr& operator+=(const OperatorExpr& o);
    OperatorExpr& operator-=(const OperatorExpr& o);
    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
    friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
    friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);  // composition
    friend OperatorExpr operator*(const Coefficient& c, const OperatorExpr& a);
    friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

    OperatorExpr pow(int m) const;
    // Replaces each e_i by images[i] (an algebra substitution); k letters are kept.
    OperatorExpr substitute(const std::function<OperatorExpr(int)>& image) const;
    OperatorExpr relabel(const std::function<int(int)>& f) const;

private:
    SparseVec<Word> t_;
};

// [x, y]_q = xy - q^{-1} yx
OperatorExpr q_bracket(const OperatorExpr& x, const OperatorExpr& y);

std::string to_string(const OperatorExpr& x);
OperatorExpr parse_operator(const std::string& s);

// Right-to-left evaluation with suffix sharing. Mod needs Element, apply_e and apply_k.
template <class Mod>
typename Mod::Element evaluate(const OperatorExpr& x, const Mod& m, const typename Mod::Element& v) {
    using El = typename Mod::Element;
    std::map<Word, El> cache;  // reversed-suffix -> image of v
    El out;
    for (const auto& [w, c] : x.terms()) {
        El cur = v;
        Word key;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            key.push_back(*it);
            auto hit = cache.find(key);
            if (hit != cache.end()) {
                cur = hit->second;
                continue;
            }
            cur = it->kind == 'e' ? m.apply_e(it->index, cur) : m.apply_k(it->index, it->exp, cur);
            cache.emplace(key, cur);
        }
        out += cur.scaled(c);
    }
    return out;
}

OperatorExpr serre_expr(const RootSystemData& rs, int i, int j);

struct NamedRelation {
    std::string name;
    OperatorExpr expr;  // must act as zero
};

// Every defining relation among e_i, k_i^{+-1} (0 <= i, j <= n), including the central element.
std::vector<NamedRelation> relation_suite(const RootSystemData& rs);

struct CheckReport {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string detail;  // counterexample on failure
    std::string line() const;
};

struct SweepOptions {
    std::size_t extra_random = 0;
    std::uint64_t seed = 20240611;
    int random_max = 10;
    SweepMode mode = SweepMode::Parallel;
};

std::vector<Datum> random_data(const LatticeModule& m, std::size_t count, std::uint64_t seed, int max_entry);

CheckReport check_identity_on_basis(const std::string& name, const OperatorExpr& x, const LatticeModule& m,
                                    const RootVec& bound, const SweepOptions& opt = {});

// Runs a relation list over one shared set of test vectors.
std::vector<CheckReport> check_relations(const std::vector<NamedRelation>& rels, const LatticeModule& m,
                                         const RootVec& bound, const SweepOptions& opt = {});

}  // namespace prefund
