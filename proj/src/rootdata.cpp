#include "prefund/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace prefund {

void validate(const AffineType& t) {
    if (!is_supported(t)) throw std::invalid_argument("unsupported type " + to_string(t));
}

bool is_supported(const AffineType& t) {
    if (t.family == Family::A) return t.n >= 1 && t.r >= 1 && t.r <= t.n;
    return t.n >= 4 && (t.r == 1 || t.r == t.n - 1 || t.r == t.n);
}

std::string to_string(const AffineType& t) {
    return std::string(t.family == Family::A ? "A" : "D") + std::to_string(t.n) + ",r=" + std::to_string(t.r);
}

std::vector<AffineType> supported_types(int max_n_a, int min_n_d, int max_n_d) {
    std::vector<AffineType> out;
    for (int n = 1; n <= max_n_a; ++n)
        for (int r = 1; r <= n; ++r) out.push_back({Family::A, n, r});
    for (int n = std::max(4, min_n_d); n <= max_n_d; ++n)
        for (int r : {1, n - 1, n}) out.push_back({Family::D, n, r});
    return out;
}

RootSystemData::RootSystemData(const AffineType& t) : t_(t) {
    validate(t);
    const int n = t.n;
    cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) cartan_[i][i] = 2;
    auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
    if (t.family == Family::A) {
        for (int i = 1; i < n; ++i) link(i, i + 1);
        theta_.assign(n, 1);
    } else {
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 2, n);
        theta_.assign(n, 2);
        theta_[0] = theta_[n - 2] = theta_[n - 1] = 1;
    }
    // alpha_0 = delta - theta fixes row and column 0.
    for (int j = 1; j <= n; ++j) {
        int v = -pairing(theta_, simple(j));
        cartan_[0][j] = cartan_[j][0] = v;
    }
    marks_.assign(n + 1, 1);
    for (int i = 1; i <= n; ++i) marks_[i] = theta_[i - 1];

    std::vector<int> o(n + 1, 0);
    for (int i = 1; i <= n; ++i) o[i] = (i % 2 == 1) ? 1 : -1;
    if (t.family == Family::D) o[n] = o[n - 1];
    set_sign(o);
}

RootVec RootSystemData::simple(int i) const {
    RootVec v(t_.n, 0);
    v.at(i - 1) = 1;
    return v;
}

void RootSystemData::set_sign(const std::vector<int>& o) {
    if (static_cast<int>(o.size()) != t_.n + 1) throw std::invalid_argument("sign map needs n+1 entries");
    for (int i = 1; i <= t_.n; ++i) {
        if (o[i] != 1 && o[i] != -1) throw std::invalid_argument("sign map values must be +-1");
        for (int j = 1; j <= t_.n; ++j)
            if (cartan_[i][j] < 0 && o[i] != -o[j])
                throw std::invalid_argument("sign map must alternate on adjacent nodes");
    }
    sign_ = o;
}

int RootSystemData::pairing(const RootVec& x, const RootVec& y) const {
    int s = 0;
    for (int i = 0; i < t_.n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < t_.n; ++j) s += x[i] * cartan_[i + 1][j + 1] * y[j];
    }
    return s;
}

int RootSystemData::pair_simple(int i, const RootVec& x) const {
    if (i == 0) return -pairing(theta_, x);
    int s = 0;
    for (int j = 0; j < t_.n; ++j) s += cartan_[i][j + 1] * x[j];
    return s;
}

RootVec RootSystemData::reflect(int i, const RootVec& x) const {
    RootVec y = x;
    y[i - 1] -= pair_simple(i, x);
    return y;
}

RootVec RootSystemData::eps_to_alpha(const std::vector<int>& eps) const {
    const int n = t_.n;
    if (eps.size() != eps_dim()) throw std::invalid_argument("wrong epsilon dimension");
    RootVec a(n, 0);
    if (t_.family == Family::A) {
        if (std::accumulate(eps.begin(), eps.end(), 0) != 0)
            throw std::invalid_argument("not in the type A root lattice");
        int s = 0;
        for (int k = 0; k < n; ++k) a[k] = (s += eps[k]);
        return a;
    }
    int s = 0;
    for (int k = 0; k < n - 2; ++k) a[k] = (s += eps[k]);
    const int head = s + eps[n - 2];
    if ((head - eps[n - 1]) % 2 != 0) throw std::invalid_argument("not in the type D root lattice");
    a[n - 2] = (head - eps[n - 1]) / 2;
    a[n - 1] = (head + eps[n - 1]) / 2;
    return a;
}

Root RootSystemData::root_from_eps(std::vector<int> eps) const {
    Root b;
    b.alpha = eps_to_alpha(eps);
    b.eps = std::move(eps);
    return b;
}

std::string RootSystemData::label(const Root& b) const {
    std::vector<int> idx;
    for (std::size_t k = 0; k < b.eps.size(); ++k)
        if (b.eps[k] != 0) idx.push_back(static_cast<int>(k));
    if (idx.size() != 2 || b.eps[idx[0]] != 1) throw std::invalid_argument("root has no two-index label");
    return "e" + std::to_string(idx[0] + 1) + (b.eps[idx[1]] > 0 ? "+" : "-") + "e" + std::to_string(idx[1] + 1);
}

Root RootSystemData::parse_root(const std::string& s) const {
    int i = 0, j = 0;
    char op = 0;
    std::istringstream in(s);
    char e1 = 0, e2 = 0;
    if (!(in >> e1 >> i >> op >> e2 >> j) || e1 != 'e' || e2 != 'e' || (op != '+' && op != '-'))
        throw std::invalid_argument("bad root label: " + s);
    std::vector<int> eps(eps_dim(), 0);
    if (i < 1 || j < 1 || i == j || i > static_cast<int>(eps.size()) || j > static_cast<int>(eps.size()))
        throw std::invalid_argument("bad root indices: " + s);
    eps[i - 1] += 1;
    eps[j - 1] += op == '+' ? 1 : -1;
    return root_from_eps(eps);
}

int RootSystemData::sigma(int i) const {
    if (t_.family != Family::D) return i;
    if (i == t_.n) return t_.n - 1;
    if (i == t_.n - 1) return t_.n;
    return i;
}

std::vector<Root> positive_roots_wr(const AffineType& t) {
    RootSystemData rs(t);
    const int n = t.n;
    std::vector<Root> out;
    auto add = [&](int i, int j, int sj) {
        std::vector<int> eps(rs.eps_dim(), 0);
        eps[i - 1] = 1;
        eps[j - 1] = sj;
        out.push_back(rs.root_from_eps(eps));
    };
    if (t.family == Family::A) {
        for (int i = 1; i <= t.r; ++i)
            for (int j = t.r + 1; j <= n + 1; ++j) add(i, j, -1);
    } else if (t.r == 1) {
        for (int i = 2; i <= n; ++i) add(1, i, -1);
        for (int i = 2; i <= n; ++i) add(1, i, +1);
    } else {
        // r = n uses e_i + e_j; r = n-1 flips the sign of e_n.
        const int sn = t.r == n ? 1 : -1;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) add(i, j, j == n ? sn : 1);
    }
    return out;
}

ReducedWord reduced_word_wr(const AffineType& t) {
    validate(t);
    const int n = t.n;
    ReducedWord w;
    if (t.family == Family::A) {
        for (int k = 0; k < t.r; ++k)
            for (int x = t.r - k; x <= n - k; ++x) w.push_back(x);
        return w;
    }
    if (t.r == 1) {
        for (int x = 1; x <= n; ++x) w.push_back(x);
        for (int x = n - 2; x >= 1; --x) w.push_back(x);
        return w;
    }
    for (int k = 1; k <= n - 1; ++k) {
        if (k % 2 == 1) {
            w.push_back(n);
            for (int x = n - 2; x >= k; --x) w.push_back(x);
        } else {
            for (int x = n - 1; x >= k; --x) w.push_back(x);
        }
    }
    if (t.r == n - 1) {
        RootSystemData rs(t);
        for (int& x : w) x = rs.sigma(x);
    }
    return w;
}

std::vector<RootVec> convex_order(const RootSystemData& rs, const ReducedWord& w) {
    std::vector<RootVec> out;
    std::set<RootVec> seen;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] < 1 || w[k] > rs.n()) throw std::invalid_argument("letter out of range");
        RootVec b = rs.simple(w[k]);
        for (std::size_t j = k; j-- > 0;) b = rs.reflect(w[j], b);
        const bool positive = std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
        if (!positive || !seen.insert(b).second)
            throw NotReduced("word " + word_to_string(w) + " is not reduced at position " + std::to_string(k + 1));
        out.push_back(std::move(b));
    }
    return out;
}

ReducedWord commutation_normal_form(const RootSystemData& rs, const ReducedWord& w) {
    std::vector<int> rest = w;
    ReducedWord out;
    out.reserve(w.size());
    while (!rest.empty()) {
        std::size_t best = rest.size();
        for (std::size_t p = 0; p < rest.size(); ++p) {
            bool free = true;
            for (std::size_t j = 0; j < p && free; ++j) free = rs.cartan(rest[j], rest[p]) == 0;
            if (free && (best == rest.size() || rest[p] < rest[best])) best = p;
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

bool braid_equivalent(const RootSystemData& rs, const ReducedWord& w1, const ReducedWord& w2) {
    if (w1.size() != w2.size()) return false;
    return commutation_normal_form(rs, w1) == commutation_normal_form(rs, w2);
}

bool braid_equivalent_bfs(const RootSystemData& rs, const ReducedWord& w1, const ReducedWord& w2) {
    if (w1.size() != w2.size()) return false;
    std::set<ReducedWord> seen{w1};
    std::deque<ReducedWord> todo{w1};
    constexpr std::size_t kLimit = 4'000'000;
    while (!todo.empty()) {
        ReducedWord w = std::move(todo.front());
        todo.pop_front();
        if (w == w2) return true;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (rs.cartan(w[k], w[k + 1]) != 0) continue;
            ReducedWord v = w;
            std::swap(v[k], v[k + 1]);
            if (seen.insert(v).second) todo.push_back(std::move(v));
        }
        if (seen.size() > kLimit) throw std::runtime_error("braid search exceeded its node limit");
    }
    return false;
}

ReadingWords reading_words(const AffineType& t) {
    validate(t);
    const int n = t.n;
    ReadingWords rw;
    if (t.family == Family::A) {
        const int width = n - t.r + 1;
        for (int row = 0; row < t.r; ++row) {
            std::vector<int> entries;
            for (int s = 0; s < width; ++s) entries.push_back(t.r - row + s);
            rw.matrix.push_back(entries);
            rw.row_offset.push_back(0);
        }
    } else if (t.r == 1) {
        rw.matrix.push_back(reduced_word_wr(t));
        rw.row_offset.push_back(0);
    } else {
        RootSystemData rs(t);
        for (int row = 0; row < n - 1; ++row) {
            std::vector<int> entries{row % 2 == 0 ? n : n - 1};
            for (int x = n - 2; x >= row + 1; --x) entries.push_back(x);
            if (t.r == n - 1)
                for (int& x : entries) x = rs.sigma(x);
            rw.matrix.push_back(entries);
            rw.row_offset.push_back(row);
        }
    }
    for (const auto& row : rw.matrix) rw.row_word.insert(rw.row_word.end(), row.begin(), row.end());
    if (t.family == Family::D && t.r == 1) {
        // Single-row layout: the second reading exchanges the commuting pair n-1, n.
        rw.col_word = rw.row_word;
        std::swap(rw.col_word[n - 2], rw.col_word[n - 1]);
        return rw;
    }
    int ncols = 0;
    for (std::size_t row = 0; row < rw.matrix.size(); ++row)
        ncols = std::max(ncols, rw.row_offset[row] + static_cast<int>(rw.matrix[row].size()));
    for (int col = 0; col < ncols; ++col)
        for (std::size_t row = 0; row < rw.matrix.size(); ++row) {
            const int k = col - rw.row_offset[row];
            if (k >= 0 && k < static_cast<int>(rw.matrix[row].size())) rw.col_word.push_back(rw.matrix[row][k]);
        }
    return rw;
}

std::string word_to_string(const ReducedWord& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(w[k]);
    }
    return s;
}

ReducedWord parse_word(const std::string& s) {
    ReducedWord w;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) w.push_back(std::stoi(tok));
    return w;
}

}  // namespace prefund
