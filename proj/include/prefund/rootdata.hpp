// Finite and affine root data for A_n^(1) and D_n^(1) at a minuscule node.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prefund {

enum class Family { A, D };

struct AffineType {
    Family family = Family::A;
    int n = 1;
    int r = 1;
    friend bool operator==(const AffineType&, const AffineType&) = default;
};

struct NotReduced : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument for unsupported (family, n, r).
void validate(const AffineType& t);
bool is_supported(const AffineType& t);
std::string to_string(const AffineType& t);
std::vector<AffineType> supported_types(int max_n_a, int min_n_d, int max_n_d);

// Element of the finite root lattice in simple-root coordinates; index k holds alpha_{k+1}.
using RootVec = std::vector<int>;

struct Root {
    std::vector<int> eps;  // n+1 entries (A) or n entries (D)
    RootVec alpha;
    friend bool operator==(const Root&, const Root&) = default;
};

using ReducedWord = std::vector<int>;

class RootSystemData {
public:
    explicit RootSystemData(const AffineType& t);

    const AffineType& type() const { return t_; }
    int n() const { return t_.n; }

    // Affine Cartan matrix, 0 <= i, j <= n.
    int cartan(int i, int j) const { return cartan_[i][j]; }
    int mark(int i) const { return marks_[i]; }
    const RootVec& theta() const { return theta_; }
    RootVec simple(int i) const;  // i in I
    int sign(int i) const { return sign_[i]; }
    void set_sign(const std::vector<int>& o);  // o[1..n]; checks alternation

    int pairing(const RootVec& x, const RootVec& y) const;
    // (alpha_i, x) for 0 <= i <= n, with alpha_0 = -theta on the finite part.
    int pair_simple(int i, const RootVec& x) const;
    RootVec reflect(int i, const RootVec& x) const;

    RootVec eps_to_alpha(const std::vector<int>& eps) const;
    Root root_from_eps(std::vector<int> eps) const;
    std::string label(const Root& b) const;  // e1-e3, e2+e4
    Root parse_root(const std::string& s) const;
    std::size_t eps_dim() const { return t_.family == Family::A ? t_.n + 1 : t_.n; }

    // Diagram automorphism swapping n-1 and n (type D), identity otherwise.
    int sigma(int i) const;

private:
    AffineType t_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> marks_;
    std::vector<int> sign_;
    RootVec theta_;
};

std::vector<Root> positive_roots_wr(const AffineType& t);
ReducedWord reduced_word_wr(const AffineType& t);
std::vector<RootVec> convex_order(const RootSystemData& rs, const ReducedWord& w);

// Lexicographically least word in the commutation class of w.
ReducedWord commutation_normal_form(const RootSystemData& rs, const ReducedWord& w);
bool braid_equivalent(const RootSystemData& rs, const ReducedWord& w1, const ReducedWord& w2);
// Exhaustive search over adjacent commuting swaps; reference for small words.
bool braid_equivalent_bfs(const RootSystemData& rs, const ReducedWord& w1, const ReducedWord& w2);

struct ReadingWords {
    std::vector<std::vector<int>> matrix;  // ragged rows; row t lists its entries left to right
    std::vector<int> row_offset;           // column index of the first entry in each row
    ReducedWord row_word;
    ReducedWord col_word;
};
ReadingWords reading_words(const AffineType& t);

std::string word_to_string(const ReducedWord& w);
ReducedWord parse_word(const std::string& s);

}  // namespace prefund
