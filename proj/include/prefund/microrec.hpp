// Rank-one models of A_1^(1) and the string recurrence on span{1, f_r, f_r^2}.
#pragma once

#include <string>
#include <vector>

#include "prefund/drinfeld.hpp"

namespace prefund {

// Basis f^m, weight -m alpha.
using StringElement = SparseVec<int>;

enum class Model { Plus, Minus };
std::string to_string(Model m);

// A_1^(1) acting on k[f]: e_1 is the derivation f^m -> q^{-m+1}[m] f^{m-1};
// e_0 multiplies by a f, twisted by q^{-(theta, beta)} in the plus model.
class RankOneModule {
public:
    using Key = int;
    using Element = StringElement;

    explicit RankOneModule(Model model) : model_(model) {}
    Model model() const { return model_; }

    StringElement apply_e(int i, const StringElement& v) const;
    StringElement apply_k(int i, int exponent, const StringElement& v) const;
    StringElement power(int m) const { return StringElement(m, Coefficient::one()); }

private:
    Model model_;
};

StringElement rank_one_apply(const std::string& op, Model model, const StringElement& v);
std::string to_string(const StringElement& v);

// Serre relations on f^m for m <= max_m, plus the four-line expansions of each Serre word.
std::vector<CheckReport> rank_one_serre_check(int max_m = 20);

struct StringModelData {
    Model model = Model::Plus;
    int r = 1;
    Coefficient E1;  // E_{delta-alpha_r} 1 = E1 f_r
    Coefficient E2;  // E_{delta-alpha_r} f_r = E2 f_r^2
};
StringModelData string_model_data(const AffineType& t, Model model);

// The span {1, f_r, f_r^2} with e_r and k_r only; leaving the span is an error.
class StringSpan {
public:
    using Key = int;
    using Element = StringElement;

    explicit StringSpan(StringModelData d) : d_(std::move(d)) {}
    const StringModelData& data() const { return d_; }

    StringElement apply_e(int i, const StringElement& v) const;
    StringElement apply_k(int i, int exponent, const StringElement& v) const;
    StringElement level_one(int m) const;

private:
    StringModelData d_;
};

std::vector<Coefficient> string_recurrence(const AffineType& t, Model model, int K);
// Closed forms of gamma_k for the minus model.
Coefficient negative_gamma_closed_form(const AffineType& t, int k);

struct NegativeEllWeight {
    std::vector<Coefficient> gamma;  // gamma[k], index 0 unused
    std::vector<Coefficient> psi;    // psi[0] = 1
    Coefficient expected_ratio;      // -a c_r
    ClosedForm form = ClosedForm::None;
};
NegativeEllWeight negative_ell_weight(const AffineType& t, int K);

// Rank-one, minus model, computed from the actual e_0 and e_1.
std::vector<Coefficient> rank_one_gamma(Model model, int K);
std::vector<Coefficient> rank_one_psi(Model model, int K, int sign = 1);

}  // namespace prefund
