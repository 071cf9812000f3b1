// Exact arithmetic in Z[q, q^-1][a].
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prefund {

using i64 = std::int64_t;

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse Laurent polynomial in q; terms sorted by exponent, no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<int, i64>;

    LaurentPoly() = default;
    static LaurentPoly monomial(i64 c, int e);
    static LaurentPoly constant(i64 c) { return monomial(c, 0); }
    static LaurentPoly q_power(int e) { return monomial(1, e); }

    bool is_zero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }
    i64 coeff(int e) const;
    int min_exp() const { return t_.front().first; }
    int max_exp() const { return t_.back().first; }
    i64 at_one() const;
    LaurentPoly bar() const;  // q -> q^-1
    LaurentPoly shifted(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend auto operator<=>(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::vector<Term> t_;
    friend class Coefficient;
    static LaurentPoly from_sorted(std::vector<Term> t);
};

// Polynomial in a with LaurentPoly coefficients; components sorted by a-degree.
class Coefficient {
public:
    using Component = std::pair<int, LaurentPoly>;

    Coefficient() = default;
    Coefficient(const LaurentPoly& p) : Coefficient(from(0, p)) {}  // NOLINT: implicit embedding
    static Coefficient from(int adeg, const LaurentPoly& p);
    static Coefficient monomial(i64 c, int qexp, int adeg) { return from(adeg, LaurentPoly::monomial(c, qexp)); }
    static Coefficient one() { return monomial(1, 0, 0); }

    bool is_zero() const { return t_.empty(); }
    const std::vector<Component>& components() const { return t_; }
    LaurentPoly component(int adeg) const;
    std::size_t monomial_count() const;
    Coefficient bar() const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator-(const Coefficient& a);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient&, const Coefficient&) = default;
    friend auto operator<=>(const Coefficient&, const Coefficient&) = default;

private:
    std::vector<Component> t_;
};

LaurentPoly q_integer(int m);
LaurentPoly q_binomial(int m, int k);

// Quotient of num by den; throws NotDivisible when the remainder is nonzero.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);
Coefficient exact_divide(const Coefficient& num, const LaurentPoly& den);

std::string to_string(const LaurentPoly& p);
std::string to_string(const Coefficient& c);
Coefficient parse_coefficient(std::string_view s);

// q - q^-1, which shows up in every current.
inline LaurentPoly q_minus_qinv() { return LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1); }

}  // namespace prefund
