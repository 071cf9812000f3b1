// Level-one affine root vectors E_{delta - alpha_i} as operator expressions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prefund/opalg.hpp"

namespace prefund {

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Leading word with its scalar; the zero operator when i != r.
OperatorExpr leading_E(const AffineType& t, int i);

// The full expression of E_{delta - alpha_r} in type A_n^(1).
OperatorExpr full_E_typeA(int n, int r);
// x(n, r) before the rotation i -> i + r mod (n+1).
OperatorExpr x_word_typeA(int n, int r);

enum class Provenance { LeadingOnly, Recursion, Hardcoded };
std::string to_string(Provenance p);

struct HardcodedE {
    OperatorExpr expr;
    // false: only the leading word is stored; the remaining words all end in a letter of I.
    bool complete = false;
};
HardcodedE hardcoded_full_E(const AffineType& t);

struct CatalogEntry {
    int i = 0;
    OperatorExpr leading;
    std::optional<OperatorExpr> full;
    Provenance provenance = Provenance::LeadingOnly;
};
std::vector<CatalogEntry> root_vector_catalog(const AffineType& t);
std::string catalog_dump(const AffineType& t);

// Scalars of E_{delta-alpha_r} on 1 and on f_r, against f_r and (f_r^2) = f_r * f_r.
Coefficient level_one_on_vacuum(const AffineType& t);
Coefficient level_one_on_f(const AffineType& t);

std::vector<CheckReport> verified_domain_check(const AffineType& t);

}  // namespace prefund
