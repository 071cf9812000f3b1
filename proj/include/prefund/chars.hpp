// Graded characters over the root lattice.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "prefund/latticemod.hpp"

namespace prefund {

// weight -> dimension; weights are nonpositive combinations of simple roots, zero entries omitted.
using GradedDimension = std::map<RootVec, i64>;

GradedDimension module_character(const AffineType& t, const RootVec& bound);
// Coefficients of prod (1 - e^{-beta})^{-m_beta} inside the box -bound <= weight <= 0.
GradedDimension product_character(const std::vector<RootVec>& roots, const std::vector<int>& exponents,
                                  const RootVec& bound);
std::string character_csv(const GradedDimension& g);

}  // namespace prefund
