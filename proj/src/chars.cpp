#include "prefund/chars.hpp"

#include <stdexcept>

namespace prefund {

GradedDimension module_character(const AffineType& t, const RootVec& bound) {
    LatticeModule m(t);
    GradedDimension g;
    m.for_each_basis(bound, [&](const Datum& c) { ++g[m.wt(c)]; });
    return g;
}

GradedDimension product_character(const std::vector<RootVec>& roots, const std::vector<int>& exponents,
                                  const RootVec& bound) {
    if (roots.size() != exponents.size()) throw std::invalid_argument("one exponent per root");
    const std::size_t dim = bound.size();
    std::vector<std::size_t> stride(dim, 1);
    std::size_t cells = 1;
    for (std::size_t j = 0; j < dim; ++j) {
        if (bound[j] < 0) return {};
        stride[j] = cells;
        cells *= static_cast<std::size_t>(bound[j] + 1);
    }
    // Dense table indexed by depth d = -weight, filled by repeated geometric-series passes.
    std::vector<i64> g(cells, 0);
    g[0] = 1;
    std::vector<int> depth(dim);
    for (std::size_t b = 0; b < roots.size(); ++b) {
        const RootVec& beta = roots[b];
        if (exponents[b] < 1) throw std::invalid_argument("exponents must be positive");
        std::size_t shift = 0;
        bool fits = true;
        for (std::size_t j = 0; j < dim; ++j) {
            if (beta[j] > bound[j]) fits = false;
            shift += static_cast<std::size_t>(beta[j]) * stride[j];
        }
        if (!fits) continue;
        for (int pass = 0; pass < exponents[b]; ++pass) {
            // Increasing index order visits d - beta before d.
            for (std::size_t idx = 0; idx < cells; ++idx) {
                std::size_t rest = idx;
                bool ok = true;
                for (std::size_t j = dim; j-- > 0;) {
                    depth[j] = static_cast<int>(rest / stride[j]);
                    rest %= stride[j];
                    if (depth[j] < beta[j]) ok = false;
                }
                if (ok) g[idx] += g[idx - shift];
            }
        }
    }
    GradedDimension out;
    for (std::size_t idx = 0; idx < cells; ++idx) {
        if (g[idx] == 0) continue;
        RootVec w(dim);
        std::size_t rest = idx;
        for (std::size_t j = dim; j-- > 0;) {
            w[j] = -static_cast<int>(rest / stride[j]);
            rest %= stride[j];
        }
        out[w] = g[idx];
    }
    return out;
}

std::string character_csv(const GradedDimension& g) {
    std::string s;
    for (const auto& [w, d] : g) {
        for (std::size_t j = 0; j < w.size(); ++j) s += std::to_string(w[j]) + (j + 1 < w.size() ? "," : "");
        s += ";" + std::to_string(d) + "\n";
    }
    return s;
}

}  // namespace prefund
