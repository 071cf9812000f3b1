// Higher root vectors E_{k delta - alpha_i}, the currents psi+_{i,k} and l-weights.
#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "prefund/rootvec.hpp"

namespace prefund {

struct DomainViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotEigenvector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class El>
El divide_elementwise(const El& v, const LaurentPoly& den) {
    El out;
    for (const auto& [key, c] : v.terms()) out.add(key, exact_divide(c, den));
    return out;
}

// E_{k delta - alpha_i} for k >= 1 via
//   -[2] E_{(k+1)} = E_1 e_i E_k - q^-2 e_i E_1 E_k - E_k E_1 e_i + q^-2 E_k e_i E_1,
// memoized on basis vectors.
template <class Mod>
class RootVectorTower {
public:
    using El = typename Mod::Element;
    using Key = typename Mod::Key;
    using Level1 = std::function<El(const Key&)>;

    RootVectorTower(const Mod& m, int i, Level1 level1) : m_(m), i_(i), level1_(std::move(level1)) {}

    int node() const { return i_; }
    const Mod& module() const { return m_; }

    El E(int k, const El& v) {
        if (k < 1) throw std::invalid_argument("root vector level must be >= 1");
        El out;
        for (const auto& [key, c] : v.terms()) out += basis(k, key).scaled(c);
        return out;
    }

    std::size_t cache_size() const {
        std::lock_guard lock(mu_);
        return memo_.size();
    }

private:
    const Mod& m_;
    int i_;
    Level1 level1_;
    mutable std::mutex mu_;
    std::map<std::pair<int, Key>, El> memo_;

    El basis(int k, const Key& b) {
        {
            std::lock_guard lock(mu_);
            auto it = memo_.find({k, b});
            if (it != memo_.end()) return it->second;
        }
        El result;
        if (k == 1) {
            result = level1_(b);
        } else {
            const El v(b, Coefficient::one());
            const Coefficient qm2 = Coefficient::monomial(1, -2, 0);
            const El ek = E(k - 1, v);
            El x = E(1, m_.apply_e(i_, ek));
            x -= m_.apply_e(i_, E(1, ek)).scaled(qm2);
            x -= E(k - 1, E(1, m_.apply_e(i_, v)));
            x += E(k - 1, m_.apply_e(i_, E(1, v))).scaled(qm2);
            result = divide_elementwise(x, q_integer(2)).scaled(Coefficient::monomial(-1, 0, 0));
        }
        std::lock_guard lock(mu_);
        memo_.emplace(std::make_pair(k, b), result);
        return result;
    }
};

// psi+_{i,k} v = o(i)^k (q - q^-1) k_i (E_k e_i - q^-2 e_i E_k) v
template <class Mod>
typename Mod::Element psi_plus(RootVectorTower<Mod>& tower, int sign, int k, const typename Mod::Element& v) {
    const Mod& m = tower.module();
    const int i = tower.node();
    auto inner = tower.E(k, m.apply_e(i, v));
    inner -= m.apply_e(i, tower.E(k, v)).scaled(Coefficient::monomial(1, -2, 0));
    const int s = (k % 2 == 1) ? sign : 1;
    return m.apply_k(i, 1, inner).scaled(Coefficient(q_minus_qinv()) * Coefficient::monomial(s, 0, 0));
}

// x-_{i,k} v = -o(i)^k k_i E_k v
template <class Mod>
typename Mod::Element x_minus(RootVectorTower<Mod>& tower, int sign, int k, const typename Mod::Element& v) {
    const int s = (k % 2 == 1) ? -sign : -1;
    return tower.module().apply_k(tower.node(), 1, tower.E(k, v)).scaled(Coefficient::monomial(s, 0, 0));
}

enum class ClosedForm { Trivial, Polynomial, Geometric, None };
std::string to_string(ClosedForm f);

struct EllWeight {
    AffineType type;
    // psi[i][k] for i in I (index 0 unused), k = 0..K
    std::vector<std::vector<Coefficient>> psi;
    std::vector<ClosedForm> form;
    Coefficient gamma;  // a * c_r
    std::string report() const;
};

// c_r of the prefundamental identification.
Coefficient c_r(const RootSystemData& rs);
ClosedForm classify(const std::vector<Coefficient>& series, const Coefficient& gamma);

// Level-one data for the lattice module: full operators in type A unless leading_only is set.
RootVectorTower<LatticeModule> lattice_tower(const LatticeModule& m, int i, bool leading_only = false);

EllWeight ell_weight_of_vacuum(const LatticeModule& m, int K, bool leading_only = false);
ModuleElement x_minus_on_vacuum(const LatticeModule& m, int i, int k);

}  // namespace prefund
