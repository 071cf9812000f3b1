// Finite formal linear combinations with Coefficient scalars.
#pragma once

#include <map>
#include <utility>

#include "prefund/coeffring.hpp"

namespace prefund {

template <class Key>
class SparseVec {
public:
    using Map = std::map<Key, Coefficient>;

    SparseVec() = default;
    SparseVec(const Key& k, const Coefficient& c) { add(k, c); }

    void add(const Key& k, const Coefficient& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    SparseVec& operator+=(const SparseVec& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }

    SparseVec scaled(const Coefficient& s) const {
        SparseVec out;
        if (s.is_zero()) return out;
        for (const auto& [k, c] : t_) out.add(k, c * s);
        return out;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }
    Coefficient coeff(const Key& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Coefficient{} : it->second;
    }
    friend bool operator==(const SparseVec&, const SparseVec&) = default;

private:
    Map t_;
};

}  // namespace prefund
