// The combinatorial module U(n,r)_a on Lusztig data.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prefund/coeffring.hpp"
#include "prefund/rootdata.hpp"
#include "prefund/sparsevec.hpp"

namespace prefund {

// Multiplicities indexed by position in LatticeModule::roots().
using Datum = std::vector<int>;
using ModuleElement = SparseVec<Datum>;

class LatticeModule {
public:
    using Key = Datum;
    using Element = ModuleElement;

    explicit LatticeModule(const AffineType& t);

    const AffineType& type() const { return rs_.type(); }
    const RootSystemData& rs() const { return rs_; }
    // Delta+(w_r) in the convex order of reduced_word_wr.
    const std::vector<Root>& roots() const { return roots_; }
    std::size_t rank() const { return roots_.size(); }
    int index_of(const Root& b) const;
    int alpha_r_index() const { return alpha_r_; }
    int theta_index() const { return theta_; }

    Datum vacuum_datum() const { return Datum(roots_.size(), 0); }
    ModuleElement vacuum() const { return basis(vacuum_datum()); }
    ModuleElement basis(const Datum& c) const { return ModuleElement(c, Coefficient::one()); }
    // m copies of alpha_r.
    Datum string_datum(int m) const;
    bool in_cone(const Datum& c) const;

    RootVec wt(const Datum& c) const;
    int height(const Datum& c) const;

    ModuleElement apply_e(int i, const ModuleElement& v) const;
    ModuleElement apply_k(int i, int exponent, const ModuleElement& v) const;
    // Adds s * e_i[c] into out.
    void apply_e_basis(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const;

    std::vector<Datum> enumerate_basis(const RootVec& bound) const;
    void for_each_basis(const RootVec& bound, const std::function<void(const Datum&)>& f) const;
    RootVec box(int h) const { return RootVec(rs_.n(), h); }

    std::string datum_to_string(const Datum& c) const;
    Datum parse_datum(const std::string& s) const;
    std::string element_to_string(const ModuleElement& v) const;
    ModuleElement parse_element(const std::string& s) const;

    // Test hook: shifts the e_0 exponent by the alpha_r multiplicity so that relations break.
    void set_perturbation(bool on) { perturb_ = on; }

private:
    RootSystemData rs_;
    std::vector<Root> roots_;
    int alpha_r_ = -1;
    int theta_ = -1;
    bool perturb_ = false;
    // Positions of e_i + e_j and e_i - e_j. For D with r = n-1 the labels are those of r = n.
    std::vector<std::vector<int>> plus_;
    std::vector<std::vector<int>> minus_;  // e_i - e_j

    void e_type_a(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const;
    void e_type_d1(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const;
    void e_type_dn(int i, const Datum& c, const Coefficient& s, ModuleElement& out) const;
};

}  // namespace prefund
