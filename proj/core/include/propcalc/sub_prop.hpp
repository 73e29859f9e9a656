#pragma once

#include "propcalc/prop.hpp"

namespace propcalc {

// Prop structure restricted to a family of subcomplexes of an ambient prop's
// components. Structure maps compose in the ambient prop and are re-expressed
// in the sub basis; closure under composition is asserted at runtime.
class SubProp : public Prop {
public:
    SubProp(PropPtr ambient, const std::map<Biarity, std::vector<SparseVec>>& spans,
            BiarityBound bound, const std::string& label_prefix);

    const PropPtr& ambient() const { return ambient_; }
    const SubComplex& sub(int m, int n) const;
    const ChainMap& inclusion(int m, int n) const;
    // Coordinates conversion between sub and ambient component bases.
    SparseVec include(int m, int n, const SparseVec& v) const;
    SparseVec restrict(int m, int n, const SparseVec& ambient_vec) const;
    bool contains(int m, int n, const SparseVec& ambient_vec) const;

    const ChainComplex& component(int m, int n) const override;
    SparseVec vcomp_basis(int m, int k, int n, int a, int b) const override;
    SparseVec hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const override;
    SparseVec unit(int n) const override;
    SparseMatrix right_action(int m, int n, const Perm& sigma) const override;
    SparseMatrix left_action(int m, int n, const Perm& tau) const override;

private:
    struct Component {
        SubComplex sc;
        Echelon ech{true};
    };

    const Component& comp(int m, int n) const;
    SparseMatrix conjugate(int m, int n, const SparseMatrix& ambient_mat,
                           const char* what) const;

    PropPtr ambient_;
    std::map<Biarity, Component> comps_;
};

}  // namespace propcalc
