#pragma once

#include "propcalc/prop.hpp"

namespace propcalc {

// Endomorphism prop of a chain complex X: End(X)(m,n) = Hom(X^{⊗m}, X^{⊗n}).
// Every hom basis element is elementary (sends one power-basis vector to a
// signed multiple of another), so compositions resolve in O(1).
class EndProp : public Prop {
public:
    struct Elem {
        int u;     // input: global index in X^{⊗m}
        int v;     // output: global index in X^{⊗n}
        int sign;  // ±1 carried by the hom basis vector
    };

    EndProp(ChainComplex x, BiarityBound bound);

    const ChainComplex& ground() const { return x_; }
    const TensorComplex& power(int m) const;
    const HomComplex& hom(int m, int n) const;
    const Elem& elem(int m, int n, int idx) const;
    int index_of_elem(int m, int n, int u, int v) const;

    const ChainComplex& component(int m, int n) const override;
    SparseVec vcomp_basis(int m, int k, int n, int a, int b) const override;
    SparseVec hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const override;
    SparseVec unit(int n) const override;
    SparseMatrix right_action(int m, int n, const Perm& sigma) const override;
    SparseMatrix left_action(int m, int n, const Perm& tau) const override;
    std::vector<int> vleft_candidates(int m, int k, int n, int b) const override;
    std::vector<int> vright_candidates(int m, int k, int n, int a) const override;

private:
    struct Component {
        HomComplex hom;
        std::vector<Elem> elems;   // component global index -> elementary data
        std::vector<int> idx_of;   // u * dim(X^n) + v -> component global index
    };

    const Component& comp(int m, int n) const;
    // Word-concatenation index: X^{⊗m1} ⊗ X^{⊗m2} -> X^{⊗(m1+m2)}.
    int concat(int m1, int m2, int u1, int u2) const;

    ChainComplex x_;
    std::vector<TensorComplex> powers_;  // powers_[m-1] = X^{⊗m}
    std::map<Biarity, Component> comps_;
    std::map<std::pair<int, int>, std::vector<int>> concat_;
};

}  // namespace propcalc
