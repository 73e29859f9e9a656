#pragma once

#include "propcalc/prop.hpp"

namespace propcalc {

// Tensor product of props, componentwise A(m,n) ⊗ B(m,n) with the Koszul
// sign convention on both compositions:
//   (a ⊗ p) ∘ (b ⊗ q) = (-1)^{|p||b|} (a ∘ b) ⊗ (p ∘ q).
class TensorProp : public Prop {
public:
    TensorProp(PropPtr a, PropPtr b, BiarityBound bound);

    const PropPtr& left() const { return a_; }
    const PropPtr& right() const { return b_; }
    const TensorComplex& tensor(int m, int n) const;
    std::pair<int, int> factors_of(int m, int n, int idx) const;
    int pair_index(int m, int n, int xa, int xb) const;

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
        TensorComplex tc;
        std::vector<int> pair_idx;  // xa * dimB + xb -> component global index
        int dim_b = 0;
    };

    const Component& comp(int m, int n) const;
    SparseVec combine(const Component& c, const SparseVec& va, const SparseVec& vb,
                      int sign) const;
    SparseMatrix action_matrix(const Component& c, const SparseMatrix& ma,
                               const SparseMatrix& mb) const;

    PropPtr a_;
    PropPtr b_;
    std::map<Biarity, Component> comps_;
};

}  // namespace propcalc
