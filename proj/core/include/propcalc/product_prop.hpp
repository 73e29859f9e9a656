#pragma once

#include "propcalc/prop.hpp"

namespace propcalc {

// Finite product of props: components are direct sums, all structure maps act
// factorwise and vanish across factors.
class ProductProp : public Prop {
public:
    ProductProp(std::vector<PropPtr> factors, BiarityBound bound);

    int factor_count() const { return static_cast<int>(factors_.size()); }
    const PropPtr& factor(int f) const { return factors_[static_cast<size_t>(f)]; }
    // Decompose a product basis index into (factor, factor basis index).
    std::pair<int, int> to_factor(int m, int n, int idx) const;
    int from_factor(int m, int n, int f, int idx) const;
    ChainMap projection(int f, int m, int n) const;
    ChainMap inclusion(int f, int m, int n) const;

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
        ChainComplex cx;
        std::vector<std::pair<int, int>> to_factor;     // global -> (f, factor idx)
        std::vector<std::vector<int>> from_factor;      // [f][factor idx] -> global
    };

    const Component& comp(int m, int n) const;
    SparseVec push(const Component& c, int f, const SparseVec& v) const;

    std::vector<PropPtr> factors_;
    std::map<Biarity, Component> comps_;
};

}  // namespace propcalc
