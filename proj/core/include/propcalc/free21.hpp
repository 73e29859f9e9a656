#pragma once

#include "propcalc/lifting.hpp"
#include "propcalc/prop.hpp"

namespace propcalc {

// The free prop on a single generator g of biarity (2,1), degree 0, truncated
// at the given bound. Basis elements of component (m,n) are forests of n
// planar binary trees with m leaves in total, leaves labeled bijectively by
// the inputs 1..m; all components sit in degree 0 with zero differential.
class Free21Prop : public Prop {
public:
    explicit Free21Prop(BiarityBound bound);

    // Basis index of the generator g inside component (2,1).
    int generator_index() const { return gen_index_; }

    const ChainComplex& component(int m, int n) const override;
    SparseVec vcomp_basis(int m, int k, int n, int a, int b) const override;
    SparseVec hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const override;
    SparseVec unit(int n) const override;
    SparseMatrix right_action(int m, int n, const Perm& sigma) const override;
    SparseMatrix left_action(int m, int n, const Perm& tau) const override;

    // A word for each basis element over the single generator.
    WordPtr word_for(int m, int n, int idx) const;

private:
    // Trees in an arena: label >= 0 marks a leaf carrying that input index
    // (0-based); internal nodes have two children.
    struct Node {
        int label = -1;
        int left = -1, right = -1;
    };
    using Forest = std::vector<int>;  // roots, one per output

    struct Component {
        ChainComplex cx;
        std::vector<Forest> basis;
        std::map<std::string, int> index;
    };

    int mk_leaf(int label) const;
    int mk_node(int l, int r) const;
    std::string encode_tree(int t) const;
    std::string encode(const Forest& f) const;
    int leaves(int t) const;
    // Append shapes of all planar binary trees with k leaves, leaves labeled
    // -1 (placeholders), to out.
    void shapes(int k, std::vector<int>& out) const;
    int relabel(int t, const std::vector<int>& labels, int& cursor) const;
    int graft(int t, const std::vector<int>& replacement_roots) const;
    Forest perm_forest(const Perm& sigma) const;
    int lookup(int m, int n, const Forest& f) const;

    const Component& comp(int m, int n) const;

    mutable std::vector<Node> arena_;
    std::map<Biarity, Component> comps_;
    int gen_index_ = -1;
    // Everything below is precomputed in the constructor so the structure
    // maps are pure lookups (safe under concurrent axiom checking).
    std::map<std::array<int, 3>, std::vector<std::vector<int>>> vtab_;
    std::map<std::array<int, 4>, std::vector<std::vector<int>>> htab_;
    std::map<Biarity, std::map<Perm, std::vector<int>>> ract_, lact_;
    std::map<int, int> unit_idx_;
};

// The prop together with its quasi-free presentation (one generator g with
// zero differential; every basis element expressed as a word in g).
struct Free21Fixture {
    std::shared_ptr<const Free21Prop> prop;
    QuasiFreePresentation presentation;
    std::vector<PropElement> gen_values;  // g as an element of prop
};
Free21Fixture make_free21(BiarityBound bound);

}  // namespace propcalc
