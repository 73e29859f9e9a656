#pragma once

#include <array>
#include <memory>

#include "propcalc/biobject.hpp"
#include "propcalc/report.hpp"

namespace propcalc {

// A biarity-truncated prop in Ch_Q. Components are chain complexes; structure
// maps act on global basis indices and extend bilinearly. Implementations:
// TableProp (explicit tables), EndProp, TensorProp, ProductProp, SubProp.
class Prop {
public:
    explicit Prop(BiarityBound bound) : bound_(bound) {}
    virtual ~Prop() = default;

    const BiarityBound& bound() const { return bound_; }
    void require(int m, int n) const;
    virtual const ChainComplex& component(int m, int n) const = 0;
    int dim(int m, int n) const { return component(m, n).total_dim(); }
    int degree_of(int m, int n, int idx) const { return component(m, n).degree_of(idx); }

    // Vertical composition P(k,n) ⊗ P(m,k) -> P(m,n) on basis elements:
    // a ∘ b = "a after b".
    virtual SparseVec vcomp_basis(int m, int k, int n, int a, int b) const = 0;
    // Horizontal product P(m1,n1) ⊗ P(m2,n2) -> P(m1+m2,n1+n2).
    virtual SparseVec hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const = 0;
    virtual SparseVec unit(int n) const = 0;
    // Right Σ_m^op and left Σ_n actions, as global matrices on the component.
    virtual SparseMatrix right_action(int m, int n, const Perm& sigma) const = 0;
    virtual SparseMatrix left_action(int m, int n, const Perm& tau) const = 0;

    // Axiom-check pruning: a superset of the basis indices a in P(k,n) with
    // vcomp_basis(m,k,n,a,b) possibly nonzero, and symmetrically for b.
    // Defaults return the full basis.
    virtual std::vector<int> vleft_candidates(int m, int k, int n, int b) const;
    virtual std::vector<int> vright_candidates(int m, int k, int n, int a) const;

    // Bilinear extensions.
    SparseVec vcomp(int m, int k, int n, const SparseVec& a, const SparseVec& b) const;
    SparseVec hcomp(int m1, int n1, int m2, int n2, const SparseVec& a,
                    const SparseVec& b) const;

    // Materialize the underlying Σ-biobject (components plus adjacent
    // transposition generator matrices).
    BiObject underlying() const;

private:
    BiarityBound bound_;
};

using PropPtr = std::shared_ptr<const Prop>;

// Prop given by explicit component complexes, action generators, and
// composition tables.
class TableProp : public Prop {
public:
    TableProp(BiObject underlying, std::map<int, SparseVec> units);

    const ChainComplex& component(int m, int n) const override;
    SparseVec vcomp_basis(int m, int k, int n, int a, int b) const override;
    SparseVec hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const override;
    SparseVec unit(int n) const override;
    SparseMatrix right_action(int m, int n, const Perm& sigma) const override;
    SparseMatrix left_action(int m, int n, const Perm& tau) const override;

    void set_vtable(int m, int k, int n, std::vector<std::vector<SparseVec>> table);
    void set_htable(int m1, int n1, int m2, int n2, std::vector<std::vector<SparseVec>> table);
    const BiObject& biobject() const { return under_; }
    const std::map<int, SparseVec>& units() const { return units_; }

    // Materialize any Prop as a TableProp over the live components.
    static std::shared_ptr<TableProp> materialize(const Prop& p);

private:
    BiObject under_;
    std::map<int, SparseVec> units_;
    std::map<std::array<int, 3>, std::vector<std::vector<SparseVec>>> vtables_;
    std::map<std::array<int, 4>, std::vector<std::vector<SparseVec>>> htables_;
};

// Morphism of props: per-component chain maps.
struct PropMorphism {
    PropPtr src;
    PropPtr tgt;
    std::map<Biarity, ChainMap> maps;

    const ChainMap& at(int m, int n) const;
    bool has(int m, int n) const { return maps.count({m, n}) > 0; }
    SparseVec apply(int m, int n, const SparseVec& v) const;
    static PropMorphism identity(const PropPtr& p);
    PropMorphism compose(const PropMorphism& first) const;  // this ∘ first
};

// Full axiom suite: vertical/horizontal associativity,
// interchange with the Koszul sign, unit laws, unit compatibility,
// equivariance, Leibniz (structure maps are chain maps), units are cycles.
// Violations are collected; checks skipped due to truncation are reported.
CheckReport check_prop_axioms(const Prop& p);

// Preservation of ∘_v, ∘_h, units, actions, and chain-map property.
CheckReport check_prop_morphism(const PropMorphism& f);

}  // namespace propcalc
