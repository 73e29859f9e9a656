#pragma once

#include "propcalc/end_prop.hpp"
#include "propcalc/free21.hpp"
#include "propcalc/lifting.hpp"

namespace propcalc {

// The permutation prop (initial prop): P(n,n) = ℚ[Σ_n] in degree 0, zero off
// the diagonal. Vertical composition is the group product ("a after b"),
// horizontal composition the block sum, and the actions are right/left
// translation — matching the endomorphism-prop conventions, so it acts on
// every complex by the Koszul-signed factor shuffles.
class PermProp : public Prop {
public:
    explicit PermProp(BiarityBound bound);

    const Perm& perm_of(int n, int idx) const;
    int index_of(const Perm& p) const;

    const ChainComplex& component(int m, int n) const override;
    SparseVec vcomp_basis(int m, int k, int n, int a, int b) const override;
    SparseVec hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const override;
    SparseVec unit(int n) const override;
    SparseMatrix right_action(int m, int n, const Perm& sigma) const override;
    SparseMatrix left_action(int m, int n, const Perm& tau) const override;

private:
    std::map<Biarity, ChainComplex> comps_;
    std::map<int, std::vector<Perm>> perms_;
};

std::shared_ptr<const PermProp> make_perm_prop(BiarityBound bound);

// Quasi-free presentation of the permutation prop: no generators; every basis
// element is the unit decorated by a right permutation action.
QuasiFreePresentation perm_prop_presentation(const PermProp& p);

// --- test complexes ---
ChainComplex cx_Q();         // ℚ in degree 0
ChainComplex cx_Q2();        // ℚ² = span{e1, e2} in degree 0
ChainComplex cx_two_term();  // acyclic: deg 1 {u} → deg 0 {v}, d(u) = v
ChainComplex cx_h2();        // deg 1 {a}, deg 0 {b, c}, d = 0

// A prop algebra: carrier X with an action P → End_X.
struct PAlgebra {
    PropPtr p;
    std::shared_ptr<const EndProp> end;  // End_carrier; target of the action
    ChainComplex carrier;
    PropMorphism action;
};

// check_prop_morphism on the action.
CheckReport check_algebra(const PAlgebra& alg);

// f: X → Y commutes with every basis operation of P acting on both sides:
// act_Y(p) ∘ f^{⊗m} = f^{⊗n} ∘ act_X(p).
CheckReport check_algebra_morphism(const PAlgebra& xalg, const PAlgebra& yalg,
                                   const ChainMap& f);

// Extend generator images to a full morphism P → End_X by evaluating the
// presentation word of every basis element.
PropMorphism action_from_presentation(const PropPtr& p, const QuasiFreePresentation& pres,
                                      const std::shared_ptr<const EndProp>& end_x,
                                      const std::vector<PropElement>& gen_images);

// The permutation prop acting on X by the Koszul-signed factor shuffles.
PAlgebra perm_prop_algebra(const std::shared_ptr<const PermProp>& p, const ChainComplex& x);

// The free (2,1)-generator prop acting on ℚ² by the componentwise product
// μ(e_i ⊗ e_j) = δ_ij e_i.
PAlgebra free21_q2_algebra(const Free21Fixture& fx);
// Same action on ℚ (ordinary multiplication).
PAlgebra free21_q_algebra(const Free21Fixture& fx);

// The swap e1 ↔ e2 on ℚ², an algebra morphism for the componentwise product.
ChainMap q2_swap();

}  // namespace propcalc
