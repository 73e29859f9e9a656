#pragma once

#include "propcalc/diagram.hpp"
#include "propcalc/fixtures.hpp"
#include "propcalc/pdiagram.hpp"

namespace propcalc {

// The diagram shapes an evaluation morphism can target: the path complex
// Z(X) = Z ⊗ X itself, the three-object cospan 𝒵(X), the four-object path
// diagram 𝒴(X), the constant diagram 𝒱(X), and the two-point diagram 𝒯(X).
enum class DiagramTag { Z, CalZ, CalY, V, T };

// Z ⊗ X with the bookkeeping needed to evaluate decorated endomorphisms:
// per power m, the Koszul-signed identification (Z⊗X)^{⊗m} ≅ Z^{⊗m} ⊗ X^{⊗m}
// stored as a signed permutation matrix.
struct ZXComplex {
    TensorComplex zx;  // Z ⊗ X, words (z-letter, x-letter)
    struct Power {
        TensorComplex powm;    // (Z⊗X)^{⊗m}
        TensorComplex zm, xm;  // Z^{⊗m}, X^{⊗m}
        TensorComplex pair;    // two factors: (Z^{⊗m} complex, X^{⊗m} complex)
        SparseMatrix split;    // (Z⊗X)^{⊗m} global → pair global
        SparseMatrix unsplit;  // inverse
    };
    std::map<int, Power> powers;

    // d_i ⊗ id_X : Z⊗X → X and s ⊗ id_X : X → Z⊗X
    SparseMatrix d0x, d1x, sx;
};

ZXComplex make_zx(const PDiagramSuite& s, const ChainComplex& x, BiarityBound bound);

// Shapes of the functorial diagrams on a carrier X. zxc may be null for the
// tags that do not involve Z(X) (V, T).
DiagramShape shape_of(const PDiagramSuite& s, const ZXComplex* zxc, const ChainComplex& x,
                      DiagramTag tag);

struct EvaluationMorphism {
    DiagramTag tag;
    PropMorphism ev;
    // Target diagram-endomorphism prop (all tags except Z, whose target is a
    // plain endomorphism prop).
    std::shared_ptr<const DiagramEndProp> diagram;
    std::shared_ptr<const EndProp> end_zx;  // tag Z target
    std::shared_ptr<const ZXComplex> zxc;
};

// Evaluation morphism End_{𝒟(P)} → End_{𝒟(X)} induced by the algebra action.
// Components are produced for biarities inside both `bound` and the prop's
// own bound.
EvaluationMorphism build_ev(const PDiagramSuite& s, const PAlgebra& alg, DiagramTag tag,
                            BiarityBound bound);

// Evaluation of an element of End_{Z(P)}(m,n) (component coordinates) as a
// global matrix (Z⊗X)^{⊗m} → (Z⊗X)^{⊗n}.
SparseMatrix ev_z_matrix(const PDiagramSuite& s, const PAlgebra& alg, const ZXComplex& zxc,
                         int m, int n, const SparseVec& v);

// Naturality squares for an algebra morphism f: X → Y: at every vertex i,
// 𝒟(f)(i)^{⊗n} ∘ φ_X(i) = φ_Y(i) ∘ 𝒟(f)(i)^{⊗m} for every basis φ.
CheckReport check_ev_naturality(const PDiagramSuite& s, const PAlgebra& xalg,
                                const PAlgebra& yalg, const ChainMap& f, DiagramTag tag,
                                BiarityBound bound);

// The square relating the path-diagram evaluation to the underlying action:
// restricting ev: End_{𝒴(P)} → End_{𝒴(X)} to the constant sub-diagram 𝒱(X)
// agrees with (action) ∘ π.
CheckReport check_path_action_square(const PDiagramSuite& s, const PAlgebra& alg,
                                     BiarityBound bound);

}  // namespace propcalc
