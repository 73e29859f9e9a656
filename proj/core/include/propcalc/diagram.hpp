#pragma once

#include "propcalc/end_prop.hpp"
#include "propcalc/product_prop.hpp"
#include "propcalc/sub_prop.hpp"

namespace propcalc {

// A finite diagram of chain complexes: objects with labels, arrows with
// chain maps between them.
struct DiagramShape {
    struct Arrow {
        int src = -1;
        int tgt = -1;
        std::string label;
        ChainMap map;
        bool is_identity = false;  // marks u = id_{X_src} (requires src == tgt)
    };
    std::vector<std::string> object_labels;
    std::vector<ChainComplex> objects;
    std::vector<Arrow> arrows;

    int add_object(std::string label, ChainComplex x);
    void add_arrow(int src, int tgt, std::string label, ChainMap map,
                   bool is_identity = false);
    void validate() const;  // arrow maps match endpoints and commute with d
};

// Endomorphism prop of a diagram, realized per component (m,n) as the
// equalizer of
//   d⁰, d¹ : ∏_i Hom(X_i^{⊗m}, X_i^{⊗n}) ⇉ ∏_{u:i→j} Hom(X_i^{⊗m}, X_j^{⊗n})
// with d⁰ = postcomposition (u^{⊗n})_* at the source factor and
// d¹ = precomposition (u^{⊗m})^* at the target factor. The prop structure is
// restricted from the product of endomorphism props.
struct DiagramEndProp {
    DiagramShape shape;
    std::vector<std::shared_ptr<const EndProp>> ends;   // End_{X_i}
    std::shared_ptr<const ProductProp> product;         // ∏_i End_{X_i}
    std::shared_ptr<const SubProp> prop;                // the equalizer

    // The parallel pair at component (m,n), as maps from the product
    // component to the arrow-indexed product B(m,n).
    const ChainComplex& arrow_complex(int m, int n) const;
    const ChainMap& d0(int m, int n) const;
    const ChainMap& d1(int m, int n) const;
    // Coreflexive section s⁰: B(m,n) → ∏_i Hom(X_i^m, X_i^n), projecting at
    // identity arrows. Requires every object to carry an identity arrow.
    ChainMap s0(int m, int n) const;

    // Extract the family member at object i from an element of the prop
    // component (m,n): an element of End_{X_i}(m,n).
    SparseVec member(int m, int n, int i, const SparseVec& v) const;

    struct ComponentData {
        ChainComplex bsum;  // ⊕_u Hom(X_{src u}^m, X_{tgt u}^n)
        std::vector<HomComplex> arrow_hom;
        ChainMap d0, d1;
    };
    std::map<Biarity, ComponentData> data;
};

DiagramEndProp diagram_endomorphism_prop(DiagramShape d, BiarityBound bound);

// The prop morphism induced by a mapping of shapes: obj_map sends each object
// of `to.shape` to an object of `from.shape` with an equal carrier; a family
// over the large shape restricts to one over the small shape. The caller is
// responsible for obj_map being arrow-compatible; membership in the target
// equalizer is asserted at runtime.
PropMorphism restrict_along(const DiagramEndProp& from, const DiagramEndProp& to,
                            const std::vector<int>& obj_map);

}  // namespace propcalc
