#pragma once

#include "propcalc/end_prop.hpp"
#include "propcalc/path_object.hpp"
#include "propcalc/product_prop.hpp"
#include "propcalc/sub_prop.hpp"
#include "propcalc/tensor_prop.hpp"

namespace propcalc {

// The props of P-diagrams built from a prop P:
//   End_{Z(P)}  = End_Z ⊗ P  (decorated components (Z^{⊗m})*⊗Z^{⊗n}⊗P(m,n)),
//   End_{𝒵(P)} = pullback of d̄_pair against d̄₀*⊕d̄₁*,
//   End_{𝒴(P)} = pullback of s̄_upper against s̄_lower,
// together with the projection π: End_{𝒴(P)} → P and the corner-square
// morphisms u*, w*, t*.
struct PDiagramSuite {
    PropPtr p;
    PathComplexZ zd;
    ChainComplex q2;  // ℚp₀ ⊕ ℚp₁ in degree 0
    std::shared_ptr<const EndProp> end_z;       // End_Z
    std::shared_ptr<const TensorProp> end_zp;   // End_{Z(P)}
    std::shared_ptr<const ProductProp> p0p1;    // P₀ × P₁
    std::shared_ptr<const ProductProp> amb_calz;  // End_{Z(P)} × P₀ × P₁
    std::shared_ptr<const SubProp> end_calzp;   // End_{𝒵(P)}
    std::shared_ptr<const ProductProp> amb_caly;  // P × End_{𝒵(P)}
    std::shared_ptr<const SubProp> end_calyp;   // End_{𝒴(P)}

    PropMorphism pi;      // End_{𝒴(P)} → P, projection to the P factor
    PropMorphism w_star;  // End_{𝒴(P)} → End_{𝒵(P)}
    PropMorphism u_star;  // End_{𝒵(P)} → P₀ × P₁
    PropMorphism t_star;  // P → P₀ × P₁, diagonal

    // d̄-data per component: the target (Z^{⊗m})*⊗(ℚp₀⊕ℚp₁)⊗P(m,n), the map
    // d̄_pair on End_{Z(P)}(m,n) and d̄₀*⊕d̄₁* on the P₀×P₁ component.
    struct DbarData {
        TensorComplex target;
        ChainMap pair;  // End_{Z(P)}(m,n) → target
        ChainMap star;  // (P₀×P₁)(m,n) → target
    };
    // s̄-data per component: the target Z^{⊗n}⊗P(m,n), s̄_lower on P(m,n) and
    // s̄_upper on the End_{𝒵(P)} component.
    struct SbarData {
        TensorComplex target;
        ChainMap lower;
        ChainMap upper;
    };
    std::map<Biarity, DbarData> dbar;
    std::map<Biarity, SbarData> sbar;

    // Index sets per m, derived by applying dᵢ^{⊗m} to every basis tensor of
    // Z^{⊗m}: global power indices with coefficient 1.
    std::map<int, std::vector<int>> J0, J1;

    // The identification P₀⊕P₁ ≅ (ℚp₀⊕ℚp₁)⊗P, per component, as a stored
    // isomorphism onto q2p.
    std::map<Biarity, TensorComplex> q2p;
    std::map<Biarity, ChainMap> p0p1_iso;
};

// Builds the whole suite at the bound of p; eager and deterministic.
PDiagramSuite build_pdiagram_suite(const PropPtr& p);

// d̄ᵢ: P(m,n) → (Z^{⊗m})*⊗P(m,n), ξ ↦ (Σ_{j∈J} z_j*)⊗ξ.
struct DbarSingle {
    TensorComplex target;
    ChainMap map;
    std::vector<int> index_set;  // J, as global indices of Z^{⊗m}
};
DbarSingle map_dbar(const PDiagramSuite& s, int which /* 0 or 1 */, int m, int n);

// Componentwise acyclic-fibration check for π.
struct PiComponentReport {
    Biarity at;
    bool surjective = false;
    bool quasi_iso = false;
    std::map<int, int> homology_source;
    std::map<int, int> homology_target;
};
struct PiReport {
    std::vector<PiComponentReport> components;
    bool ok() const {
        for (const auto& c : components)
            if (!c.surjective || !c.quasi_iso) return false;
        return true;
    }
};
PiReport check_pi_acyclic_fibration(const PDiagramSuite& s, const BiarityBound& check_bound);

// The dual pushout-product witness at biarity (m,n): f_s: ℚ → Z^{⊗m}
// (1 ↦ τ^{⊗m}) and g: Z^{⊗n} → ℚp₀⊕ℚp₁ induce
//   Hom(Z^{⊗m}, Z^{⊗n}) → Hom(ℚ, Z^{⊗n}) ×_{Hom(ℚ, ℚp₀⊕ℚp₁)} Hom(Z^{⊗m}, ℚp₀⊕ℚp₁)
// which must be an acyclic fibration, with f_s an acyclic cofibration and g a
// fibration.
struct PushoutProductWitness {
    int m = 0, n = 0;
    bool f_injective = false;
    bool f_quasi_iso = false;
    bool g_surjective = false;
    bool induced_surjective = false;
    bool induced_quasi_iso = false;
    bool ok() const {
        return f_injective && f_quasi_iso && g_surjective && induced_surjective &&
               induced_quasi_iso;
    }
};
PushoutProductWitness pushout_product_witness(int m, int n);

// u*∘w* = t*∘π on every component, u* degreewise surjective.
CheckReport check_corner_square(const PDiagramSuite& s);

}  // namespace propcalc
