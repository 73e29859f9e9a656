#pragma once

#include "propcalc/chain_complex.hpp"

namespace propcalc {

// The 5-dimensional complex Z with basis (τ, ρ₀, ρ₁ | σ₀, σ₁), d(ρᵢ) = σᵢ,
// and structure maps s: ℚ → Z (1 ↦ τ), d₀, d₁: Z → ℚ (d₀: τ ↦ 1, rest ↦ 0;
// d₁: τ, ρ₀ ↦ 1, rest ↦ 0).
struct PathComplexZ {
    ChainComplex z;
    ChainComplex q;  // ℚ in degree 0
    ChainMap s, d0, d1;
};
PathComplexZ make_Z();

// The factorization X → Z⊗X → X⊕X of the diagonal, with recorded verdicts.
struct PathFactorization {
    ChainComplex x;
    TensorComplex zx;   // Z ⊗ X
    ChainComplex xx;    // X ⊕ X
    ChainMap s;         // X -> Z⊗X
    ChainMap d0, d1;    // Z⊗X -> X
    ChainMap d01;       // (d₀,d₁): Z⊗X -> X⊕X
    ChainMap diag;      // X -> X⊕X
    bool diagonal_factors = false;    // d01 ∘ s = diag
    bool s_injective = false;
    bool s_quasi_iso = false;
    bool d01_surjective = false;
    bool d0_quasi_iso = false;
    bool d1_quasi_iso = false;
    bool ok() const {
        return diagonal_factors && s_injective && s_quasi_iso && d01_surjective &&
               d0_quasi_iso && d1_quasi_iso;
    }
};
// Throws FactorizationFailure if any verdict is false.
PathFactorization path_object(const ChainComplex& x);

// Z = Z̃ ⊕ ℚτ with Z̃ acyclic.
struct SplitZ {
    SubComplex ztilde;
    SubComplex tau_line;
};
SplitZ split_Z();

// Z^{⊗m} = S_m ⊕ ℚ·τ^{⊗m} with S_m acyclic.
struct SplitZPower {
    TensorComplex power;
    SubComplex s_m;
    SubComplex tau_line;
};
SplitZPower split_Z_power(int m);

// The two-copy inclusion X → X⊕X sending x to (x, x), plus X⊕X itself.
ChainMap diagonal_map(const ChainComplex& x);

}  // namespace propcalc
