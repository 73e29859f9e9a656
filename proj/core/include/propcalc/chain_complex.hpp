#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "propcalc/permutation.hpp"
#include "propcalc/sparse.hpp"

namespace propcalc {

// Bounded chain complex of finite-dimensional Q-vector spaces. Bases are
// ordered globally by descending degree, then by the per-degree local order.
class ChainComplex {
public:
    ChainComplex() = default;

    // Validates shapes and d∘d = 0 (throws SquareZeroViolation / ShapeMismatch).
    static ChainComplex make(std::map<int, std::vector<std::string>> basis,
                             std::map<int, SparseMatrix> diff);

    // Q concentrated in degree 0.
    static ChainComplex unit(const std::string& label = "1");

    bool has_degree(int deg) const { return dims_.count(deg) > 0; }
    int dim(int deg) const;
    int total_dim() const { return total_dim_; }
    // Degrees with nonzero dimension, descending.
    const std::vector<int>& degrees() const { return degree_list_; }
    int min_degree() const;
    int max_degree() const;

    const std::string& label(int deg, int local) const;
    const std::vector<std::string>& labels(int deg) const;
    std::vector<std::string> global_labels() const;

    // d_deg : C_deg -> C_{deg-1} (zero matrix when absent).
    SparseMatrix differential(int deg) const;

    int global_offset(int deg) const;
    int global_index(int deg, int local) const { return global_offset(deg) + local; }
    std::pair<int, int> degree_local(int global) const;  // (degree, local)
    int degree_of(int global) const { return degree_local(global).first; }

    // Differential in global coordinates.
    SparseVec apply_d(const SparseVec& v) const;
    SparseVec d_of_global(int global) const;

    // --- constructions ---
    static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
    ChainComplex dual() const;  // d(a*) = -(-1)^{|a|} sum_l (dA)_{a,l} l*

    struct Homology {
        std::map<int, int> dims;
        // Representative cycles, per degree, in global coordinates.
        std::map<int, std::vector<SparseVec>> reps;
    };
    Homology homology() const;
    bool is_acyclic() const;  // homology vanishes in every degree

private:
    std::map<int, std::vector<std::string>, std::greater<int>> basis_;
    std::map<int, SparseMatrix, std::greater<int>> diff_;
    std::map<int, int> dims_;
    std::map<int, int> offsets_;
    std::vector<int> degree_list_;
    int total_dim_ = 0;
};

// Degree-0 chain map, stored per degree of the source. Source and target
// complexes are stored by value so a ChainMap never dangles.
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(ChainComplex src, ChainComplex tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& src, const ChainComplex& tgt);
    // From an assignment on global indices.
    static ChainMap from_global(const ChainComplex& src, const ChainComplex& tgt,
                                const SparseMatrix& global);

    const ChainComplex& src() const { return src_; }
    const ChainComplex& tgt() const { return tgt_; }

    SparseMatrix block(int deg) const;  // zero when absent
    void set_block(int deg, SparseMatrix m);
    SparseMatrix global_matrix() const;
    SparseVec apply_global(const SparseVec& v) const;

    bool commutes_with_d() const;  // d∘f = f∘d in every degree
    ChainMap compose(const ChainMap& first) const;  // this ∘ first
    ChainMap add(const ChainMap& other) const;
    ChainMap sub(const ChainMap& other) const;

    bool is_surjective() const;  // degreewise
    bool is_injective() const;   // degreewise
    bool is_quasi_iso() const;   // induced map on homology is an isomorphism

    // h with d∘h + h∘d = g - f witnesses a chain homotopy g ≃ f. The blocks of
    // h map src degree k to tgt degree k+1.
    bool is_homotopy_between(const std::map<int, SparseMatrix>& h, const ChainMap& g) const;

private:
    ChainComplex src_;
    ChainComplex tgt_;
    std::map<int, SparseMatrix> blocks_;
};

// Tensor product with word bookkeeping. Basis elements of the product are
// words of factor global indices; within each degree, words are ordered
// lexicographically.
struct TensorComplex {
    ChainComplex cx;
    int num_factors = 0;
    // degree of each factor's global basis vector: factor_degrees[f][g]
    std::vector<std::vector<int>> factor_degrees;
    std::vector<std::vector<int>> word_of;      // cx global index -> word
    std::map<std::vector<int>, int> index_of;   // word -> cx global index

    std::vector<int> word_degrees(int global) const;
};

TensorComplex tensor_list(const std::vector<const ChainComplex*>& factors);
TensorComplex tensor_power(const ChainComplex& c, int n);

// Koszul-signed factor shuffle: source factor f goes to target slot
// factor_perm[f]. Source and target must be tensor products of the same
// factors up to that permutation.
ChainMap tensor_shuffle(const TensorComplex& src, const TensorComplex& dst,
                        const Perm& factor_perm);

// Tensor product of chain maps, as a map between given tensor complexes whose
// factors line up with the maps' sources/targets.
ChainMap tensor_map(const TensorComplex& src, const TensorComplex& dst,
                    const std::vector<const ChainMap*>& maps);

// Hom(A, B) realized as dual(A) ⊗ B. The chain isomorphism sends
// a* ⊗ b to (-1)^{|a*||b|} (x ↦ a*(x) b).
struct HomComplex {
    TensorComplex tc;  // tensor of (dual(A), B)
    ChainComplex dualA;
    ChainComplex A;
    ChainComplex B;
    std::vector<int> dual_to_A;  // dual global index -> A global index
    std::vector<int> A_to_dual;

    const ChainComplex& cx() const { return tc.cx; }

    // Basis element index for the map a_i ↦ b_j (global indices in A, B),
    // together with the Φ sign it carries.
    int basis_index(int ai, int bj) const;
    Rational basis_sign(int ai, int bj) const;

    // Convert a hom element (global coords in tc.cx) to the linear map it
    // represents, as a matrix on global coordinates A -> B.
    SparseMatrix to_matrix(const SparseVec& h) const;
    SparseVec from_matrix(const SparseMatrix& m) const;  // inverse of to_matrix
};

HomComplex hom_complex(const ChainComplex& A, const ChainComplex& B);

// Composition Hom(B,C) ⊗ Hom(A,B) -> Hom(A,C) on elements (no Koszul sign:
// composition of linear maps).
SparseVec hom_compose(const HomComplex& GC, const SparseVec& g, const HomComplex& FA,
                      const SparseVec& f, const HomComplex& out);

// Subcomplex spanned by the given global vectors (must be d-stable; basis is
// echelonized deterministically). Returns the complex plus its inclusion.
struct SubComplex {
    ChainComplex cx;
    ChainMap incl;                        // cx -> ambient
    std::vector<SparseVec> basis_global;  // basis of cx in ambient global coords
};
SubComplex subcomplex(const ChainComplex& ambient, const std::vector<SparseVec>& span,
                      const std::string& label_prefix);

// Kernel of a chain map, as a subcomplex of the source.
SubComplex kernel_complex(const ChainMap& f, const std::string& label_prefix);

// Pullback of f: A -> C, g: B -> C, as a subcomplex of A ⊕ B.
struct PullbackComplex {
    ChainComplex sum;  // A ⊕ B
    SubComplex sub;    // pullback inside the sum
    ChainMap toA, toB;
};
PullbackComplex pullback_complex(const ChainMap& f, const ChainMap& g);

}  // namespace propcalc
