#pragma once

#include <map>
#include <optional>

#include "propcalc/chain_complex.hpp"

namespace propcalc {

struct Biarity {
    int m = 0;
    int n = 0;
    auto operator<=>(const Biarity&) const = default;
};

// Truncation: components (m,n) with 1 <= m,n <= A are live, optionally also
// capped by m+n <= total (total < 0 means no cap).
struct BiarityBound {
    int A = 4;
    int total = -1;

    bool contains(int m, int n) const {
        return m >= 1 && n >= 1 && m <= A && n <= A && (total < 0 || m + n <= total);
    }
    std::vector<Biarity> components() const {
        std::vector<Biarity> out;
        for (int m = 1; m <= A; ++m)
            for (int n = 1; n <= A; ++n)
                if (contains(m, n)) out.push_back({m, n});
        return out;
    }
};

// Symmetric group actions on one component: generator matrices for adjacent
// transpositions s_i = (i, i+1), composed on demand. The right action is an
// action of Σ_m^op, the left one of Σ_n.
struct ComponentAction {
    // right_gen[i] = matrix of the right action of s_{i+1} ∈ Σ_m, i = 0..m-2,
    // in global coordinates on the component.
    std::vector<SparseMatrix> right_gen;
    std::vector<SparseMatrix> left_gen;

    SparseMatrix right(const Perm& sigma, int dim) const;
    SparseMatrix left(const Perm& tau, int dim) const;
};

// Express a permutation as a product of adjacent transpositions; apply the
// given generator matrices accordingly. For the right (op) action, matrices
// compose in reversed order; handled by callers through ComponentAction.
std::vector<int> adjacent_transposition_word(const Perm& p);

struct BiObject {
    BiarityBound bound;
    std::map<Biarity, ChainComplex> components;
    std::map<Biarity, ComponentAction> actions;

    const ChainComplex& component(int m, int n) const;
    bool has_component(int m, int n) const { return components.count({m, n}) > 0; }
    SparseMatrix right_action(int m, int n, const Perm& sigma) const;
    SparseMatrix left_action(int m, int n, const Perm& tau) const;
};

struct BiObjectMorphism {
    const BiObject* source = nullptr;
    const BiObject* target = nullptr;
    std::map<Biarity, ChainMap> maps;
};

// Koszul-signed permutation action on X^{⊗m}: factor i moves to position
// sigma[i]. Returns the global matrix (a chain automorphism).
SparseMatrix symmetric_power_action(const TensorComplex& xm, const Perm& sigma);

// φ_!: component (m,n) becomes ⊕_{Σ_n × Σ_m^op} M(m,n); actions permute the
// copies (regular representations).
BiObject free_biobject(const BiarityBound& bound,
                       const std::map<Biarity, ChainComplex>& M);

struct MorphismClass {
    bool weak_equiv = false;
    bool fibration = false;
    bool cofibration = false;
};
std::map<Biarity, MorphismClass> classify_morphism(const BiObjectMorphism& f);

struct CheckIssue {
    std::string where;
    std::string what;
};

// Verifies the BiObject invariants: actions are chain maps, generators satisfy
// the braid/involution relations, left and right actions commute; the full
// group laws are spot-checked for m,n <= 3.
std::vector<CheckIssue> check_biobject(const BiObject& b);

}  // namespace propcalc
