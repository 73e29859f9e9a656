#pragma once

#include "propcalc/report.hpp"
#include "propcalc/word.hpp"

namespace propcalc {

// Generators with well-ordered differentials plus a word for every basis
// element of every component: the artifact's checkable surrogate for
// cofibrancy.
struct QuasiFreePresentation {
    struct Generator {
        std::string label;
        Biarity at{0, 0};
        int degree = 0;
        WordPtr dword;  // differential, in strictly earlier generators
    };
    std::vector<Generator> generators;
    // words[b][i] = word for basis element i of component b.
    std::map<Biarity, std::vector<WordPtr>> words;

    // Verifies both invariants against P: evaluating words reproduces the
    // basis, and dwords evaluate to d of each generator.
    CheckReport verify(const Prop& p, const std::vector<PropElement>& gen_values) const;
};

struct LiftProblem {
    const QuasiFreePresentation* presentation = nullptr;
    // Values of the presentation's generators inside P (usually basis
    // elements); the lift extends generator images by word evaluation.
    std::vector<PropElement> gen_values_in_p;
    PropPtr p;  // source
    PropMorphism q;  // fibration E -> B, componentwise acyclic fibration
    PropMorphism b;  // base morphism P -> B
};

struct LiftResult {
    PropMorphism lift;  // l: P -> E with q ∘ l = b
    // Values of each generator in E, in presentation order.
    std::vector<PropElement> gen_values;
    CheckReport report;
};

// The morphism P → E determined by generator values in E: every basis element
// of P maps to its presentation word evaluated in E.
PropMorphism extend_by_words(const PropPtr& p, const QuasiFreePresentation& pres,
                             const PropPtr& e, const std::vector<PropElement>& gen_values);

// Solves the lifting problem generator by generator: for generator g, solve
// q(x) = b(g), d(x) = (dword of g evaluated at earlier lifted generators),
// picking the deterministic minimal-support solution. Extends to every basis
// element by word evaluation. Throws NoSolution (with a certificate in the
// message) or InconsistentPresentation.
LiftResult lift(const LiftProblem& problem);

// The zigzag of P-actions induced on X₀ ← Z(X) → X₁ by a lift of id_P
// through π, together with its verification data.
struct Zigzag {
    ChainComplex x;
    ChainComplex zx;
    PropMorphism action_x0, action_zx, action_x1;  // P -> End of each carrier
    ChainMap s, d0, d1;
    CheckReport report;
};

// Composes l: P -> End_Y(P) with ev_X and extracts the vertex actions;
// verifies the vertex actions on X₀, X₁ equal the input action and that
// s, d₀, d₁ commute with every induced operation. Throws ZigzagViolation.
class PDiagramSuite;  // defined in pdiagram.hpp
Zigzag functorial_path_action(const PDiagramSuite& suite, const PropMorphism& l,
                              const ChainComplex& x, const PropMorphism& action);

// Checks u* ∘ m = (φ, ψ) and emits the two weak-equivalence verdicts of the
// homotopy zigzag at X. Throws CompatibilityFailure when the equation fails.
CheckReport verify_homotopy_zigzag(const PDiagramSuite& suite, const PropMorphism& m,
                                   const PropMorphism& phi, const PropMorphism& psi,
                                   const ChainComplex& x, const PropMorphism& action);

}  // namespace propcalc
