#pragma once

#include "propcalc/prop.hpp"

namespace propcalc {

// Expression tree over generator symbols, units, composition nodes, and
// permutation decorations, evaluated in any prop.
struct GeneratorWord;
using WordPtr = std::shared_ptr<const GeneratorWord>;

struct GeneratorWord {
    enum class Kind { Gen, Unit, VComp, HComp, LeftPerm, RightPerm, Scale, Sum, Zero };

    Kind kind = Kind::Zero;
    int gen = -1;              // Gen: generator index into the assignment
    int arity = 0;             // Unit: n; Zero: unused
    Biarity biarity{0, 0};     // Zero: the intended biarity
    Perm perm;                 // LeftPerm / RightPerm
    Rational coeff = 1;        // Scale
    std::vector<WordPtr> args;

    static WordPtr make_gen(int g) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::Gen;
        w->gen = g;
        return w;
    }
    static WordPtr make_unit(int n) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::Unit;
        w->arity = n;
        return w;
    }
    static WordPtr make_zero(int m, int n) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::Zero;
        w->biarity = {m, n};
        return w;
    }
    static WordPtr make_vcomp(WordPtr a, WordPtr b) {  // a after b
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::VComp;
        w->args = {std::move(a), std::move(b)};
        return w;
    }
    static WordPtr make_hcomp(WordPtr a, WordPtr b) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::HComp;
        w->args = {std::move(a), std::move(b)};
        return w;
    }
    static WordPtr make_left_perm(Perm tau, WordPtr a) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::LeftPerm;
        w->perm = std::move(tau);
        w->args = {std::move(a)};
        return w;
    }
    static WordPtr make_right_perm(WordPtr a, Perm sigma) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::RightPerm;
        w->perm = std::move(sigma);
        w->args = {std::move(a)};
        return w;
    }
    static WordPtr make_scale(Rational c, WordPtr a) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::Scale;
        w->coeff = std::move(c);
        w->args = {std::move(a)};
        return w;
    }
    static WordPtr make_sum(std::vector<WordPtr> terms, int m, int n) {
        auto w = std::make_shared<GeneratorWord>();
        w->kind = Kind::Sum;
        w->biarity = {m, n};
        w->args = std::move(terms);
        return w;
    }
};

// Value of a word: a biarity plus an element of that prop component.
struct PropElement {
    Biarity at{0, 0};
    SparseVec value;
};

// Evaluate w in p under the given generator assignment. Throws ArityMismatch
// on inconsistent arities, TruncationExceeded when a node leaves the bound.
PropElement evaluate_word(const GeneratorWord& w, const Prop& p,
                          const std::vector<PropElement>& assignment);

}  // namespace propcalc
