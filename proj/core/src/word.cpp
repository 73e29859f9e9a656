#include "propcalc/word.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

PropElement evaluate_word(const GeneratorWord& w, const Prop& p,
                          const std::vector<PropElement>& assignment) {
    switch (w.kind) {
        case GeneratorWord::Kind::Gen:
            if (w.gen < 0 || w.gen >= static_cast<int>(assignment.size()))
                throw Error(ErrorKind::ArityMismatch,
                            "generator index " + std::to_string(w.gen) + " unassigned");
            return assignment[static_cast<size_t>(w.gen)];
        case GeneratorWord::Kind::Unit:
            p.require(w.arity, w.arity);
            return {{w.arity, w.arity}, p.unit(w.arity)};
        case GeneratorWord::Kind::Zero:
            p.require(w.biarity.m, w.biarity.n);
            return {w.biarity, {}};
        case GeneratorWord::Kind::VComp: {
            PropElement a = evaluate_word(*w.args[0], p, assignment);
            PropElement b = evaluate_word(*w.args[1], p, assignment);
            if (a.at.m != b.at.n)
                throw Error(ErrorKind::ArityMismatch,
                            "vertical composition interface " + std::to_string(a.at.m) +
                                " != " + std::to_string(b.at.n));
            p.require(b.at.m, a.at.n);
            return {{b.at.m, a.at.n},
                    p.vcomp(b.at.m, a.at.m, a.at.n, a.value, b.value)};
        }
        case GeneratorWord::Kind::HComp: {
            PropElement a = evaluate_word(*w.args[0], p, assignment);
            PropElement b = evaluate_word(*w.args[1], p, assignment);
            p.require(a.at.m + b.at.m, a.at.n + b.at.n);
            return {{a.at.m + b.at.m, a.at.n + b.at.n},
                    p.hcomp(a.at.m, a.at.n, b.at.m, b.at.n, a.value, b.value)};
        }
        case GeneratorWord::Kind::LeftPerm: {
            PropElement a = evaluate_word(*w.args[0], p, assignment);
            if (static_cast<int>(w.perm.size()) != a.at.n)
                throw Error(ErrorKind::ArityMismatch, "left permutation size mismatch");
            return {a.at, p.left_action(a.at.m, a.at.n, w.perm).apply(a.value)};
        }
        case GeneratorWord::Kind::RightPerm: {
            PropElement a = evaluate_word(*w.args[0], p, assignment);
            if (static_cast<int>(w.perm.size()) != a.at.m)
                throw Error(ErrorKind::ArityMismatch, "right permutation size mismatch");
            return {a.at, p.right_action(a.at.m, a.at.n, w.perm).apply(a.value)};
        }
        case GeneratorWord::Kind::Scale: {
            PropElement a = evaluate_word(*w.args[0], p, assignment);
            sv_scale(a.value, w.coeff);
            return a;
        }
        case GeneratorWord::Kind::Sum: {
            PropElement out{w.biarity, {}};
            for (const auto& t : w.args) {
                PropElement a = evaluate_word(*t, p, assignment);
                if (!(a.at == out.at))
                    throw Error(ErrorKind::ArityMismatch, "sum of mismatched biarities");
                sv_axpy(out.value, 1, a.value);
            }
            return out;
        }
    }
    throw Error(ErrorKind::Internal, "unreachable word kind");
}

}  // namespace propcalc
