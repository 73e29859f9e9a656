#include "propcalc/lifting.hpp"

#include <memory>
#include <string>

#include "propcalc/error.hpp"
#include "propcalc/evaluation.hpp"
#include "propcalc/fixtures.hpp"
#include "propcalc/pdiagram.hpp"

namespace propcalc {

namespace {

std::string biarity_str(int m, int n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

SparseMatrix global_differential(const ChainComplex& cx) {
    SparseMatrix d(cx.total_dim(), cx.total_dim());
    for (int j = 0; j < cx.total_dim(); ++j)
        for (const Term& t : cx.apply_d(sv_single(j, 1))) d.set(t.idx, j, t.coeff);
    return d;
}

std::string sv_str(const SparseVec& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i].idx) + ": " + v[i].coeff.str();
    }
    return out + "}";
}

// Hom components past this total biarity are not materialized when verifying
// zigzags on concrete algebras: Hom((Z⊗X)^{⊗m}, (Z⊗X)^{⊗n}) grows as
// dim(Z⊗X)^{m+n}.
constexpr int kZigzagTotal = 4;

}  // namespace

CheckReport QuasiFreePresentation::verify(const Prop& p,
                                          const std::vector<PropElement>& gen_values) const {
    CheckReport rep;
    if (gen_values.size() != generators.size()) {
        rep.add("presentation", "generators",
                "value count " + std::to_string(gen_values.size()) + " != generator count " +
                    std::to_string(generators.size()));
        return rep;
    }
    for (size_t i = 0; i < generators.size(); ++i) {
        const Generator& g = generators[i];
        const PropElement& val = gen_values[i];
        ++rep.checks_done;
        if (val.at != g.at) {
            rep.add("presentation", g.label, "value biarity mismatch");
            continue;
        }
        if (p.component(g.at.m, g.at.n).total_dim() == 0) continue;
        SparseVec dv = p.component(g.at.m, g.at.n).apply_d(val.value);
        SparseVec dw;
        if (g.dword) {
            PropElement de = evaluate_word(*g.dword, p, gen_values);
            if (de.at != g.at) {
                rep.add("presentation", g.label, "differential word biarity mismatch");
                continue;
            }
            dw = de.value;
        }
        ++rep.checks_done;
        if (!sv_equal(dv, dw))
            rep.add("presentation", g.label, "differential word does not evaluate to d(g)");
    }
    for (const auto& [b, ws] : words) {
        const ChainComplex& cx = p.component(b.m, b.n);
        if (static_cast<int>(ws.size()) != cx.total_dim()) {
            rep.add("presentation", biarity_str(b.m, b.n), "word count differs from dimension");
            continue;
        }
        for (int i = 0; i < cx.total_dim(); ++i) {
            ++rep.checks_done;
            PropElement e = evaluate_word(*ws[static_cast<size_t>(i)], p, gen_values);
            if (e.at != b || !sv_equal(e.value, sv_single(i, 1)))
                rep.add("presentation", biarity_str(b.m, b.n),
                        "word for basis element " + std::to_string(i) +
                            " does not reproduce it");
        }
    }
    for (Biarity b : p.bound().components())
        if (p.dim(b.m, b.n) > 0 && !words.count(b))
            rep.add("presentation", biarity_str(b.m, b.n), "missing words for nonzero component");
    return rep;
}

PropMorphism extend_by_words(const PropPtr& p, const QuasiFreePresentation& pres,
                             const PropPtr& e, const std::vector<PropElement>& gen_values) {
    PropMorphism out;
    out.src = p;
    out.tgt = e;
    for (Biarity b : p->bound().components()) {
        const ChainComplex& scx = p->component(b.m, b.n);
        const ChainComplex& tcx = e->component(b.m, b.n);
        SparseMatrix mat(tcx.total_dim(), scx.total_dim());
        if (scx.total_dim() > 0) {
            const auto& ws = pres.words.at(b);
            for (int i = 0; i < scx.total_dim(); ++i) {
                PropElement v = evaluate_word(*ws[static_cast<size_t>(i)], *e, gen_values);
                for (const Term& t : v.value) mat.set(t.idx, i, t.coeff);
            }
        }
        out.maps.emplace(b, ChainMap::from_global(scx, tcx, mat));
    }
    return out;
}

LiftResult lift(const LiftProblem& problem) {
    if (!problem.presentation)
        throw Error(ErrorKind::InconsistentPresentation, "lift: no presentation supplied");
    const QuasiFreePresentation& pres = *problem.presentation;
    const Prop& e_prop = *problem.q.src;

    LiftResult out;
    out.report.merge(pres.verify(*problem.p, problem.gen_values_in_p));
    if (!out.report.ok())
        throw Error(ErrorKind::InconsistentPresentation,
                    "lift: presentation fails verification against the source prop");

    for (size_t gi = 0; gi < pres.generators.size(); ++gi) {
        const auto& g = pres.generators[gi];
        int m = g.at.m, n = g.at.n;
        const PropElement& gp = problem.gen_values_in_p[gi];
        SparseVec bg = problem.b.apply(m, n, gp.value);
        SparseVec dw;
        if (g.dword) {
            PropElement de = evaluate_word(*g.dword, e_prop, out.gen_values);
            if (de.at != g.at)
                throw Error(ErrorKind::InconsistentPresentation,
                            "lift: differential word of " + g.label + " has wrong biarity");
            dw = de.value;
        }
        const ChainComplex& ecx = e_prop.component(m, n);
        const ChainComplex& bcx = problem.b.tgt->component(m, n);
        SparseMatrix qm = problem.q.at(m, n).global_matrix();
        SparseMatrix dm = global_differential(ecx);

        // Unknowns: the degree-|g| slice of E(m,n). Stack q over d.
        std::vector<int> sel;
        for (int j = 0; j < ecx.total_dim(); ++j)
            if (ecx.degree_of(j) == g.degree) sel.push_back(j);
        int rb = bcx.total_dim();
        SparseMatrix sys(rb + ecx.total_dim(), static_cast<int>(sel.size()));
        for (int c = 0; c < static_cast<int>(sel.size()); ++c) {
            for (const Term& t : qm.col(sel[static_cast<size_t>(c)])) sys.set(t.idx, c, t.coeff);
            for (const Term& t : dm.col(sel[static_cast<size_t>(c)]))
                sys.set(rb + t.idx, c, t.coeff);
        }
        SparseVec rhs = bg;
        for (const Term& t : dw) rhs.push_back({rb + t.idx, t.coeff});

        std::optional<SparseVec> sol = sys.solve(rhs);
        if (!sol) {
            auto cert = sys.infeasibility_certificate(rhs);
            throw Error(ErrorKind::NoSolution,
                        "lift: no solution for generator " + g.label + " at " +
                            biarity_str(m, n) + "; annihilating functional " +
                            (cert ? sv_str(*cert) : std::string("unavailable")) +
                            " (rows 0.." + std::to_string(rb - 1) + ": target basis, rows " +
                            std::to_string(rb) + "+: differential constraints)");
        }
        // Canonical representative: reduce against the echelonized kernel so
        // the result is independent of the solver's pivot choices.
        Echelon ker;
        for (const SparseVec& k : sys.kernel_basis()) ker.insert(k);
        SparseVec xsel = ker.residual(*sol);
        SparseVec x;
        for (const Term& t : xsel) x.push_back({sel[static_cast<size_t>(t.idx)], t.coeff});
        out.gen_values.push_back({g.at, sv_normalized(std::move(x))});
    }

    out.lift = extend_by_words(problem.p, pres, problem.q.src, out.gen_values);

    for (Biarity b : problem.p->bound().components()) {
        ++out.report.checks_done;
        ChainMap ql = problem.q.at(b.m, b.n).compose(out.lift.at(b.m, b.n));
        if (!ql.global_matrix().equal(problem.b.at(b.m, b.n).global_matrix()))
            out.report.add("lift_commutes", biarity_str(b.m, b.n), "q ∘ l differs from b");
    }
    out.report.merge(check_prop_morphism(out.lift));
    return out;
}

namespace {

// Split an element of End_{𝒴(P)}(m,n) into its four constituents: the P part,
// the End_{Z(P)} part, and the P₀/P₁ parts.
struct CalYParts {
    SparseVec p, e, a0, a1;
};

CalYParts split_caly(const PDiagramSuite& s, int m, int n, const SparseVec& v) {
    CalYParts out;
    if (v.empty()) return out;
    SparseVec cz;
    for (const Term& t : s.end_calyp->include(m, n, v)) {
        auto [f, fi] = s.amb_caly->to_factor(m, n, t.idx);
        (f == 0 ? out.p : cz).push_back({fi, t.coeff});
    }
    sv_normalize(cz);
    if (!cz.empty())
        for (const Term& t : s.end_calzp->include(m, n, cz)) {
            auto [f, fi] = s.amb_calz->to_factor(m, n, t.idx);
            if (f == 0)
                out.e.push_back({fi, t.coeff});
            else if (f == 1)
                out.a0.push_back({fi, t.coeff});
            else
                out.a1.push_back({fi, t.coeff});
        }
    sv_normalize(out.p);
    sv_normalize(out.e);
    sv_normalize(out.a0);
    sv_normalize(out.a1);
    return out;
}

SparseMatrix power_matrix(const TensorComplex& src, const TensorComplex& dst, const ChainMap& f,
                          int k) {
    std::vector<const ChainMap*> copies(static_cast<size_t>(k), &f);
    return tensor_map(src, dst, copies).global_matrix();
}

}  // namespace

Zigzag functorial_path_action(const PDiagramSuite& suite, const PropMorphism& l,
                              const ChainComplex& x, const PropMorphism& action) {
    Zigzag out;
    out.x = x;

    BiarityBound zb = suite.p->bound();
    if (zb.total < 0 || zb.total > kZigzagTotal) zb.total = kZigzagTotal;

    PAlgebra alg;
    alg.p = suite.p;
    alg.carrier = x;
    alg.end = std::make_shared<EndProp>(x, suite.p->bound());
    alg.action = action;

    ZXComplex zxc = make_zx(suite, x, zb);
    out.zx = zxc.zx.cx;
    out.s = ChainMap::from_global(x, out.zx, zxc.sx);
    out.d0 = ChainMap::from_global(out.zx, x, zxc.d0x);
    out.d1 = ChainMap::from_global(out.zx, x, zxc.d1x);

    auto end_zx = std::make_shared<EndProp>(out.zx, zb);
    out.action_x0.src = suite.p;
    out.action_x0.tgt = alg.end;
    out.action_x1 = out.action_x0;
    out.action_zx.src = suite.p;
    out.action_zx.tgt = end_zx;

    for (Biarity b : suite.p->bound().components()) {
        int m = b.m, n = b.n;
        if (!zb.contains(m, n)) {
            out.report.skipped.push_back("component " + biarity_str(m, n) +
                                         " (beyond the zigzag verification bound)");
            continue;
        }
        const ChainComplex& scx = suite.p->component(m, n);
        const ChainComplex& endx_cx = alg.end->component(m, n);
        const ChainComplex& endz_cx = end_zx->component(m, n);
        SparseMatrix m0(endx_cx.total_dim(), scx.total_dim());
        SparseMatrix m1(endx_cx.total_dim(), scx.total_dim());
        SparseMatrix mz(endz_cx.total_dim(), scx.total_dim());

        SparseMatrix d0m = power_matrix(zxc.powers.at(m).powm, alg.end->power(m), out.d0, m);
        SparseMatrix d0n = power_matrix(zxc.powers.at(n).powm, alg.end->power(n), out.d0, n);
        SparseMatrix d1m = power_matrix(zxc.powers.at(m).powm, alg.end->power(m), out.d1, m);
        SparseMatrix d1n = power_matrix(zxc.powers.at(n).powm, alg.end->power(n), out.d1, n);
        SparseMatrix sm = power_matrix(alg.end->power(m), zxc.powers.at(m).powm, out.s, m);
        SparseMatrix sn = power_matrix(alg.end->power(n), zxc.powers.at(n).powm, out.s, n);

        for (int i = 0; i < scx.total_dim(); ++i) {
            CalYParts parts = split_caly(suite, m, n, l.apply(m, n, sv_single(i, 1)));
            auto act = [&](const SparseVec& pv) {
                SparseVec av;
                for (const Term& t : pv)
                    sv_axpy(av, t.coeff, action.apply(m, n, sv_single(t.idx, 1)));
                return av;
            };
            SparseVec a0 = act(parts.a0);
            SparseVec a1 = act(parts.a1);
            SparseVec ax = act(sv_single(i, 1));
            SparseMatrix az = ev_z_matrix(suite, alg, zxc, m, n, parts.e);
            for (const Term& t : a0) m0.set(t.idx, i, t.coeff);
            for (const Term& t : a1) m1.set(t.idx, i, t.coeff);
            for (const Term& t : end_zx->hom(m, n).from_matrix(az)) mz.set(t.idx, i, t.coeff);

            ++out.report.checks_done;
            if (!sv_equal(a0, ax))
                throw Error(ErrorKind::ZigzagViolation,
                            "vertex action on X0 differs from the input action at " +
                                biarity_str(m, n) + ", basis " + std::to_string(i));
            ++out.report.checks_done;
            if (!sv_equal(a1, ax))
                throw Error(ErrorKind::ZigzagViolation,
                            "vertex action on X1 differs from the input action at " +
                                biarity_str(m, n) + ", basis " + std::to_string(i));
            SparseMatrix axm = alg.end->hom(m, n).to_matrix(ax);
            ++out.report.checks_done;
            if (!d0n.multiply(az).equal(axm.multiply(d0m)))
                throw Error(ErrorKind::ZigzagViolation, "d0 does not commute with operation " +
                                                            std::to_string(i) + " at " +
                                                            biarity_str(m, n));
            ++out.report.checks_done;
            if (!d1n.multiply(az).equal(axm.multiply(d1m)))
                throw Error(ErrorKind::ZigzagViolation, "d1 does not commute with operation " +
                                                            std::to_string(i) + " at " +
                                                            biarity_str(m, n));
            ++out.report.checks_done;
            if (!az.multiply(sm).equal(sn.multiply(axm)))
                throw Error(ErrorKind::ZigzagViolation, "s does not commute with operation " +
                                                            std::to_string(i) + " at " +
                                                            biarity_str(m, n));
        }
        out.action_x0.maps.emplace(b, ChainMap::from_global(scx, endx_cx, m0));
        out.action_x1.maps.emplace(b, ChainMap::from_global(scx, endx_cx, m1));
        out.action_zx.maps.emplace(b, ChainMap::from_global(scx, endz_cx, mz));
    }

    ++out.report.checks_done;
    if (!out.d0.is_quasi_iso())
        out.report.add("zigzag", "d0", "d0 ⊗ id is not a quasi-isomorphism");
    ++out.report.checks_done;
    if (!out.d1.is_quasi_iso())
        out.report.add("zigzag", "d1", "d1 ⊗ id is not a quasi-isomorphism");
    return out;
}

CheckReport verify_homotopy_zigzag(const PDiagramSuite& suite, const PropMorphism& m,
                                   const PropMorphism& phi, const PropMorphism& psi,
                                   const ChainComplex& x, const PropMorphism& action) {
    CheckReport rep;

    // u* ∘ m = (φ, ψ), componentwise.
    for (Biarity b : suite.p->bound().components()) {
        ChainMap lhs = suite.u_star.at(b.m, b.n).compose(m.at(b.m, b.n));
        const ChainComplex& scx = suite.p->component(b.m, b.n);
        SparseMatrix rhs(suite.p0p1->component(b.m, b.n).total_dim(), scx.total_dim());
        for (int i = 0; i < scx.total_dim(); ++i) {
            for (const Term& t : phi.apply(b.m, b.n, sv_single(i, 1)))
                rhs.set(suite.p0p1->from_factor(b.m, b.n, 0, t.idx), i, t.coeff);
            for (const Term& t : psi.apply(b.m, b.n, sv_single(i, 1)))
                rhs.set(suite.p0p1->from_factor(b.m, b.n, 1, t.idx), i, t.coeff);
        }
        ++rep.checks_done;
        if (!lhs.global_matrix().equal(rhs))
            throw Error(ErrorKind::CompatibilityFailure,
                        "u* ∘ m differs from (φ, ψ) at " + biarity_str(b.m, b.n));
    }

    BiarityBound zb = suite.p->bound();
    if (zb.total < 0 || zb.total > kZigzagTotal) zb.total = kZigzagTotal;

    PAlgebra alg;
    alg.p = suite.p;
    alg.carrier = x;
    alg.end = std::make_shared<EndProp>(x, suite.p->bound());
    alg.action = action;
    ZXComplex zxc = make_zx(suite, x, zb);
    ChainMap d0 = ChainMap::from_global(zxc.zx.cx, x, zxc.d0x);
    ChainMap d1 = ChainMap::from_global(zxc.zx.cx, x, zxc.d1x);

    // Natural-transformation components at X: d0 ⊗ id toward φ*(X) and
    // d1 ⊗ id toward ψ*(X), with their weak-equivalence verdicts.
    ++rep.checks_done;
    if (x.total_dim() > 0 && !d0.is_quasi_iso())
        rep.add("homotopy_zigzag", "d0", "component toward φ*(X) is not a weak equivalence");
    ++rep.checks_done;
    if (x.total_dim() > 0 && !d1.is_quasi_iso())
        rep.add("homotopy_zigzag", "d1", "component toward ψ*(X) is not a weak equivalence");

    for (Biarity b : suite.p->bound().components()) {
        int mm = b.m, nn = b.n;
        if (!zb.contains(mm, nn)) {
            rep.skipped.push_back("component " + biarity_str(mm, nn) +
                                  " (beyond the zigzag verification bound)");
            continue;
        }
        const ChainComplex& scx = suite.p->component(mm, nn);
        SparseMatrix d0m = power_matrix(zxc.powers.at(mm).powm, alg.end->power(mm), d0, mm);
        SparseMatrix d0n = power_matrix(zxc.powers.at(nn).powm, alg.end->power(nn), d0, nn);
        SparseMatrix d1m = power_matrix(zxc.powers.at(mm).powm, alg.end->power(mm), d1, mm);
        SparseMatrix d1n = power_matrix(zxc.powers.at(nn).powm, alg.end->power(nn), d1, nn);
        for (int i = 0; i < scx.total_dim(); ++i) {
            SparseVec mv = m.apply(mm, nn, sv_single(i, 1));
            SparseVec ev;
            if (!mv.empty())
                for (const Term& t : suite.end_calzp->include(mm, nn, mv)) {
                    auto [f, fi] = suite.amb_calz->to_factor(mm, nn, t.idx);
                    if (f == 0) ev.push_back({fi, t.coeff});
                }
            SparseMatrix az = ev_z_matrix(suite, alg, zxc, mm, nn, sv_normalized(std::move(ev)));
            auto act_matrix = [&](const PropMorphism& g) {
                SparseVec av;
                for (const Term& t : g.apply(mm, nn, sv_single(i, 1)))
                    sv_axpy(av, t.coeff, action.apply(mm, nn, sv_single(t.idx, 1)));
                return alg.end->hom(mm, nn).to_matrix(av);
            };
            ++rep.checks_done;
            if (!d0n.multiply(az).equal(act_matrix(phi).multiply(d0m)))
                rep.add("homotopy_zigzag", biarity_str(mm, nn),
                        "d0 is not a morphism toward φ*(X) on basis " + std::to_string(i));
            ++rep.checks_done;
            if (!d1n.multiply(az).equal(act_matrix(psi).multiply(d1m)))
                rep.add("homotopy_zigzag", biarity_str(mm, nn),
                        "d1 is not a morphism toward ψ*(X) on basis " + std::to_string(i));
        }
    }
    return rep;
}

}  // namespace propcalc
