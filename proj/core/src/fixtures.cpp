#include "propcalc/fixtures.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

PermProp::PermProp(BiarityBound bound) : Prop(bound) {
    for (Biarity b : bound.components()) {
        if (b.m != b.n) {
            comps_.emplace(b, ChainComplex::make({}, {}));
            continue;
        }
        auto& ps = perms_.try_emplace(b.n, all_perms(b.n)).first->second;
        std::vector<std::string> labels;
        for (const Perm& q : ps) {
            std::string l = "s";
            for (int i : q) l += std::to_string(i);
            labels.push_back(std::move(l));
        }
        comps_.emplace(b, ChainComplex::make({{0, std::move(labels)}}, {}));
    }
}

const Perm& PermProp::perm_of(int n, int idx) const {
    return perms_.at(n)[static_cast<size_t>(idx)];
}

int PermProp::index_of(const Perm& q) const {
    const auto& ps = perms_.at(static_cast<int>(q.size()));
    for (size_t i = 0; i < ps.size(); ++i)
        if (ps[i] == q) return static_cast<int>(i);
    throw Error(ErrorKind::Internal, "PermProp: unknown permutation");
}

const ChainComplex& PermProp::component(int m, int n) const {
    require(m, n);
    return comps_.at({m, n});
}

SparseVec PermProp::vcomp_basis(int m, int k, int n, int a, int b) const {
    require(m, n);
    (void)k;
    // Nonzero inputs exist only when m = k = n; "a after b" is the product.
    return sv_single(index_of(perm_compose(perm_of(n, a), perm_of(m, b))), 1);
}

SparseVec PermProp::hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const {
    require(m1 + m2, n1 + n2);
    const Perm& pa = perm_of(n1, a);
    const Perm& pb = perm_of(n2, b);
    Perm q(static_cast<size_t>(n1 + n2));
    for (int i = 0; i < n1; ++i) q[static_cast<size_t>(i)] = pa[static_cast<size_t>(i)];
    for (int i = 0; i < n2; ++i) q[static_cast<size_t>(n1 + i)] = n1 + pb[static_cast<size_t>(i)];
    return sv_single(index_of(q), 1);
}

SparseVec PermProp::unit(int n) const {
    require(n, n);
    return sv_single(index_of(perm_identity(n)), 1);
}

SparseMatrix PermProp::right_action(int m, int n, const Perm& sigma) const {
    SparseMatrix out(dim(m, n), dim(m, n));
    for (int a = 0; a < dim(m, n); ++a)
        out.set(index_of(perm_compose(perm_of(n, a), sigma)), a, 1);
    return out;
}

SparseMatrix PermProp::left_action(int m, int n, const Perm& tau) const {
    SparseMatrix out(dim(m, n), dim(m, n));
    for (int a = 0; a < dim(m, n); ++a)
        out.set(index_of(perm_compose(tau, perm_of(n, a))), a, 1);
    return out;
}

std::shared_ptr<const PermProp> make_perm_prop(BiarityBound bound) {
    return std::make_shared<PermProp>(bound);
}

QuasiFreePresentation perm_prop_presentation(const PermProp& p) {
    QuasiFreePresentation pres;
    for (Biarity b : p.bound().components()) {
        std::vector<WordPtr> ws;
        for (int i = 0; i < p.dim(b.m, b.n); ++i)
            ws.push_back(GeneratorWord::make_right_perm(GeneratorWord::make_unit(b.n),
                                                        p.perm_of(b.n, i)));
        pres.words.emplace(b, std::move(ws));
    }
    return pres;
}

ChainComplex cx_Q() { return ChainComplex::unit("x"); }

ChainComplex cx_Q2() { return ChainComplex::make({{0, {"e1", "e2"}}}, {}); }

ChainComplex cx_two_term() {
    SparseMatrix d(1, 1);
    d.set(0, 0, 1);
    return ChainComplex::make({{1, {"u"}}, {0, {"v"}}}, {{1, d}});
}

ChainComplex cx_h2() { return ChainComplex::make({{1, {"a"}}, {0, {"b", "c"}}}, {}); }

CheckReport check_algebra(const PAlgebra& alg) { return check_prop_morphism(alg.action); }

CheckReport check_algebra_morphism(const PAlgebra& xalg, const PAlgebra& yalg,
                                   const ChainMap& f) {
    CheckReport rep;
    if (!f.commutes_with_d()) {
        rep.add("algebra_morphism", "carrier map", "not a chain map");
        return rep;
    }
    for (Biarity b : xalg.p->bound().components()) {
        int m = b.m, n = b.n;
        std::vector<const ChainMap*> fm(static_cast<size_t>(m), &f);
        std::vector<const ChainMap*> fn(static_cast<size_t>(n), &f);
        SparseMatrix Fm = tensor_map(xalg.end->power(m), yalg.end->power(m), fm).global_matrix();
        SparseMatrix Fn = tensor_map(xalg.end->power(n), yalg.end->power(n), fn).global_matrix();
        for (int g = 0; g < xalg.p->dim(m, n); ++g) {
            SparseMatrix mx =
                xalg.end->hom(m, n).to_matrix(xalg.action.apply(m, n, sv_single(g, 1)));
            SparseMatrix my =
                yalg.end->hom(m, n).to_matrix(yalg.action.apply(m, n, sv_single(g, 1)));
            ++rep.checks_done;
            if (!my.multiply(Fm).equal(Fn.multiply(mx)))
                rep.add("algebra_morphism",
                        "(" + std::to_string(m) + "," + std::to_string(n) + ") basis " +
                            std::to_string(g),
                        "f fails to intertwine the operation");
        }
    }
    return rep;
}

PropMorphism action_from_presentation(const PropPtr& p, const QuasiFreePresentation& pres,
                                      const std::shared_ptr<const EndProp>& end_x,
                                      const std::vector<PropElement>& gen_images) {
    PropMorphism out;
    out.src = p;
    out.tgt = end_x;
    for (Biarity b : p->bound().components()) {
        if (!end_x->bound().contains(b.m, b.n)) continue;
        const ChainComplex& scx = p->component(b.m, b.n);
        const ChainComplex& tcx = end_x->component(b.m, b.n);
        auto it = pres.words.find(b);
        SparseMatrix mat(tcx.total_dim(), scx.total_dim());
        if (it != pres.words.end()) {
            if (static_cast<int>(it->second.size()) != scx.total_dim())
                throw Error(ErrorKind::InconsistentPresentation,
                            "word count mismatch in component (" + std::to_string(b.m) + "," +
                                std::to_string(b.n) + ")");
            for (int g = 0; g < scx.total_dim(); ++g) {
                PropElement e =
                    evaluate_word(*it->second[static_cast<size_t>(g)], *end_x, gen_images);
                if (e.at.m != b.m || e.at.n != b.n)
                    throw Error(ErrorKind::InconsistentPresentation,
                                "word biarity mismatch in component (" + std::to_string(b.m) +
                                    "," + std::to_string(b.n) + ")");
                for (const Term& t : e.value) mat.set(t.idx, g, t.coeff);
            }
        } else if (scx.total_dim() != 0) {
            throw Error(ErrorKind::InconsistentPresentation,
                        "missing words for nonzero component (" + std::to_string(b.m) + "," +
                            std::to_string(b.n) + ")");
        }
        out.maps.emplace(b, ChainMap::from_global(scx, tcx, mat));
    }
    return out;
}

PAlgebra perm_prop_algebra(const std::shared_ptr<const PermProp>& p, const ChainComplex& x) {
    PAlgebra alg;
    alg.p = p;
    alg.carrier = x;
    alg.end = std::make_shared<EndProp>(x, p->bound());
    alg.action.src = p;
    alg.action.tgt = alg.end;
    for (Biarity b : p->bound().components()) {
        const ChainComplex& scx = p->component(b.m, b.n);
        const ChainComplex& tcx = alg.end->component(b.m, b.n);
        SparseMatrix mat(tcx.total_dim(), scx.total_dim());
        for (int a = 0; a < scx.total_dim(); ++a) {
            SparseVec hv = alg.end->hom(b.m, b.n).from_matrix(
                symmetric_power_action(alg.end->power(b.n), p->perm_of(b.n, a)));
            for (const Term& t : hv) mat.set(t.idx, a, t.coeff);
        }
        alg.action.maps.emplace(b, ChainMap::from_global(scx, tcx, mat));
    }
    return alg;
}

namespace {

// μ(e_i ⊗ e_j) = δ_ij e_i as an element of End_X(2,1) for X = ℚ^k.
PAlgebra free21_algebra_on(const Free21Fixture& fx, const ChainComplex& x) {
    PAlgebra alg;
    alg.p = fx.prop;
    alg.carrier = x;
    alg.end = std::make_shared<EndProp>(x, fx.prop->bound());
    const HomComplex& h21 = alg.end->hom(2, 1);
    const TensorComplex& x2 = alg.end->power(2);
    SparseMatrix mu(x.total_dim(), x2.cx.total_dim());
    for (int i = 0; i < x.total_dim(); ++i) {
        int u = x2.index_of.at({i, i});
        mu.set(i, u, 1);
    }
    std::vector<PropElement> images = {
        PropElement{{2, 1}, h21.from_matrix(mu)}};
    alg.action = action_from_presentation(fx.prop, fx.presentation, alg.end, images);
    return alg;
}

}  // namespace

PAlgebra free21_q2_algebra(const Free21Fixture& fx) { return free21_algebra_on(fx, cx_Q2()); }

PAlgebra free21_q_algebra(const Free21Fixture& fx) { return free21_algebra_on(fx, cx_Q()); }

ChainMap q2_swap() {
    ChainComplex q2 = cx_Q2();
    SparseMatrix s(2, 2);
    s.set(0, 1, 1);
    s.set(1, 0, 1);
    return ChainMap::from_global(q2, q2, s);
}

}  // namespace propcalc
