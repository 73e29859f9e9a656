#include "propcalc/evaluation.hpp"
#include <memory>
#include <set>

#include "propcalc/error.hpp"

namespace propcalc {

namespace {

// Coefficient vector of a rank-one functional Z → ℚ on the letter basis.
std::vector<Rational> functional_coefs(const SparseMatrix& g, int zdim) {
    std::vector<Rational> out(static_cast<size_t>(zdim), Rational(0));
    for (int l = 0; l < zdim; ++l)
        for (const Term& t : g.col(l)) out[static_cast<size_t>(l)] = t.coeff;
    return out;
}

std::string biarity_str(int m, int n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

ZXComplex make_zx(const PDiagramSuite& s, const ChainComplex& x, BiarityBound bound) {
    ZXComplex out;
    out.zx = tensor_list({&s.zd.z, &x});
    int zdim = s.zd.z.total_dim();
    int xdim = x.total_dim();
    int zxdim = out.zx.cx.total_dim();

    std::vector<Rational> c0 = functional_coefs(s.zd.d0.global_matrix(), zdim);
    std::vector<Rational> c1 = functional_coefs(s.zd.d1.global_matrix(), zdim);
    std::vector<Rational> sc(static_cast<size_t>(zdim), Rational(0));
    SparseMatrix smat = s.zd.s.global_matrix();
    for (const Term& t : smat.col(0)) sc[static_cast<size_t>(t.idx)] = t.coeff;

    out.d0x = SparseMatrix(xdim, zxdim);
    out.d1x = SparseMatrix(xdim, zxdim);
    out.sx = SparseMatrix(zxdim, xdim);
    for (int g = 0; g < zxdim; ++g) {
        int zl = out.zx.word_of[static_cast<size_t>(g)][0];
        int xl = out.zx.word_of[static_cast<size_t>(g)][1];
        if (c0[static_cast<size_t>(zl)] != 0) out.d0x.set(xl, g, c0[static_cast<size_t>(zl)]);
        if (c1[static_cast<size_t>(zl)] != 0) out.d1x.set(xl, g, c1[static_cast<size_t>(zl)]);
    }
    for (int xl = 0; xl < xdim; ++xl)
        for (int zl = 0; zl < zdim; ++zl)
            if (sc[static_cast<size_t>(zl)] != 0)
                out.sx.set(out.zx.index_of.at({zl, xl}), xl, sc[static_cast<size_t>(zl)]);

    std::set<int> exps;
    for (Biarity b : s.p->bound().components())
        if (bound.contains(b.m, b.n)) {
            exps.insert(b.m);
            exps.insert(b.n);
        }
    for (int e : exps) {
        if (e < 1) continue;
        ZXComplex::Power pw;
        pw.powm = tensor_power(out.zx.cx, e);
        pw.zm = tensor_power(s.zd.z, e);
        pw.xm = tensor_power(x, e);
        pw.pair = tensor_list({&pw.zm.cx, &pw.xm.cx});
        pw.split = SparseMatrix(pw.pair.cx.total_dim(), pw.powm.cx.total_dim());
        pw.unsplit = SparseMatrix(pw.powm.cx.total_dim(), pw.pair.cx.total_dim());
        for (int g = 0; g < pw.powm.cx.total_dim(); ++g) {
            const std::vector<int>& w = pw.powm.word_of[static_cast<size_t>(g)];
            std::vector<int> zw(w.size()), xw(w.size());
            // Koszul sign of the unshuffle (z1 x1 … zm xm) → (z1 … zm x1 … xm):
            // each x_i moves past z_{i+1}, …, z_m.
            long sgn = 0;
            long ztail = 0;
            for (size_t i = 0; i < w.size(); ++i)
                ztail += s.zd.z.degree_of(out.zx.word_of[static_cast<size_t>(w[i])][0]);
            for (size_t i = 0; i < w.size(); ++i) {
                zw[i] = out.zx.word_of[static_cast<size_t>(w[i])][0];
                xw[i] = out.zx.word_of[static_cast<size_t>(w[i])][1];
                ztail -= s.zd.z.degree_of(zw[i]);
                sgn += static_cast<long>(x.degree_of(xw[i])) * ztail;
            }
            int zg = pw.zm.index_of.at(zw);
            int xg = pw.xm.index_of.at(xw);
            int pi = pw.pair.index_of.at({zg, xg});
            Rational c = (sgn % 2 == 0) ? 1 : -1;
            pw.split.set(pi, g, c);
            pw.unsplit.set(g, pi, c);
        }
        out.powers.emplace(e, std::move(pw));
    }
    return out;
}

DiagramShape shape_of([[maybe_unused]] const PDiagramSuite& s, const ZXComplex* zxc,
                      const ChainComplex& x, DiagramTag tag) {
    DiagramShape d;
    ChainMap id_x = ChainMap::identity(x);
    switch (tag) {
        case DiagramTag::V: {
            int vx = d.add_object("X", x);
            int v0 = d.add_object("X0", x);
            int v1 = d.add_object("X1", x);
            d.add_arrow(vx, v0, "i0", ChainMap::from_global(x, x, id_x.global_matrix()));
            d.add_arrow(vx, v1, "i1", ChainMap::from_global(x, x, id_x.global_matrix()));
            break;
        }
        case DiagramTag::T: {
            d.add_object("X0", x);
            d.add_object("X1", x);
            break;
        }
        case DiagramTag::CalZ: {
            if (!zxc) throw Error(ErrorKind::Internal, "shape_of: Z(X) data required");
            int v0 = d.add_object("X0", x);
            int vz = d.add_object("ZX", zxc->zx.cx);
            int v1 = d.add_object("X1", x);
            d.add_arrow(vz, v0, "d0", ChainMap::from_global(zxc->zx.cx, x, zxc->d0x));
            d.add_arrow(vz, v1, "d1", ChainMap::from_global(zxc->zx.cx, x, zxc->d1x));
            break;
        }
        case DiagramTag::CalY: {
            if (!zxc) throw Error(ErrorKind::Internal, "shape_of: Z(X) data required");
            int vx = d.add_object("X", x);
            int v0 = d.add_object("X0", x);
            int vz = d.add_object("ZX", zxc->zx.cx);
            int v1 = d.add_object("X1", x);
            d.add_arrow(vx, v0, "i0", ChainMap::from_global(x, x, id_x.global_matrix()));
            d.add_arrow(vx, v1, "i1", ChainMap::from_global(x, x, id_x.global_matrix()));
            d.add_arrow(vx, vz, "s", ChainMap::from_global(x, zxc->zx.cx, zxc->sx));
            d.add_arrow(vz, v0, "d0", ChainMap::from_global(zxc->zx.cx, x, zxc->d0x));
            d.add_arrow(vz, v1, "d1", ChainMap::from_global(zxc->zx.cx, x, zxc->d1x));
            break;
        }
        case DiagramTag::Z:
            throw Error(ErrorKind::Internal, "shape_of: Z(X) is not a diagram tag");
    }
    d.validate();
    return d;
}

namespace {

// Global matrix (Z⊗X)^{⊗m} → (Z⊗X)^{⊗n} of the evaluation of one basis
// element of End_{Z(P)}(m,n): the Z-decoration acts on the Z legs, the
// P-part acts on the X legs through the algebra action, interleaved with the
// Koszul sign (f⊗g)(z⊗x) = (-1)^{|g||z|} f(z)⊗g(x).
SparseMatrix ev_z_basis_matrix(const PDiagramSuite& s, const PAlgebra& alg, const ZXComplex& zxc,
                               int m, int n, int idx) {
    auto [ae, ap] = s.end_zp->factors_of(m, n, idx);
    SparseMatrix me = s.end_z->hom(m, n).to_matrix(sv_single(ae, 1));
    SparseMatrix ma = alg.end->hom(m, n).to_matrix(alg.action.apply(m, n, sv_single(ap, 1)));
    const ZXComplex::Power& pm = zxc.powers.at(m);
    const ZXComplex::Power& pn = zxc.powers.at(n);
    SparseMatrix pairmat(pn.pair.cx.total_dim(), pm.pair.cx.total_dim());
    for (int g = 0; g < pm.pair.cx.total_dim(); ++g) {
        const std::vector<int>& w = pm.pair.word_of[static_cast<size_t>(g)];
        int zu = w[0], xu = w[1];
        long zdeg = pm.zm.cx.degree_of(zu);
        long xudeg = pm.xm.cx.degree_of(xu);
        for (const Term& tz : me.col(zu))
            for (const Term& tx : ma.col(xu)) {
                long gdeg = pn.xm.cx.degree_of(tx.idx) - xudeg;
                Rational c = tz.coeff * tx.coeff;
                if (((gdeg * zdeg) % 2 + 2) % 2 == 1) c = -c;
                pairmat.set(pn.pair.index_of.at({tz.idx, tx.idx}), g, c);
            }
    }
    return pn.unsplit.multiply(pairmat).multiply(pm.split);
}

// Express an ambient product element of a diagram endomorphism prop in the
// equalizer basis, asserting membership.
SparseVec to_equalizer(const DiagramEndProp& d, int m, int n, const SparseVec& pv,
                       const char* what) {
    if (!d.prop->contains(m, n, pv))
        throw Error(ErrorKind::Internal,
                    std::string(what) + ": evaluated family escapes the equalizer at " +
                        biarity_str(m, n));
    return d.prop->restrict(m, n, pv);
}

// Push a factor-component vector into a product component.
void add_factor_vec(const ProductProp& prod, int m, int n, int f, const SparseVec& v,
                    SparseVec& out) {
    for (const Term& t : v) out.push_back({prod.from_factor(m, n, f, t.idx), t.coeff});
}

}  // namespace

SparseMatrix ev_z_matrix(const PDiagramSuite& s, const PAlgebra& alg, const ZXComplex& zxc,
                         int m, int n, const SparseVec& v) {
    int cols = zxc.powers.at(m).powm.cx.total_dim();
    int rows = zxc.powers.at(n).powm.cx.total_dim();
    std::vector<SparseVec> acc(static_cast<size_t>(cols));
    for (const Term& t : v) {
        SparseMatrix mb = ev_z_basis_matrix(s, alg, zxc, m, n, t.idx);
        for (int c = 0; c < cols; ++c) sv_axpy(acc[static_cast<size_t>(c)], t.coeff, mb.col(c));
    }
    SparseMatrix out(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (const Term& t : acc[static_cast<size_t>(c)]) out.set(t.idx, c, t.coeff);
    return out;
}

EvaluationMorphism build_ev(const PDiagramSuite& s, const PAlgebra& alg, DiagramTag tag,
                            BiarityBound bound) {
    EvaluationMorphism out;
    out.tag = tag;
    const ChainComplex& x = alg.carrier;

    std::vector<Biarity> comps;
    for (Biarity b : s.p->bound().components())
        if (bound.contains(b.m, b.n)) comps.push_back(b);

    bool needs_zx = tag == DiagramTag::Z || tag == DiagramTag::CalZ || tag == DiagramTag::CalY;
    if (needs_zx) out.zxc = std::make_shared<ZXComplex>(make_zx(s, x, bound));

    if (tag == DiagramTag::Z) {
        auto end_zx = std::make_shared<EndProp>(out.zxc->zx.cx, bound);
        out.end_zx = end_zx;
        out.ev.src = s.end_zp;
        out.ev.tgt = end_zx;
        for (Biarity b : comps) {
            const ChainComplex& src = s.end_zp->component(b.m, b.n);
            const ChainComplex& tgt = end_zx->component(b.m, b.n);
            const HomComplex& h = end_zx->hom(b.m, b.n);
            SparseMatrix mat(tgt.total_dim(), src.total_dim());
            for (int i = 0; i < src.total_dim(); ++i)
                for (const Term& t :
                     h.from_matrix(ev_z_basis_matrix(s, alg, *out.zxc, b.m, b.n, i)))
                    mat.set(t.idx, i, t.coeff);
            out.ev.maps.emplace(b, ChainMap::from_global(src, tgt, mat));
        }
        return out;
    }

    auto diag = std::make_shared<DiagramEndProp>(
        diagram_endomorphism_prop(shape_of(s, out.zxc.get(), x, tag), bound));
    out.diagram = diag;
    out.ev.tgt = diag->prop;

    // Vertex index of each role in the shape built by shape_of.
    int vert_x = -1, vert_0 = -1, vert_z = -1, vert_1 = -1;
    switch (tag) {
        case DiagramTag::V: vert_x = 0; vert_0 = 1; vert_1 = 2; break;
        case DiagramTag::T: vert_0 = 0; vert_1 = 1; break;
        case DiagramTag::CalZ: vert_0 = 0; vert_z = 1; vert_1 = 2; break;
        case DiagramTag::CalY: vert_x = 0; vert_0 = 1; vert_z = 2; vert_1 = 3; break;
        case DiagramTag::Z: break;
    }

    switch (tag) {
        case DiagramTag::V: out.ev.src = s.p; break;
        case DiagramTag::T: out.ev.src = s.p0p1; break;
        case DiagramTag::CalZ: out.ev.src = s.end_calzp; break;
        case DiagramTag::CalY: out.ev.src = s.end_calyp; break;
        case DiagramTag::Z: break;
    }

    for (Biarity b : comps) {
        int m = b.m, n = b.n;
        const ChainComplex& src = out.ev.src->component(m, n);
        const ChainComplex& tgt = diag->prop->component(m, n);
        const HomComplex& hz = vert_z >= 0 ? diag->ends[static_cast<size_t>(vert_z)]->hom(m, n)
                                           : alg.end->hom(m, n);
        SparseMatrix mat(tgt.total_dim(), src.total_dim());
        for (int i = 0; i < src.total_dim(); ++i) {
            SparseVec pv;
            auto act_into = [&](int vertex, const SparseVec& pvec) {
                SparseVec av;
                for (const Term& t : pvec)
                    sv_axpy(av, t.coeff, alg.action.apply(m, n, sv_single(t.idx, 1)));
                add_factor_vec(*diag->product, m, n, vertex, av, pv);
            };
            auto zx_into = [&](const SparseVec& ev) {
                SparseVec hv;
                for (const Term& t : ev) {
                    SparseVec piece =
                        hz.from_matrix(ev_z_basis_matrix(s, alg, *out.zxc, m, n, t.idx));
                    sv_axpy(hv, t.coeff, piece);
                }
                add_factor_vec(*diag->product, m, n, vert_z, hv, pv);
            };
            auto calz_into = [&](const SparseVec& cv) {
                SparseVec amb = cv.empty() ? SparseVec{} : s.end_calzp->include(m, n, cv);
                SparseVec ev, a0, a1;
                for (const Term& t : amb) {
                    auto [f, fi] = s.amb_calz->to_factor(m, n, t.idx);
                    if (f == 0)
                        ev.push_back({fi, t.coeff});
                    else if (f == 1)
                        a0.push_back({fi, t.coeff});
                    else
                        a1.push_back({fi, t.coeff});
                }
                zx_into(sv_normalized(std::move(ev)));
                act_into(vert_0, sv_normalized(std::move(a0)));
                act_into(vert_1, sv_normalized(std::move(a1)));
            };
            switch (tag) {
                case DiagramTag::V: {
                    SparseVec xi = sv_single(i, 1);
                    act_into(vert_x, xi);
                    act_into(vert_0, xi);
                    act_into(vert_1, xi);
                    break;
                }
                case DiagramTag::T: {
                    auto [f, fi] = s.p0p1->to_factor(m, n, i);
                    act_into(f == 0 ? vert_0 : vert_1, sv_single(fi, 1));
                    break;
                }
                case DiagramTag::CalZ:
                    calz_into(sv_single(i, 1));
                    break;
                case DiagramTag::CalY: {
                    SparseVec amb = s.end_calyp->include(m, n, sv_single(i, 1));
                    SparseVec pp, cz;
                    for (const Term& t : amb) {
                        auto [f, fi] = s.amb_caly->to_factor(m, n, t.idx);
                        (f == 0 ? pp : cz).push_back({fi, t.coeff});
                    }
                    act_into(vert_x, sv_normalized(std::move(pp)));
                    calz_into(sv_normalized(std::move(cz)));
                    break;
                }
                case DiagramTag::Z:
                    break;
            }
            for (const Term& t : to_equalizer(*diag, m, n, sv_normalized(std::move(pv)), "ev"))
                mat.set(t.idx, i, t.coeff);
        }
        out.ev.maps.emplace(b, ChainMap::from_global(src, tgt, mat));
    }
    return out;
}

CheckReport check_ev_naturality(const PDiagramSuite& s, const PAlgebra& xalg,
                                const PAlgebra& yalg, const ChainMap& f, DiagramTag tag,
                                BiarityBound bound) {
    CheckReport rep;
    EvaluationMorphism ex = build_ev(s, xalg, tag, bound);
    EvaluationMorphism ey = build_ev(s, yalg, tag, bound);

    // Vertex map 𝒟(f)(i) for each object of the shape.
    std::vector<const ChainMap*> fv;
    ChainMap idz = ChainMap::identity(s.zd.z);
    std::unique_ptr<ChainMap> zf;
    if (ex.zxc) zf = std::make_unique<ChainMap>(tensor_map(ex.zxc->zx, ey.zxc->zx, {&idz, &f}));
    switch (tag) {
        case DiagramTag::Z: fv = {zf.get()}; break;
        case DiagramTag::V: fv = {&f, &f, &f}; break;
        case DiagramTag::T: fv = {&f, &f}; break;
        case DiagramTag::CalZ: fv = {&f, zf.get(), &f}; break;
        case DiagramTag::CalY: fv = {&f, &f, zf.get(), &f}; break;
    }

    auto power_of = [&](const EvaluationMorphism& e, size_t i, int k) -> const TensorComplex& {
        if (tag == DiagramTag::Z) return e.zxc->powers.at(k).powm;
        return e.diagram->ends[i]->power(k);
    };
    auto hom_of = [&](const EvaluationMorphism& e, size_t i, int m, int n) -> const HomComplex& {
        if (tag == DiagramTag::Z) return e.end_zx->hom(m, n);
        return e.diagram->ends[i]->hom(m, n);
    };

    for (const auto& [b, mx] : ex.ev.maps) {
        const ChainMap& my = ey.ev.maps.at(b);
        for (size_t i = 0; i < fv.size(); ++i) {
            std::vector<const ChainMap*> copies_m(static_cast<size_t>(b.m), fv[i]);
            std::vector<const ChainMap*> copies_n(static_cast<size_t>(b.n), fv[i]);
            SparseMatrix fm =
                tensor_map(power_of(ex, i, b.m), power_of(ey, i, b.m), copies_m).global_matrix();
            SparseMatrix fn =
                tensor_map(power_of(ex, i, b.n), power_of(ey, i, b.n), copies_n).global_matrix();
            for (int a = 0; a < mx.src().total_dim(); ++a) {
                SparseVec vx = mx.global_matrix().apply(sv_single(a, 1));
                SparseVec vy = my.global_matrix().apply(sv_single(a, 1));
                if (tag != DiagramTag::Z) {
                    vx = ex.diagram->member(b.m, b.n, static_cast<int>(i), vx);
                    vy = ey.diagram->member(b.m, b.n, static_cast<int>(i), vy);
                }
                SparseMatrix phix = hom_of(ex, i, b.m, b.n).to_matrix(vx);
                SparseMatrix phiy = hom_of(ey, i, b.m, b.n).to_matrix(vy);
                ++rep.checks_done;
                if (!fn.multiply(phix).equal(phiy.multiply(fm)))
                    rep.add("ev_naturality", biarity_str(b.m, b.n),
                            "vertex " + std::to_string(i) + ", basis " + std::to_string(a));
            }
        }
    }
    return rep;
}

CheckReport check_path_action_square(const PDiagramSuite& s, const PAlgebra& alg,
                                     BiarityBound bound) {
    CheckReport rep;
    EvaluationMorphism evy = build_ev(s, alg, DiagramTag::CalY, bound);
    EvaluationMorphism evv = build_ev(s, alg, DiagramTag::V, bound);
    PropMorphism res = restrict_along(*evy.diagram, *evv.diagram, {0, 1, 3});
    for (const auto& [b, my] : evy.ev.maps) {
        ChainMap lhs = res.at(b.m, b.n).compose(my);
        ChainMap rhs = evv.ev.at(b.m, b.n).compose(s.pi.at(b.m, b.n));
        ++rep.checks_done;
        if (!lhs.global_matrix().equal(rhs.global_matrix()))
            rep.add("path_action_square", biarity_str(b.m, b.n),
                    "restriction of the path-diagram evaluation differs from action ∘ π");
    }
    return rep;
}

}  // namespace propcalc
