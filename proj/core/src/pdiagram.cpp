#include "propcalc/pdiagram.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

namespace {

ChainComplex make_q2() { return ChainComplex::make({{0, {"p0", "p1"}}}, {}); }

// Coefficient of dᵢ^{⊗m} on the basis word w of Z^{⊗m}: the product of the
// letter coefficients (all letters have degree 0 wherever dᵢ is nonzero, so
// no Koszul signs arise).
Rational word_coef(const std::vector<Rational>& letter, const std::vector<int>& w) {
    Rational c = 1;
    for (int l : w) {
        c *= letter[static_cast<size_t>(l)];
        if (c == 0) return 0;
    }
    return c;
}

std::vector<Rational> letter_coefs(const ChainMap& d, int zdim) {
    SparseMatrix g = d.global_matrix();
    std::vector<Rational> out;
    for (int l = 0; l < zdim; ++l) out.push_back(g.get(0, l));
    return out;
}

}  // namespace

PDiagramSuite build_pdiagram_suite(const PropPtr& p) {
    PDiagramSuite s;
    s.p = p;
    s.zd = make_Z();
    s.q2 = make_q2();
    BiarityBound bound = p->bound();

    s.end_z = std::make_shared<EndProp>(s.zd.z, bound);
    s.end_zp = std::make_shared<TensorProp>(s.end_z, p, bound);
    s.p0p1 = std::make_shared<ProductProp>(std::vector<PropPtr>{p, p}, bound);
    s.amb_calz = std::make_shared<ProductProp>(std::vector<PropPtr>{s.end_zp, p, p}, bound);

    std::vector<Rational> c0 = letter_coefs(s.zd.d0, s.zd.z.total_dim());
    std::vector<Rational> c1 = letter_coefs(s.zd.d1, s.zd.z.total_dim());

    // Index sets J₀, J₁ per tensor power, derived by applying dᵢ^{⊗m}.
    for (int m = 1; m <= bound.A; ++m) {
        const TensorComplex& zm = s.end_z->power(m);
        std::vector<int> j0, j1;
        for (int u = 0; u < zm.cx.total_dim(); ++u) {
            const std::vector<int>& w = zm.word_of[static_cast<size_t>(u)];
            if (word_coef(c0, w) == 1) j0.push_back(u);
            if (word_coef(c1, w) == 1) j1.push_back(u);
        }
        s.J0.emplace(m, std::move(j0));
        s.J1.emplace(m, std::move(j1));
    }

    std::map<Biarity, std::vector<SparseVec>> calz_spans;
    for (Biarity b : bound.components()) {
        int m = b.m, n = b.n;
        const ChainComplex& pcx = p->component(m, n);
        const HomComplex& hom = s.end_z->hom(m, n);
        const TensorComplex& zn = s.end_z->power(n);

        // --- d̄ data ---
        PDiagramSuite::DbarData dd;
        dd.target = tensor_list({&hom.dualA, &s.q2, &pcx});
        const ChainComplex& endzp_cx = s.end_zp->component(m, n);
        SparseMatrix mpair(dd.target.cx.total_dim(), endzp_cx.total_dim());
        for (int g = 0; g < endzp_cx.total_dim(); ++g) {
            auto [e_idx, xi] = s.end_zp->factors_of(m, n, g);
            const EndProp::Elem& e = s.end_z->elem(m, n, e_idx);
            const std::vector<int>& vw = zn.word_of[static_cast<size_t>(e.v)];
            Rational k0 = word_coef(c0, vw), k1 = word_coef(c1, vw);
            int du = hom.A_to_dual[static_cast<size_t>(e.u)];
            if (k0 != 0) mpair.set(dd.target.index_of.at({du, 0, xi}), g, k0);
            if (k1 != 0) mpair.set(dd.target.index_of.at({du, 1, xi}), g, k1);
        }
        dd.pair = ChainMap::from_global(endzp_cx, dd.target.cx, mpair);

        const ChainComplex& p01_cx = s.p0p1->component(m, n);
        SparseMatrix mstar(dd.target.cx.total_dim(), p01_cx.total_dim());
        for (int idx = 0; idx < p01_cx.total_dim(); ++idx) {
            auto [f, xi] = s.p0p1->to_factor(m, n, idx);
            const std::vector<int>& J = (f == 0 ? s.J0.at(m) : s.J1.at(m));
            for (int j : J)
                mstar.set(dd.target.index_of.at({hom.A_to_dual[static_cast<size_t>(j)], f, xi}),
                          idx, 1);
        }
        dd.star = ChainMap::from_global(p01_cx, dd.target.cx, mstar);
        s.dbar.emplace(b, std::move(dd));

        // --- P₀⊕P₁ ≅ (ℚp₀⊕ℚp₁)⊗P ---
        TensorComplex q2p = tensor_list({&s.q2, &pcx});
        SparseMatrix iso(q2p.cx.total_dim(), p01_cx.total_dim());
        for (int idx = 0; idx < p01_cx.total_dim(); ++idx) {
            auto [f, xi] = s.p0p1->to_factor(m, n, idx);
            iso.set(q2p.index_of.at({f, xi}), idx, 1);
        }
        s.p0p1_iso.emplace(b, ChainMap::from_global(p01_cx, q2p.cx, iso));
        s.q2p.emplace(b, std::move(q2p));

        // --- End_{𝒵(P)} span: the kernel of d̄_pair∘pr₀ − d̄*∘(pr₁,pr₂),
        // written down combinatorially. Per P-basis element ξ and input word
        // j, the block over output words v is cut out by the two functionals
        // v ↦ [v = τ^{⊗n}] and v ↦ [v ∈ {τ,ρ₀}-words], coupled across blocks
        // through the P₀/P₁ coordinates a, b.
        const TensorComplex& zm = s.end_z->power(m);
        int tau_m = zm.index_of.at(std::vector<int>(static_cast<size_t>(m), 0));
        int tau_n = zn.index_of.at(std::vector<int>(static_cast<size_t>(n), 0));
        std::vector<int> wstar_word(static_cast<size_t>(n), 0);
        wstar_word[0] = 1;  // ρ₀ τ^{n-1}
        int wstar = zn.index_of.at(wstar_word);
        const std::vector<int>& W1 = s.J1.at(n);
        std::vector<bool> in_w1(static_cast<size_t>(zn.cx.total_dim()), false);
        for (int v : W1) in_w1[static_cast<size_t>(v)] = true;

        auto amb_idx = [&](int j, int v, int xi) {
            int e_idx = s.end_z->index_of_elem(m, n, j, v);
            int zp = s.end_zp->pair_index(m, n, e_idx, xi);
            return s.amb_calz->from_factor(m, n, 0, zp);
        };

        std::vector<SparseVec> spans;
        for (int xi = 0; xi < pcx.total_dim(); ++xi) {
            for (int j = 0; j < zm.cx.total_dim(); ++j) {
                for (int v = 0; v < zn.cx.total_dim(); ++v) {
                    if (v == tau_n || v == wstar) continue;
                    if (!in_w1[static_cast<size_t>(v)]) {
                        spans.push_back(sv_single(amb_idx(j, v, xi), 1));
                    } else {
                        SparseVec e;
                        e.push_back({amb_idx(j, v, xi), 1});
                        e.push_back({amb_idx(j, wstar, xi), -1});
                        spans.push_back(sv_normalized(std::move(e)));
                    }
                }
            }
            // a-coordinate: (z_{τ^m}* ⊗ (τ^{⊗n} − w*) ⊗ ξ, ξ in P₀, 0)
            SparseVec av;
            av.push_back({amb_idx(tau_m, tau_n, xi), 1});
            av.push_back({amb_idx(tau_m, wstar, xi), -1});
            av.push_back({s.amb_calz->from_factor(m, n, 1, xi), 1});
            spans.push_back(sv_normalized(std::move(av)));
            // b-coordinate: (Σ_{j∈J₁} z_j* ⊗ w* ⊗ ξ, 0, ξ in P₁)
            SparseVec bv;
            for (int j : s.J1.at(m)) bv.push_back({amb_idx(j, wstar, xi), 1});
            bv.push_back({s.amb_calz->from_factor(m, n, 2, xi), 1});
            spans.push_back(sv_normalized(std::move(bv)));
        }
        calz_spans.emplace(b, std::move(spans));
    }
    s.end_calzp = std::make_shared<SubProp>(s.amb_calz, calz_spans, bound, "calz");

    s.amb_caly =
        std::make_shared<ProductProp>(std::vector<PropPtr>{p, s.end_calzp}, bound);

    std::map<Biarity, std::vector<SparseVec>> caly_spans;
    for (Biarity b : bound.components()) {
        int m = b.m, n = b.n;
        const ChainComplex& pcx = p->component(m, n);
        const TensorComplex& zm = s.end_z->power(m);
        const TensorComplex& zn = s.end_z->power(n);
        int tau_m = zm.index_of.at(std::vector<int>(static_cast<size_t>(m), 0));
        int tau_n = zn.index_of.at(std::vector<int>(static_cast<size_t>(n), 0));

        PDiagramSuite::SbarData sd;
        sd.target = tensor_list({&zn.cx, &pcx});
        SparseMatrix mlower(sd.target.cx.total_dim(), pcx.total_dim());
        for (int xi = 0; xi < pcx.total_dim(); ++xi)
            mlower.set(sd.target.index_of.at({tau_n, xi}), xi, 1);
        sd.lower = ChainMap::from_global(pcx, sd.target.cx, mlower);

        const ChainComplex& calz_cx = s.end_calzp->component(m, n);
        SparseMatrix mupper(sd.target.cx.total_dim(), calz_cx.total_dim());
        for (int c = 0; c < calz_cx.total_dim(); ++c) {
            SparseVec amb = s.end_calzp->include(m, n, sv_single(c, 1));
            for (const Term& t : amb) {
                auto [f, fi] = s.amb_calz->to_factor(m, n, t.idx);
                if (f != 0) continue;
                auto [e_idx, xi] = s.end_zp->factors_of(m, n, fi);
                const EndProp::Elem& e = s.end_z->elem(m, n, e_idx);
                if (e.u != tau_m) continue;
                int row = sd.target.index_of.at({e.v, xi});
                mupper.set(row, c, mupper.get(row, c) + t.coeff);
            }
        }
        sd.upper = ChainMap::from_global(calz_cx, sd.target.cx, mupper);

        // Pullback of s̄_lower against s̄_upper as the kernel of the
        // difference on P × End_{𝒵(P)}.
        const ChainComplex& amb_cx = s.amb_caly->component(m, n);
        SparseMatrix mh(sd.target.cx.total_dim(), amb_cx.total_dim());
        for (int xi = 0; xi < pcx.total_dim(); ++xi) {
            int col = s.amb_caly->from_factor(m, n, 0, xi);
            for (const Term& t : mlower.col(xi)) mh.set(t.idx, col, t.coeff);
        }
        for (int c = 0; c < calz_cx.total_dim(); ++c) {
            int col = s.amb_caly->from_factor(m, n, 1, c);
            for (const Term& t : mupper.col(c)) mh.set(t.idx, col, -t.coeff);
        }
        SubComplex ker =
            kernel_complex(ChainMap::from_global(amb_cx, sd.target.cx, mh), "y");
        caly_spans.emplace(b, ker.basis_global);
        s.sbar.emplace(b, std::move(sd));
    }
    s.end_calyp = std::make_shared<SubProp>(s.amb_caly, caly_spans, bound, "caly");

    // --- morphisms ---
    s.pi.src = s.end_calyp;
    s.pi.tgt = p;
    s.w_star.src = s.end_calyp;
    s.w_star.tgt = s.end_calzp;
    s.u_star.src = s.end_calzp;
    s.u_star.tgt = s.p0p1;
    s.t_star.src = p;
    s.t_star.tgt = s.p0p1;
    for (Biarity b : bound.components()) {
        int m = b.m, n = b.n;
        const ChainComplex& pcx = p->component(m, n);
        const ChainComplex& ycx = s.end_calyp->component(m, n);
        const ChainComplex& zcx = s.end_calzp->component(m, n);
        const ChainComplex& p01_cx = s.p0p1->component(m, n);

        ChainMap proj_p = s.amb_caly->projection(0, m, n);
        ChainMap proj_z = s.amb_caly->projection(1, m, n);
        SparseMatrix mpi(pcx.total_dim(), ycx.total_dim());
        SparseMatrix mw(zcx.total_dim(), ycx.total_dim());
        for (int c = 0; c < ycx.total_dim(); ++c) {
            SparseVec amb = s.end_calyp->include(m, n, sv_single(c, 1));
            for (const Term& t : proj_p.apply_global(amb)) mpi.set(t.idx, c, t.coeff);
            for (const Term& t : proj_z.apply_global(amb)) mw.set(t.idx, c, t.coeff);
        }
        s.pi.maps.emplace(b, ChainMap::from_global(ycx, pcx, mpi));
        s.w_star.maps.emplace(b, ChainMap::from_global(ycx, zcx, mw));

        SparseMatrix mu(p01_cx.total_dim(), zcx.total_dim());
        for (int c = 0; c < zcx.total_dim(); ++c) {
            SparseVec amb = s.end_calzp->include(m, n, sv_single(c, 1));
            for (const Term& t : amb) {
                auto [f, fi] = s.amb_calz->to_factor(m, n, t.idx);
                if (f == 0) continue;
                int row = s.p0p1->from_factor(m, n, f - 1, fi);
                mu.set(row, c, mu.get(row, c) + t.coeff);
            }
        }
        s.u_star.maps.emplace(b, ChainMap::from_global(zcx, p01_cx, mu));

        SparseMatrix mt(p01_cx.total_dim(), pcx.total_dim());
        for (int xi = 0; xi < pcx.total_dim(); ++xi) {
            mt.set(s.p0p1->from_factor(m, n, 0, xi), xi, 1);
            mt.set(s.p0p1->from_factor(m, n, 1, xi), xi, 1);
        }
        s.t_star.maps.emplace(b, ChainMap::from_global(pcx, p01_cx, mt));
    }
    return s;
}

DbarSingle map_dbar(const PDiagramSuite& s, int which, int m, int n) {
    const ChainComplex& pcx = s.p->component(m, n);
    const HomComplex& hom = s.end_z->hom(m, n);
    DbarSingle out;
    out.target = tensor_list({&hom.dualA, &pcx});
    out.index_set = (which == 0 ? s.J0.at(m) : s.J1.at(m));
    SparseMatrix mat(out.target.cx.total_dim(), pcx.total_dim());
    for (int xi = 0; xi < pcx.total_dim(); ++xi)
        for (int j : out.index_set)
            mat.set(out.target.index_of.at({hom.A_to_dual[static_cast<size_t>(j)], xi}), xi, 1);
    out.map = ChainMap::from_global(pcx, out.target.cx, mat);
    return out;
}

PiReport check_pi_acyclic_fibration(const PDiagramSuite& s, const BiarityBound& check_bound) {
    PiReport rep;
    for (Biarity b : s.p->bound().components()) {
        if (!check_bound.contains(b.m, b.n)) continue;
        const ChainMap& f = s.pi.at(b.m, b.n);
        PiComponentReport c;
        c.at = b;
        c.surjective = f.is_surjective();
        c.homology_source = f.src().homology().dims;
        c.homology_target = f.tgt().homology().dims;
        c.quasi_iso = f.is_quasi_iso();
        rep.components.push_back(std::move(c));
    }
    return rep;
}

PushoutProductWitness pushout_product_witness(int m, int n) {
    PushoutProductWitness w;
    w.m = m;
    w.n = n;
    PathComplexZ zd = make_Z();
    ChainComplex q2 = make_q2();
    ChainComplex q = ChainComplex::unit("1");
    TensorComplex zm = tensor_power(zd.z, m);
    TensorComplex zn = tensor_power(zd.z, n);

    std::vector<Rational> c0 = letter_coefs(zd.d0, zd.z.total_dim());
    std::vector<Rational> c1 = letter_coefs(zd.d1, zd.z.total_dim());

    SparseMatrix fs(zm.cx.total_dim(), 1);
    fs.set(zm.index_of.at(std::vector<int>(static_cast<size_t>(m), 0)), 0, 1);
    ChainMap f_s = ChainMap::from_global(q, zm.cx, fs);

    SparseMatrix gm(2, zn.cx.total_dim());
    for (int v = 0; v < zn.cx.total_dim(); ++v) {
        const std::vector<int>& wv = zn.word_of[static_cast<size_t>(v)];
        Rational k0 = word_coef(c0, wv), k1 = word_coef(c1, wv);
        if (k0 != 0) gm.set(0, v, k0);
        if (k1 != 0) gm.set(1, v, k1);
    }
    ChainMap g = ChainMap::from_global(zn.cx, q2, gm);

    w.f_injective = f_s.is_injective();
    w.f_quasi_iso = f_s.is_quasi_iso();
    w.g_surjective = g.is_surjective();

    HomComplex A = hom_complex(zm.cx, zn.cx);
    HomComplex B = hom_complex(q, zn.cx);
    HomComplex C = hom_complex(zm.cx, q2);
    HomComplex D = hom_complex(q, q2);

    auto transport = [](const HomComplex& src, const HomComplex& dst,
                        const SparseMatrix* pre, const SparseMatrix* post) {
        SparseMatrix out(dst.cx().total_dim(), src.cx().total_dim());
        for (int h = 0; h < src.cx().total_dim(); ++h) {
            SparseMatrix mh = src.to_matrix(sv_single(h, 1));
            if (post) mh = post->multiply(mh);
            if (pre) mh = mh.multiply(*pre);
            for (const Term& t : dst.from_matrix(mh)) out.set(t.idx, h, t.coeff);
        }
        return out;
    };

    ChainMap b_to_d = ChainMap::from_global(B.cx(), D.cx(), transport(B, D, nullptr, &gm));
    ChainMap c_to_d = ChainMap::from_global(C.cx(), D.cx(), transport(C, D, &fs, nullptr));
    PullbackComplex pb = pullback_complex(b_to_d, c_to_d);

    Echelon ech(true);
    for (const SparseVec& v : pb.sub.basis_global) ech.insert(v);

    SparseMatrix induced(pb.sub.cx.total_dim(), A.cx().total_dim());
    for (int a = 0; a < A.cx().total_dim(); ++a) {
        SparseMatrix ma = A.to_matrix(sv_single(a, 1));
        SparseVec bpart = B.from_matrix(ma.multiply(fs));
        SparseVec cpart = C.from_matrix(gm.multiply(ma));
        SparseVec sum_vec;
        for (const Term& t : bpart) {
            auto [deg, loc] = B.cx().degree_local(t.idx);
            sum_vec.push_back({pb.sum.global_index(deg, loc), t.coeff});
        }
        for (const Term& t : cpart) {
            auto [deg, loc] = C.cx().degree_local(t.idx);
            sum_vec.push_back({pb.sum.global_index(deg, B.cx().dim(deg) + loc), t.coeff});
        }
        auto coords = ech.coords(sv_normalized(std::move(sum_vec)));
        if (!coords)
            throw Error(ErrorKind::Internal,
                        "pushout-product image escapes the pullback subcomplex");
        for (const Term& t : *coords) induced.set(t.idx, a, t.coeff);
    }
    ChainMap ind = ChainMap::from_global(A.cx(), pb.sub.cx, induced);
    w.induced_surjective = ind.is_surjective();
    w.induced_quasi_iso = ind.is_quasi_iso();
    return w;
}

CheckReport check_corner_square(const PDiagramSuite& s) {
    CheckReport rep;
    for (Biarity b : s.p->bound().components()) {
        ChainMap lhs = s.u_star.at(b.m, b.n).compose(s.w_star.at(b.m, b.n));
        ChainMap rhs = s.t_star.at(b.m, b.n).compose(s.pi.at(b.m, b.n));
        ++rep.checks_done;
        if (!lhs.global_matrix().equal(rhs.global_matrix()))
            rep.add("corner_square",
                    "(" + std::to_string(b.m) + "," + std::to_string(b.n) + ")",
                    "u* ∘ w* differs from t* ∘ π");
        ++rep.checks_done;
        if (!s.u_star.at(b.m, b.n).is_surjective())
            rep.add("corner_square",
                    "(" + std::to_string(b.m) + "," + std::to_string(b.n) + ")",
                    "u* is not degreewise surjective");
    }
    return rep;
}

}  // namespace propcalc
