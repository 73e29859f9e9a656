#include "propcalc/path_object.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

PathComplexZ make_Z() {
    std::map<int, std::vector<std::string>> basis;
    basis[0] = {"tau", "rho0", "rho1"};
    basis[-1] = {"sig0", "sig1"};
    SparseMatrix d(2, 3);
    d.set(0, 1, 1);  // d(rho0) = sig0
    d.set(1, 2, 1);  // d(rho1) = sig1
    std::map<int, SparseMatrix> diff;
    diff.emplace(0, std::move(d));
    PathComplexZ out;
    out.z = ChainComplex::make(std::move(basis), std::move(diff));
    out.q = ChainComplex::unit();
    SparseMatrix sm(out.z.total_dim(), 1);
    sm.set(0, 0, 1);  // 1 ↦ tau
    out.s = ChainMap::from_global(out.q, out.z, sm);
    SparseMatrix d0m(1, out.z.total_dim());
    d0m.set(0, 0, 1);  // tau ↦ 1
    out.d0 = ChainMap::from_global(out.z, out.q, d0m);
    SparseMatrix d1m(1, out.z.total_dim());
    d1m.set(0, 0, 1);  // tau ↦ 1
    d1m.set(0, 1, 1);  // rho0 ↦ 1
    out.d1 = ChainMap::from_global(out.z, out.q, d1m);
    return out;
}

ChainMap diagonal_map(const ChainComplex& x) {
    ChainComplex xx = ChainComplex::direct_sum(x, x);
    SparseMatrix g(xx.total_dim(), x.total_dim());
    for (int i = 0; i < x.total_dim(); ++i) {
        auto [deg, loc] = x.degree_local(i);
        g.set(xx.global_index(deg, loc), i, 1);
        g.set(xx.global_index(deg, x.dim(deg) + loc), i, 1);
    }
    return ChainMap::from_global(x, xx, g);
}

PathFactorization path_object(const ChainComplex& x) {
    PathComplexZ pz = make_Z();
    PathFactorization out;
    out.x = x;
    out.zx = tensor_list({&pz.z, &x});
    out.xx = ChainComplex::direct_sum(x, x);
    out.diag = diagonal_map(x);

    // s = s_Z ⊗ id: x ↦ τ⊗x (no signs: τ has degree 0).
    SparseMatrix sm(out.zx.cx.total_dim(), x.total_dim());
    for (int i = 0; i < x.total_dim(); ++i) sm.set(out.zx.index_of.at({0, i}), i, 1);
    out.s = ChainMap::from_global(x, out.zx.cx, sm);

    // dᵢ = dᵢ_Z ⊗ id: z⊗x ↦ dᵢ_Z(z)·x (dᵢ_Z is degree 0, no signs).
    SparseMatrix d0m(x.total_dim(), out.zx.cx.total_dim());
    SparseMatrix d1m(x.total_dim(), out.zx.cx.total_dim());
    SparseMatrix d01m(out.xx.total_dim(), out.zx.cx.total_dim());
    for (int g = 0; g < out.zx.cx.total_dim(); ++g) {
        const auto& w = out.zx.word_of[static_cast<size_t>(g)];
        Rational c0 = pz.d0.global_matrix().get(0, w[0]);
        Rational c1 = pz.d1.global_matrix().get(0, w[0]);
        auto [deg, loc] = x.degree_local(w[1]);
        if (c0 != 0) {
            d0m.set(w[1], g, c0);
            d01m.set(out.xx.global_index(deg, loc), g, c0);
        }
        if (c1 != 0) {
            d1m.set(w[1], g, c1);
            d01m.set(out.xx.global_index(deg, x.dim(deg) + loc), g, c1);
        }
    }
    out.d0 = ChainMap::from_global(out.zx.cx, x, d0m);
    out.d1 = ChainMap::from_global(out.zx.cx, x, d1m);
    out.d01 = ChainMap::from_global(out.zx.cx, out.xx, d01m);

    out.diagonal_factors =
        out.d01.compose(out.s).global_matrix().equal(out.diag.global_matrix());
    out.s_injective = out.s.is_injective();
    out.s_quasi_iso = out.s.is_quasi_iso();
    out.d01_surjective = out.d01.is_surjective();
    out.d0_quasi_iso = out.d0.is_quasi_iso();
    out.d1_quasi_iso = out.d1.is_quasi_iso();
    if (!out.ok())
        throw Error(ErrorKind::FactorizationFailure,
                    "path object invariant failed on the supplied complex");
    return out;
}

SplitZ split_Z() {
    PathComplexZ pz = make_Z();
    SplitZ out;
    std::vector<SparseVec> span;
    for (int i = 1; i <= 4; ++i) span.push_back(sv_single(i, 1));
    out.ztilde = subcomplex(pz.z, span, "zt");
    out.tau_line = subcomplex(pz.z, {sv_single(0, 1)}, "tau");
    return out;
}

SplitZPower split_Z_power(int m) {
    PathComplexZ pz = make_Z();
    SplitZPower out;
    out.power = tensor_power(pz.z, m);
    int tau_word = out.power.index_of.at(std::vector<int>(static_cast<size_t>(m), 0));
    std::vector<SparseVec> span;
    for (int g = 0; g < out.power.cx.total_dim(); ++g)
        if (g != tau_word) span.push_back(sv_single(g, 1));
    out.s_m = subcomplex(out.power.cx, span, "s" + std::to_string(m));
    out.tau_line = subcomplex(out.power.cx, {sv_single(tau_word, 1)}, "taupow");
    return out;
}

}  // namespace propcalc
