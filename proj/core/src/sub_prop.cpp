#include "propcalc/sub_prop.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

SubProp::SubProp(PropPtr ambient, const std::map<Biarity, std::vector<SparseVec>>& spans,
                 BiarityBound bound, const std::string& label_prefix)
    : Prop(bound), ambient_(std::move(ambient)) {
    for (const auto& b : bound.components()) {
        auto it = spans.find(b);
        if (it == spans.end())
            throw Error(ErrorKind::Internal,
                        "missing span for component (" + std::to_string(b.m) + "," +
                            std::to_string(b.n) + ")");
        Component c;
        c.sc = subcomplex(ambient_->component(b.m, b.n), it->second,
                          label_prefix + "(" + std::to_string(b.m) + "," +
                              std::to_string(b.n) + ")");
        for (const auto& v : c.sc.basis_global) c.ech.insert(v);
        comps_.emplace(b, std::move(c));
    }
}

const SubProp::Component& SubProp::comp(int m, int n) const {
    require(m, n);
    return comps_.at({m, n});
}

const SubComplex& SubProp::sub(int m, int n) const { return comp(m, n).sc; }
const ChainMap& SubProp::inclusion(int m, int n) const { return comp(m, n).sc.incl; }

const ChainComplex& SubProp::component(int m, int n) const { return comp(m, n).sc.cx; }

SparseVec SubProp::include(int m, int n, const SparseVec& v) const {
    return comp(m, n).sc.incl.apply_global(v);
}

SparseVec SubProp::restrict(int m, int n, const SparseVec& ambient_vec) const {
    auto c = comp(m, n).ech.coords(ambient_vec);
    if (!c)
        throw Error(ErrorKind::CompatibilityFailure,
                    "vector lies outside the subprop component (" + std::to_string(m) + "," +
                        std::to_string(n) + ")");
    return *c;
}

bool SubProp::contains(int m, int n, const SparseVec& ambient_vec) const {
    return comp(m, n).ech.contains(ambient_vec);
}

SparseVec SubProp::vcomp_basis(int m, int k, int n, int a, int b) const {
    SparseVec av = include(k, n, sv_single(a, 1));
    SparseVec bv = include(m, k, sv_single(b, 1));
    return restrict(m, n, ambient_->vcomp(m, k, n, av, bv));
}

SparseVec SubProp::hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const {
    SparseVec av = include(m1, n1, sv_single(a, 1));
    SparseVec bv = include(m2, n2, sv_single(b, 1));
    return restrict(m1 + m2, n1 + n2, ambient_->hcomp(m1, n1, m2, n2, av, bv));
}

SparseVec SubProp::unit(int n) const { return restrict(n, n, ambient_->unit(n)); }

SparseMatrix SubProp::conjugate(int m, int n, const SparseMatrix& ambient_mat,
                                const char* what) const {
    const Component& c = comp(m, n);
    int dim = c.sc.cx.total_dim();
    SparseMatrix out(dim, dim);
    for (int j = 0; j < dim; ++j) {
        SparseVec img = ambient_mat.apply(c.sc.basis_global[static_cast<size_t>(j)]);
        auto coords = c.ech.coords(img);
        if (!coords)
            throw Error(ErrorKind::CompatibilityFailure,
                        std::string(what) + " does not preserve the subprop component (" +
                            std::to_string(m) + "," + std::to_string(n) + ")");
        out.set_col(j, *coords);
    }
    return out;
}

SparseMatrix SubProp::right_action(int m, int n, const Perm& sigma) const {
    return conjugate(m, n, ambient_->right_action(m, n, sigma), "right action");
}

SparseMatrix SubProp::left_action(int m, int n, const Perm& tau) const {
    return conjugate(m, n, ambient_->left_action(m, n, tau), "left action");
}

}  // namespace propcalc
