#include "propcalc/product_prop.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

ProductProp::ProductProp(std::vector<PropPtr> factors, BiarityBound bound)
    : Prop(bound), factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(ErrorKind::Internal, "empty product");
    for (const auto& b : bound.components()) {
        std::map<int, std::vector<std::string>> basis;
        for (size_t f = 0; f < factors_.size(); ++f) {
            if (!factors_[f]->bound().contains(b.m, b.n))
                throw Error(ErrorKind::TruncationExceeded,
                            "factor prop truncated below requested bound");
            const ChainComplex& c = factors_[f]->component(b.m, b.n);
            for (int deg : c.degrees())
                for (const auto& l : c.labels(deg))
                    basis[deg].push_back("c" + std::to_string(f) + "⋆" + l);
        }
        Component comp;
        // Assemble block-diagonal differential in the summed global order.
        std::map<int, std::vector<std::string>> dummy = basis;
        // First build index maps against the final ordering.
        ChainComplex shell = ChainComplex::make(basis, {});
        comp.to_factor.assign(static_cast<size_t>(shell.total_dim()), {-1, -1});
        comp.from_factor.resize(factors_.size());
        for (size_t f = 0; f < factors_.size(); ++f)
            comp.from_factor[f].assign(
                static_cast<size_t>(factors_[f]->dim(b.m, b.n)), -1);
        {
            std::map<int, int> cursor;  // next local slot per degree
            for (size_t f = 0; f < factors_.size(); ++f) {
                const ChainComplex& c = factors_[f]->component(b.m, b.n);
                for (int g = 0; g < c.total_dim(); ++g) {
                    auto [deg, loc] = c.degree_local(g);
                    (void)loc;
                    int slot = cursor[deg]++;
                    int global = shell.global_index(deg, slot);
                    comp.to_factor[static_cast<size_t>(global)] = {static_cast<int>(f), g};
                    comp.from_factor[f][static_cast<size_t>(g)] = global;
                }
            }
        }
        std::map<int, SparseMatrix> diff;
        for (int deg : shell.degrees()) {
            if (!shell.has_degree(deg - 1)) continue;
            SparseMatrix d(shell.dim(deg - 1), shell.dim(deg));
            for (int loc = 0; loc < shell.dim(deg); ++loc) {
                int global = shell.global_index(deg, loc);
                auto [f, g] = comp.to_factor[static_cast<size_t>(global)];
                SparseVec img;
                for (const auto& t :
                     factors_[static_cast<size_t>(f)]->component(b.m, b.n).d_of_global(g)) {
                    int tg = comp.from_factor[static_cast<size_t>(f)][static_cast<size_t>(t.idx)];
                    img.push_back({shell.degree_local(tg).second, t.coeff});
                }
                d.set_col(loc, sv_normalized(std::move(img)));
            }
            diff.emplace(deg, std::move(d));
        }
        comp.cx = ChainComplex::make(std::move(dummy), std::move(diff));
        comps_.emplace(b, std::move(comp));
    }
}

const ProductProp::Component& ProductProp::comp(int m, int n) const {
    require(m, n);
    return comps_.at({m, n});
}

std::pair<int, int> ProductProp::to_factor(int m, int n, int idx) const {
    return comp(m, n).to_factor[static_cast<size_t>(idx)];
}

int ProductProp::from_factor(int m, int n, int f, int idx) const {
    return comp(m, n).from_factor[static_cast<size_t>(f)][static_cast<size_t>(idx)];
}

ChainMap ProductProp::projection(int f, int m, int n) const {
    const Component& c = comp(m, n);
    const ChainComplex& fc = factors_[static_cast<size_t>(f)]->component(m, n);
    SparseMatrix g(fc.total_dim(), c.cx.total_dim());
    for (int idx = 0; idx < c.cx.total_dim(); ++idx) {
        auto [ff, fi] = c.to_factor[static_cast<size_t>(idx)];
        if (ff == f) g.set(fi, idx, 1);
    }
    return ChainMap::from_global(c.cx, fc, g);
}

ChainMap ProductProp::inclusion(int f, int m, int n) const {
    const Component& c = comp(m, n);
    const ChainComplex& fc = factors_[static_cast<size_t>(f)]->component(m, n);
    SparseMatrix g(c.cx.total_dim(), fc.total_dim());
    for (int fi = 0; fi < fc.total_dim(); ++fi)
        g.set(c.from_factor[static_cast<size_t>(f)][static_cast<size_t>(fi)], fi, 1);
    return ChainMap::from_global(fc, c.cx, g);
}

const ChainComplex& ProductProp::component(int m, int n) const { return comp(m, n).cx; }

SparseVec ProductProp::push(const Component& c, int f, const SparseVec& v) const {
    SparseVec out;
    for (const auto& t : v)
        out.push_back({c.from_factor[static_cast<size_t>(f)][static_cast<size_t>(t.idx)],
                       t.coeff});
    return sv_normalized(std::move(out));
}

SparseVec ProductProp::vcomp_basis(int m, int k, int n, int a, int b) const {
    auto [fa, ia] = to_factor(k, n, a);
    auto [fb, ib] = to_factor(m, k, b);
    if (fa != fb) return {};
    return push(comp(m, n), fa,
                factors_[static_cast<size_t>(fa)]->vcomp_basis(m, k, n, ia, ib));
}

SparseVec ProductProp::hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const {
    auto [fa, ia] = to_factor(m1, n1, a);
    auto [fb, ib] = to_factor(m2, n2, b);
    if (fa != fb) return {};
    return push(comp(m1 + m2, n1 + n2), fa,
                factors_[static_cast<size_t>(fa)]->hcomp_basis(m1, n1, m2, n2, ia, ib));
}

SparseVec ProductProp::unit(int n) const {
    const Component& c = comp(n, n);
    SparseVec out;
    for (size_t f = 0; f < factors_.size(); ++f) {
        SparseVec u = push(c, static_cast<int>(f), factors_[f]->unit(n));
        sv_axpy(out, 1, u);
    }
    return out;
}

SparseMatrix ProductProp::right_action(int m, int n, const Perm& sigma) const {
    const Component& c = comp(m, n);
    SparseMatrix out(c.cx.total_dim(), c.cx.total_dim());
    std::vector<SparseMatrix> mats;
    for (const auto& f : factors_) mats.push_back(f->right_action(m, n, sigma));
    for (int idx = 0; idx < c.cx.total_dim(); ++idx) {
        auto [f, fi] = c.to_factor[static_cast<size_t>(idx)];
        out.set_col(idx, push(c, f, mats[static_cast<size_t>(f)].col(fi)));
    }
    return out;
}

SparseMatrix ProductProp::left_action(int m, int n, const Perm& tau) const {
    const Component& c = comp(m, n);
    SparseMatrix out(c.cx.total_dim(), c.cx.total_dim());
    std::vector<SparseMatrix> mats;
    for (const auto& f : factors_) mats.push_back(f->left_action(m, n, tau));
    for (int idx = 0; idx < c.cx.total_dim(); ++idx) {
        auto [f, fi] = c.to_factor[static_cast<size_t>(idx)];
        out.set_col(idx, push(c, f, mats[static_cast<size_t>(f)].col(fi)));
    }
    return out;
}

std::vector<int> ProductProp::vleft_candidates(int m, int k, int n, int b) const {
    auto [f, fi] = to_factor(m, k, b);
    std::vector<int> out;
    for (int c : factors_[static_cast<size_t>(f)]->vleft_candidates(m, k, n, fi))
        out.push_back(from_factor(k, n, f, c));
    return out;
}

std::vector<int> ProductProp::vright_candidates(int m, int k, int n, int a) const {
    auto [f, fi] = to_factor(k, n, a);
    std::vector<int> out;
    for (int c : factors_[static_cast<size_t>(f)]->vright_candidates(m, k, n, fi))
        out.push_back(from_factor(m, k, f, c));
    return out;
}

}  // namespace propcalc
