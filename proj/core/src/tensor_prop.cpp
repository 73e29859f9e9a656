#include "propcalc/tensor_prop.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

TensorProp::TensorProp(PropPtr a, PropPtr b, BiarityBound bound)
    : Prop(bound), a_(std::move(a)), b_(std::move(b)) {
    for (const auto& bi : bound.components()) {
        if (!a_->bound().contains(bi.m, bi.n) || !b_->bound().contains(bi.m, bi.n))
            throw Error(ErrorKind::TruncationExceeded,
                        "factor prop truncated below requested bound");
        Component c;
        c.tc = tensor_list({&a_->component(bi.m, bi.n), &b_->component(bi.m, bi.n)});
        c.dim_b = b_->dim(bi.m, bi.n);
        int da = a_->dim(bi.m, bi.n);
        c.pair_idx.assign(static_cast<size_t>(da) * c.dim_b, -1);
        for (int idx = 0; idx < c.tc.cx.total_dim(); ++idx) {
            const auto& w = c.tc.word_of[idx];
            c.pair_idx[static_cast<size_t>(w[0]) * c.dim_b + w[1]] = idx;
        }
        comps_.emplace(bi, std::move(c));
    }
}

const TensorProp::Component& TensorProp::comp(int m, int n) const {
    require(m, n);
    return comps_.at({m, n});
}

const TensorComplex& TensorProp::tensor(int m, int n) const { return comp(m, n).tc; }

std::pair<int, int> TensorProp::factors_of(int m, int n, int idx) const {
    const auto& w = comp(m, n).tc.word_of[static_cast<size_t>(idx)];
    return {w[0], w[1]};
}

int TensorProp::pair_index(int m, int n, int xa, int xb) const {
    const Component& c = comp(m, n);
    return c.pair_idx[static_cast<size_t>(xa) * c.dim_b + xb];
}

const ChainComplex& TensorProp::component(int m, int n) const { return comp(m, n).tc.cx; }

SparseVec TensorProp::combine(const Component& c, const SparseVec& va, const SparseVec& vb,
                              int sign) const {
    SparseVec out;
    for (const auto& ta : va)
        for (const auto& tb : vb) {
            int idx = c.pair_idx[static_cast<size_t>(ta.idx) * c.dim_b + tb.idx];
            out.push_back({idx, ta.coeff * tb.coeff * sign});
        }
    return sv_normalized(std::move(out));
}

SparseVec TensorProp::vcomp_basis(int m, int k, int n, int a, int b) const {
    auto [x1, p1] = factors_of(k, n, a);
    auto [x2, p2] = factors_of(m, k, b);
    SparseVec va = a_->vcomp_basis(m, k, n, x1, x2);
    if (sv_is_zero(va)) return {};
    SparseVec vb = b_->vcomp_basis(m, k, n, p1, p2);
    if (sv_is_zero(vb)) return {};
    int degp1 = b_->degree_of(k, n, p1);
    int degx2 = a_->degree_of(m, k, x2);
    int sign = (degp1 % 2 != 0 && degx2 % 2 != 0) ? -1 : 1;
    return combine(comp(m, n), va, vb, sign);
}

SparseVec TensorProp::hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const {
    auto [x1, p1] = factors_of(m1, n1, a);
    auto [x2, p2] = factors_of(m2, n2, b);
    SparseVec va = a_->hcomp_basis(m1, n1, m2, n2, x1, x2);
    if (sv_is_zero(va)) return {};
    SparseVec vb = b_->hcomp_basis(m1, n1, m2, n2, p1, p2);
    if (sv_is_zero(vb)) return {};
    int degp1 = b_->degree_of(m1, n1, p1);
    int degx2 = a_->degree_of(m2, n2, x2);
    int sign = (degp1 % 2 != 0 && degx2 % 2 != 0) ? -1 : 1;
    return combine(comp(m1 + m2, n1 + n2), va, vb, sign);
}

SparseVec TensorProp::unit(int n) const {
    return combine(comp(n, n), a_->unit(n), b_->unit(n), 1);
}

SparseMatrix TensorProp::action_matrix(const Component& c, const SparseMatrix& ma,
                                       const SparseMatrix& mb) const {
    SparseMatrix out(c.tc.cx.total_dim(), c.tc.cx.total_dim());
    for (int idx = 0; idx < c.tc.cx.total_dim(); ++idx) {
        const auto& w = c.tc.word_of[static_cast<size_t>(idx)];
        out.set_col(idx, combine(c, ma.col(w[0]), mb.col(w[1]), 1));
    }
    return out;
}

SparseMatrix TensorProp::right_action(int m, int n, const Perm& sigma) const {
    return action_matrix(comp(m, n), a_->right_action(m, n, sigma),
                         b_->right_action(m, n, sigma));
}

SparseMatrix TensorProp::left_action(int m, int n, const Perm& tau) const {
    return action_matrix(comp(m, n), a_->left_action(m, n, tau), b_->left_action(m, n, tau));
}

std::vector<int> TensorProp::vleft_candidates(int m, int k, int n, int b) const {
    auto [x2, p2] = factors_of(m, k, b);
    auto ca = a_->vleft_candidates(m, k, n, x2);
    auto cb = b_->vleft_candidates(m, k, n, p2);
    const Component& c = comp(k, n);
    std::vector<int> out;
    out.reserve(ca.size() * cb.size());
    for (int xa : ca)
        for (int xb : cb) out.push_back(c.pair_idx[static_cast<size_t>(xa) * c.dim_b + xb]);
    return out;
}

std::vector<int> TensorProp::vright_candidates(int m, int k, int n, int a) const {
    auto [x1, p1] = factors_of(k, n, a);
    auto ca = a_->vright_candidates(m, k, n, x1);
    auto cb = b_->vright_candidates(m, k, n, p1);
    const Component& c = comp(m, k);
    std::vector<int> out;
    out.reserve(ca.size() * cb.size());
    for (int xa : ca)
        for (int xb : cb) out.push_back(c.pair_idx[static_cast<size_t>(xa) * c.dim_b + xb]);
    return out;
}

}  // namespace propcalc
