#include "propcalc/end_prop.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

EndProp::EndProp(ChainComplex x, BiarityBound bound) : Prop(bound), x_(std::move(x)) {
    int maxp = bound.A;
    powers_.reserve(static_cast<size_t>(maxp));
    for (int m = 1; m <= maxp; ++m) powers_.push_back(tensor_power(x_, m));
    for (const auto& b : bound.components()) {
        Component c;
        c.hom = hom_complex(powers_[b.m - 1].cx, powers_[b.n - 1].cx);
        int du = powers_[b.m - 1].cx.total_dim();
        int dv = powers_[b.n - 1].cx.total_dim();
        int dim = c.hom.cx().total_dim();
        c.elems.resize(static_cast<size_t>(dim));
        c.idx_of.assign(static_cast<size_t>(du) * dv, -1);
        for (int idx = 0; idx < dim; ++idx) {
            const auto& w = c.hom.tc.word_of[idx];
            int u = c.hom.dual_to_A[w[0]];
            int v = w[1];
            int sign = c.hom.basis_sign(u, v) > 0 ? 1 : -1;
            c.elems[idx] = {u, v, sign};
            c.idx_of[static_cast<size_t>(u) * dv + v] = idx;
        }
        comps_.emplace(b, std::move(c));
    }
    // Concatenation index maps for every in-bound horizontal product shape.
    for (int m1 = 1; m1 < maxp; ++m1)
        for (int m2 = 1; m1 + m2 <= maxp; ++m2) {
            const TensorComplex& t1 = powers_[m1 - 1];
            const TensorComplex& t2 = powers_[m2 - 1];
            const TensorComplex& tr = powers_[m1 + m2 - 1];
            int d1 = t1.cx.total_dim(), d2 = t2.cx.total_dim();
            std::vector<int> table(static_cast<size_t>(d1) * d2);
            for (int u1 = 0; u1 < d1; ++u1)
                for (int u2 = 0; u2 < d2; ++u2) {
                    std::vector<int> w = t1.word_of[u1];
                    const auto& w2 = t2.word_of[u2];
                    w.insert(w.end(), w2.begin(), w2.end());
                    table[static_cast<size_t>(u1) * d2 + u2] = tr.index_of.at(w);
                }
            concat_.emplace(std::make_pair(m1, m2), std::move(table));
        }
}

const EndProp::Component& EndProp::comp(int m, int n) const {
    require(m, n);
    return comps_.at({m, n});
}

const TensorComplex& EndProp::power(int m) const {
    if (m < 1 || m > static_cast<int>(powers_.size()))
        throw Error(ErrorKind::TruncationExceeded,
                    "power " + std::to_string(m) + " outside bound");
    return powers_[m - 1];
}

const HomComplex& EndProp::hom(int m, int n) const { return comp(m, n).hom; }

const EndProp::Elem& EndProp::elem(int m, int n, int idx) const {
    return comp(m, n).elems[static_cast<size_t>(idx)];
}

int EndProp::index_of_elem(int m, int n, int u, int v) const {
    const Component& c = comp(m, n);
    return c.idx_of[static_cast<size_t>(u) * power(n).cx.total_dim() + v];
}

const ChainComplex& EndProp::component(int m, int n) const { return comp(m, n).hom.cx(); }

int EndProp::concat(int m1, int m2, int u1, int u2) const {
    const auto& table = concat_.at({m1, m2});
    return table[static_cast<size_t>(u1) * power(m2).cx.total_dim() + u2];
}

SparseVec EndProp::vcomp_basis(int m, int k, int n, int a, int b) const {
    const Component& ckn = comp(k, n);
    const Component& cmk = comp(m, k);
    const Elem& ea = ckn.elems[static_cast<size_t>(a)];
    const Elem& eb = cmk.elems[static_cast<size_t>(b)];
    if (eb.v != ea.u) return {};
    const Component& cmn = comp(m, n);
    int dv = power(n).cx.total_dim();
    int idx = cmn.idx_of[static_cast<size_t>(eb.u) * dv + ea.v];
    int s = ea.sign * eb.sign * cmn.elems[static_cast<size_t>(idx)].sign;
    return sv_single(idx, s);
}

SparseVec EndProp::hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const {
    const Elem& ea = comp(m1, n1).elems[static_cast<size_t>(a)];
    const Elem& eb = comp(m2, n2).elems[static_cast<size_t>(b)];
    const Component& cr = comp(m1 + m2, n1 + n2);
    int u = concat(m1, m2, ea.u, eb.u);
    int v = concat(n1, n2, ea.v, eb.v);
    // (f ⊗ g)(x ⊗ y) = (-1)^{|g||x|} f(x) ⊗ g(y) with x = the input of f.
    int degg = power(n2).cx.degree_of(eb.v) - power(m2).cx.degree_of(eb.u);
    int degu = power(m1).cx.degree_of(ea.u);
    int koszul = (degg % 2 != 0 && degu % 2 != 0) ? -1 : 1;
    int dv = power(n1 + n2).cx.total_dim();
    int idx = cr.idx_of[static_cast<size_t>(u) * dv + v];
    int s = koszul * ea.sign * eb.sign * cr.elems[static_cast<size_t>(idx)].sign;
    return sv_single(idx, s);
}

SparseVec EndProp::unit(int n) const {
    const Component& c = comp(n, n);
    int d = power(n).cx.total_dim();
    SparseVec out;
    for (int u = 0; u < d; ++u) {
        int idx = c.idx_of[static_cast<size_t>(u) * d + u];
        out.push_back({idx, Rational(c.elems[static_cast<size_t>(idx)].sign)});
    }
    return sv_normalized(std::move(out));
}

SparseMatrix EndProp::right_action(int m, int n, const Perm& sigma) const {
    const Component& c = comp(m, n);
    // a·σ = Φ⁻¹(Φ(a) ∘ S(σ)) where S(σ) permutes tensor factors of X^{⊗m}
    // with Koszul signs. Row u of S is read off the transpose.
    SparseMatrix st = symmetric_power_action(power(m), sigma).transpose();
    int dv = power(n).cx.total_dim();
    SparseMatrix out(c.hom.cx().total_dim(), c.hom.cx().total_dim());
    for (int a = 0; a < c.hom.cx().total_dim(); ++a) {
        const Elem& e = c.elems[static_cast<size_t>(a)];
        SparseVec col;
        for (const auto& t : st.col(e.u)) {
            int idx = c.idx_of[static_cast<size_t>(t.idx) * dv + e.v];
            col.push_back({idx, t.coeff * e.sign * c.elems[static_cast<size_t>(idx)].sign});
        }
        out.set_col(a, sv_normalized(std::move(col)));
    }
    return out;
}

SparseMatrix EndProp::left_action(int m, int n, const Perm& tau) const {
    const Component& c = comp(m, n);
    // τ·a = Φ⁻¹(S(τ) ∘ Φ(a)); column v of S gives the image of the output.
    SparseMatrix s = symmetric_power_action(power(n), tau);
    int dv = power(n).cx.total_dim();
    SparseMatrix out(c.hom.cx().total_dim(), c.hom.cx().total_dim());
    for (int a = 0; a < c.hom.cx().total_dim(); ++a) {
        const Elem& e = c.elems[static_cast<size_t>(a)];
        SparseVec col;
        for (const auto& t : s.col(e.v)) {
            int idx = c.idx_of[static_cast<size_t>(e.u) * dv + t.idx];
            col.push_back({idx, t.coeff * e.sign * c.elems[static_cast<size_t>(idx)].sign});
        }
        out.set_col(a, sv_normalized(std::move(col)));
    }
    return out;
}

std::vector<int> EndProp::vleft_candidates(int m, int k, int n, int b) const {
    const Elem& eb = comp(m, k).elems[static_cast<size_t>(b)];
    const Component& ckn = comp(k, n);
    int dv = power(n).cx.total_dim();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(dv));
    for (int v = 0; v < dv; ++v)
        out.push_back(ckn.idx_of[static_cast<size_t>(eb.v) * dv + v]);
    return out;
}

std::vector<int> EndProp::vright_candidates(int m, int k, int n, int a) const {
    const Elem& ea = comp(k, n).elems[static_cast<size_t>(a)];
    const Component& cmk = comp(m, k);
    int du = power(m).cx.total_dim();
    int dv = power(k).cx.total_dim();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(du));
    for (int u = 0; u < du; ++u)
        out.push_back(cmk.idx_of[static_cast<size_t>(u) * dv + ea.u]);
    return out;
}

}  // namespace propcalc
