#include "propcalc/prop.hpp"

#include <numeric>

#include "propcalc/error.hpp"

namespace propcalc {

void Prop::require(int m, int n) const {
    if (!bound_.contains(m, n))
        throw Error(ErrorKind::TruncationExceeded,
                    "component (" + std::to_string(m) + "," + std::to_string(n) +
                        ") exceeds the biarity bound");
}

std::vector<int> Prop::vleft_candidates(int m, int k, int n, int /*b*/) const {
    (void)m;
    std::vector<int> all(dim(k, n));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

std::vector<int> Prop::vright_candidates(int m, int k, int n, int /*a*/) const {
    (void)n;
    std::vector<int> all(dim(m, k));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

SparseVec Prop::vcomp(int m, int k, int n, const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& ta : a)
        for (const auto& tb : b)
            sv_axpy(out, ta.coeff * tb.coeff, vcomp_basis(m, k, n, ta.idx, tb.idx));
    return out;
}

SparseVec Prop::hcomp(int m1, int n1, int m2, int n2, const SparseVec& a,
                      const SparseVec& b) const {
    SparseVec out;
    for (const auto& ta : a)
        for (const auto& tb : b)
            sv_axpy(out, ta.coeff * tb.coeff, hcomp_basis(m1, n1, m2, n2, ta.idx, tb.idx));
    return out;
}

BiObject Prop::underlying() const {
    BiObject out;
    out.bound = bound();
    for (const auto& b : bound().components()) {
        out.components.emplace(b, component(b.m, b.n));
        ComponentAction act;
        for (int i = 0; i + 1 < b.m; ++i) {
            Perm s = perm_identity(b.m);
            std::swap(s[i], s[i + 1]);
            act.right_gen.push_back(right_action(b.m, b.n, s));
        }
        for (int i = 0; i + 1 < b.n; ++i) {
            Perm s = perm_identity(b.n);
            std::swap(s[i], s[i + 1]);
            act.left_gen.push_back(left_action(b.m, b.n, s));
        }
        out.actions.emplace(b, std::move(act));
    }
    return out;
}

TableProp::TableProp(BiObject underlying, std::map<int, SparseVec> units)
    : Prop(underlying.bound), under_(std::move(underlying)), units_(std::move(units)) {}

const ChainComplex& TableProp::component(int m, int n) const {
    require(m, n);
    return under_.component(m, n);
}

SparseVec TableProp::vcomp_basis(int m, int k, int n, int a, int b) const {
    require(m, n);
    auto it = vtables_.find({m, k, n});
    if (it == vtables_.end()) return {};
    return it->second.at(a).at(b);
}

SparseVec TableProp::hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const {
    require(m1 + m2, n1 + n2);
    auto it = htables_.find({m1, n1, m2, n2});
    if (it == htables_.end()) return {};
    return it->second.at(a).at(b);
}

SparseVec TableProp::unit(int n) const {
    auto it = units_.find(n);
    if (it == units_.end())
        throw Error(ErrorKind::TruncationExceeded, "no unit at arity " + std::to_string(n));
    return it->second;
}

SparseMatrix TableProp::right_action(int m, int n, const Perm& sigma) const {
    require(m, n);
    return under_.right_action(m, n, sigma);
}

SparseMatrix TableProp::left_action(int m, int n, const Perm& tau) const {
    require(m, n);
    return under_.left_action(m, n, tau);
}

void TableProp::set_vtable(int m, int k, int n, std::vector<std::vector<SparseVec>> table) {
    vtables_[{m, k, n}] = std::move(table);
}

void TableProp::set_htable(int m1, int n1, int m2, int n2,
                           std::vector<std::vector<SparseVec>> table) {
    htables_[{m1, n1, m2, n2}] = std::move(table);
}

std::shared_ptr<TableProp> TableProp::materialize(const Prop& p) {
    std::map<int, SparseVec> units;
    for (int n = 1; n <= p.bound().A; ++n)
        if (p.bound().contains(n, n)) units[n] = p.unit(n);
    auto out = std::make_shared<TableProp>(p.underlying(), std::move(units));
    const auto& bd = p.bound();
    for (const auto& c : bd.components()) {
        // Vertical tables targeting (c.m, c.n) through every middle arity k.
        for (int k = 1; k <= bd.A; ++k) {
            if (!bd.contains(k, c.n) || !bd.contains(c.m, k)) continue;
            int da = p.dim(k, c.n), db = p.dim(c.m, k);
            std::vector<std::vector<SparseVec>> t(da, std::vector<SparseVec>(db));
            for (int a = 0; a < da; ++a)
                for (int b = 0; b < db; ++b) t[a][b] = p.vcomp_basis(c.m, k, c.n, a, b);
            out->set_vtable(c.m, k, c.n, std::move(t));
        }
    }
    for (const auto& c1 : bd.components())
        for (const auto& c2 : bd.components()) {
            if (!bd.contains(c1.m + c2.m, c1.n + c2.n)) continue;
            int da = p.dim(c1.m, c1.n), db = p.dim(c2.m, c2.n);
            std::vector<std::vector<SparseVec>> t(da, std::vector<SparseVec>(db));
            for (int a = 0; a < da; ++a)
                for (int b = 0; b < db; ++b)
                    t[a][b] = p.hcomp_basis(c1.m, c1.n, c2.m, c2.n, a, b);
            out->set_htable(c1.m, c1.n, c2.m, c2.n, std::move(t));
        }
    return out;
}

const ChainMap& PropMorphism::at(int m, int n) const {
    auto it = maps.find({m, n});
    if (it == maps.end())
        throw Error(ErrorKind::TruncationExceeded,
                    "morphism has no component (" + std::to_string(m) + "," + std::to_string(n) +
                        ")");
    return it->second;
}

SparseVec PropMorphism::apply(int m, int n, const SparseVec& v) const {
    return at(m, n).apply_global(v);
}

PropMorphism PropMorphism::identity(const PropPtr& p) {
    PropMorphism f;
    f.src = p;
    f.tgt = p;
    for (const auto& b : p->bound().components())
        f.maps.emplace(b, ChainMap::identity(p->component(b.m, b.n)));
    return f;
}

PropMorphism PropMorphism::compose(const PropMorphism& first) const {
    PropMorphism out;
    out.src = first.src;
    out.tgt = tgt;
    for (const auto& [b, g] : first.maps) {
        auto it = maps.find(b);
        if (it == maps.end()) continue;
        out.maps.emplace(b, it->second.compose(g));
    }
    return out;
}

}  // namespace propcalc
