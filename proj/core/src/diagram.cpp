#include "propcalc/diagram.hpp"

#include "propcalc/error.hpp"

namespace propcalc {

namespace {

bool same_shape(const ChainComplex& a, const ChainComplex& b) {
    if (a.total_dim() != b.total_dim()) return false;
    for (int deg : a.degrees())
        if (a.dim(deg) != b.dim(deg)) return false;
    for (int deg : b.degrees())
        if (a.dim(deg) != b.dim(deg)) return false;
    return true;
}

}  // namespace

int DiagramShape::add_object(std::string label, ChainComplex x) {
    object_labels.push_back(std::move(label));
    objects.push_back(std::move(x));
    return static_cast<int>(objects.size()) - 1;
}

void DiagramShape::add_arrow(int src, int tgt, std::string label, ChainMap map,
                             bool is_identity) {
    Arrow a;
    a.src = src;
    a.tgt = tgt;
    a.label = std::move(label);
    a.map = std::move(map);
    a.is_identity = is_identity;
    arrows.push_back(std::move(a));
}

void DiagramShape::validate() const {
    int nobj = static_cast<int>(objects.size());
    for (const Arrow& u : arrows) {
        if (u.src < 0 || u.src >= nobj || u.tgt < 0 || u.tgt >= nobj)
            throw Error(ErrorKind::ShapeMismatch, "arrow " + u.label + ": endpoint out of range");
        if (!same_shape(u.map.src(), objects[static_cast<size_t>(u.src)]) ||
            !same_shape(u.map.tgt(), objects[static_cast<size_t>(u.tgt)]))
            throw Error(ErrorKind::ShapeMismatch, "arrow " + u.label + ": map endpoints mismatch");
        if (!u.map.commutes_with_d())
            throw Error(ErrorKind::ShapeMismatch, "arrow " + u.label + ": not a chain map");
        if (u.is_identity) {
            if (u.src != u.tgt)
                throw Error(ErrorKind::ShapeMismatch, "arrow " + u.label + ": identity with src != tgt");
            SparseMatrix id = ChainMap::identity(u.map.src()).global_matrix();
            if (!u.map.global_matrix().equal(id))
                throw Error(ErrorKind::ShapeMismatch, "arrow " + u.label + ": marked identity but is not");
        }
    }
}

const ChainComplex& DiagramEndProp::arrow_complex(int m, int n) const {
    return data.at({m, n}).bsum;
}

const ChainMap& DiagramEndProp::d0(int m, int n) const { return data.at({m, n}).d0; }
const ChainMap& DiagramEndProp::d1(int m, int n) const { return data.at({m, n}).d1; }

ChainMap DiagramEndProp::s0(int m, int n) const {
    const ComponentData& cd = data.at({m, n});
    // Pick one identity arrow per object.
    std::vector<int> id_arrow(shape.objects.size(), -1);
    for (int u = 0; u < static_cast<int>(shape.arrows.size()); ++u)
        if (shape.arrows[static_cast<size_t>(u)].is_identity &&
            id_arrow[static_cast<size_t>(shape.arrows[static_cast<size_t>(u)].src)] < 0)
            id_arrow[static_cast<size_t>(shape.arrows[static_cast<size_t>(u)].src)] = u;
    for (size_t i = 0; i < shape.objects.size(); ++i)
        if (id_arrow[i] < 0)
            throw Error(ErrorKind::ShapeMismatch,
                        "coreflexive section requires an identity arrow at object " +
                            shape.object_labels[i]);

    const ChainComplex& prod_cx = product->component(m, n);
    SparseMatrix mat(prod_cx.total_dim(), cd.bsum.total_dim());
    // For every identity arrow's hom summand, transport its basis into the
    // matching End factor and include into the product.
    for (size_t i = 0; i < shape.objects.size(); ++i) {
        size_t u = static_cast<size_t>(id_arrow[i]);
        const HomComplex& hu = cd.arrow_hom[u];
        const HomComplex& he = ends[i]->hom(m, n);
        ChainMap inc = product->inclusion(static_cast<int>(i), m, n);
        for (int h = 0; h < hu.cx().total_dim(); ++h) {
            SparseVec in_end = he.from_matrix(hu.to_matrix(sv_single(h, 1)));
            SparseVec col = inc.apply_global(in_end);
            auto [deg, loc] = hu.cx().degree_local(h);
            int off = 0;
            for (size_t v = 0; v < u; ++v)
                off += cd.arrow_hom[v].cx().has_degree(deg) ? cd.arrow_hom[v].cx().dim(deg) : 0;
            int col_idx = cd.bsum.global_index(deg, off + loc);
            for (const Term& t : col) mat.set(t.idx, col_idx, t.coeff);
        }
    }
    return ChainMap::from_global(cd.bsum, prod_cx, mat);
}

SparseVec DiagramEndProp::member(int m, int n, int i, const SparseVec& v) const {
    SparseVec amb = prop->include(m, n, v);
    return product->projection(i, m, n).apply_global(amb);
}

DiagramEndProp diagram_endomorphism_prop(DiagramShape d, BiarityBound bound) {
    d.validate();
    DiagramEndProp out;
    out.shape = std::move(d);
    std::vector<PropPtr> factors;
    for (const ChainComplex& x : out.shape.objects) {
        auto e = std::make_shared<EndProp>(x, bound);
        out.ends.push_back(e);
        factors.push_back(e);
    }
    auto product = std::make_shared<ProductProp>(factors, bound);
    out.product = product;

    std::map<Biarity, std::vector<SparseVec>> spans;
    for (Biarity b : bound.components()) {
        int m = b.m, n = b.n;
        DiagramEndProp::ComponentData cd;
        const ChainComplex& prod_cx = product->component(m, n);

        // Per-arrow hom complexes, their fold-left direct sum, and the tensor
        // powers of the arrow maps.
        std::vector<SparseMatrix> um, un;  // u^{⊗m}, u^{⊗n} global matrices
        for (const DiagramShape::Arrow& u : out.shape.arrows) {
            const TensorComplex& sm = out.ends[static_cast<size_t>(u.src)]->power(m);
            const TensorComplex& tm = out.ends[static_cast<size_t>(u.tgt)]->power(m);
            const TensorComplex& sn = out.ends[static_cast<size_t>(u.src)]->power(n);
            const TensorComplex& tn = out.ends[static_cast<size_t>(u.tgt)]->power(n);
            std::vector<const ChainMap*> fm(static_cast<size_t>(m), &u.map);
            std::vector<const ChainMap*> fn(static_cast<size_t>(n), &u.map);
            um.push_back(tensor_map(sm, tm, fm).global_matrix());
            un.push_back(tensor_map(sn, tn, fn).global_matrix());
            cd.arrow_hom.push_back(hom_complex(sm.cx, tn.cx));
        }
        ChainComplex bsum;
        for (size_t u = 0; u < out.shape.arrows.size(); ++u)
            bsum = u == 0 ? cd.arrow_hom[u].cx()
                          : ChainComplex::direct_sum(bsum, cd.arrow_hom[u].cx());
        cd.bsum = std::move(bsum);

        // bsum global index of basis element h of arrow u's hom summand.
        auto bsum_index = [&](size_t u, int h) {
            auto [deg, loc] = cd.arrow_hom[u].cx().degree_local(h);
            int off = 0;
            for (size_t v = 0; v < u; ++v)
                off += cd.arrow_hom[v].cx().has_degree(deg) ? cd.arrow_hom[v].cx().dim(deg) : 0;
            return cd.bsum.global_index(deg, off + loc);
        };

        SparseMatrix m0(cd.bsum.total_dim(), prod_cx.total_dim());
        SparseMatrix m1(cd.bsum.total_dim(), prod_cx.total_dim());
        for (int g = 0; g < prod_cx.total_dim(); ++g) {
            auto [f, e] = product->to_factor(m, n, g);
            SparseMatrix fmat = out.ends[static_cast<size_t>(f)]->hom(m, n).to_matrix(
                sv_single(e, 1));
            for (size_t u = 0; u < out.shape.arrows.size(); ++u) {
                const DiagramShape::Arrow& arr = out.shape.arrows[u];
                if (arr.src == f) {
                    SparseVec h = cd.arrow_hom[u].from_matrix(un[u].multiply(fmat));
                    for (const Term& t : h) m0.set(bsum_index(u, t.idx), g, t.coeff);
                }
                if (arr.tgt == f) {
                    SparseVec h = cd.arrow_hom[u].from_matrix(fmat.multiply(um[u]));
                    for (const Term& t : h) m1.set(bsum_index(u, t.idx), g, t.coeff);
                }
            }
        }
        cd.d0 = ChainMap::from_global(prod_cx, cd.bsum, m0);
        cd.d1 = ChainMap::from_global(prod_cx, cd.bsum, m1);

        if (out.shape.arrows.empty()) {
            std::vector<SparseVec> full;
            for (int g = 0; g < prod_cx.total_dim(); ++g) full.push_back(sv_single(g, 1));
            spans[b] = std::move(full);
        } else {
            SubComplex ker = kernel_complex(cd.d0.sub(cd.d1), "eq");
            spans[b] = ker.basis_global;
        }
        out.data.emplace(b, std::move(cd));
    }
    out.prop = std::make_shared<SubProp>(product, spans, bound, "dend");
    return out;
}

PropMorphism restrict_along(const DiagramEndProp& from, const DiagramEndProp& to,
                            const std::vector<int>& obj_map) {
    if (obj_map.size() != to.shape.objects.size())
        throw Error(ErrorKind::ShapeMismatch, "restrict_along: obj_map size mismatch");
    for (size_t i = 0; i < obj_map.size(); ++i)
        if (!same_shape(to.shape.objects[i],
                        from.shape.objects[static_cast<size_t>(obj_map[i])]))
            throw Error(ErrorKind::ShapeMismatch,
                        "restrict_along: carrier mismatch at object " + to.shape.object_labels[i]);

    PropMorphism out;
    out.src = from.prop;
    out.tgt = to.prop;
    for (Biarity b : to.prop->bound().components()) {
        int m = b.m, n = b.n;
        const ChainComplex& scx = from.prop->component(m, n);
        const ChainComplex& tcx = to.prop->component(m, n);
        SparseMatrix mat(tcx.total_dim(), scx.total_dim());
        for (int g = 0; g < scx.total_dim(); ++g) {
            SparseVec amb = from.prop->include(m, n, sv_single(g, 1));
            SparseVec reassembled;
            for (size_t i = 0; i < obj_map.size(); ++i) {
                SparseVec piece = from.product->projection(obj_map[i], m, n).apply_global(amb);
                sv_axpy(reassembled, 1,
                        to.product->inclusion(static_cast<int>(i), m, n).apply_global(piece));
            }
            SparseVec res = to.prop->restrict(m, n, reassembled);
            for (const Term& t : res) mat.set(t.idx, g, t.coeff);
        }
        out.maps.emplace(b, ChainMap::from_global(scx, tcx, mat));
    }
    return out;
}

}  // namespace propcalc
