#include "propcalc/free21.hpp"

#include <algorithm>
#include <functional>

#include "propcalc/error.hpp"

namespace propcalc {

int Free21Prop::mk_leaf(int label) const {
    arena_.push_back({label, -1, -1});
    return static_cast<int>(arena_.size()) - 1;
}

int Free21Prop::mk_node(int l, int r) const {
    arena_.push_back({-1, l, r});
    return static_cast<int>(arena_.size()) - 1;
}

std::string Free21Prop::encode_tree(int t) const {
    const Node& n = arena_[static_cast<size_t>(t)];
    if (n.label >= 0) return "x" + std::to_string(n.label + 1);
    return "(" + encode_tree(n.left) + encode_tree(n.right) + ")";
}

std::string Free21Prop::encode(const Forest& f) const {
    std::string out;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ";";
        out += encode_tree(f[i]);
    }
    return out;
}

int Free21Prop::leaves(int t) const {
    const Node& n = arena_[static_cast<size_t>(t)];
    if (n.label >= 0) return 1;
    return leaves(n.left) + leaves(n.right);
}

void Free21Prop::shapes(int k, std::vector<int>& out) const {
    if (k == 1) {
        out.push_back(mk_leaf(-2));
        return;
    }
    for (int i = 1; i < k; ++i) {
        std::vector<int> ls, rs;
        shapes(i, ls);
        shapes(k - i, rs);
        for (int l : ls)
            for (int r : rs) out.push_back(mk_node(l, r));
    }
}

int Free21Prop::relabel(int t, const std::vector<int>& labels, int& cursor) const {
    const Node& n = arena_[static_cast<size_t>(t)];
    if (n.left < 0) return mk_leaf(labels[static_cast<size_t>(cursor++)]);
    int l = relabel(n.left, labels, cursor);
    int r = relabel(n.right, labels, cursor);
    return mk_node(l, r);
}

int Free21Prop::graft(int t, const std::vector<int>& replacement_roots) const {
    const Node& n = arena_[static_cast<size_t>(t)];
    if (n.label >= 0) return replacement_roots[static_cast<size_t>(n.label)];
    int l = graft(n.left, replacement_roots);
    int r = graft(n.right, replacement_roots);
    return mk_node(l, r);
}

Free21Prop::Forest Free21Prop::perm_forest(const Perm& sigma) const {
    Perm inv = perm_inverse(sigma);
    Forest f;
    for (int j = 0; j < static_cast<int>(sigma.size()); ++j) f.push_back(mk_leaf(inv[j]));
    return f;
}

int Free21Prop::lookup(int m, int n, const Forest& f) const {
    const Component& c = comp(m, n);
    auto it = c.index.find(encode(f));
    if (it == c.index.end())
        throw Error(ErrorKind::Internal, "free prop composite missing from basis");
    return it->second;
}

const Free21Prop::Component& Free21Prop::comp(int m, int n) const {
    require(m, n);
    return comps_.at({m, n});
}

namespace {
// All ordered compositions of m into n positive parts.
void compositions(int m, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 1) {
        if (m >= 1) {
            cur.push_back(m);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int c = 1; c <= m - (n - 1); ++c) {
        cur.push_back(c);
        compositions(m - c, n - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

Free21Prop::Free21Prop(BiarityBound bound) : Prop(bound) {
    for (const auto& b : bound.components()) {
        Component c;
        if (b.m >= b.n) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            compositions(b.m, b.n, cur, comps);
            for (const auto& sizes : comps) {
                // All shape tuples for this composition.
                std::vector<std::vector<int>> tree_shapes(sizes.size());
                for (size_t j = 0; j < sizes.size(); ++j)
                    shapes(sizes[j], tree_shapes[j]);
                std::vector<size_t> pick(sizes.size(), 0);
                while (true) {
                    for (const Perm& labels : all_perms(b.m)) {
                        Forest f;
                        int cursor = 0;
                        for (size_t j = 0; j < sizes.size(); ++j)
                            f.push_back(relabel(tree_shapes[j][pick[j]], labels, cursor));
                        c.index.emplace(encode(f), static_cast<int>(c.basis.size()));
                        c.basis.push_back(std::move(f));
                    }
                    size_t j = 0;
                    while (j < pick.size() && ++pick[j] == tree_shapes[j].size())
                        pick[j++] = 0;
                    if (j == pick.size()) break;
                }
            }
        }
        std::map<int, std::vector<std::string>> basis_labels;
        if (!c.basis.empty()) {
            basis_labels[0] = {};
            for (const auto& f : c.basis) basis_labels[0].push_back(encode(f));
        }
        c.cx = ChainComplex::make(std::move(basis_labels), {});
        comps_.emplace(b, std::move(c));
    }
    if (bound.contains(2, 1)) {
        Forest g{mk_node(mk_leaf(0), mk_leaf(1))};
        gen_index_ = lookup(2, 1, g);
    }
    // Precompute every in-bound structure map as an index table.
    for (int m = 1; m <= bound.A; ++m)
        for (int k = 1; k <= bound.A; ++k)
            for (int n = 1; n <= bound.A; ++n) {
                if (!bound.contains(k, n) || !bound.contains(m, k) || !bound.contains(m, n))
                    continue;
                const Component& ca = comps_.at({k, n});
                const Component& cb = comps_.at({m, k});
                std::vector<std::vector<int>> tab(
                    static_cast<size_t>(ca.cx.total_dim()),
                    std::vector<int>(static_cast<size_t>(cb.cx.total_dim())));
                for (int a = 0; a < ca.cx.total_dim(); ++a)
                    for (int b = 0; b < cb.cx.total_dim(); ++b) {
                        Forest out;
                        for (int root : ca.basis[static_cast<size_t>(a)])
                            out.push_back(graft(root, cb.basis[static_cast<size_t>(b)]));
                        tab[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                            lookup(m, n, out);
                    }
                vtab_.emplace(std::array<int, 3>{m, k, n}, std::move(tab));
            }
    for (const auto& c1 : bound.components())
        for (const auto& c2 : bound.components()) {
            if (!bound.contains(c1.m + c2.m, c1.n + c2.n)) continue;
            const Component& ca = comps_.at(c1);
            const Component& cb = comps_.at(c2);
            std::vector<std::vector<int>> tab(
                static_cast<size_t>(ca.cx.total_dim()),
                std::vector<int>(static_cast<size_t>(cb.cx.total_dim())));
            for (int a = 0; a < ca.cx.total_dim(); ++a)
                for (int b = 0; b < cb.cx.total_dim(); ++b) {
                    Forest out = ca.basis[static_cast<size_t>(a)];
                    for (int root : cb.basis[static_cast<size_t>(b)]) {
                        std::vector<int> repl;
                        for (int i = 0; i < c2.m; ++i) repl.push_back(mk_leaf(i + c1.m));
                        out.push_back(graft(root, repl));
                    }
                    tab[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                        lookup(c1.m + c2.m, c1.n + c2.n, out);
                }
            htab_.emplace(std::array<int, 4>{c1.m, c1.n, c2.m, c2.n}, std::move(tab));
        }
    for (const auto& b : bound.components()) {
        const Component& c = comps_.at(b);
        auto& rmap = ract_[b];
        for (const Perm& sigma : all_perms(b.m)) {
            Forest e = perm_forest(sigma);
            std::vector<int> tab(static_cast<size_t>(c.cx.total_dim()));
            for (int a = 0; a < c.cx.total_dim(); ++a) {
                Forest img;
                for (int root : c.basis[static_cast<size_t>(a)]) img.push_back(graft(root, e));
                tab[static_cast<size_t>(a)] = lookup(b.m, b.n, img);
            }
            rmap.emplace(sigma, std::move(tab));
        }
        auto& lmap = lact_[b];
        for (const Perm& tau : all_perms(b.n)) {
            Perm inv = perm_inverse(tau);
            std::vector<int> tab(static_cast<size_t>(c.cx.total_dim()));
            for (int a = 0; a < c.cx.total_dim(); ++a) {
                const Forest& f = c.basis[static_cast<size_t>(a)];
                Forest img;
                for (int j = 0; j < b.n; ++j) img.push_back(f[static_cast<size_t>(inv[j])]);
                tab[static_cast<size_t>(a)] = lookup(b.m, b.n, img);
            }
            lmap.emplace(tau, std::move(tab));
        }
        if (b.m == b.n) unit_idx_[b.m] = lookup(b.m, b.m, perm_forest(perm_identity(b.m)));
    }
}

const ChainComplex& Free21Prop::component(int m, int n) const { return comp(m, n).cx; }

SparseVec Free21Prop::vcomp_basis(int m, int k, int n, int a, int b) const {
    require(m, n);
    const auto& tab = vtab_.at({m, k, n});
    return sv_single(tab[static_cast<size_t>(a)][static_cast<size_t>(b)], 1);
}

SparseVec Free21Prop::hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const {
    require(m1 + m2, n1 + n2);
    const auto& tab = htab_.at({m1, n1, m2, n2});
    return sv_single(tab[static_cast<size_t>(a)][static_cast<size_t>(b)], 1);
}

SparseVec Free21Prop::unit(int n) const {
    require(n, n);
    return sv_single(unit_idx_.at(n), 1);
}

SparseMatrix Free21Prop::right_action(int m, int n, const Perm& sigma) const {
    const Component& c = comp(m, n);
    const auto& tab = ract_.at({m, n}).at(sigma);
    SparseMatrix out(c.cx.total_dim(), c.cx.total_dim());
    for (int a = 0; a < c.cx.total_dim(); ++a) out.set(tab[static_cast<size_t>(a)], a, 1);
    return out;
}

SparseMatrix Free21Prop::left_action(int m, int n, const Perm& tau) const {
    const Component& c = comp(m, n);
    const auto& tab = lact_.at({m, n}).at(tau);
    SparseMatrix out(c.cx.total_dim(), c.cx.total_dim());
    for (int a = 0; a < c.cx.total_dim(); ++a) out.set(tab[static_cast<size_t>(a)], a, 1);
    return out;
}

WordPtr Free21Prop::word_for(int m, int n, int idx) const {
    const Forest& f = comp(m, n).basis[static_cast<size_t>(idx)];
    // Recursive tree word with leaves read as consecutive inputs, then a
    // right permutation to install the actual labels.
    std::vector<int> labels_in_order;
    std::function<WordPtr(int)> tw = [&](int t) -> WordPtr {
        const Node& nd = arena_[static_cast<size_t>(t)];
        if (nd.label >= 0) {
            labels_in_order.push_back(nd.label);
            return GeneratorWord::make_unit(1);
        }
        WordPtr l = tw(nd.left);
        WordPtr r = tw(nd.right);
        return GeneratorWord::make_vcomp(GeneratorWord::make_gen(0),
                                         GeneratorWord::make_hcomp(l, r));
    };
    WordPtr w;
    for (int root : f) {
        WordPtr t = tw(root);
        w = w ? GeneratorWord::make_hcomp(w, t) : t;
    }
    Perm sigma = perm_inverse(labels_in_order);
    if (!perm_is_identity(sigma)) w = GeneratorWord::make_right_perm(w, sigma);
    return w;
}

Free21Fixture make_free21(BiarityBound bound) {
    Free21Fixture out;
    auto prop = std::make_shared<Free21Prop>(bound);
    out.prop = prop;
    QuasiFreePresentation::Generator g;
    g.label = "g";
    g.at = {2, 1};
    g.degree = 0;
    g.dword = GeneratorWord::make_zero(2, 1);
    out.presentation.generators.push_back(std::move(g));
    for (const auto& b : bound.components()) {
        std::vector<WordPtr>& ws = out.presentation.words[b];
        for (int i = 0; i < prop->dim(b.m, b.n); ++i) ws.push_back(prop->word_for(b.m, b.n, i));
    }
    out.gen_values.push_back({{2, 1}, sv_single(prop->generator_index(), 1)});
    return out;
}

}  // namespace propcalc
