#include "propcalc/biobject.hpp"

#include <algorithm>

#include "propcalc/error.hpp"

namespace propcalc {

std::vector<int> adjacent_transposition_word(const Perm& p) {
    // Bubble-sort the one-line notation; right-multiplying by s_i swaps
    // entries i, i+1. p ∘ s_{w_1} ∘ ... ∘ s_{w_k} = id gives
    // p = s_{w_k} ∘ ... ∘ s_{w_1}.
    Perm q = p;
    std::vector<int> swaps;
    bool done = false;
    while (!done) {
        done = true;
        for (size_t i = 0; i + 1 < q.size(); ++i) {
            if (q[i] > q[i + 1]) {
                std::swap(q[i], q[i + 1]);
                swaps.push_back(static_cast<int>(i));
                done = false;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

SparseMatrix ComponentAction::right(const Perm& sigma, int dim) const {
    // Right action: R_{gh} = R_h · R_g, so for sigma = s_{w_1} ∘ ... ∘ s_{w_k}
    // multiply generator matrices in reverse word order.
    SparseMatrix r = SparseMatrix::identity(dim);
    auto word = adjacent_transposition_word(sigma);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.multiply(right_gen.at(*it));
    return r;
}

SparseMatrix ComponentAction::left(const Perm& tau, int dim) const {
    // Left action: L_{gh} = L_g · L_h.
    SparseMatrix l = SparseMatrix::identity(dim);
    auto word = adjacent_transposition_word(tau);
    for (int w : word) l = l.multiply(left_gen.at(w));
    return l;
}

const ChainComplex& BiObject::component(int m, int n) const {
    auto it = components.find({m, n});
    if (it == components.end())
        throw Error(ErrorKind::TruncationExceeded,
                    "no component (" + std::to_string(m) + "," + std::to_string(n) + ")");
    return it->second;
}

SparseMatrix BiObject::right_action(int m, int n, const Perm& sigma) const {
    return actions.at({m, n}).right(sigma, component(m, n).total_dim());
}

SparseMatrix BiObject::left_action(int m, int n, const Perm& tau) const {
    return actions.at({m, n}).left(tau, component(m, n).total_dim());
}

SparseMatrix symmetric_power_action(const TensorComplex& xm, const Perm& sigma) {
    return tensor_shuffle(xm, xm, sigma).global_matrix();
}

BiObject free_biobject(const BiarityBound& bound, const std::map<Biarity, ChainComplex>& M) {
    BiObject out;
    out.bound = bound;
    for (const auto& [b, mc] : M) {
        if (!bound.contains(b.m, b.n))
            throw Error(ErrorKind::TruncationExceeded, "free_biobject: component out of bound");
        auto sn = all_perms(b.n);
        auto sm = all_perms(b.m);
        int ncopies = static_cast<int>(sn.size() * sm.size());
        int dimM = mc.total_dim();

        // Basis per degree: copies in (tau, sigma) lex order, then M's local
        // order within each copy.
        std::map<int, std::vector<std::string>> basis;
        std::map<int, SparseMatrix> diff;
        for (int deg : mc.degrees()) {
            auto& labels = basis[deg];
            for (int c = 0; c < ncopies; ++c)
                for (const auto& l : mc.labels(deg))
                    labels.push_back("c" + std::to_string(c) + "⋆" + l);
        }
        for (int deg : mc.degrees()) {
            SparseMatrix dm = mc.differential(deg);
            if (dm.rows() == 0 || dm.is_zero()) continue;
            SparseMatrix big(dm.rows() * ncopies, dm.cols() * ncopies);
            for (int c = 0; c < ncopies; ++c)
                for (int j = 0; j < dm.cols(); ++j)
                    big.set_col(c * dm.cols() + j, sv_shift(dm.col(j), c * dm.rows()));
            diff[deg] = std::move(big);
        }
        ChainComplex cx = ChainComplex::make(std::move(basis), std::move(diff));

        // Global index of (copy c, M-global g): per degree, copies are blocks.
        auto global_of = [&](int c, int g) {
            auto [deg, local] = mc.degree_local(g);
            return cx.global_offset(deg) + c * mc.dim(deg) + local;
        };

        ComponentAction act;
        auto copy_perm_matrix = [&](auto&& copy_map) {
            SparseMatrix r(cx.total_dim(), cx.total_dim());
            for (int c = 0; c < ncopies; ++c) {
                int c2 = copy_map(c);
                for (int g = 0; g < dimM; ++g) r.set(global_of(c2, g), global_of(c, g), 1);
            }
            return r;
        };
        // Copy index c = tau_index * m! + sigma_index.
        int mfact = static_cast<int>(sm.size());
        auto perm_index = [](const std::vector<Perm>& ps, const Perm& p) {
            return static_cast<int>(std::lower_bound(ps.begin(), ps.end(), p) - ps.begin());
        };
        for (int i = 0; i + 1 < b.m; ++i) {
            Perm s = perm_identity(b.m);
            std::swap(s[i], s[i + 1]);
            act.right_gen.push_back(copy_perm_matrix([&](int c) {
                int ti = c / mfact, si = c % mfact;
                return ti * mfact + perm_index(sm, perm_compose(sm[si], s));
            }));
        }
        for (int i = 0; i + 1 < b.n; ++i) {
            Perm s = perm_identity(b.n);
            std::swap(s[i], s[i + 1]);
            act.left_gen.push_back(copy_perm_matrix([&](int c) {
                int ti = c / mfact, si = c % mfact;
                return perm_index(sn, perm_compose(s, sn[ti])) * mfact + si;
            }));
        }
        out.components.emplace(b, std::move(cx));
        out.actions.emplace(b, std::move(act));
    }
    return out;
}

std::map<Biarity, MorphismClass> classify_morphism(const BiObjectMorphism& f) {
    std::map<Biarity, MorphismClass> out;
    for (const auto& [b, map] : f.maps) {
        MorphismClass c;
        c.weak_equiv = map.is_quasi_iso();
        c.fibration = map.is_surjective();
        c.cofibration = map.is_injective();
        out[b] = c;
    }
    return out;
}

namespace {

bool is_chain_auto(const ChainComplex& cx, const SparseMatrix& m) {
    try {
        ChainMap f = ChainMap::from_global(cx, cx, m);
        return f.commutes_with_d();
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

std::vector<CheckIssue> check_biobject(const BiObject& b) {
    std::vector<CheckIssue> issues;
    for (const auto& [ba, cx] : b.components) {
        const auto& act = b.actions.at(ba);
        std::string where = "(" + std::to_string(ba.m) + "," + std::to_string(ba.n) + ")";
        if (static_cast<int>(act.right_gen.size()) != std::max(0, ba.m - 1) ||
            static_cast<int>(act.left_gen.size()) != std::max(0, ba.n - 1)) {
            issues.push_back({where, "wrong number of action generators"});
            continue;
        }
        int dim = cx.total_dim();
        SparseMatrix id = SparseMatrix::identity(dim);
        auto check_family = [&](const std::vector<SparseMatrix>& gen, const char* side) {
            for (size_t i = 0; i < gen.size(); ++i) {
                if (!is_chain_auto(cx, gen[i]))
                    issues.push_back({where, std::string(side) + " generator " + std::to_string(i) +
                                                 " is not a chain map"});
                if (!gen[i].multiply(gen[i]).equal(id))
                    issues.push_back({where, std::string(side) + " generator " + std::to_string(i) +
                                                 " is not an involution"});
            }
            for (size_t i = 0; i + 1 < gen.size(); ++i) {
                SparseMatrix lhs = gen[i].multiply(gen[i + 1]).multiply(gen[i]);
                SparseMatrix rhs = gen[i + 1].multiply(gen[i]).multiply(gen[i + 1]);
                if (!lhs.equal(rhs))
                    issues.push_back({where, std::string(side) + " braid relation fails at " +
                                                 std::to_string(i)});
            }
            for (size_t i = 0; i < gen.size(); ++i)
                for (size_t j = i + 2; j < gen.size(); ++j)
                    if (!gen[i].multiply(gen[j]).equal(gen[j].multiply(gen[i])))
                        issues.push_back({where, std::string(side) + " distant generators " +
                                                     std::to_string(i) + "," + std::to_string(j) +
                                                     " do not commute"});
        };
        check_family(act.right_gen, "right");
        check_family(act.left_gen, "left");
        for (const auto& r : act.right_gen)
            for (const auto& l : act.left_gen)
                if (!r.multiply(l).equal(l.multiply(r)))
                    issues.push_back({where, "left and right actions do not commute"});
        // Full group laws, spot-checked at small arity.
        if (ba.m <= 3) {
            for (const auto& s : all_perms(ba.m))
                for (const auto& t : all_perms(ba.m)) {
                    SparseMatrix lhs = b.right_action(ba.m, ba.n, perm_compose(s, t));
                    SparseMatrix rhs =
                        b.right_action(ba.m, ba.n, t).multiply(b.right_action(ba.m, ba.n, s));
                    if (!lhs.equal(rhs)) {
                        issues.push_back({where, "right action group law fails"});
                        goto right_done;
                    }
                }
        right_done:;
        }
        if (ba.n <= 3) {
            for (const auto& s : all_perms(ba.n))
                for (const auto& t : all_perms(ba.n)) {
                    SparseMatrix lhs = b.left_action(ba.m, ba.n, perm_compose(s, t));
                    SparseMatrix rhs =
                        b.left_action(ba.m, ba.n, s).multiply(b.left_action(ba.m, ba.n, t));
                    if (!lhs.equal(rhs)) {
                        issues.push_back({where, "left action group law fails"});
                        goto left_done;
                    }
                }
        left_done:;
        }
    }
    return issues;
}

}  // namespace propcalc
