#include "propcalc/chain_complex.hpp"

#include <algorithm>

#include "propcalc/error.hpp"

namespace propcalc {

ChainComplex ChainComplex::make(std::map<int, std::vector<std::string>> basis,
                                std::map<int, SparseMatrix> diff) {
    ChainComplex c;
    for (auto& [deg, labels] : basis) {
        if (labels.empty()) continue;
        c.basis_[deg] = std::move(labels);
    }
    int off = 0;
    for (const auto& [deg, labels] : c.basis_) {
        c.dims_[deg] = static_cast<int>(labels.size());
        c.offsets_[deg] = off;
        off += static_cast<int>(labels.size());
        c.degree_list_.push_back(deg);
    }
    c.total_dim_ = off;
    for (auto& [deg, m] : diff) {
        if (m.is_zero()) continue;
        if (m.cols() != c.dim(deg) || m.rows() != c.dim(deg - 1))
            throw Error(ErrorKind::ShapeMismatch,
                        "differential at degree " + std::to_string(deg) + " has shape " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(c.dim(deg - 1)) + "x" +
                            std::to_string(c.dim(deg)));
        c.diff_[deg] = std::move(m);
    }
    for (const auto& [deg, m] : c.diff_) {
        auto below = c.diff_.find(deg - 1);
        if (below != c.diff_.end() && !below->second.multiply(m).is_zero())
            throw Error(ErrorKind::SquareZeroViolation,
                        "d∘d != 0 at degree " + std::to_string(deg));
    }
    return c;
}

ChainComplex ChainComplex::unit(const std::string& label) {
    return make({{0, {label}}}, {});
}

int ChainComplex::dim(int deg) const {
    auto it = dims_.find(deg);
    return it == dims_.end() ? 0 : it->second;
}

int ChainComplex::min_degree() const { return degree_list_.empty() ? 0 : degree_list_.back(); }
int ChainComplex::max_degree() const { return degree_list_.empty() ? 0 : degree_list_.front(); }

const std::string& ChainComplex::label(int deg, int local) const {
    return basis_.at(deg).at(local);
}

const std::vector<std::string>& ChainComplex::labels(int deg) const {
    static const std::vector<std::string> empty;
    auto it = basis_.find(deg);
    return it == basis_.end() ? empty : it->second;
}

std::vector<std::string> ChainComplex::global_labels() const {
    std::vector<std::string> out;
    out.reserve(total_dim_);
    for (int deg : degree_list_)
        for (const auto& l : basis_.at(deg)) out.push_back(l);
    return out;
}

SparseMatrix ChainComplex::differential(int deg) const {
    auto it = diff_.find(deg);
    if (it != diff_.end()) return it->second;
    return SparseMatrix::zero(dim(deg - 1), dim(deg));
}

int ChainComplex::global_offset(int deg) const {
    auto it = offsets_.find(deg);
    if (it == offsets_.end())
        throw Error(ErrorKind::ShapeMismatch, "no basis in degree " + std::to_string(deg));
    return it->second;
}

std::pair<int, int> ChainComplex::degree_local(int global) const {
    for (int deg : degree_list_) {
        int off = offsets_.at(deg);
        if (global >= off && global < off + dims_.at(deg)) return {deg, global - off};
    }
    throw Error(ErrorKind::ShapeMismatch, "global index out of range");
}

SparseVec ChainComplex::apply_d(const SparseVec& v) const {
    SparseVec out;
    for (const auto& t : v) sv_axpy(out, t.coeff, d_of_global(t.idx));
    return out;
}

SparseVec ChainComplex::d_of_global(int global) const {
    auto [deg, local] = degree_local(global);
    auto it = diff_.find(deg);
    if (it == diff_.end() || dim(deg - 1) == 0) return {};
    return sv_shift(it->second.col(local), global_offset(deg - 1));
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& a, const ChainComplex& b) {
    std::map<int, std::vector<std::string>> basis;
    std::map<int, SparseMatrix> diff;
    std::vector<int> degs;
    for (int d : a.degrees()) degs.push_back(d);
    for (int d : b.degrees())
        if (!a.has_degree(d)) degs.push_back(d);
    for (int deg : degs) {
        auto& labels = basis[deg];
        for (const auto& l : a.labels(deg)) labels.push_back(l);
        for (const auto& l : b.labels(deg)) labels.push_back(l);
    }
    for (int deg : degs) {
        int rows = static_cast<int>(basis.count(deg - 1) ? basis[deg - 1].size() : 0);
        if (rows == 0) continue;
        SparseMatrix m(rows, static_cast<int>(basis[deg].size()));
        SparseMatrix da = a.differential(deg);
        SparseMatrix db = b.differential(deg);
        for (int j = 0; j < da.cols(); ++j) m.set_col(j, da.col(j));
        int coff = da.cols();
        int roff = a.dim(deg - 1);
        for (int j = 0; j < db.cols(); ++j) m.set_col(coff + j, sv_shift(db.col(j), roff));
        diff[deg] = std::move(m);
    }
    return make(std::move(basis), std::move(diff));
}

ChainComplex ChainComplex::dual() const {
    std::map<int, std::vector<std::string>> basis;
    std::map<int, SparseMatrix> diff;
    for (int deg : degree_list_) {
        std::vector<std::string> labels;
        for (const auto& l : basis_.at(deg)) labels.push_back(l + "*");
        basis[-deg] = std::move(labels);
    }
    // d(a*) = -(-1)^{|a|} sum_l (dA)_{a,l} l*, for a in A_{-k}, l in A_{-k+1}.
    for (int deg : degree_list_) {
        // dual degree k = -deg + 1 maps (A_{deg-1})* -> (A_deg)*; source needs
        // A to have a differential A_deg -> A_{deg-1}.
        auto it = diff_.find(deg);
        if (it == diff_.end()) continue;
        SparseMatrix t = it->second.transpose();  // dim(deg) x dim(deg-1)
        int sign = ((deg - 1) % 2 == 0) ? -1 : 1;  // -(-1)^{deg-1}
        diff[-(deg - 1)] = t.scale(sign);
    }
    return make(std::move(basis), std::move(diff));
}

ChainComplex::Homology ChainComplex::homology() const {
    Homology h;
    for (int deg : degree_list_) {
        auto cycles = differential(deg).kernel_basis();
        Echelon span;
        SparseMatrix bd = differential(deg + 1);
        for (int j = 0; j < bd.cols(); ++j) span.insert(bd.col(j));
        std::vector<SparseVec> reps;
        for (const auto& c : cycles)
            if (span.insert(c)) reps.push_back(sv_shift(c, global_offset(deg)));
        if (!reps.empty()) {
            h.dims[deg] = static_cast<int>(reps.size());
            h.reps[deg] = std::move(reps);
        }
    }
    return h;
}

bool ChainComplex::is_acyclic() const { return homology().dims.empty(); }

ChainMap ChainMap::identity(const ChainComplex& c) {
    ChainMap f(c, c);
    for (int deg : c.degrees()) f.blocks_[deg] = SparseMatrix::identity(c.dim(deg));
    return f;
}

ChainMap ChainMap::zero(const ChainComplex& src, const ChainComplex& tgt) {
    return ChainMap(src, tgt);
}

ChainMap ChainMap::from_global(const ChainComplex& src, const ChainComplex& tgt,
                               const SparseMatrix& global) {
    if (global.rows() != tgt.total_dim() || global.cols() != src.total_dim())
        throw Error(ErrorKind::ShapeMismatch, "global chain map shape mismatch");
    ChainMap f(src, tgt);
    for (int deg : src.degrees()) {
        int soff = src.global_offset(deg);
        int tdim = tgt.dim(deg);
        SparseMatrix m(tdim, src.dim(deg));
        int toff = tdim > 0 ? tgt.global_offset(deg) : 0;
        for (int j = 0; j < src.dim(deg); ++j) {
            const SparseVec& col = global.col(soff + j);
            SparseVec local;
            for (const auto& t : col) {
                if (tdim == 0 || t.idx < toff || t.idx >= toff + tdim)
                    throw Error(ErrorKind::ShapeMismatch,
                                "chain map does not preserve degree");
                local.push_back({t.idx - toff, t.coeff});
            }
            m.set_col(j, std::move(local));
        }
        if (!m.is_zero()) f.blocks_[deg] = std::move(m);
    }
    return f;
}

SparseMatrix ChainMap::block(int deg) const {
    auto it = blocks_.find(deg);
    if (it != blocks_.end()) return it->second;
    return SparseMatrix::zero(tgt_.dim(deg), src_.dim(deg));
}

void ChainMap::set_block(int deg, SparseMatrix m) {
    if (m.rows() != tgt_.dim(deg) || m.cols() != src_.dim(deg))
        throw Error(ErrorKind::ShapeMismatch, "chain map block shape mismatch");
    if (m.is_zero())
        blocks_.erase(deg);
    else
        blocks_[deg] = std::move(m);
}

SparseMatrix ChainMap::global_matrix() const {
    SparseMatrix out(tgt_.total_dim(), src_.total_dim());
    for (const auto& [deg, m] : blocks_) {
        int soff = src_.global_offset(deg);
        int toff = tgt_.global_offset(deg);
        for (int j = 0; j < m.cols(); ++j) out.set_col(soff + j, sv_shift(m.col(j), toff));
    }
    return out;
}

SparseVec ChainMap::apply_global(const SparseVec& v) const {
    SparseVec out;
    for (const auto& t : v) {
        auto [deg, local] = src_.degree_local(t.idx);
        auto it = blocks_.find(deg);
        if (it == blocks_.end()) continue;
        sv_axpy(out, t.coeff, sv_shift(it->second.col(local), tgt_.global_offset(deg)));
    }
    return out;
}

bool ChainMap::commutes_with_d() const {
    for (int deg : src_.degrees()) {
        SparseMatrix lhs = tgt_.differential(deg).multiply(block(deg));
        SparseMatrix rhs = block(deg - 1).multiply(src_.differential(deg));
        if (!lhs.equal(rhs)) return false;
    }
    return true;
}

ChainMap ChainMap::compose(const ChainMap& first) const {
    for (int deg : first.tgt_.degrees())
        if (first.tgt_.dim(deg) != src_.dim(deg))
            throw Error(ErrorKind::ShapeMismatch, "chain map composition mismatch");
    ChainMap out(first.src_, tgt_);
    for (int deg : first.src_.degrees()) {
        SparseMatrix m = block(deg).multiply(first.block(deg));
        if (!m.is_zero()) out.blocks_[deg] = std::move(m);
    }
    return out;
}

ChainMap ChainMap::add(const ChainMap& other) const {
    ChainMap out(src_, tgt_);
    for (int deg : src_.degrees()) {
        SparseMatrix m = block(deg).add(other.block(deg));
        if (!m.is_zero()) out.blocks_[deg] = std::move(m);
    }
    return out;
}

ChainMap ChainMap::sub(const ChainMap& other) const {
    ChainMap out(src_, tgt_);
    for (int deg : src_.degrees()) {
        SparseMatrix m = block(deg).sub(other.block(deg));
        if (!m.is_zero()) out.blocks_[deg] = std::move(m);
    }
    return out;
}

bool ChainMap::is_surjective() const {
    for (int deg : tgt_.degrees())
        if (block(deg).rank() != tgt_.dim(deg)) return false;
    return true;
}

bool ChainMap::is_injective() const {
    for (int deg : src_.degrees())
        if (block(deg).rank() != src_.dim(deg)) return false;
    return true;
}

bool ChainMap::is_quasi_iso() const {
    auto hs = src_.homology();
    auto ht = tgt_.homology();
    std::vector<int> degs;
    for (const auto& [d, n] : hs.dims) degs.push_back(d);
    for (const auto& [d, n] : ht.dims)
        if (!hs.dims.count(d)) degs.push_back(d);
    for (int deg : degs) {
        int ns = hs.dims.count(deg) ? hs.dims.at(deg) : 0;
        int nt = ht.dims.count(deg) ? ht.dims.at(deg) : 0;
        if (ns != nt) return false;
        if (ns == 0) continue;
        // Express images of source reps in the target homology basis.
        Echelon e(true);
        SparseMatrix bd = tgt_.differential(deg + 1);
        int nb = bd.cols();
        for (int j = 0; j < nb; ++j) e.insert(bd.col(j));
        int toff = tgt_.global_offset(deg);
        for (const auto& r : ht.reps.at(deg)) e.insert(sv_shift(r, -toff));
        SparseMatrix induced(nt, ns);
        for (int i = 0; i < ns; ++i) {
            SparseVec img = apply_global(hs.reps.at(deg)[i]);
            auto co = e.coords(sv_shift(img, img.empty() ? 0 : -toff));
            if (!co) return false;
            SparseVec col;
            for (const auto& t : *co)
                if (t.idx >= nb) col.push_back({t.idx - nb, t.coeff});
            induced.set_col(i, std::move(col));
        }
        if (induced.rank() != ns) return false;
    }
    return true;
}

bool ChainMap::is_homotopy_between(const std::map<int, SparseMatrix>& h, const ChainMap& g) const {
    auto hblock = [&](int deg) -> SparseMatrix {
        auto it = h.find(deg);
        if (it != h.end()) return it->second;
        return SparseMatrix::zero(tgt_.dim(deg + 1), src_.dim(deg));
    };
    for (int deg : src_.degrees()) {
        SparseMatrix lhs = tgt_.differential(deg + 1).multiply(hblock(deg)).add(
            hblock(deg - 1).multiply(src_.differential(deg)));
        SparseMatrix rhs = g.block(deg).sub(block(deg));
        if (!lhs.equal(rhs)) return false;
    }
    return true;
}

std::vector<int> TensorComplex::word_degrees(int global) const {
    const auto& w = word_of[global];
    std::vector<int> out(w.size());
    for (size_t f = 0; f < w.size(); ++f) out[f] = factor_degrees[f][w[f]];
    return out;
}

TensorComplex tensor_list(const std::vector<const ChainComplex*>& factors) {
    TensorComplex tc;
    tc.num_factors = static_cast<int>(factors.size());
    for (const auto* f : factors) {
        std::vector<int> degs(f->total_dim());
        for (int g = 0; g < f->total_dim(); ++g) degs[g] = f->degree_local(g).first;
        tc.factor_degrees.push_back(std::move(degs));
    }
    std::vector<std::vector<std::string>> factor_labels;
    for (const auto* f : factors) factor_labels.push_back(f->global_labels());

    // Enumerate words lexicographically; bucket by degree (buckets then stay
    // lex-ordered internally).
    std::map<int, std::vector<std::vector<int>>, std::greater<int>> words_by_degree;
    if (tc.num_factors == 0) {
        words_by_degree[0].push_back({});
    } else {
        for (const auto* f : factors)
            if (f->total_dim() == 0) {
                tc.cx = ChainComplex::make({}, {});
                return tc;
            }
        std::vector<int> w(tc.num_factors, 0);
        while (true) {
            int deg = 0;
            for (int f = 0; f < tc.num_factors; ++f) deg += tc.factor_degrees[f][w[f]];
            words_by_degree[deg].push_back(w);
            int f = tc.num_factors - 1;
            while (f >= 0 && w[f] + 1 >= factors[f]->total_dim()) w[f--] = 0;
            if (f < 0) break;
            ++w[f];
        }
    }

    std::map<int, std::vector<std::string>> basis;
    for (const auto& [deg, words] : words_by_degree) {
        auto& labels = basis[deg];
        for (const auto& w : words) {
            std::string l;
            if (w.empty()) l = "1";
            for (size_t f = 0; f < w.size(); ++f) {
                if (f) l += "⋆";
                l += factor_labels[f][w[f]];
            }
            labels.push_back(l);
        }
    }

    // Record word <-> index maps using the final global order.
    std::map<int, int> local_off;
    {
        int off = 0;
        for (const auto& [deg, words] : words_by_degree) {
            local_off[deg] = off;
            off += static_cast<int>(words.size());
        }
        tc.word_of.resize(off);
        for (const auto& [deg, words] : words_by_degree) {
            int o = local_off[deg];
            for (size_t i = 0; i < words.size(); ++i) {
                tc.word_of[o + i] = words[i];
                tc.index_of[words[i]] = o + static_cast<int>(i);
            }
        }
    }

    // Differential: d(w) = sum_f (-1)^{deg of letters before f} (1⊗..⊗d⊗..⊗1).
    std::map<int, SparseMatrix> diff;
    for (const auto& [deg, words] : words_by_degree) {
        auto below = words_by_degree.find(deg - 1);
        if (below == words_by_degree.end()) continue;
        SparseMatrix m(static_cast<int>(below->second.size()), static_cast<int>(words.size()));
        for (size_t j = 0; j < words.size(); ++j) {
            const auto& w = words[j];
            SparseVec col;
            int sign = 1;
            for (int f = 0; f < tc.num_factors; ++f) {
                SparseVec dletter = factors[f]->d_of_global(w[f]);
                for (const auto& t : dletter) {
                    std::vector<int> w2 = w;
                    w2[f] = t.idx;
                    int tgt = tc.index_of.at(w2) - local_off[deg - 1];
                    col.push_back({tgt, Rational(sign) * t.coeff});
                }
                if (tc.factor_degrees[f][w[f]] % 2 != 0) sign = -sign;
            }
            m.set_col(static_cast<int>(j), std::move(col));
        }
        if (!m.is_zero()) diff[deg] = std::move(m);
    }

    tc.cx = ChainComplex::make(std::move(basis), std::move(diff));
    return tc;
}

TensorComplex tensor_power(const ChainComplex& c, int n) {
    std::vector<const ChainComplex*> fs(n, &c);
    return tensor_list(fs);
}

ChainMap tensor_shuffle(const TensorComplex& src, const TensorComplex& dst,
                        const Perm& factor_perm) {
    SparseMatrix m(dst.cx.total_dim(), src.cx.total_dim());
    for (int g = 0; g < src.cx.total_dim(); ++g) {
        const auto& w = src.word_of[g];
        std::vector<int> w2(w.size());
        for (size_t f = 0; f < w.size(); ++f) w2[factor_perm[f]] = w[f];
        int sign = koszul_sign(factor_perm, src.word_degrees(g));
        m.set(dst.index_of.at(w2), g, sign);
    }
    return ChainMap::from_global(src.cx, dst.cx, m);
}

ChainMap tensor_map(const TensorComplex& src, const TensorComplex& dst,
                    const std::vector<const ChainMap*>& maps) {
    // No Koszul signs: degree-0 maps tensored together act letterwise.
    SparseMatrix m(dst.cx.total_dim(), src.cx.total_dim());
    for (int g = 0; g < src.cx.total_dim(); ++g) {
        const auto& w = src.word_of[g];
        // Expand product of images letter by letter.
        std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, Rational(1)}};
        for (size_t f = 0; f < w.size(); ++f) {
            const ChainComplex& fsrc = maps[f]->src();
            auto [deg, local] = fsrc.degree_local(w[f]);
            SparseVec img = maps[f]->block(deg).col(local);
            std::vector<std::pair<std::vector<int>, Rational>> next;
            int toff = maps[f]->tgt().dim(deg) > 0 ? maps[f]->tgt().global_offset(deg) : 0;
            for (const auto& [pw, pc] : partial)
                for (const auto& t : img) {
                    auto w2 = pw;
                    w2.push_back(toff + t.idx);
                    next.emplace_back(std::move(w2), pc * t.coeff);
                }
            partial = std::move(next);
        }
        SparseVec col;
        for (auto& [pw, pc] : partial) col.push_back({dst.index_of.at(pw), std::move(pc)});
        m.set_col(g, std::move(col));
    }
    return ChainMap::from_global(src.cx, dst.cx, m);
}

HomComplex hom_complex(const ChainComplex& A, const ChainComplex& B) {
    HomComplex h;
    h.A = A;
    h.B = B;
    h.dualA = A.dual();
    h.tc = tensor_list({&h.dualA, &B});
    // Dual global index <-> A global index: degree -k local i in dual
    // corresponds to degree k local i in A.
    h.dual_to_A.resize(h.dualA.total_dim());
    h.A_to_dual.resize(A.total_dim());
    for (int g = 0; g < h.dualA.total_dim(); ++g) {
        auto [deg, local] = h.dualA.degree_local(g);
        int ai = A.global_index(-deg, local);
        h.dual_to_A[g] = ai;
        h.A_to_dual[ai] = g;
    }
    return h;
}

int HomComplex::basis_index(int ai, int bj) const {
    return tc.index_of.at({A_to_dual[ai], bj});
}

Rational HomComplex::basis_sign(int ai, int bj) const {
    int da = A.degree_of(ai);
    int db = B.degree_of(bj);
    return ((da % 2 != 0) && (db % 2 != 0)) ? Rational(-1) : Rational(1);
}

SparseMatrix HomComplex::to_matrix(const SparseVec& h) const {
    SparseMatrix m(B.total_dim(), A.total_dim());
    for (const auto& t : h) {
        const auto& w = tc.word_of[t.idx];
        int ai = dual_to_A[w[0]];
        int bj = w[1];
        m.set(bj, ai, m.get(bj, ai) + t.coeff * basis_sign(ai, bj));
    }
    return m;
}

SparseVec HomComplex::from_matrix(const SparseMatrix& m) const {
    SparseVec out;
    for (int ai = 0; ai < m.cols(); ++ai)
        for (const auto& t : m.col(ai))
            out.push_back({basis_index(ai, t.idx), t.coeff * basis_sign(ai, t.idx)});
    sv_normalize(out);
    return out;
}

SparseVec hom_compose(const HomComplex& GC, const SparseVec& g, const HomComplex& FA,
                      const SparseVec& f, const HomComplex& out) {
    SparseMatrix mg = GC.to_matrix(g);
    SparseMatrix mf = FA.to_matrix(f);
    return out.from_matrix(mg.multiply(mf));
}

SubComplex subcomplex(const ChainComplex& ambient, const std::vector<SparseVec>& span,
                      const std::string& label_prefix) {
    std::map<int, Echelon> ech;
    std::map<int, std::vector<SparseVec>> vecs;  // echelon basis, global coords
    for (const auto& v : span) {
        if (v.empty()) continue;
        int deg = ambient.degree_of(v.front().idx);
        for (const auto& t : v)
            if (ambient.degree_of(t.idx) != deg)
                throw Error(ErrorKind::ShapeMismatch, "subcomplex span vector not homogeneous");
        auto& e = ech.try_emplace(deg, false).first->second;
        SparseVec r = e.residual(v);
        if (!r.empty()) {
            sv_scale(r, Rational(1) / r.front().coeff);
            e.insert(r);
            vecs[deg].push_back(r);
        }
    }
    std::map<int, std::vector<std::string>> basis;
    for (const auto& [deg, vs] : vecs) {
        auto& labels = basis[deg];
        for (size_t i = 0; i < vs.size(); ++i)
            labels.push_back(label_prefix + "[" + std::to_string(deg) + "," + std::to_string(i) +
                             "]");
    }
    std::map<int, SparseMatrix> diff;
    for (const auto& [deg, vs] : vecs) {
        auto below = vecs.find(deg - 1);
        SparseMatrix m(below == vecs.end() ? 0 : static_cast<int>(below->second.size()),
                       static_cast<int>(vs.size()));
        for (size_t j = 0; j < vs.size(); ++j) {
            SparseVec dv = ambient.apply_d(vs[j]);
            if (dv.empty()) continue;
            if (below == vecs.end())
                throw Error(ErrorKind::Internal, "subcomplex span not d-stable");
            Echelon e(true);
            for (const auto& b : below->second) e.insert(b);
            auto co = e.coords(dv);
            if (!co) throw Error(ErrorKind::Internal, "subcomplex span not d-stable");
            m.set_col(static_cast<int>(j), std::move(*co));
        }
        if (!m.is_zero()) diff[deg] = std::move(m);
    }
    SubComplex out;
    out.cx = ChainComplex::make(std::move(basis), std::move(diff));
    out.incl = ChainMap(out.cx, ambient);
    // basis_global must follow the global index order of out.cx (descending degree)
    for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) {
        const auto& [deg, vs] = *it;
        SparseMatrix m(ambient.dim(deg), static_cast<int>(vs.size()));
        int off = ambient.global_offset(deg);
        for (size_t j = 0; j < vs.size(); ++j) {
            m.set_col(static_cast<int>(j), sv_shift(vs[j], -off));
            out.basis_global.push_back(vs[j]);
        }
        out.incl.set_block(deg, std::move(m));
    }
    return out;
}

SubComplex kernel_complex(const ChainMap& f, const std::string& label_prefix) {
    std::vector<SparseVec> span;
    for (int deg : f.src().degrees()) {
        int off = f.src().global_offset(deg);
        for (const auto& k : f.block(deg).kernel_basis()) span.push_back(sv_shift(k, off));
    }
    return subcomplex(f.src(), span, label_prefix);
}

PullbackComplex pullback_complex(const ChainMap& f, const ChainMap& g) {
    PullbackComplex out;
    out.sum = ChainComplex::direct_sum(f.src(), g.src());
    ChainMap h(out.sum, f.tgt());
    for (int deg : out.sum.degrees()) {
        SparseMatrix m = SparseMatrix::hcat(f.block(deg), g.block(deg).scale(-1));
        if (!m.is_zero()) h.set_block(deg, std::move(m));
    }
    out.sub = kernel_complex(h, "pb");
    out.toA = ChainMap(out.sub.cx, f.src());
    out.toB = ChainMap(out.sub.cx, g.src());
    for (int deg : out.sub.cx.degrees()) {
        SparseMatrix inc = out.sub.incl.block(deg);
        int na = f.src().dim(deg);
        SparseMatrix ma(na, inc.cols());
        SparseMatrix mb(g.src().dim(deg), inc.cols());
        for (int j = 0; j < inc.cols(); ++j) {
            SparseVec va, vb;
            for (const auto& t : inc.col(j))
                if (t.idx < na)
                    va.push_back(t);
                else
                    vb.push_back({t.idx - na, t.coeff});
            ma.set_col(j, std::move(va));
            mb.set_col(j, std::move(vb));
        }
        if (!ma.is_zero()) out.toA.set_block(deg, std::move(ma));
        if (!mb.is_zero()) out.toB.set_block(deg, std::move(mb));
    }
    return out;
}

}  // namespace propcalc
