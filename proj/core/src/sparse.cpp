#include "propcalc/sparse.hpp"

#include <algorithm>
#include <sstream>

#include "propcalc/error.hpp"

namespace propcalc {

SparseVec sv_single(int idx, Rational c) {
    SparseVec v;
    if (c != 0) v.push_back({idx, std::move(c)});
    return v;
}

void sv_normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.idx < b.idx; });
    SparseVec out;
    for (auto& t : v) {
        if (!out.empty() && out.back().idx == t.idx) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    v = std::move(out);
}

bool sv_is_zero(const SparseVec& v) { return v.empty(); }

bool sv_equal(const SparseVec& a, const SparseVec& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

void sv_axpy(SparseVec& v, const Rational& c, const SparseVec& w) {
    if (c == 0 || w.empty()) return;
    SparseVec out;
    out.reserve(v.size() + w.size());
    auto it = v.begin();
    auto jt = w.begin();
    while (it != v.end() || jt != w.end()) {
        if (jt == w.end() || (it != v.end() && it->idx < jt->idx)) {
            out.push_back(*it++);
        } else if (it == v.end() || jt->idx < it->idx) {
            out.push_back({jt->idx, c * jt->coeff});
            ++jt;
        } else {
            Rational s = it->coeff + c * jt->coeff;
            if (s != 0) out.push_back({it->idx, std::move(s)});
            ++it;
            ++jt;
        }
    }
    // Drop any zeros introduced via the w-only branch (c*coeff can't be zero
    // since c != 0 and coeff != 0 over a field, so only merged entries matter).
    v = std::move(out);
}

void sv_scale(SparseVec& v, const Rational& c) {
    if (c == 0) {
        v.clear();
        return;
    }
    for (auto& t : v) t.coeff *= c;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    sv_axpy(out, 1, b);
    return out;
}

SparseVec sv_sub(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    sv_axpy(out, -1, b);
    return out;
}

Rational sv_get(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const Term& t, int i) { return t.idx < i; });
    if (it != v.end() && it->idx == idx) return it->coeff;
    return 0;
}

SparseVec sv_shift(const SparseVec& v, int delta) {
    SparseVec out = v;
    for (auto& t : out) t.idx += delta;
    return out;
}

std::string sv_to_string(const SparseVec& v, const std::vector<std::string>& labels) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : v) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(t.coeff) << "*"
           << (t.idx < static_cast<int>(labels.size()) ? labels[t.idx] : "e" + std::to_string(t.idx));
    }
    return os.str();
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int j = 0; j < n; ++j) m.col_[j].push_back({j, 1});
    return m;
}

void SparseMatrix::set_col(int j, SparseVec v) {
    sv_normalize(v);
    col_[j] = std::move(v);
}

void SparseMatrix::set(int i, int j, Rational c) {
    auto& v = col_[j];
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const Term& t, int k) { return t.idx < k; });
    if (it != v.end() && it->idx == i) {
        if (c == 0)
            v.erase(it);
        else
            it->coeff = std::move(c);
    } else if (c != 0) {
        v.insert(it, {i, std::move(c)});
    }
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& t : v) sv_axpy(out, t.coeff, col_[t.idx]);
    return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (other.rows() != cols())
        throw Error(ErrorKind::ShapeMismatch, "matrix multiply shape mismatch");
    SparseMatrix out(rows(), other.cols());
    for (int j = 0; j < other.cols(); ++j) out.col_[j] = apply(other.col(j));
    return out;
}

SparseMatrix SparseMatrix::add(const SparseMatrix& other) const {
    if (rows() != other.rows() || cols() != other.cols())
        throw Error(ErrorKind::ShapeMismatch, "matrix add shape mismatch");
    SparseMatrix out(rows(), cols());
    for (int j = 0; j < cols(); ++j) out.col_[j] = sv_add(col_[j], other.col_[j]);
    return out;
}

SparseMatrix SparseMatrix::sub(const SparseMatrix& other) const {
    if (rows() != other.rows() || cols() != other.cols())
        throw Error(ErrorKind::ShapeMismatch, "matrix sub shape mismatch");
    SparseMatrix out(rows(), cols());
    for (int j = 0; j < cols(); ++j) out.col_[j] = sv_sub(col_[j], other.col_[j]);
    return out;
}

SparseMatrix SparseMatrix::scale(const Rational& c) const {
    SparseMatrix out(rows(), cols());
    for (int j = 0; j < cols(); ++j) {
        out.col_[j] = col_[j];
        sv_scale(out.col_[j], c);
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols(), rows());
    for (int j = 0; j < cols(); ++j)
        for (const auto& t : col_[j]) out.col_[t.idx].push_back({j, t.coeff});
    return out;  // columns already index-sorted since j increases
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

bool SparseMatrix::equal(const SparseMatrix& other) const {
    if (rows() != other.rows() || cols() != other.cols()) return false;
    for (int j = 0; j < cols(); ++j)
        if (!sv_equal(col_[j], other.col_[j])) return false;
    return true;
}

SparseMatrix SparseMatrix::hcat(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hcat row mismatch");
    SparseMatrix out(a.rows(), a.cols() + b.cols());
    for (int j = 0; j < a.cols(); ++j) out.col_[j] = a.col(j);
    for (int j = 0; j < b.cols(); ++j) out.col_[a.cols() + j] = b.col(j);
    return out;
}

SparseMatrix SparseMatrix::vcat(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "vcat col mismatch");
    SparseMatrix out(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        out.col_[j] = a.col(j);
        sv_axpy(out.col_[j], 1, sv_shift(b.col(j), a.rows()));
    }
    return out;
}

int SparseMatrix::rank() const {
    Echelon e;
    for (int j = 0; j < cols(); ++j) e.insert(col_[j]);
    return e.rank();
}

std::vector<SparseVec> SparseMatrix::kernel_basis() const {
    // Column reduction with combination tracking: reduce each column against
    // earlier pivots; dependent columns yield kernel vectors.
    std::map<int, std::pair<SparseVec, SparseVec>> pivots;  // lead -> (vec, combo)
    std::vector<SparseVec> ker;
    for (int j = 0; j < cols(); ++j) {
        SparseVec v = col_[j];
        SparseVec combo = sv_single(j, 1);
        while (!v.empty()) {
            auto it = pivots.find(v.front().idx);
            if (it == pivots.end()) break;
            Rational c = -v.front().coeff;
            sv_axpy(v, c, it->second.first);
            sv_axpy(combo, c, it->second.second);
        }
        if (v.empty()) {
            ker.push_back(std::move(combo));
        } else {
            Rational inv = Rational(1) / v.front().coeff;
            sv_scale(v, inv);
            sv_scale(combo, inv);
            int lead = v.front().idx;
            pivots.emplace(lead, std::make_pair(std::move(v), std::move(combo)));
        }
    }
    return ker;
}

std::optional<SparseVec> SparseMatrix::solve(const SparseVec& b) const {
    std::map<int, std::pair<SparseVec, SparseVec>> pivots;
    for (int j = 0; j < cols(); ++j) {
        SparseVec v = col_[j];
        SparseVec combo = sv_single(j, 1);
        while (!v.empty()) {
            auto it = pivots.find(v.front().idx);
            if (it == pivots.end()) break;
            Rational c = -v.front().coeff;
            sv_axpy(v, c, it->second.first);
            sv_axpy(combo, c, it->second.second);
        }
        if (!v.empty()) {
            Rational inv = Rational(1) / v.front().coeff;
            sv_scale(v, inv);
            sv_scale(combo, inv);
            int lead = v.front().idx;
            pivots.emplace(lead, std::make_pair(std::move(v), std::move(combo)));
        }
    }
    SparseVec r = b;
    SparseVec x;
    while (!r.empty()) {
        auto it = pivots.find(r.front().idx);
        if (it == pivots.end()) return std::nullopt;
        Rational c = r.front().coeff;
        sv_axpy(r, -c, it->second.first);
        sv_axpy(x, c, it->second.second);
    }
    return x;
}

std::optional<SparseVec> SparseMatrix::infeasibility_certificate(const SparseVec& b) const {
    // L with L*A = 0 is a kernel vector of A^T; infeasibility of Ax = b is
    // witnessed by such an L with <L, b> != 0.
    SparseMatrix at = transpose();
    for (const auto& k : at.kernel_basis()) {
        Rational dot = 0;
        for (const auto& t : k) dot += t.coeff * sv_get(b, t.idx);
        if (dot != 0) return k;
    }
    return std::nullopt;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = v;
    SparseVec combo = track_ ? sv_single(inserted_, 1) : SparseVec{};
    while (!r.empty()) {
        auto it = pivots_.find(r.front().idx);
        if (it == pivots_.end()) break;
        Rational c = -r.front().coeff;
        sv_axpy(r, c, it->second.vec);
        if (track_) sv_axpy(combo, c, it->second.combo);
    }
    if (r.empty()) {
        if (track_) ++inserted_;
        return false;
    }
    Rational inv = Rational(1) / r.front().coeff;
    sv_scale(r, inv);
    if (track_) sv_scale(combo, inv);
    int lead = r.front().idx;
    pivots_.emplace(lead, PivotRow{std::move(r), std::move(combo)});
    if (track_) ++inserted_;
    return true;
}

SparseVec Echelon::residual(const SparseVec& v) const {
    SparseVec r = v;
    while (!r.empty()) {
        auto it = pivots_.find(r.front().idx);
        if (it == pivots_.end()) break;
        sv_axpy(r, -r.front().coeff, it->second.vec);
    }
    return r;
}

std::optional<SparseVec> Echelon::coords(const SparseVec& v) const {
    SparseVec r = v;
    SparseVec x;
    while (!r.empty()) {
        auto it = pivots_.find(r.front().idx);
        if (it == pivots_.end()) return std::nullopt;
        Rational c = r.front().coeff;
        sv_axpy(r, -c, it->second.vec);
        sv_axpy(x, c, it->second.combo);
    }
    return x;
}

}  // namespace propcalc
