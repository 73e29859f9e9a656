#pragma once

#include <boost/container/small_vector.hpp>

#include <map>
#include <optional>
#include <vector>

#include "propcalc/rational.hpp"

namespace propcalc {

struct Term {
    int idx;
    Rational coeff;

    bool operator==(const Term& o) const { return idx == o.idx && coeff == o.coeff; }
};

// Sparse vector: terms sorted by index, coefficients nonzero.
using SparseVec = boost::container::small_vector<Term, 2>;

SparseVec sv_single(int idx, Rational c);
void sv_normalize(SparseVec& v);
inline SparseVec sv_normalized(SparseVec v) {
    sv_normalize(v);
    return v;
}
bool sv_is_zero(const SparseVec& v);
bool sv_equal(const SparseVec& a, const SparseVec& b);
// v += c * w
void sv_axpy(SparseVec& v, const Rational& c, const SparseVec& w);
void sv_scale(SparseVec& v, const Rational& c);
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_sub(const SparseVec& a, const SparseVec& b);
Rational sv_get(const SparseVec& v, int idx);
// Shift all indices by delta.
SparseVec sv_shift(const SparseVec& v, int delta);
std::string sv_to_string(const SparseVec& v, const std::vector<std::string>& labels);

// Sparse matrix stored column-major: col(j) is the image of basis vector j.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) { col_.resize(cols); }

    static SparseMatrix identity(int n);
    static SparseMatrix zero(int rows, int cols) { return SparseMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_); }

    const SparseVec& col(int j) const { return col_[j]; }
    void set_col(int j, SparseVec v);
    void set(int i, int j, Rational c);
    Rational get(int i, int j) const { return sv_get(col_[j], i); }

    SparseVec apply(const SparseVec& v) const;
    SparseMatrix multiply(const SparseMatrix& other) const;  // this * other
    SparseMatrix add(const SparseMatrix& other) const;
    SparseMatrix sub(const SparseMatrix& other) const;
    SparseMatrix scale(const Rational& c) const;
    SparseMatrix transpose() const;
    bool is_zero() const;
    bool equal(const SparseMatrix& other) const;

    // Horizontal / vertical block concatenation.
    static SparseMatrix hcat(const SparseMatrix& a, const SparseMatrix& b);
    static SparseMatrix vcat(const SparseMatrix& a, const SparseMatrix& b);

    int rank() const;
    // Basis of {x : Ax = 0}, deterministic (reduced against processed columns
    // in column order).
    std::vector<SparseVec> kernel_basis() const;
    // Solve Ax = b; returns std::nullopt when infeasible.
    std::optional<SparseVec> solve(const SparseVec& b) const;
    // On infeasibility, a functional L with L*A = 0 and <L,b> != 0.
    std::optional<SparseVec> infeasibility_certificate(const SparseVec& b) const;

private:
    int rows_;
    size_t cols_ = 0;
    std::vector<SparseVec> col_;
};

// Incremental echelon form with optional tracking of combinations in terms of
// the inserted vectors. Deterministic: pivot = leading (smallest) index.
class Echelon {
public:
    explicit Echelon(bool track = false) : track_(track) {}

    // Reduces v against current pivots; if a nonzero remainder survives it is
    // added as a new pivot. Returns true if v was independent.
    bool insert(const SparseVec& v);

    // Reduce v to its residual modulo the span (no insertion).
    SparseVec residual(const SparseVec& v) const;

    // Coordinates of v in terms of the inserted vectors (requires
    // track=true); nullopt if v is outside the span. Coordinate index i
    // refers to the i-th call to insert().
    std::optional<SparseVec> coords(const SparseVec& v) const;

    bool contains(const SparseVec& v) const { return sv_is_zero(residual(v)); }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    struct PivotRow {
        SparseVec vec;    // leading coefficient 1
        SparseVec combo;  // expression of vec in inserted vectors
    };
    bool track_;
    int inserted_ = 0;
    std::map<int, PivotRow> pivots_;  // keyed by leading index
};

}  // namespace propcalc
