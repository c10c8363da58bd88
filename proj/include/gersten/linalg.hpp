#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gersten/field.hpp"

namespace gersten {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec f, std::size_t n);
bool is_zero_vec(const Vec& v);

/* Sparse matrix over an exact field: no stored zero entries, all entries in
 * one field. Acts on column vectors: (rows x cols) * (cols) -> (rows). */
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}
    SparseMatrix(int rows, int cols, FieldSpec f) : rows_(rows), cols_(cols), field_(f) {}

    static SparseMatrix identity(int n, FieldSpec f);
    static SparseMatrix from_columns(FieldSpec f, int rows, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }

    void set(int r, int c, const Scalar& v);
    Scalar get(int r, int c) const;

    Vec apply(const Vec& x) const;
    SparseMatrix mul(const SparseMatrix& o) const;
    SparseMatrix transpose() const;
    bool is_zero() const { return entries_.empty(); }

private:
    int rows_, cols_;
    FieldSpec field_;
    std::map<std::pair<int, int>, Scalar> entries_;
};

/* Reduced row echelon form: unique normal form; all solver outputs derived
 * from it are deterministic. */
struct Echelon {
    std::vector<Vec> rows;      // nonzero RREF rows, dense
    std::vector<int> pivots;    // pivot column of each row, strictly increasing
    int cols = 0;
    FieldSpec field;

    int rank() const { return (int)rows.size(); }
    bool is_pivot_col(int c) const;
    /* Residue of v modulo the row space; zero iff v lies in the span. */
    Vec reduce(const Vec& v) const;
};

Echelon rref(const SparseMatrix& m);
Echelon rref_rows(FieldSpec f, int cols, const std::vector<Vec>& rows);

long rank(const SparseMatrix& m);

/* Basis of the null space in echelon normal form, one vector per free
 * column, ordered by free column index. */
std::vector<Vec> kernel_basis(const SparseMatrix& m);

/* Some x with m x = b, echelon-pivot solution with free variables zero;
 * nullopt when b is outside the column space. Throws on length mismatch. */
std::optional<Vec> solve_particular(const SparseMatrix& m, const Vec& b);

} // namespace gersten
