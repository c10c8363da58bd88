#include "gersten/linalg.hpp"

#include <algorithm>

namespace gersten {

Vec zero_vec(FieldSpec f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

SparseMatrix SparseMatrix::identity(int n, FieldSpec f) {
    SparseMatrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

SparseMatrix SparseMatrix::from_columns(FieldSpec f, int rows, const std::vector<Vec>& cols) {
    SparseMatrix m(rows, (int)cols.size(), f);
    for (int c = 0; c < (int)cols.size(); ++c) {
        if ((int)cols[c].size() != rows) throw internal_error("from_columns: length mismatch");
        for (int r = 0; r < rows; ++r)
            if (!cols[c][r].is_zero()) m.set(r, c, cols[c][r]);
    }
    return m;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw internal_error("matrix index out of range");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

Scalar SparseMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

Vec SparseMatrix::apply(const Vec& x) const {
    if ((int)x.size() != cols_) throw math_error("dimension mismatch in matrix apply");
    Vec y = zero_vec(field_, rows_);
    for (const auto& [rc, v] : entries_) {
        if (!x[rc.second].is_zero()) y[rc.first] = y[rc.first] + v * x[rc.second];
    }
    return y;
}

SparseMatrix SparseMatrix::mul(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw math_error("dimension mismatch in matrix mul");
    SparseMatrix r(rows_, o.cols_, field_);
    std::map<std::pair<int, int>, Scalar> acc;
    for (const auto& [ab, v] : entries_) {
        for (const auto& [bc, w] : o.entries_) {
            if (bc.first != ab.second) continue;
            auto key = std::make_pair(ab.first, bc.second);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, v * w);
            else
                it->second = it->second + v * w;
        }
    }
    for (const auto& [rc, v] : acc)
        if (!v.is_zero()) r.set(rc.first, rc.second, v);
    return r;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_, field_);
    for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
    return t;
}

bool Echelon::is_pivot_col(int c) const {
    return std::binary_search(pivots.begin(), pivots.end(), c);
}

Vec Echelon::reduce(const Vec& v) const {
    Vec r = v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Scalar& c = r[pivots[i]];
        if (c.is_zero()) continue;
        Scalar factor = c; // pivot entries are 1
        for (int j = pivots[i]; j < cols; ++j) {
            if (!rows[i][j].is_zero()) r[j] = r[j] - factor * rows[i][j];
        }
    }
    return r;
}

Echelon rref_rows(FieldSpec f, int cols, const std::vector<Vec>& in_rows) {
    std::vector<Vec> work;
    work.reserve(in_rows.size());
    for (const auto& r : in_rows) {
        if ((int)r.size() != cols) throw internal_error("rref_rows: width mismatch");
        if (!is_zero_vec(r)) work.push_back(r);
    }
    Echelon e;
    e.cols = cols;
    e.field = f;
    std::size_t done = 0; // rows 0..done-1 are in echelon position
    for (int col = 0; col < cols && done < work.size(); ++col) {
        std::size_t pick = work.size();
        for (std::size_t i = done; i < work.size(); ++i) {
            if (!work[i][col].is_zero()) { pick = i; break; }
        }
        if (pick == work.size()) continue;
        std::swap(work[done], work[pick]);
        Scalar inv = work[done][col].inverse();
        for (int j = col; j < cols; ++j)
            if (!work[done][j].is_zero()) work[done][j] = work[done][j] * inv;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == done) continue;
            const Scalar& c = work[i][col];
            if (c.is_zero()) continue;
            Scalar factor = c;
            for (int j = col; j < cols; ++j)
                if (!work[done][j].is_zero()) work[i][j] = work[i][j] - factor * work[done][j];
        }
        e.pivots.push_back(col);
        ++done;
    }
    work.resize(done);
    e.rows = std::move(work);
    return e;
}

Echelon rref(const SparseMatrix& m) {
    std::vector<Vec> rows(m.rows(), zero_vec(m.field(), m.cols()));
    for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
    return rref_rows(m.field(), m.cols(), rows);
}

long rank(const SparseMatrix& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const SparseMatrix& m) {
    Echelon e = rref(m);
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (e.is_pivot_col(c)) continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[c] = Scalar::one(m.field());
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            if (!e.rows[i][c].is_zero()) v[e.pivots[i]] = -e.rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_particular(const SparseMatrix& m, const Vec& b) {
    if ((int)b.size() != m.rows()) throw math_error("solve_particular: length(b) != rows");
    /* RREF of [m | b] */
    std::vector<Vec> rows(m.rows(), zero_vec(m.field(), m.cols() + 1));
    for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
    for (int r = 0; r < m.rows(); ++r) rows[r][m.cols()] = b[r];
    Echelon e = rref_rows(m.field(), m.cols() + 1, rows);
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt; // pivot in the b column
        x[e.pivots[i]] = e.rows[i][m.cols()];
    }
    return x;
}

} // namespace gersten
