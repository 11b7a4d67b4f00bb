#include "trideg/polymatrix.hpp"

#include "trideg/errors.hpp"

namespace trideg {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarList vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)), e_(rows * cols, MPoly(vars_)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

const MPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    return e_[i * cols_ + j];
}

void PolyMatrix::set(std::size_t i, std::size_t j, MPoly p) {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    if (p.vars() != vars_) throw DimensionError("entry variable list differs from the matrix's");
    e_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(cols_, rows_, vars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool PolyMatrix::is_linear_forms() const {
    for (const MPoly& p : e_)
        if (!p.is_zero() && !(p.is_homogeneous() && p.degree() == 1)) return false;
    return true;
}

QMatrix PolyMatrix::evaluated(const QVector& point) const {
    QMatrix out(rows_, QVector(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = eval(at(i, j), point);
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && vars_ == o.vars_ && e_ == o.e_;
}

namespace {

// Recursive expansion on a row/column index view.
MPoly det_rec(const PolyMatrix& b, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    const std::size_t n = rows.size();
    if (n == 1) return b.at(rows[0], cols[0]);
    // Expand along the row with the most zero entries to keep the term count down.
    std::size_t best = 0, best_zeros = 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t zeros = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (b.at(rows[r], cols[c]).is_zero()) ++zeros;
        if (zeros > best_zeros) {
            best = r;
            best_zeros = zeros;
        }
    }
    MPoly acc(b.vars());
    std::vector<std::size_t> sub_rows;
    for (std::size_t r = 0; r < n; ++r)
        if (r != best) sub_rows.push_back(rows[r]);
    for (std::size_t c = 0; c < n; ++c) {
        const MPoly& pivot = b.at(rows[best], cols[c]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t cc = 0; cc < n; ++cc)
            if (cc != c) sub_cols.push_back(cols[cc]);
        MPoly minor = det_rec(b, sub_rows, sub_cols);
        if ((best + c) % 2 == 0)
            acc = acc + pivot * minor;
        else
            acc = acc - pivot * minor;
    }
    return acc;
}

} // namespace

MPoly det(const PolyMatrix& b) {
    if (b.rows() != b.cols()) throw DimensionError("determinant of a non-square matrix");
    std::vector<std::size_t> idx(b.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return det_rec(b, idx, idx);
}

std::vector<MPoly> maximal_minors(const PolyMatrix& b) {
    const std::size_t u = b.rows(), v = b.cols();
    if (u > v) throw DimensionError("maximal minors require rows <= cols; transpose first");
    std::vector<std::size_t> rows(u);
    for (std::size_t i = 0; i < u; ++i) rows[i] = i;
    std::vector<MPoly> out;
    std::vector<std::size_t> comb(u);
    for (std::size_t i = 0; i < u; ++i) comb[i] = i;
    while (true) {
        out.push_back(det_rec(b, rows, comb));
        // Next column combination in lexicographic order.
        int i = static_cast<int>(u) - 1;
        while (i >= 0 && comb[i] == v - u + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (std::size_t j = i + 1; j < u; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

} // namespace trideg
