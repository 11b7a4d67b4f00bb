#include "trideg/linalg.hpp"

#include "trideg/errors.hpp"

namespace trideg {

QMatrix identity_matrix(std::size_t n) {
    QMatrix id(n, QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix t(a[0].size(), QVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    if (a[0].size() != b.size()) throw DimensionError("matmul: inner dimensions differ");
    QMatrix c(a.size(), QVector(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (!a.empty() && !b.empty() && a[0].size() != b[0].size())
        throw DimensionError("vstack: column counts differ");
    QMatrix out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

int rank(QMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

Rational determinant(QMatrix a) {
    const std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw DimensionError("determinant: matrix not square");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

RowReduction row_reduce(const QMatrix& a) {
    RowReduction out;
    out.echelon = a;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    out.transform = identity_matrix(rows);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && out.echelon[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(out.echelon[piv], out.echelon[row]);
        std::swap(out.transform[piv], out.transform[row]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || out.echelon[i][col] == 0) continue;
            const Rational f = out.echelon[i][col] / out.echelon[row][col];
            for (std::size_t j = 0; j < cols; ++j) out.echelon[i][j] -= f * out.echelon[row][j];
            for (std::size_t j = 0; j < rows; ++j) out.transform[i][j] -= f * out.transform[row][j];
        }
        ++row;
    }
    out.rank = static_cast<int>(row);
    return out;
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    RowReduction rr = row_reduce(a);
    // Locate pivot columns of the echelon form.
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t col = 0;
    for (int r = 0; r < rr.rank; ++r) {
        while (col < cols && rr.echelon[r][col] == 0) ++col;
        if (col < cols) pivot_of_col[col] = r;
    }
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        QVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const int r = pivot_of_col[c];
            if (r >= 0) v[c] = -rr.echelon[r][free] / rr.echelon[r][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVector> left_kernel_basis(const QMatrix& a) { return kernel_basis(transpose(a)); }

} // namespace trideg
