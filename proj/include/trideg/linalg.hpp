#pragma once

#include <vector>

#include "trideg/rational.hpp"

namespace trideg {

// Dense rational matrix, row major. All routines are exact; pivoting is
// deterministic (first nonzero entry in column order) so results are
// bit-stable across runs.
using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

QMatrix identity_matrix(std::size_t n);
QMatrix transpose(const QMatrix& a);
QMatrix matmul(const QMatrix& a, const QMatrix& b);

int rank(QMatrix a);

// Determinant of a square rational matrix (Gaussian elimination with exact
// division). Throws DimensionError if not square.
Rational determinant(QMatrix a);

// Row echelon reduction tracking the transform: returns G (invertible) with
// G*A in echelon form, nonzero rows first.
struct RowReduction {
    QMatrix echelon;
    QMatrix transform; // transform * input == echelon
    int rank = 0;
};
RowReduction row_reduce(const QMatrix& a);

// Basis of the right kernel {x : A x = 0}, deterministic order (free columns
// in increasing index), each vector exact.
std::vector<QVector> kernel_basis(const QMatrix& a);

// Basis of the left kernel {y : y^T A = 0}.
std::vector<QVector> left_kernel_basis(const QMatrix& a);

// Stacks the rows of b under the rows of a (same column count).
QMatrix vstack(const QMatrix& a, const QMatrix& b);

} // namespace trideg
