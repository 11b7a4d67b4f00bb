#pragma once

#include "trideg/mpoly.hpp"

namespace trideg {

// Rectangular grid of polynomials over one common variable list.
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, VarList vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarList& vars() const { return vars_; }

    const MPoly& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, MPoly p);

    PolyMatrix transposed() const;

    // True iff every entry is zero or homogeneous of degree exactly 1.
    bool is_linear_forms() const;

    // Numeric specialization at a point (length == variable count).
    QMatrix evaluated(const QVector& point) const;

    bool operator==(const PolyMatrix& o) const;

  private:
    std::size_t rows_, cols_;
    VarList vars_;
    std::vector<MPoly> e_;
};

// Exact symbolic determinant; cofactor expansion along the sparsest row.
// Throws DimensionError if the matrix is not square.
MPoly det(const PolyMatrix& b);

// All C(cols, rows) maximal minors, column multi-indices in lexicographic
// order. Requires rows <= cols (transpose first otherwise).
std::vector<MPoly> maximal_minors(const PolyMatrix& b);

} // namespace trideg
