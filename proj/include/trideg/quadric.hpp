#pragma once

#include <string>

#include "trideg/mpoly.hpp"

namespace trideg {

// Classification of a quadratic form by the rank of its symmetric Gram
// matrix. The label is a pure function of (rank, ambient variable count).
struct QuadricClass {
    int gram_rank = 0;
    int ambient_vars = 0;

    enum class Kind {
        Zero,                 // rank 0
        DoubleHyperplane,     // rank 1
        TwoHyperplanes,       // rank 2
        SmoothConic,          // rank 3, n == 3
        ConeOverSmoothConic,  // rank 3, n > 3
        SmoothQuadric,        // rank 4, n == 4
        ConeOverSmoothQuadric,// rank 4, n > 4
        HigherRank            // rank >= 5
    };
    Kind kind() const;
    std::string label() const;

    bool operator==(const QuadricClass& o) const = default;
};

// Gram matrix of a quadratic form: diagonal entries are the x_i^2
// coefficients, off-diagonal entries half the x_i x_j coefficients.
QMatrix gram_matrix(const MPoly& q);

// Rank-based classification; q must be zero or homogeneous of degree 2.
QuadricClass gram_rank(const MPoly& q);

// Determinant of the Gram matrix (the discriminant of the quadric up to the
// classical constant).
Rational gram_determinant(const MPoly& q);

} // namespace trideg
