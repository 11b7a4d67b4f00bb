#include "trideg/quadric.hpp"

#include "trideg/errors.hpp"

namespace trideg {

QuadricClass::Kind QuadricClass::kind() const {
    switch (gram_rank) {
    case 0: return Kind::Zero;
    case 1: return Kind::DoubleHyperplane;
    case 2: return Kind::TwoHyperplanes;
    case 3: return ambient_vars == 3 ? Kind::SmoothConic : Kind::ConeOverSmoothConic;
    case 4: return ambient_vars == 4 ? Kind::SmoothQuadric : Kind::ConeOverSmoothQuadric;
    default: return Kind::HigherRank;
    }
}

std::string QuadricClass::label() const {
    switch (kind()) {
    case Kind::Zero: return "zero";
    case Kind::DoubleHyperplane: return "double-hyperplane";
    case Kind::TwoHyperplanes: return "two-hyperplanes";
    case Kind::SmoothConic: return "smooth-conic";
    case Kind::ConeOverSmoothConic: return "cone-over-smooth-conic";
    case Kind::SmoothQuadric: return "smooth-quadric";
    case Kind::ConeOverSmoothQuadric: return "cone-over-smooth-quadric";
    case Kind::HigherRank: break;
    }
    std::string base = "quadric-rank-" + std::to_string(gram_rank);
    return gram_rank == ambient_vars ? "smooth-" + base : "cone-over-" + base;
}

static void require_quadratic(const MPoly& q) {
    if (q.is_zero()) return;
    if (!q.is_homogeneous() || q.degree() != 2)
        throw ValueError("expected a quadratic form (homogeneous of degree 2) or zero");
}

QMatrix gram_matrix(const MPoly& q) {
    require_quadratic(q);
    const std::size_t n = q.vars().size();
    QMatrix g(n, QVector(n, Rational(0)));
    for (const auto& [m, c] : q.terms()) {
        int i = -1, j = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (m.exponents[v] == 2) i = j = static_cast<int>(v);
            if (m.exponents[v] == 1) (i < 0 ? i : j) = static_cast<int>(v);
        }
        if (i == j) {
            g[i][i] = c;
        } else {
            g[i][j] = c / 2;
            g[j][i] = c / 2;
        }
    }
    return g;
}

QuadricClass gram_rank(const MPoly& q) {
    const QMatrix g = gram_matrix(q);
    return QuadricClass{rank(g), static_cast<int>(q.vars().size())};
}

Rational gram_determinant(const MPoly& q) { return determinant(gram_matrix(q)); }

} // namespace trideg
