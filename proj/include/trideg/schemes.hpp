#pragma once

#include <optional>

#include "trideg/binary_forms.hpp"
#include "trideg/quadric.hpp"
#include "trideg/tensor3.hpp"

namespace trideg {

// Projective point with exact coordinates, normalized so the first nonzero
// coordinate is 1. Equality is equality of normalized coordinates.
class ProjPoint {
  public:
    explicit ProjPoint(QVector coords);
    const QVector& coords() const { return c_; }
    std::size_t dim() const { return c_.size(); }
    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    std::string str() const;

  private:
    QVector c_;
};

// Determinantal scheme cut out by the maximal minors of a matrix of linear
// forms; u <= v is enforced by transposing on construction.
class DetScheme {
  public:
    explicit DetScheme(PolyMatrix b);

    const PolyMatrix& matrix() const { return b_; }
    std::size_t u() const { return b_.rows(); }
    std::size_t v() const { return b_.cols(); }
    int ambient_vars() const { return static_cast<int>(b_.vars().size()); } // scheme lives in P^(n-1)

    const std::vector<MPoly>& minors() const; // lexicographic multi-index order, cached

  private:
    PolyMatrix b_;
    mutable std::vector<MPoly> minors_;
};

// Scheme associated to the tensor along one axis (L, M or N).
DetScheme scheme_of(const Tensor3& a, Axis axis);

int expected_codim(const DetScheme& s); // min{v - u + 1, n}

struct PointDiagnosis {
    bool on_scheme = false;
    int rank_at = 0;       // rank of B(P)
    int jacobian_rank = 0; // rank of the C(v,u) x n matrix of evaluated minor partials
    bool degenerate = false;
    bool bidegenerate = false; // rank_at <= u - 2
};
PointDiagnosis diagnose_point(const DetScheme& s, const ProjPoint& p);

// The zero locus of a determinantal scheme in P^1, described by the GCD of
// the maximal minors. Irrational roots are never extracted: a squarefree
// factor of degree k with no rational root contributes one block of k
// distinct conjugate points sharing a multiplicity.
struct P1Scheme {
    bool whole_line = false;
    MPoly gcd; // zero when whole_line

    struct Block {
        std::optional<ProjPoint> point; // set for rational points only
        int degree = 1;                 // number of distinct points in the block
        int multiplicity = 1;
    };
    std::vector<Block> blocks;

    bool empty() const { return !whole_line && blocks.empty(); }
    int distinct_points() const;
    int degree_sum() const; // sum degree * multiplicity == deg gcd

    bool is_single_simple_point() const { return distinct_points() == 1 && degree_sum() == 1; }
    bool is_double_point() const { return distinct_points() == 1 && blocks.size() == 1 && blocks[0].multiplicity == 2 && blocks[0].degree == 1; }
    bool is_two_simple_points() const;
};
P1Scheme points_on_p1(const DetScheme& s);

// Quadric classification of det N for a (2,2,r) tensor.
QuadricClass classify_detn_quadric(const Tensor3& a);

} // namespace trideg
