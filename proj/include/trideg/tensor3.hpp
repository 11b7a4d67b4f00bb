#pragma once

#include <array>

#include "trideg/polymatrix.hpp"

namespace trideg {

enum class Axis { X, Y, Z };

const char* axis_name(Axis a);            // "x" / "y" / "z"
Axis axis_from_name(const std::string&);  // accepts "x"/"y"/"z" (case-insensitive)

// Index ranks (p', q', r') — the minimal format reachable by invertible
// slice combinations.
struct EssentialFormat {
    int p = 0, q = 0, r = 0;
    bool operator==(const EssentialFormat& o) const = default;
};

// A (p, q, r) hypermatrix of rationals; a[i][j][k] with 1-based semantics in
// documentation and file formats, 0-based accessors here.
class Tensor3 {
  public:
    Tensor3(int p, int q, int r);
    static Tensor3 from_entries(const std::vector<std::vector<std::vector<Rational>>>& entries);

    int p() const { return p_; }
    int q() const { return q_; }
    int r() const { return r_; }
    int extent(Axis a) const;

    const Rational& at(int i, int j, int k) const;
    void set(int i, int j, int k, const Rational& v);

    bool is_zero() const;
    bool operator==(const Tensor3& o) const = default;

    // Permutes the axes: axes[m] names the current axis that becomes axis m.
    Tensor3 permuted(const std::array<Axis, 3>& axes) const;

  private:
    int p_, q_, r_;
    std::vector<Rational> e_;
    std::size_t ofs(int i, int j, int k) const;
};

// The fixed-index 2D layer: q x r for X, p x r for Y, p x q for Z.
QMatrix slice(const Tensor3& a, Axis axis, int index);

// Linear combination of the slices along one axis: the stacked new slices
// equal E^T times the stacked old slices. E must be invertible.
Tensor3 combine_slices(const Tensor3& a, Axis axis, const QMatrix& e);

struct Flattening {
    Axis axis;
    QMatrix matrix; // X: (p, q*r) with column (j,k) -> j*r+k; Y: (q, p*r); Z: (p*q, r)
};
Flattening flattening(const Tensor3& a, Axis axis);

struct IndexRanks {
    int x = 0, y = 0, z = 0;
    bool operator==(const IndexRanks& o) const = default;
};
IndexRanks index_ranks(const Tensor3& a);

EssentialFormat essential_format(const Tensor3& a);
bool is_concise(const Tensor3& a);

// Same-shape tensor whose trailing slices along each axis are zero, with the
// leading (p', q', r') block concise, plus the three change matrices used
// (in combine_slices convention). Rejects the zero tensor.
struct EssentialReduction {
    Tensor3 reduced;
    QMatrix ex, ey, ez;
};
EssentialReduction reduce_to_essential(const Tensor3& a);

// The associated matrix of linear forms: L (X: q x r over x1..xp),
// M (Y: p x r over y1..yq), N (Z: p x q over z1..zr).
PolyMatrix assoc_matrix(const Tensor3& a, Axis axis);

// The trilinear polynomial sum a_ijk x_i y_j z_k over x..,y..,z.. variables.
MPoly poly_pa(const Tensor3& a);

// f_A(X, Y, Z); lengths must be (p, q, r).
Rational eval_fa(const Tensor3& a, const QVector& x, const QVector& y, const QVector& z);

} // namespace trideg
