#include "trideg/tensor3.hpp"

#include <algorithm>

#include "trideg/errors.hpp"

namespace trideg {

const char* axis_name(Axis a) {
    switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    default: return "z";
    }
}

Axis axis_from_name(const std::string& s) {
    if (s == "x" || s == "X") return Axis::X;
    if (s == "y" || s == "Y") return Axis::Y;
    if (s == "z" || s == "Z") return Axis::Z;
    throw ParseError("axis must be one of x, y, z; got '" + s + "'");
}

Tensor3::Tensor3(int p, int q, int r) : p_(p), q_(q), r_(r), e_(std::size_t(p) * q * r, Rational(0)) {
    if (p < 1 || q < 1 || r < 1) throw DimensionError("tensor dimensions must be positive");
}

Tensor3 Tensor3::from_entries(const std::vector<std::vector<std::vector<Rational>>>& entries) {
    if (entries.empty() || entries[0].empty() || entries[0][0].empty())
        throw DimensionError("tensor entries must be a non-empty p x q x r nesting");
    const int p = static_cast<int>(entries.size());
    const int q = static_cast<int>(entries[0].size());
    const int r = static_cast<int>(entries[0][0].size());
    Tensor3 t(p, q, r);
    for (int i = 0; i < p; ++i) {
        if (static_cast<int>(entries[i].size()) != q) throw DimensionError("ragged tensor entries");
        for (int j = 0; j < q; ++j) {
            if (static_cast<int>(entries[i][j].size()) != r) throw DimensionError("ragged tensor entries");
            for (int k = 0; k < r; ++k) t.set(i, j, k, entries[i][j][k]);
        }
    }
    return t;
}

int Tensor3::extent(Axis a) const {
    switch (a) {
    case Axis::X: return p_;
    case Axis::Y: return q_;
    default: return r_;
    }
}

std::size_t Tensor3::ofs(int i, int j, int k) const {
    if (i < 0 || i >= p_ || j < 0 || j >= q_ || k < 0 || k >= r_)
        throw DimensionError("tensor index out of range");
    return (std::size_t(i) * q_ + j) * r_ + k;
}

const Rational& Tensor3::at(int i, int j, int k) const { return e_[ofs(i, j, k)]; }
void Tensor3::set(int i, int j, int k, const Rational& v) { e_[ofs(i, j, k)] = v; }

bool Tensor3::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v == 0; });
}

Tensor3 Tensor3::permuted(const std::array<Axis, 3>& axes) const {
    Tensor3 out(extent(axes[0]), extent(axes[1]), extent(axes[2]));
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < q_; ++j)
            for (int k = 0; k < r_; ++k) {
                const int old_idx[3] = {i, j, k};
                int idx[3];
                for (int m = 0; m < 3; ++m) idx[m] = old_idx[static_cast<int>(axes[m])];
                out.set(idx[0], idx[1], idx[2], at(i, j, k));
            }
    return out;
}

QMatrix slice(const Tensor3& a, Axis axis, int index) {
    if (index < 0 || index >= a.extent(axis)) throw DimensionError("slice index out of range");
    switch (axis) {
    case Axis::X: {
        QMatrix m(a.q(), QVector(a.r()));
        for (int j = 0; j < a.q(); ++j)
            for (int k = 0; k < a.r(); ++k) m[j][k] = a.at(index, j, k);
        return m;
    }
    case Axis::Y: {
        QMatrix m(a.p(), QVector(a.r()));
        for (int i = 0; i < a.p(); ++i)
            for (int k = 0; k < a.r(); ++k) m[i][k] = a.at(i, index, k);
        return m;
    }
    default: {
        QMatrix m(a.p(), QVector(a.q()));
        for (int i = 0; i < a.p(); ++i)
            for (int j = 0; j < a.q(); ++j) m[i][j] = a.at(i, j, index);
        return m;
    }
    }
}

Tensor3 combine_slices(const Tensor3& a, Axis axis, const QMatrix& e) {
    const int n = a.extent(axis);
    if (static_cast<int>(e.size()) != n) throw DimensionError("change matrix size does not match axis extent");
    for (const auto& row : e)
        if (static_cast<int>(row.size()) != n) throw DimensionError("change matrix is not square");
    if (determinant(e) == 0) throw ValueError("change of coordinates must be invertible");
    Tensor3 out(a.p(), a.q(), a.r());
    // New slice lambda = sum_k e[k][lambda] * old slice k.
    for (int i = 0; i < a.p(); ++i)
        for (int j = 0; j < a.q(); ++j)
            for (int k = 0; k < a.r(); ++k) {
                Rational acc(0);
                switch (axis) {
                case Axis::X:
                    for (int s = 0; s < n; ++s) acc += e[s][i] * a.at(s, j, k);
                    break;
                case Axis::Y:
                    for (int s = 0; s < n; ++s) acc += e[s][j] * a.at(i, s, k);
                    break;
                default:
                    for (int s = 0; s < n; ++s) acc += e[s][k] * a.at(i, j, s);
                }
                out.set(i, j, k, acc);
            }
    return out;
}

Flattening flattening(const Tensor3& a, Axis axis) {
    switch (axis) {
    case Axis::X: {
        QMatrix m(a.p(), QVector(std::size_t(a.q()) * a.r()));
        for (int i = 0; i < a.p(); ++i)
            for (int j = 0; j < a.q(); ++j)
                for (int k = 0; k < a.r(); ++k) m[i][std::size_t(j) * a.r() + k] = a.at(i, j, k);
        return {axis, std::move(m)};
    }
    case Axis::Y: {
        QMatrix m(a.q(), QVector(std::size_t(a.p()) * a.r()));
        for (int j = 0; j < a.q(); ++j)
            for (int i = 0; i < a.p(); ++i)
                for (int k = 0; k < a.r(); ++k) m[j][std::size_t(i) * a.r() + k] = a.at(i, j, k);
        return {axis, std::move(m)};
    }
    default: {
        QMatrix m(std::size_t(a.p()) * a.q(), QVector(a.r()));
        for (int i = 0; i < a.p(); ++i)
            for (int j = 0; j < a.q(); ++j)
                for (int k = 0; k < a.r(); ++k) m[std::size_t(i) * a.q() + j][k] = a.at(i, j, k);
        return {axis, std::move(m)};
    }
    }
}

IndexRanks index_ranks(const Tensor3& a) {
    return {rank(flattening(a, Axis::X).matrix), rank(flattening(a, Axis::Y).matrix),
            rank(flattening(a, Axis::Z).matrix)};
}

EssentialFormat essential_format(const Tensor3& a) {
    const IndexRanks r = index_ranks(a);
    return {r.x, r.y, r.z};
}

bool is_concise(const Tensor3& a) {
    const EssentialFormat f = essential_format(a);
    return f.p == a.p() && f.q == a.q() && f.r == a.r();
}

EssentialReduction reduce_to_essential(const Tensor3& a) {
    if (a.is_zero()) throw ZeroTensorError();
    EssentialReduction out{a, identity_matrix(a.p()), identity_matrix(a.q()), identity_matrix(a.r())};
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        const Flattening f = flattening(out.reduced, axis);
        // For Z the flattening has the slices as columns; reduce its transpose
        // so that rows correspond to slices along the axis for every case.
        const QMatrix rows = axis == Axis::Z ? transpose(f.matrix) : f.matrix;
        const RowReduction rr = row_reduce(rows);
        const QMatrix e = transpose(rr.transform);
        out.reduced = combine_slices(out.reduced, axis, e);
        switch (axis) {
        case Axis::X: out.ex = e; break;
        case Axis::Y: out.ey = e; break;
        default: out.ez = e;
        }
    }
    return out;
}

PolyMatrix assoc_matrix(const Tensor3& a, Axis axis) {
    switch (axis) {
    case Axis::X: {
        PolyMatrix l(a.q(), a.r(), make_vars("x", a.p()));
        for (int j = 0; j < a.q(); ++j)
            for (int k = 0; k < a.r(); ++k) {
                MPoly entry(l.vars());
                for (int i = 0; i < a.p(); ++i)
                    entry = entry + MPoly::variable(l.vars(), i) * a.at(i, j, k);
                l.set(j, k, std::move(entry));
            }
        return l;
    }
    case Axis::Y: {
        PolyMatrix m(a.p(), a.r(), make_vars("y", a.q()));
        for (int i = 0; i < a.p(); ++i)
            for (int k = 0; k < a.r(); ++k) {
                MPoly entry(m.vars());
                for (int j = 0; j < a.q(); ++j)
                    entry = entry + MPoly::variable(m.vars(), j) * a.at(i, j, k);
                m.set(i, k, std::move(entry));
            }
        return m;
    }
    default: {
        PolyMatrix n(a.p(), a.q(), make_vars("z", a.r()));
        for (int i = 0; i < a.p(); ++i)
            for (int j = 0; j < a.q(); ++j) {
                MPoly entry(n.vars());
                for (int k = 0; k < a.r(); ++k)
                    entry = entry + MPoly::variable(n.vars(), k) * a.at(i, j, k);
                n.set(i, j, std::move(entry));
            }
        return n;
    }
    }
}

MPoly poly_pa(const Tensor3& a) {
    VarList vars = make_vars("x", a.p());
    const VarList ys = make_vars("y", a.q()), zs = make_vars("z", a.r());
    vars.insert(vars.end(), ys.begin(), ys.end());
    vars.insert(vars.end(), zs.begin(), zs.end());
    MPoly out(vars);
    const std::size_t n = vars.size();
    for (int i = 0; i < a.p(); ++i)
        for (int j = 0; j < a.q(); ++j)
            for (int k = 0; k < a.r(); ++k) {
                if (a.at(i, j, k) == 0) continue;
                Monomial m{std::vector<int>(n, 0)};
                m.exponents[i] = 1;
                m.exponents[a.p() + j] += 1;
                m.exponents[a.p() + a.q() + k] += 1;
                out.add_term(m, a.at(i, j, k));
            }
    return out;
}

Rational eval_fa(const Tensor3& a, const QVector& x, const QVector& y, const QVector& z) {
    if (static_cast<int>(x.size()) != a.p() || static_cast<int>(y.size()) != a.q() ||
        static_cast<int>(z.size()) != a.r())
        throw DimensionError("argument lengths must match the tensor format");
    Rational acc(0);
    for (int i = 0; i < a.p(); ++i)
        for (int j = 0; j < a.q(); ++j)
            for (int k = 0; k < a.r(); ++k) acc += a.at(i, j, k) * x[i] * y[j] * z[k];
    return acc;
}

} // namespace trideg
