#include "trideg/degeneracy.hpp"

#include <algorithm>
#include <sstream>

#include "trideg/errors.hpp"

namespace trideg {

std::string to_string(DegeneracyStatus s) {
    switch (s) {
    case DegeneracyStatus::DegenerateWithCertificate: return "degenerate-with-certificate";
    case DegeneracyStatus::DegenerateNoRationalCertificate: return "degenerate-no-rational-certificate";
    case DegeneracyStatus::NonDegenerateProven: return "non-degenerate-proven";
    default: return "undetermined";
    }
}

bool verify_kernel_triple(const Tensor3& a, const KernelTriple& t) {
    if (static_cast<int>(t.p.dim()) != a.p() || static_cast<int>(t.q.dim()) != a.q() ||
        static_cast<int>(t.t.dim()) != a.r())
        throw DimensionError("kernel triple lengths must match the tensor format");
    const QVector &P = t.p.coords(), &Q = t.q.coords(), &T = t.t.coords();
    for (int k = 0; k < a.r(); ++k) {
        Rational s(0);
        for (int i = 0; i < a.p(); ++i)
            for (int j = 0; j < a.q(); ++j) s += a.at(i, j, k) * P[i] * Q[j];
        if (s != 0) return false;
    }
    for (int j = 0; j < a.q(); ++j) {
        Rational s(0);
        for (int i = 0; i < a.p(); ++i)
            for (int k = 0; k < a.r(); ++k) s += a.at(i, j, k) * P[i] * T[k];
        if (s != 0) return false;
    }
    for (int i = 0; i < a.p(); ++i) {
        Rational s(0);
        for (int j = 0; j < a.q(); ++j)
            for (int k = 0; k < a.r(); ++k) s += a.at(i, j, k) * Q[j] * T[k];
        if (s != 0) return false;
    }
    return true;
}

namespace {

// Numeric specializations of the associated matrices.
QMatrix l_at(const Tensor3& a, const QVector& x) { // q x r
    QMatrix m(a.q(), QVector(a.r(), Rational(0)));
    for (int j = 0; j < a.q(); ++j)
        for (int k = 0; k < a.r(); ++k)
            for (int i = 0; i < a.p(); ++i) m[j][k] += a.at(i, j, k) * x[i];
    return m;
}
QMatrix m_at(const Tensor3& a, const QVector& y) { // p x r
    QMatrix m(a.p(), QVector(a.r(), Rational(0)));
    for (int i = 0; i < a.p(); ++i)
        for (int k = 0; k < a.r(); ++k)
            for (int j = 0; j < a.q(); ++j) m[i][k] += a.at(i, j, k) * y[j];
    return m;
}
QMatrix n_at(const Tensor3& a, const QVector& z) { // p x q
    QMatrix m(a.p(), QVector(a.q(), Rational(0)));
    for (int i = 0; i < a.p(); ++i)
        for (int j = 0; j < a.q(); ++j)
            for (int k = 0; k < a.r(); ++k) m[i][j] += a.at(i, j, k) * z[k];
    return m;
}

// Completes a scheme point into a kernel triple when the linear algebra
// allows it: iterate the kernel partners of the evaluated matrix in
// deterministic order, solve the stacked system for the third point, and
// keep the first combination that verifies.
std::optional<KernelTriple> attempt_certificate(const Tensor3& a, Axis axis, const ProjPoint& pt) {
    switch (axis) {
    case Axis::X: {
        const QMatrix lp = l_at(a, pt.coords());
        for (const QVector& qv : left_kernel_basis(lp)) {
            const QMatrix stacked = vstack(lp, m_at(a, qv));
            for (const QVector& tv : kernel_basis(stacked)) {
                KernelTriple t{pt, ProjPoint(qv), ProjPoint(tv)};
                if (verify_kernel_triple(a, t)) return t;
            }
        }
        return std::nullopt;
    }
    case Axis::Y: {
        const QMatrix mq = m_at(a, pt.coords());
        for (const QVector& pv : left_kernel_basis(mq)) {
            const QMatrix stacked = vstack(mq, l_at(a, pv));
            for (const QVector& tv : kernel_basis(stacked)) {
                KernelTriple t{ProjPoint(pv), pt, ProjPoint(tv)};
                if (verify_kernel_triple(a, t)) return t;
            }
        }
        return std::nullopt;
    }
    default: {
        const QMatrix nt = n_at(a, pt.coords());
        for (const QVector& pv : left_kernel_basis(nt)) {
            // Y must lie in the left kernel of L(P) and the right kernel of N(T).
            const QMatrix stacked = vstack(transpose(l_at(a, pv)), nt);
            for (const QVector& qv : kernel_basis(stacked)) {
                KernelTriple t{ProjPoint(pv), ProjPoint(qv), pt};
                if (verify_kernel_triple(a, t)) return t;
            }
        }
        return std::nullopt;
    }
    }
}

std::vector<ProjPoint> probe_points_p1() {
    std::vector<ProjPoint> pts;
    pts.emplace_back(QVector{Rational(1), Rational(0)});
    pts.emplace_back(QVector{Rational(0), Rational(1)});
    pts.emplace_back(QVector{Rational(1), Rational(1)});
    pts.emplace_back(QVector{Rational(1), Rational(-1)});
    pts.emplace_back(QVector{Rational(1), Rational(2)});
    pts.emplace_back(QVector{Rational(2), Rational(1)});
    return pts;
}

} // namespace

std::optional<KernelTriple> certificate_from_point(const Tensor3& a, Axis axis, const ProjPoint& pt) {
    const DetScheme s = scheme_of(a, axis);
    const PointDiagnosis d = diagnose_point(s, pt);
    if (!d.on_scheme)
        throw ValueError("certificate_from_point: " + pt.str() + " is not on the scheme along axis " +
                         axis_name(axis));
    if (d.bidegenerate)
        throw ValueError("certificate_from_point: " + pt.str() +
                         " is bi-degenerate; the construction needs evaluated rank exactly u-1");
    if (!d.degenerate)
        throw ValueError("certificate_from_point: " + pt.str() + " is not a degenerate point");
    return attempt_certificate(a, axis, pt);
}

namespace {

// Full decision for tensors having an axis of extent 1: the kernel exists
// iff the single slice along that axis has a nonzero vector in its left
// kernel viewed from the smaller of the remaining sides.
DegeneracyVerdict decide_extent_one(const Tensor3& a, Axis axis) {
    const QMatrix b = slice(a, axis, 0);
    const int rows = static_cast<int>(b.size()), cols = static_cast<int>(b[0].size());
    const int rk = rank(b);
    const auto left = left_kernel_basis(b);
    const auto right = kernel_basis(b);
    DegeneracyVerdict v;
    if (!left.empty() && !right.empty()) {
        QVector one{Rational(1)};
        // Assemble (P, Q, T) with the extent-1 axis carrying the trivial point.
        QVector yv = left.front(), zv = right.front();
        switch (axis) {
        case Axis::X: v.certificate = KernelTriple{ProjPoint(one), ProjPoint(yv), ProjPoint(zv)}; break;
        case Axis::Y: {
            // slice is p x r: left kernel lives on the x side, right on z.
            v.certificate = KernelTriple{ProjPoint(yv), ProjPoint(one), ProjPoint(zv)};
            break;
        }
        default: v.certificate = KernelTriple{ProjPoint(yv), ProjPoint(zv), ProjPoint(one)};
        }
        if (!verify_kernel_triple(a, *v.certificate))
            throw std::logic_error("internal: extent-1 kernel triple failed verification");
        v.status = DegeneracyStatus::DegenerateWithCertificate;
        v.reason = "kernel-of-single-slice";
    } else {
        v.status = DegeneracyStatus::NonDegenerateProven;
        std::ostringstream os;
        os << "single-slice-full-rank (rank " << rk << " of " << std::min(rows, cols) << ")";
        v.reason = os.str();
    }
    return v;
}

// Full decision for tensors having an axis of extent 2 (and none of extent 1):
// the associated scheme of that axis lives in P^1.
DegeneracyVerdict decide_extent_two(const Tensor3& a, Axis axis) {
    DegeneracyVerdict v;
    const DetScheme s = scheme_of(a, axis);
    const int other_min = static_cast<int>(s.u()), other_max = static_cast<int>(s.v());
    const bool interior = other_max < other_min + 2 - 1; // r < p + q - 1 in sorted terms
    auto certify = [&](const std::vector<ProjPoint>& candidates, const std::string& how) {
        for (const ProjPoint& pt : candidates) {
            if (auto cert = attempt_certificate(a, axis, pt)) {
                v.status = DegeneracyStatus::DegenerateWithCertificate;
                v.certificate = cert;
                v.reason = how;
                return true;
            }
        }
        return false;
    };
    if (interior) {
        // Square associated matrix: the discriminant of its determinant
        // decides. other_max == other_min here.
        const MPoly d = det(assoc_matrix(a, axis));
        if (d.is_zero()) {
            if (certify(probe_points_p1(), "det-of-square-associated-matrix-identically-zero")) return v;
            v.status = DegeneracyStatus::DegenerateNoRationalCertificate;
            v.reason = "det-of-square-associated-matrix-identically-zero";
            return v;
        }
        const Rational disc = discriminant_binary(d);
        if (disc != 0) {
            v.status = DegeneracyStatus::NonDegenerateProven;
            v.reason = "schlafli-discriminant-nonzero";
            return v;
        }
        // Multiple roots of det are the degenerate points of the scheme.
        const UPoly u = dehomogenize(d);
        std::vector<ProjPoint> candidates;
        if (d.degree() - u.degree() >= 2)
            candidates.emplace_back(QVector{Rational(1), Rational(0)});
        if (!u.is_zero())
            for (const auto& [root, mult] : rational_roots(u))
                if (mult >= 2) candidates.emplace_back(QVector{root, Rational(1)});
        if (certify(candidates, "schlafli-discriminant-zero")) return v;
        v.status = DegeneracyStatus::DegenerateNoRationalCertificate;
        v.reason = "schlafli-discriminant-zero-no-rational-multiple-root";
        return v;
    }
    // Boundary/exterior: the scheme is expected empty and its nonemptiness is
    // equivalent to degeneracy.
    const P1Scheme pts = points_on_p1(s);
    if (pts.empty()) {
        v.status = DegeneracyStatus::NonDegenerateProven;
        v.reason = std::string(axis_name(axis)) + "-scheme-empty";
        return v;
    }
    std::vector<ProjPoint> candidates;
    if (pts.whole_line) {
        candidates = probe_points_p1();
    } else {
        for (const auto& b : pts.blocks)
            if (b.point) candidates.push_back(*b.point);
    }
    const std::string why = std::string(axis_name(axis)) + "-scheme-nonempty";
    if (certify(candidates, why)) return v;
    v.status = DegeneracyStatus::DegenerateNoRationalCertificate;
    v.reason = why + "-but-only-irrational-points";
    return v;
}

} // namespace

DegeneracyVerdict decide_degeneracy(const Tensor3& a, const std::vector<Hint>& hints) {
    if (a.is_zero()) throw ZeroTensorError();
    std::vector<std::string> notes;
    for (const auto& [axis, pt] : hints) {
        const DetScheme s = scheme_of(a, axis);
        const PointDiagnosis d = diagnose_point(s, pt);
        const std::string where = std::string("hint ") + axis_name(axis) + ":" + pt.str();
        if (d.bidegenerate) {
            notes.push_back(where + " is bi-degenerate: inconclusive");
            continue;
        }
        if (!d.on_scheme) {
            notes.push_back(where + " is not on the scheme");
            continue;
        }
        if (!d.degenerate) {
            notes.push_back(where + " is on the scheme but not degenerate");
            continue;
        }
        if (auto cert = attempt_certificate(a, axis, pt)) {
            DegeneracyVerdict v;
            v.status = DegeneracyStatus::DegenerateWithCertificate;
            v.certificate = cert;
            v.reason = std::string("certificate-from-") + axis_name(axis) + "-hint";
            return v;
        }
        notes.push_back(where + " is degenerate non-bi-degenerate but the stacked system had full rank");
    }

    const std::array<std::pair<Axis, int>, 3> ext = {
        std::pair{Axis::X, a.p()}, {Axis::Y, a.q()}, {Axis::Z, a.r()}};
    for (const auto& [axis, n] : ext)
        if (n == 1) return decide_extent_one(a, axis);
    for (const auto& [axis, n] : ext)
        if (n == 2) return decide_extent_two(a, axis);

    DegeneracyVerdict v;
    v.status = DegeneracyStatus::Undetermined;
    std::ostringstream os;
    os << "no decision procedure for this format without a usable hint";
    for (const std::string& n : notes) os << "; " << n;
    v.reason = os.str();
    return v;
}

Rational hyperdet_222(const Tensor3& t) {
    if (t.p() != 2 || t.q() != 2 || t.r() != 2) throw FormatError("hyperdet_222 requires format (2,2,2)");
    auto a = [&](int i, int j, int k) { return t.at(i - 1, j - 1, k - 1); };
    const Rational squares = a(1, 1, 1) * a(1, 1, 1) * a(2, 2, 2) * a(2, 2, 2) +
                             a(1, 1, 2) * a(1, 1, 2) * a(2, 2, 1) * a(2, 2, 1) +
                             a(1, 2, 1) * a(1, 2, 1) * a(2, 1, 2) * a(2, 1, 2) +
                             a(1, 2, 2) * a(1, 2, 2) * a(2, 1, 1) * a(2, 1, 1);
    const Rational pairs = a(1, 1, 1) * a(1, 1, 2) * a(2, 2, 1) * a(2, 2, 2) +
                           a(1, 1, 1) * a(1, 2, 1) * a(2, 1, 2) * a(2, 2, 2) +
                           a(1, 1, 1) * a(1, 2, 2) * a(2, 1, 1) * a(2, 2, 2) +
                           a(1, 1, 2) * a(1, 2, 1) * a(2, 1, 2) * a(2, 2, 1) +
                           a(1, 1, 2) * a(1, 2, 2) * a(2, 2, 1) * a(2, 1, 1) +
                           a(1, 2, 1) * a(1, 2, 2) * a(2, 1, 2) * a(2, 1, 1);
    const Rational cross = a(1, 1, 1) * a(1, 2, 2) * a(2, 1, 2) * a(2, 2, 1) +
                           a(1, 1, 2) * a(1, 2, 1) * a(2, 1, 1) * a(2, 2, 2);
    return squares - 2 * pairs + 4 * cross;
}

SchlafliResult schlafli_binary(const Tensor3& a) {
    if (a.p() != 2 || a.q() != a.r() || a.q() < 2)
        throw FormatError("the Schlafli discriminant route requires format (2,q,q) with q >= 2");
    const MPoly d = det(assoc_matrix(a, Axis::X));
    if (d.is_zero()) return {Rational(0), true};
    return {discriminant_binary(d), false};
}

Rational conic_discriminant_223(const Tensor3& a) {
    if (a.p() != 2 || a.q() != 2 || a.r() != 3)
        throw FormatError("the conic discriminant requires format (2,2,3)");
    const MPoly d = det(assoc_matrix(a, Axis::Z));
    if (d.is_zero()) return Rational(0);
    return gram_determinant(d);
}

} // namespace trideg
