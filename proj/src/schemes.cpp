#include "trideg/schemes.hpp"

#include <algorithm>
#include <sstream>

#include "trideg/errors.hpp"

namespace trideg {

ProjPoint::ProjPoint(QVector coords) : c_(std::move(coords)) {
    if (c_.empty()) throw DimensionError("projective point needs at least one coordinate");
    auto it = std::find_if(c_.begin(), c_.end(), [](const Rational& v) { return v != 0; });
    if (it == c_.end()) throw ValueError("projective point must have a nonzero coordinate");
    const Rational scale = *it;
    for (Rational& v : c_) v /= scale;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << to_string(c_[i]);
    }
    os << ")";
    return os.str();
}

DetScheme::DetScheme(PolyMatrix b) : b_(b.rows() <= b.cols() ? std::move(b) : b.transposed()) {
    if (!b_.is_linear_forms())
        throw ValueError("determinantal scheme requires a matrix of linear forms");
}

const std::vector<MPoly>& DetScheme::minors() const {
    if (minors_.empty()) minors_ = maximal_minors(b_);
    return minors_;
}

DetScheme scheme_of(const Tensor3& a, Axis axis) { return DetScheme(assoc_matrix(a, axis)); }

int expected_codim(const DetScheme& s) {
    return std::min(static_cast<int>(s.v() - s.u()) + 1, s.ambient_vars());
}

PointDiagnosis diagnose_point(const DetScheme& s, const ProjPoint& p) {
    if (static_cast<int>(p.dim()) != s.ambient_vars())
        throw DimensionError("point length does not match the scheme's ambient space");
    PointDiagnosis d;
    const QMatrix bp = s.matrix().evaluated(p.coords());
    d.rank_at = rank(bp);
    d.on_scheme = d.rank_at < static_cast<int>(s.u());
    d.bidegenerate = d.rank_at <= static_cast<int>(s.u()) - 2;
    const auto& minors = s.minors();
    QMatrix jac(minors.size(), QVector(s.ambient_vars()));
    for (std::size_t a = 0; a < minors.size(); ++a)
        for (int k = 0; k < s.ambient_vars(); ++k) jac[a][k] = eval(partial(minors[a], k), p.coords());
    d.jacobian_rank = rank(jac);
    d.degenerate = d.on_scheme && d.jacobian_rank < expected_codim(s);
    return d;
}

int P1Scheme::distinct_points() const {
    int n = 0;
    for (const Block& b : blocks) n += b.degree;
    return n;
}

int P1Scheme::degree_sum() const {
    int n = 0;
    for (const Block& b : blocks) n += b.degree * b.multiplicity;
    return n;
}

bool P1Scheme::is_two_simple_points() const {
    if (distinct_points() != 2 || degree_sum() != 2) return false;
    for (const Block& b : blocks)
        if (b.multiplicity != 1) return false;
    return true;
}

P1Scheme points_on_p1(const DetScheme& s) {
    if (s.ambient_vars() != 2) throw ValueError("point enumeration is only available in P^1");
    P1Scheme out;
    out.gcd = gcd_binary(s.minors());
    if (out.gcd.is_zero()) {
        out.whole_line = true;
        return out;
    }
    if (out.gcd.degree() == 0) return out; // coprime minors: empty scheme
    const VarList& vars = out.gcd.vars();
    const UPoly u = dehomogenize(out.gcd);
    const int inf_mult = out.gcd.degree() - u.degree();
    if (inf_mult > 0)
        out.blocks.push_back({ProjPoint({Rational(1), Rational(0)}), 1, inf_mult});
    const auto sf = squarefree_decomposition(u);
    for (std::size_t i = 0; i < sf.size(); ++i) {
        const int mult = static_cast<int>(i) + 1;
        UPoly rest = sf[i];
        for (const auto& [root, m] : rational_roots(sf[i])) {
            (void)m; // squarefree: always 1
            out.blocks.push_back({ProjPoint({root, Rational(1)}), 1, mult});
            rest = divmod(rest, UPoly({-root, Rational(1)})).quotient;
        }
        if (rest.degree() >= 1) out.blocks.push_back({std::nullopt, rest.degree(), mult});
    }
    (void)vars;
    return out;
}

QuadricClass classify_detn_quadric(const Tensor3& a) {
    if (a.p() != 2 || a.q() != 2)
        throw FormatError("det N quadric classification requires a (2,2,r) tensor");
    return gram_rank(det(assoc_matrix(a, Axis::Z)));
}

} // namespace trideg
